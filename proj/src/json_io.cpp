#include "geocrystal/json_io.hpp"

#include <cctype>

namespace geocrystal {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) parse_error("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) parse_error(std::string("missing field '") + name + "'");
  return *it;
}

bool is_number_label(const std::string& s) {
  if (s.empty() || s.size() > 9) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return s == "0" || s[0] != '0';
}

CartanPtr cartan_or(const Json& j, CartanPtr fallback) {
  if (j.is_object() && j.contains("cartan")) return cartan_from_json(j.at("cartan"));
  if (!fallback) parse_error("missing field 'cartan'");
  return fallback;
}

}  // namespace

Json to_json(const CartanMatrix& a) {
  Json j;
  j["index"] = a.labels();
  j["a"] = a.entries();
  return j;
}

CartanPtr cartan_from_json(const Json& j) {
  const Json& a = field(j, "a");
  if (!a.is_array()) parse_error("'a' must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const Json& r : a) {
    if (!r.is_array()) parse_error("'a' must be an array of rows");
    std::vector<int> row;
    for (const Json& v : r) {
      if (!v.is_number_integer()) parse_error("Cartan entries must be integers");
      row.push_back(v.get<int>());
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::string> labels;
  if (j.contains("index")) {
    const Json& idx = j.at("index");
    if (!idx.is_array()) parse_error("'index' must be an array");
    for (const Json& v : idx) {
      if (v.is_string()) labels.push_back(v.get<std::string>());
      else if (v.is_number_integer()) labels.push_back(std::to_string(v.get<long>()));
      else parse_error("index labels must be strings or integers");
    }
  }
  return make_cartan(std::move(rows), std::move(labels));
}

Index index_from_json(const CartanMatrix& a, const Json& j) {
  if (j.is_string()) return a.index_of(j.get<std::string>());
  if (j.is_number_integer()) return a.index_of(std::to_string(j.get<long>()));
  parse_error("an index must be a string or integer label");
}

Json index_to_json(const CartanMatrix& a, Index i) {
  const std::string& l = a.label(i);
  if (is_number_label(l)) return std::stol(l);
  return l;
}

Json word_to_json(const CartanMatrix& a, const Word& w) {
  Json j = Json::array();
  for (Index i : w) j.push_back(index_to_json(a, i));
  return j;
}

Word word_from_json(const CartanMatrix& a, const Json& j) {
  if (!j.is_array()) parse_error("a word must be an array of labels");
  Word w;
  for (const Json& v : j) w.letters.push_back(index_from_json(a, v));
  return w;
}

PosRat posrat_from_json(const Json& j) {
  if (j.is_string()) return PosRat::parse(j.get<std::string>());
  if (j.is_number_integer()) return PosRat(mpq_class(j.get<long>()));
  parse_error("a rational must be a \"p/q\" string or an integer");
}

TropInt tropint_from_json(const Json& j) {
  if (j.is_number_integer()) return TropInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      parse_error("cannot parse integer '" + s + "'");
    }
    if (used != s.size()) parse_error("cannot parse integer '" + s + "'");
    return TropInt(v);
  }
  parse_error("a tropical value must be an integer");
}

Json to_json(const GeometricPoint<PosRat>& p) {
  Json j;
  j["cartan"] = to_json(*p.cartan);
  j["word"] = word_to_json(*p.cartan, p.word);
  Json cs = Json::array();
  for (const PosRat& c : p.coords) cs.push_back(c.str());
  j["coords"] = std::move(cs);
  return j;
}

Json to_json(const GeometricPoint<TropInt>& p) {
  Json j;
  j["cartan"] = to_json(*p.cartan);
  j["word"] = word_to_json(*p.cartan, p.word);
  Json cs = Json::array();
  for (const TropInt& c : p.coords) cs.push_back(c.value());
  j["coords"] = std::move(cs);
  return j;
}

namespace {

template <class K, class F>
GeometricPoint<K> point_from_json(const Json& j, CartanPtr fallback, F read) {
  CartanPtr a = cartan_or(j, std::move(fallback));
  Word w = word_from_json(*a, field(j, "word"));
  const Json& cs = field(j, "coords");
  if (!cs.is_array()) parse_error("'coords' must be an array");
  std::vector<K> coords;
  for (const Json& v : cs) coords.push_back(read(v));
  return GeometricPoint<K>(std::move(a), std::move(w), std::move(coords));
}

}  // namespace

GeometricPoint<PosRat> rat_point_from_json(const Json& j, CartanPtr fallback) {
  return point_from_json<PosRat>(j, std::move(fallback), posrat_from_json);
}

GeometricPoint<TropInt> trop_point_from_json(const Json& j, CartanPtr fallback) {
  return point_from_json<TropInt>(j, std::move(fallback), tropint_from_json);
}

Json to_json(const TensorCrystalElement& b) {
  Json j;
  j["cartan"] = to_json(*b.cartan);
  j["word"] = word_to_json(*b.cartan, b.word);
  j["values"] = b.values;
  return j;
}

TensorCrystalElement element_from_json(const Json& j, CartanPtr fallback) {
  CartanPtr a = cartan_or(j, std::move(fallback));
  Word w = word_from_json(*a, field(j, "word"));
  const Json& vs = field(j, "values");
  if (!vs.is_array()) parse_error("'values' must be an array");
  std::vector<std::int64_t> values;
  for (const Json& v : vs) values.push_back(tropint_from_json(v).value());
  return TensorCrystalElement(std::move(a), std::move(w), std::move(values));
}

Json to_json(const CartanMatrix& a, const BraidMoveSpec& m) {
  Json j;
  j["class"] = std::string(to_string(m.cls));
  j["i"] = index_to_json(a, m.i);
  j["j"] = index_to_json(a, m.j);
  j["pos"] = m.pos;
  return j;
}

BraidMoveSpec move_from_json(const CartanMatrix& a, const Json& j) {
  const Json& cls = field(j, "class");
  if (!cls.is_string()) parse_error("'class' must be a string");
  BraidMoveSpec m{parse_braid_class(cls.get<std::string>()), index_from_json(a, field(j, "i")),
                  index_from_json(a, field(j, "j")), 0};
  if (j.contains("pos")) {
    const Json& pos = j.at("pos");
    if (!pos.is_number_integer() || pos.get<long>() < 0)
      parse_error("'pos' must be a non-negative integer");
    m.pos = pos.get<std::size_t>();
  }
  return m;
}

Json to_json(const ExactMatrix& m) { return m.to_strings(); }

Json to_json(const Error& e) {
  Json j;
  j["error"] = std::string(to_string(e.kind()));
  j["message"] = e.what();
  if (e.position()) j["position"] = *e.position();
  return j;
}

}  // namespace geocrystal

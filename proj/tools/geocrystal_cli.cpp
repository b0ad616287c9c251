// Command-line front end: act, braid, crystal, tropicalize, verify, chart.
// Exit codes: 0 success, 1 property failure, 2 usage or validation error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "geocrystal/json_io.hpp"
#include "geocrystal/verify.hpp"

using namespace geocrystal;

namespace {

constexpr int kUsage = 2;

Json read_json_arg(const std::string& arg) {
  std::string text = arg;
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) {
    std::ifstream in(arg);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + arg + "'");
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

struct Common {
  std::string cartan;
  std::string semiring = "rat";
  std::string format = "human";

  CartanPtr cartan_ptr() const {
    return cartan.empty() ? nullptr : cartan_from_json(read_json_arg(cartan));
  }
  CartanPtr require_cartan(const Json& doc) const {
    if (doc.is_object() && doc.contains("cartan")) return cartan_from_json(doc.at("cartan"));
    auto a = cartan_ptr();
    if (!a) throw Error(ErrorKind::Parse, "no Cartan datum: pass --cartan or embed \"cartan\"");
    return a;
  }
};

bool g_json_output = false;

std::string render(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object()) {
    std::string out;
    for (const auto& [key, value] : v.items())
      if (key != "cartan") out += (out.empty() ? "" : " ") + key + "=" + render(value);
    return out;
  }
  if (!v.is_array()) return v.dump();
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + render(v[k]);
  return out + ")";
}

// Human output: one "key: value" line per field, the Cartan datum left out.
void emit(const Json& j) {
  if (g_json_output || !j.is_object()) {
    std::cout << j.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : j.items())
    if (key != "cartan") std::cout << key << ": " << render(value) << '\n';
}

int run_act(const Common& common, const std::string& point, const std::string& index,
            const std::string& c, const std::string& chart) {
  Json doc = read_json_arg(point);
  CartanPtr a = common.require_cartan(doc);
  const Index i = index_from_json(*a, Json(index));
  if (!chart.empty()) {
    if (chart != "symmetric") throw Error(ErrorKind::Parse, "unknown chart '" + chart + "'");
    // Chart coordinates a_1..a_n (or a_1..a_{n+1}); the result is a_1..a_{n+1}.
    const Json& vals = doc.at("a");
    if (!vals.is_array()) throw Error(ErrorKind::Parse, "'a' must be an array");
    const std::size_t n = a->rank();
    if (vals.size() != n && vals.size() != n + 1)
      throw Error(ErrorKind::Parse, "chart needs n or n + 1 values");
    Json outj;
    outj["cartan"] = to_json(*a);
    Json res = Json::array();
    if (common.semiring == "rat") {
      std::vector<PosRat> av;
      for (std::size_t k = 0; k < n; ++k) av.push_back(posrat_from_json(vals[k]));
      auto r = symmetric_chart_inverse(e_act(symmetric_chart(a, av), i, PosRat::parse(c)));
      for (const auto& v : r) res.push_back(v.str());
    } else {
      std::vector<TropInt> av;
      for (std::size_t k = 0; k < n; ++k) av.push_back(tropint_from_json(vals[k]));
      auto r = symmetric_chart_inverse(
          e_act(symmetric_chart(a, av), i, tropint_from_json(Json(c))));
      for (const auto& v : r) res.push_back(v.value());
    }
    outj["a"] = std::move(res);
    emit(outj);
    return 0;
  }
  if (common.semiring == "rat") {
    auto p = rat_point_from_json(doc, a);
    emit(to_json(e_act(p, i, PosRat::parse(c))));
  } else {
    auto p = trop_point_from_json(doc, a);
    emit(to_json(e_act(p, i, tropint_from_json(Json(c)))));
  }
  return 0;
}

int run_braid(const Common& common, const std::string& point, const std::string& move) {
  Json doc = read_json_arg(point);
  CartanPtr a = common.require_cartan(doc);
  const BraidMoveSpec spec = move_from_json(*a, read_json_arg(move));
  if (common.semiring == "rat") emit(to_json(apply_move(rat_point_from_json(doc, a), spec)));
  else emit(to_json(apply_move(trop_point_from_json(doc, a), spec)));
  return 0;
}

int run_crystal(const Common& common, const std::string& element, const std::string& op,
                const std::string& index, std::int64_t c, const std::string& move) {
  Json doc = read_json_arg(element);
  CartanPtr a = common.require_cartan(doc);
  const TensorCrystalElement b = element_from_json(doc, a);
  auto idx = [&] {
    if (index.empty()) throw Error(ErrorKind::Parse, "--index is required for '" + op + "'");
    return index_from_json(*a, Json(index));
  };
  auto ext = [](ExtendedInt v) { return v.is_finite() ? Json(v.value()) : Json("-inf"); };
  if (op == "e") {
    emit(to_json(e_kashiwara(b, idx())));
  } else if (op == "e-pow") {
    emit(to_json(e_pow(b, idx(), c)));
  } else if (op == "epsilon") {
    emit(Json{{"epsilon", ext(epsilon(b, idx()))}});
  } else if (op == "varphi") {
    emit(Json{{"varphi", ext(varphi(b, idx()))}});
  } else if (op == "weight") {
    emit(Json{{"weight", weight(b).coeffs}});
  } else if (op == "braid") {
    if (move.empty()) throw Error(ErrorKind::Parse, "--move is required for 'braid'");
    emit(to_json(tropical_braid(b, move_from_json(*a, read_json_arg(move)))));
  } else {
    throw Error(ErrorKind::Parse, "unknown crystal operation '" + op + "'");
  }
  return 0;
}

int run_tropicalize(const Common& common, const std::string& point, const std::string& index,
                    std::int64_t c) {
  Json doc = read_json_arg(point);
  CartanPtr a = common.require_cartan(doc);
  const auto p = trop_point_from_json(doc, a);
  Json out;
  out["element"] = to_json(to_dual_crystal(p));
  if (index.empty()) {
    emit(out);
    return 0;
  }
  const Index i = index_from_json(*a, Json(index));
  out["geometric"] = to_json(e_act(p, i, TropInt(c)));
  out["crystal"] = to_json(e_pow(to_dual_crystal(p), i, c));
  const auto mismatch = ud_bridge(p, i, c);
  out["agree"] = !mismatch.has_value();
  if (mismatch) out["first_mismatch"] = *mismatch;
  emit(out);
  return mismatch ? 1 : 0;
}

int run_chart(const Common& common, const std::string& values, bool inverse) {
  Json doc = read_json_arg(values);
  CartanPtr a = common.require_cartan(doc);
  if (inverse) {
    if (common.semiring == "rat") {
      Json out;
      out["cartan"] = to_json(*a);
      Json res = Json::array();
      for (const auto& v : symmetric_chart_inverse(rat_point_from_json(doc, a)))
        res.push_back(v.str());
      out["a"] = std::move(res);
      emit(out);
    } else {
      Json out;
      out["cartan"] = to_json(*a);
      Json res = Json::array();
      for (const auto& v : symmetric_chart_inverse(trop_point_from_json(doc, a)))
        res.push_back(v.value());
      out["a"] = std::move(res);
      emit(out);
    }
    return 0;
  }
  const Json& vals = doc.at("a");
  if (!vals.is_array()) throw Error(ErrorKind::Parse, "'a' must be an array");
  if (common.semiring == "rat") {
    std::vector<PosRat> av;
    for (const auto& v : vals) av.push_back(posrat_from_json(v));
    emit(to_json(symmetric_chart(a, av)));
  } else {
    std::vector<TropInt> av;
    for (const auto& v : vals) av.push_back(tropint_from_json(v));
    emit(to_json(symmetric_chart(a, av)));
  }
  return 0;
}

int run_verify(const Common& common, const std::string& suite, const RunConfig& cfg,
               bool timings) {
  Report r = run_suite(suite, cfg);
  if (common.format == "json") {
    Json j = r.to_json();
    j["seed"] = cfg.seed;
    j["suite"] = suite;
    if (timings) {
      Json t = Json::object();
      for (const auto& p : r.results) t[p.full_name()] = p.seconds;
      j["seconds"] = std::move(t);
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "suite " << suite << ", seed " << cfg.seed << '\n' << r.to_human();
    if (timings)
      for (const auto& p : r.results)
        std::cout << "  " << p.full_name() << ": " << p.seconds << " s\n";
  }
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric crystals on Schubert-cell tori, their tropicalization and checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--cartan", common.cartan, "Cartan datum: JSON file or inline JSON");
  app.add_option("--semiring", common.semiring, "Coordinate semifield")
      ->check(CLI::IsMember({"rat", "trop"}));
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}));

  std::string point, index, c = "1", chart, move, element, op = "e", suite;
  std::int64_t power = 1;
  bool inverse = false, timings = false;
  RunConfig cfg;

  auto* act = app.add_subcommand("act", "Apply e_i^c to a point");
  act->add_option("point", point, "Point: JSON file or inline JSON")->required();
  act->add_option("-i,--index", index, "Index label")->required();
  act->add_option("-c,--power", c, "Power c (\"p/q\" or integer)");
  act->add_option("--chart", chart, "Read and write chart coordinates instead")
      ->check(CLI::IsMember({"symmetric"}));

  auto* braid = app.add_subcommand("braid", "Apply a braid move to a point");
  braid->add_option("point", point, "Point: JSON file or inline JSON")->required();
  braid->add_option("-m,--move", move, "Move: JSON file or inline JSON")->required();

  auto* crystal = app.add_subcommand("crystal", "Operate on a tensor crystal element");
  crystal->add_option("element", element, "Element: JSON file or inline JSON")->required();
  crystal->add_option("--op", op, "Operation")
      ->check(CLI::IsMember({"e", "e-pow", "epsilon", "varphi", "weight", "braid"}));
  crystal->add_option("-i,--index", index, "Index label");
  crystal->add_option("-c,--power", power, "Power for e-pow")->check(CLI::NonNegativeNumber);
  crystal->add_option("-m,--move", move, "Move for braid");

  auto* trop = app.add_subcommand(
      "tropicalize", "Map a tropical point to the dual tensor crystal; with -i, compare actions");
  trop->add_option("point", point, "Tropical point: JSON file or inline JSON")->required();
  trop->add_option("-i,--index", index, "Index label");
  trop->add_option("-c,--power", power, "Power")->check(CLI::NonNegativeNumber);

  auto* chart_cmd = app.add_subcommand("chart", "Symmetric chart of type A_n");
  chart_cmd->add_option("values", point, "{\"a\": [...]} or, with --inverse, a point")
      ->required();
  chart_cmd->add_flag("--inverse", inverse, "Read a point, print a_1..a_{n+1}");

  auto* verify = app.add_subcommand("verify", "Run a seeded verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--seed", cfg.seed, "Seed");
  verify->add_option("--trials", cfg.trials, "Random points per property")
      ->check(CLI::PositiveNumber);
  verify->add_option("--law-samples", cfg.law_samples, "Samples per semifield law check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-word-length", cfg.max_word_length, "Axiom sweep word length");
  verify->add_option("--bridge-b", cfg.bridge_b, "Bridge grid bound on |b_j|");
  verify->add_option("--bridge-c", cfg.bridge_c, "Bridge grid bound on c");
  verify->add_option("--relation-b", cfg.relation_b, "Crystal relation grid bound on |b_j|");
  verify->add_option("--relation-c", cfg.relation_c, "Crystal relation grid bound on c1, c2");
  verify->add_option("--braid-z", cfg.braid_z, "Braid grid bound on |z_j|");
  verify->add_option("--braid-c", cfg.braid_c, "Braid grid bound on c");
  verify->add_flag("--timings", timings, "Append per-property timings (not deterministic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Json j;
    j["error"] = "Usage";
    j["message"] = e.what();
    std::cerr << j.dump() << '\n';
    return kUsage;
  }

  g_json_output = common.format == "json";
  try {
    if (*act) return run_act(common, point, index, c, chart);
    if (*braid) return run_braid(common, point, move);
    if (*crystal) return run_crystal(common, element, op, index, power, move);
    if (*trop) return run_tropicalize(common, point, index, power);
    if (*chart_cmd) return run_chart(common, point, inverse);
    if (*verify) return run_verify(common, suite, cfg, timings);
  } catch (const Error& e) {
    std::cerr << to_json(e).dump() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << to_json(Error(ErrorKind::Parse, e.what())).dump() << '\n';
    return kUsage;
  }
  return kUsage;
}

#include "geocrystal/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>

namespace geocrystal {

namespace {

struct Ratio {
  long num;
  long den;

  Ratio normalized() const {
    long g = std::gcd(num, den);
    long s = den < 0 ? -1 : 1;
    return {s * num / g, s * den / g};
  }
  bool operator==(const Ratio& o) const { return num * o.den == o.num * den; }
};

std::vector<long> compute_symmetrizer(const std::vector<int>& e, std::size_t n) {
  auto at = [&](Index i, Index j) { return static_cast<long>(e[i * n + j]); };
  std::vector<std::optional<Ratio>> d(n);
  std::vector<long> result(n, 0);

  for (Index root = 0; root < n; ++root) {
    if (d[root]) continue;
    std::vector<Index> component;
    std::queue<Index> todo;
    d[root] = Ratio{1, 1};
    todo.push(root);
    while (!todo.empty()) {
      Index i = todo.front();
      todo.pop();
      component.push_back(i);
      for (Index j = 0; j < n; ++j) {
        if (j == i || at(i, j) == 0) continue;
        // a(i,j) d[j] = a(j,i) d[i]
        Ratio want = Ratio{d[i]->num * at(j, i), d[i]->den * at(i, j)}.normalized();
        if (!d[j]) {
          d[j] = want;
          todo.push(j);
        } else if (!(*d[j] == want)) {
          throw Error(ErrorKind::NotSymmetrizable,
                      "no positive symmetrizer: cycle condition fails at (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
      }
    }
    long lcm_den = 1;
    for (Index i : component) lcm_den = std::lcm(lcm_den, d[i]->den);
    long g = 0;
    for (Index i : component) {
      result[i] = d[i]->num * (lcm_den / d[i]->den);
      g = std::gcd(g, result[i]);
    }
    for (Index i : component) {
      result[i] /= g;
      if (result[i] <= 0)
        throw Error(ErrorKind::NotSymmetrizable, "symmetrizer is not positive");
    }
  }
  return result;
}

}  // namespace

CartanMatrix CartanMatrix::from_entries(std::vector<std::vector<int>> entries,
                                        std::vector<std::string> labels) {
  const std::size_t n = entries.size();
  if (n == 0) throw Error(ErrorKind::NotGCM, "empty index set");
  for (const auto& row : entries)
    if (row.size() != n) throw Error(ErrorKind::NotGCM, "matrix is not square");
  if (labels.empty()) {
    for (std::size_t k = 0; k < n; ++k) labels.push_back(std::to_string(k + 1));
  }
  if (labels.size() != n)
    throw Error(ErrorKind::NotGCM, "label count does not match matrix size");
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::NotGCM, "duplicate index label");
  }

  CartanMatrix a;
  a.labels_ = std::move(labels);
  a.entries_.reserve(n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      int v = entries[i][j];
      if (i == j && v != 2)
        throw Error(ErrorKind::NotGCM, "diagonal entry a(" + std::to_string(i + 1) + "," +
                                           std::to_string(i + 1) + ") != 2");
      if (i != j && v > 0)
        throw Error(ErrorKind::NotGCM, "positive off-diagonal entry a(" +
                                           std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                           ")");
      if (i != j && (v == 0) != (entries[j][i] == 0))
        throw Error(ErrorKind::NotGCM, "zero pattern is not symmetric at (" +
                                           std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                           ")");
      a.entries_.push_back(v);
    }
  }
  a.symmetrizer_ = compute_symmetrizer(a.entries_, n);
  return a;
}

std::vector<std::vector<int>> CartanMatrix::entries() const {
  std::vector<std::vector<int>> out(rank(), std::vector<int>(rank()));
  for (Index i = 0; i < rank(); ++i)
    for (Index j = 0; j < rank(); ++j) out[i][j] = (*this)(i, j);
  return out;
}

Index CartanMatrix::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw Error(ErrorKind::BadIndex, "unknown index label '" + std::string(label) + "'");
  return static_cast<Index>(it - labels_.begin());
}

void CartanMatrix::check_index(Index i) const {
  if (i >= rank())
    throw Error(ErrorKind::BadIndex, "index " + std::to_string(i) + " outside I", i);
}

CartanMatrix CartanMatrix::langlands_dual() const {
  CartanMatrix t = *this;
  for (Index i = 0; i < rank(); ++i)
    for (Index j = 0; j < rank(); ++j) t.entries_[i * rank() + j] = (*this)(j, i);
  t.symmetrizer_ = compute_symmetrizer(t.entries_, rank());
  return t;
}

CartanPtr make_cartan(std::vector<std::vector<int>> entries, std::vector<std::string> labels) {
  return std::make_shared<const CartanMatrix>(
      CartanMatrix::from_entries(std::move(entries), std::move(labels)));
}

namespace cartan_types {

CartanPtr a(std::size_t n) {
  std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    e[i][i] = 2;
    if (i + 1 < n) e[i][i + 1] = e[i + 1][i] = -1;
  }
  return make_cartan(std::move(e));
}
CartanPtr a1xa1() { return make_cartan({{2, 0}, {0, 2}}); }
CartanPtr b2() { return make_cartan({{2, -2}, {-1, 2}}); }
CartanPtr g2() { return make_cartan({{2, -3}, {-1, 2}}); }

}  // namespace cartan_types

RootVector RootVector::simple(std::size_t rank, Index i) {
  RootVector r{std::vector<long>(rank, 0)};
  r.coeffs.at(i) = 1;
  return r;
}

bool RootVector::is_positive() const {
  bool nonzero = false;
  for (long c : coeffs) {
    if (c < 0) return false;
    nonzero = nonzero || c != 0;
  }
  return nonzero;
}

bool Word::contains(Index i) const {
  return std::find(letters.begin(), letters.end(), i) != letters.end();
}

Word Word::concat(const Word& other) const {
  Word w = *this;
  w.letters.insert(w.letters.end(), other.letters.begin(), other.letters.end());
  return w;
}

void check_word(const CartanMatrix& a, const Word& w) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] >= a.rank())
      throw Error(ErrorKind::BadIndex,
                  "letter " + std::to_string(k) + " of the word is outside I", k);
  }
}

std::string to_string(const CartanMatrix& a, const Word& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << a.label(w[k]);
  os << ')';
  return os.str();
}

RootVector reflect(const CartanMatrix& a, Index i, RootVector beta) {
  a.check_index(i);
  long pairing = 0;
  for (Index j = 0; j < a.rank(); ++j) pairing += beta.coeffs.at(j) * a(i, j);
  beta.coeffs[i] -= pairing;
  return beta;
}

std::vector<RootVector> beta_sequence(const CartanMatrix& a, const Word& w) {
  check_word(a, w);
  std::vector<RootVector> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    RootVector b = RootVector::simple(a.rank(), w[k]);
    for (std::size_t l = k; l-- > 0;) b = reflect(a, w[l], std::move(b));
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<RootVector> alpha_superscripts(const CartanMatrix& a, const Word& w) {
  check_word(a, w);
  std::vector<RootVector> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    RootVector b = RootVector::simple(a.rank(), w[k]);
    for (std::size_t l = k + 1; l < w.size(); ++l) b = reflect(a, w[l], std::move(b));
    out.push_back(std::move(b));
  }
  return out;
}

bool is_reduced(const CartanMatrix& a, const Word& w) {
  auto betas = beta_sequence(a, w);
  return std::all_of(betas.begin(), betas.end(),
                     [](const RootVector& b) { return b.is_positive(); });
}

std::string_view to_string(Rank2Class cls) {
  switch (cls) {
    case Rank2Class::Commuting: return "Commuting";
    case Rank2Class::Simply: return "Simply";
    case Rank2Class::Double: return "Double";
    case Rank2Class::Triple: return "Triple";
    case Rank2Class::Free: return "Free";
  }
  return "Unknown";
}

Rank2Info rank2_class(const CartanMatrix& a, Index i, Index j) {
  a.check_index(i);
  a.check_index(j);
  if (i == j) throw Error(ErrorKind::BadIndex, "rank2_class needs distinct indices");
  const int aij = a(i, j);
  const int aji = a(j, i);
  Rank2Info info{Rank2Class::Free, aij, aji, true};
  const int prod = aij * aji;
  if (prod == 0) {
    info.cls = Rank2Class::Commuting;
  } else if (prod == 1) {
    info.cls = Rank2Class::Simply;
  } else if (prod == 2) {
    info.cls = Rank2Class::Double;
    info.forward = aij == -2;
  } else if (prod == 3) {
    info.cls = Rank2Class::Triple;
    info.forward = aij == -3;
  }
  return info;
}

}  // namespace geocrystal

namespace geocrystal {

const VermaRelation& verma_relation(Rank2Class cls) {
  using S = VermaStep;
  static const VermaRelation commuting{Rank2Class::Commuting,
                                       {S{true, 1, 0}, S{false, 0, 1}},
                                       {S{false, 0, 1}, S{true, 1, 0}}};
  static const VermaRelation simply{Rank2Class::Simply,
                                    {S{true, 1, 0}, S{false, 1, 1}, S{true, 0, 1}},
                                    {S{false, 0, 1}, S{true, 1, 1}, S{false, 1, 0}}};
  static const VermaRelation dbl{
      Rank2Class::Double,
      {S{true, 1, 0}, S{false, 2, 1}, S{true, 1, 1}, S{false, 0, 1}},
      {S{false, 0, 1}, S{true, 1, 1}, S{false, 2, 1}, S{true, 1, 0}}};
  static const VermaRelation triple{
      Rank2Class::Triple,
      {S{true, 1, 0}, S{false, 3, 1}, S{true, 2, 1}, S{false, 3, 2}, S{true, 1, 1},
       S{false, 0, 1}},
      {S{false, 0, 1}, S{true, 1, 1}, S{false, 3, 2}, S{true, 2, 1}, S{false, 3, 1},
       S{true, 1, 0}}};
  switch (cls) {
    case Rank2Class::Commuting: return commuting;
    case Rank2Class::Simply: return simply;
    case Rank2Class::Double: return dbl;
    case Rank2Class::Triple: return triple;
    case Rank2Class::Free: break;
  }
  throw Error(ErrorKind::WrongType, "no Verma relation when a(i,j) a(j,i) >= 4");
}

std::pair<Index, Index> verma_roles(const CartanMatrix& a, Index x, Index y) {
  a.check_index(x);
  a.check_index(y);
  return a(x, y) <= a(y, x) ? std::pair{x, y} : std::pair{y, x};
}

}  // namespace geocrystal

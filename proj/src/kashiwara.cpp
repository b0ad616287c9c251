#include "geocrystal/kashiwara.hpp"

#include <cstdlib>
#include <numeric>

namespace geocrystal {

namespace {

constexpr std::int64_t kValueLimit = std::int64_t{1} << 40;

void require_letter(const TensorCrystalElement& b, Index i) {
  b.cartan->check_index(i);
  if (!b.word.contains(i))
    throw Error(ErrorKind::IndexAbsent,
                "index " + b.cartan->label(i) + " does not occur in the word", i);
}

}  // namespace

std::int64_t ExtendedInt::value() const {
  if (!finite_) throw Error(ErrorKind::WrongType, "value of -inf requested");
  return v_;
}

TensorCrystalElement::TensorCrystalElement(CartanPtr a, Word w, std::vector<std::int64_t> b)
    : cartan(std::move(a)), word(std::move(w)), values(std::move(b)) {
  check_word(*cartan, word);
  if (values.size() != word.size())
    throw Error(ErrorKind::BadIndex, "value count " + std::to_string(values.size()) +
                                         " does not match word length " +
                                         std::to_string(word.size()));
}

EPowPlan::EPowPlan(const CartanMatrix& crystal_cartan, const Word& w, Index i) {
  crystal_cartan.check_index(i);
  check_word(crystal_cartan, w);
  for (std::size_t m = 0; m < w.size(); ++m) {
    coeff_.push_back(crystal_cartan(i, w[m]));
    if (w[m] == i) pos_.push_back(m);
  }
  if (pos_.empty())
    throw Error(ErrorKind::IndexAbsent,
                "index " + crystal_cartan.label(i) + " does not occur in the word", i);
}

TensorCrystalElement e_pow(const TensorCrystalElement& b, Index i, std::int64_t c) {
  require_letter(b, i);
  if (c < 0) throw Error(ErrorKind::WrongType, "e_pow needs c >= 0");
  if (c > kValueLimit) throw Error(ErrorKind::Overflow, "power too large");
  for (auto v : b.values)
    if (std::llabs(v) > kValueLimit) throw Error(ErrorKind::Overflow, "value too large");
  EPowPlan plan(*b.cartan, b.word, i);
  TensorCrystalElement out = b;
  plan.apply(b.values.data(), c, out.values.data());
  return out;
}

std::int64_t weight_pairing(const TensorCrystalElement& b, Index i) {
  b.cartan->check_index(i);
  std::int64_t s = 0;
  for (std::size_t m = 0; m < b.word.size(); ++m) s += b.values[m] * (*b.cartan)(i, b.word[m]);
  return s;
}

namespace {

struct Fold {
  ExtendedInt eps = ExtendedInt::neg_inf();
  ExtendedInt phi = ExtendedInt::neg_inf();
};

/// epsilon_i and varphi_i of the first `len` factors.
Fold fold_prefix(const TensorCrystalElement& b, Index i, std::size_t len) {
  Fold f;
  std::int64_t wt = 0;  // <h_i, wt> of the prefix folded so far
  for (std::size_t m = 0; m < len; ++m) {
    const std::int64_t x = b.values[m];
    const std::int64_t wt_factor = x * (*b.cartan)(i, b.word[m]);
    ExtendedInt e2 = ExtendedInt::neg_inf();
    ExtendedInt p2 = ExtendedInt::neg_inf();
    if (b.word[m] == i) {
      e2 = -x;
      p2 = x;
    }
    f.eps = max(f.eps, e2 - wt);
    f.phi = max(p2, f.phi + wt_factor);
    wt += wt_factor;
  }
  return f;
}

}  // namespace

ExtendedInt epsilon(const TensorCrystalElement& b, Index i) {
  b.cartan->check_index(i);
  return fold_prefix(b, i, b.word.size()).eps;
}

ExtendedInt varphi(const TensorCrystalElement& b, Index i) {
  b.cartan->check_index(i);
  return fold_prefix(b, i, b.word.size()).phi;
}

RootVector weight(const TensorCrystalElement& b) {
  RootVector r{std::vector<long>(b.cartan->rank(), 0)};
  for (std::size_t m = 0; m < b.word.size(); ++m) r.coeffs[b.word[m]] += b.values[m];
  return r;
}

TensorCrystalElement e_kashiwara(const TensorCrystalElement& b, Index i) {
  require_letter(b, i);
  TensorCrystalElement out = b;
  // L (x) b_k: act on L when varphi(L) >= epsilon(b_k), else on b_k.
  for (std::size_t k = b.word.size(); k > 0; --k) {
    const std::size_t last = k - 1;
    if (k == 1) {
      ++out.values[0];
      return out;
    }
    const ExtendedInt eps_last =
        b.word[last] == i ? ExtendedInt(-b.values[last]) : ExtendedInt::neg_inf();
    const ExtendedInt phi_left = fold_prefix(b, i, last).phi;
    if (!(phi_left >= eps_last)) {
      ++out.values[last];
      return out;
    }
  }
  return out;
}

TensorCrystalElement to_dual_crystal(const GeometricPoint<TropInt>& p) {
  std::vector<std::int64_t> vals;
  vals.reserve(p.coords.size());
  for (const TropInt& z : p.coords) vals.push_back(z.value());
  return TensorCrystalElement(std::make_shared<const CartanMatrix>(p.cartan->langlands_dual()),
                              p.word, std::move(vals));
}

std::optional<std::size_t> ud_bridge(const GeometricPoint<TropInt>& p, Index i, std::int64_t c) {
  const GeometricPoint<TropInt> geo = e_act(p, i, TropInt(c));
  const TensorCrystalElement cry = e_pow(to_dual_crystal(p), i, c);
  for (std::size_t m = 0; m < geo.coords.size(); ++m)
    if (geo.coords[m].value() != cry.values[m]) return m;
  return std::nullopt;
}

BtildeElement::BtildeElement(std::vector<std::int64_t> values) : x(std::move(values)) {
  if (x.size() < 2) throw Error(ErrorKind::WrongType, "B~ element needs n + 1 >= 2 entries");
  if (std::accumulate(x.begin(), x.end(), std::int64_t{0}) != 0)
    throw Error(ErrorKind::WrongType, "B~ element entries must sum to zero");
}

BtildeElement btilde_e(const BtildeElement& x, Index i, std::int64_t c) {
  if (i + 1 >= x.x.size())
    throw Error(ErrorKind::BadIndex, "index outside 1..n", i);
  BtildeElement y = x;
  y.x[i] += c;
  y.x[i + 1] -= c;
  return y;
}

}  // namespace geocrystal

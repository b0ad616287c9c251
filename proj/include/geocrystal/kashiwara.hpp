#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geocrystal/cartan.hpp"
#include "geocrystal/geomcrystal.hpp"
#include "geocrystal/semifield.hpp"

namespace geocrystal {

/// An integer or minus infinity.
class ExtendedInt {
 public:
  constexpr ExtendedInt(std::int64_t v) : v_(v), finite_(true) {}  // NOLINT(implicit)
  static constexpr ExtendedInt neg_inf() { return ExtendedInt(); }

  constexpr bool is_finite() const noexcept { return finite_; }
  /// Throws Error{WrongType} on minus infinity.
  std::int64_t value() const;

  friend constexpr ExtendedInt max(ExtendedInt x, ExtendedInt y) {
    if (!x.finite_) return y;
    if (!y.finite_) return x;
    return x.v_ < y.v_ ? y : x;
  }
  friend constexpr ExtendedInt operator+(ExtendedInt x, std::int64_t d) {
    return x.finite_ ? ExtendedInt(x.v_ + d) : x;
  }
  friend constexpr ExtendedInt operator-(ExtendedInt x, std::int64_t d) {
    return x.finite_ ? ExtendedInt(x.v_ - d) : x;
  }
  friend constexpr bool operator==(ExtendedInt x, ExtendedInt y) {
    return x.finite_ == y.finite_ && (!x.finite_ || x.v_ == y.v_);
  }
  /// -inf is below every integer.
  friend constexpr bool operator<(ExtendedInt x, ExtendedInt y) {
    if (!y.finite_) return false;
    if (!x.finite_) return true;
    return x.v_ < y.v_;
  }
  friend constexpr bool operator>=(ExtendedInt x, ExtendedInt y) { return !(x < y); }

  std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

 private:
  constexpr ExtendedInt() : v_(0), finite_(false) {}

  std::int64_t v_;
  bool finite_;
};

/// (b_1)_{i_1} (x) ... (x) (b_k)_{i_k}, an element of B_{i_1} (x) ... (x) B_{i_k}
/// over the crystal's own Cartan datum.
struct TensorCrystalElement {
  CartanPtr cartan;
  Word word;
  std::vector<std::int64_t> values;

  TensorCrystalElement() = default;
  /// Throws Error{BadIndex} on a bad letter or a length mismatch.
  TensorCrystalElement(CartanPtr a, Word w, std::vector<std::int64_t> b);

  friend bool operator==(const TensorCrystalElement& x, const TensorCrystalElement& y) {
    return *x.cartan == *y.cartan && x.word == y.word && x.values == y.values;
  }
};

/// Precomputed data for e_i^c on a fixed word, for tight grid loops.
/// The kernel does no overflow checking; callers keep |b_j|, c small.
class EPowPlan {
 public:
  /// Throws Error{IndexAbsent} when i is not in the word.
  EPowPlan(const CartanMatrix& crystal_cartan, const Word& w, Index i);

  std::size_t size() const noexcept { return coeff_.size(); }

  /// out may alias b.
  void apply(const std::int64_t* b, std::int64_t c, std::int64_t* out) const {
    const std::size_t k = coeff_.size();
    const std::size_t r = pos_.size();
    std::int64_t sbuf[64];
    std::int64_t sufbuf[65];
    std::vector<std::int64_t> heap;
    std::int64_t* s = sbuf;
    std::int64_t* suf = sufbuf;
    if (r > 64) {
      heap.resize(2 * r + 1);
      s = heap.data();
      suf = heap.data() + r;
    }
    std::int64_t acc = 0;
    std::size_t t = 0;
    for (std::size_t m = 0; m < k; ++m) {
      if (t < r && pos_[t] == m) s[t++] = -b[m] - acc;
      acc += b[m] * coeff_[m];
    }
    constexpr std::int64_t kNegInf = INT64_MIN / 4;
    suf[r] = kNegInf;
    for (std::size_t u = r; u-- > 0;) suf[u] = std::max(s[u], suf[u + 1]);
    std::int64_t pre = kNegInf;
    std::int64_t below = suf[0];
    if (out != b) std::copy(b, b + k, out);
    for (std::size_t u = 0; u < r; ++u) {
      pre = std::max(pre, c + s[u]);
      const std::int64_t above = std::max(pre, suf[u + 1]);
      out[pos_[u]] += above - below;
      below = above;
    }
  }

 private:
  std::vector<int> coeff_;  // crystal C(i, i_l)
  std::vector<std::size_t> pos_;
};

/// e~_i^c by its closed form. Requires c >= 0. Throws Error{IndexAbsent},
/// Error{WrongType} for c < 0, Error{Overflow} for values beyond 2^40.
TensorCrystalElement e_pow(const TensorCrystalElement& b, Index i, std::int64_t c);

/// A single e~_i by the tensor-product rule folded from the left.
TensorCrystalElement e_kashiwara(const TensorCrystalElement& b, Index i);

ExtendedInt epsilon(const TensorCrystalElement& b, Index i);
ExtendedInt varphi(const TensorCrystalElement& b, Index i);
/// sum_j b_j alpha_{i_j}.
RootVector weight(const TensorCrystalElement& b);
/// <h_i, wt b> = sum_j b_j C(i, i_j).
std::int64_t weight_pairing(const TensorCrystalElement& b, Index i);

/// The tensor element with the same word and values over the transposed
/// Cartan datum.
TensorCrystalElement to_dual_crystal(const GeometricPoint<TropInt>& p);

/// Compares tropical e_act over A with e_pow over the transpose. Returns the
/// first mismatching coordinate, or nullopt when they agree.
std::optional<std::size_t> ud_bridge(const GeometricPoint<TropInt>& p, Index i, std::int64_t c);

/// (x_1, ..., x_{n+1}) in Z^{n+1} with zero sum.
struct BtildeElement {
  std::vector<std::int64_t> x;

  /// Throws Error{WrongType} unless the entries sum to zero.
  explicit BtildeElement(std::vector<std::int64_t> values);
  bool operator==(const BtildeElement&) const = default;
};

/// Adds c at slot i and subtracts it at slot i + 1 (0-based i < n).
BtildeElement btilde_e(const BtildeElement& x, Index i, std::int64_t c);

}  // namespace geocrystal

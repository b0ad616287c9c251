#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "geocrystal/error.hpp"

namespace geocrystal {

/// Positive semifield: +, *, / and integer powers, a unit and an embedding of
/// the positive integers. There is no subtraction and no additive zero.
template <class K>
concept Semifield = std::regular<K> && requires(const K& x, const K& y, long n) {
  { x + y } -> std::same_as<K>;
  { x * y } -> std::same_as<K>;
  { x / y } -> std::same_as<K>;
  { pow(x, n) } -> std::same_as<K>;
  { K::one() } -> std::same_as<K>;
  { K::constant(n) } -> std::same_as<K>;
};

/// Strictly positive exact rational.
class PosRat {
 public:
  PosRat() : v_(1) {}
  /// Throws Error{NotPositive} unless v > 0.
  explicit PosRat(mpq_class v) : v_(std::move(v)) {
    v_.canonicalize();
    if (sgn(v_) <= 0) throw Error(ErrorKind::NotPositive, "value " + v_.get_str() + " is not > 0");
  }
  PosRat(long num, long den) : PosRat(mpq_class(num, den)) {}

  /// Parses "p/q" or "p". Throws Error{Parse} or Error{NotPositive}.
  static PosRat parse(const std::string& s);

  static PosRat one() { return PosRat(); }
  static PosRat constant(long n) { return PosRat(mpq_class(n)); }

  const mpq_class& value() const noexcept { return v_; }
  std::string str() const { return v_.get_str(); }

  friend PosRat operator+(const PosRat& x, const PosRat& y) { return PosRat(x.v_ + y.v_, Trusted{}); }
  friend PosRat operator*(const PosRat& x, const PosRat& y) { return PosRat(x.v_ * y.v_, Trusted{}); }
  friend PosRat operator/(const PosRat& x, const PosRat& y) { return PosRat(x.v_ / y.v_, Trusted{}); }
  friend PosRat pow(const PosRat& x, long n);

  friend bool operator==(const PosRat& x, const PosRat& y) { return x.v_ == y.v_; }
  friend std::ostream& operator<<(std::ostream& os, const PosRat& x) { return os << x.v_.get_str(); }

 private:
  struct Trusted {};
  PosRat(mpq_class v, Trusted) : v_(std::move(v)) {}

  mpq_class v_;
};

/// Max-plus integer: + is max, * is +, / is -, pow(x, n) = n x, constants are 0.
/// Backed by int64; every operation throws Error{Overflow} instead of wrapping.
class TropInt {
 public:
  constexpr TropInt() = default;
  constexpr explicit TropInt(std::int64_t v) : v_(v) {}

  static constexpr TropInt one() { return TropInt(0); }
  static constexpr TropInt constant(long) { return TropInt(0); }

  constexpr std::int64_t value() const noexcept { return v_; }

  friend constexpr TropInt operator+(TropInt x, TropInt y) { return TropInt(x.v_ < y.v_ ? y.v_ : x.v_); }
  friend TropInt operator*(TropInt x, TropInt y) {
    std::int64_t r;
    if (__builtin_add_overflow(x.v_, y.v_, &r)) overflow();
    return TropInt(r);
  }
  friend TropInt operator/(TropInt x, TropInt y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x.v_, y.v_, &r)) overflow();
    return TropInt(r);
  }
  friend TropInt pow(TropInt x, long n) {
    std::int64_t r;
    if (__builtin_mul_overflow(x.v_, static_cast<std::int64_t>(n), &r)) overflow();
    return TropInt(r);
  }

  friend constexpr auto operator<=>(TropInt, TropInt) = default;
  friend std::ostream& operator<<(std::ostream& os, TropInt x) { return os << x.v_; }

 private:
  [[noreturn]] static void overflow();

  std::int64_t v_ = 0;
};

static_assert(Semifield<PosRat>);
static_assert(Semifield<TropInt>);

/// Exact tropical degree of a positive rational at base t: round(log_t(v)).
long tropical_degree(const mpq_class& v, const mpq_class& t);

/// Result of comparing an expression over PosRat at c_j = t^{m_j} with the
/// same expression over TropInt at m_j.
struct HomomorphismCheck {
  bool ok = false;
  std::vector<std::int64_t> tropical;
  std::vector<long> degrees;  // from the last base tried
  mpq_class base;             // last base tried
};

/// Runs `f` over both semifields. Starts at t = 2 and squares t up to four
/// times while the degrees disagree. `f` is a generic callable taking a
/// std::vector<K> and returning a std::vector<K>.
template <class F>
HomomorphismCheck check_tropical_homomorphism(F&& f, const std::vector<std::int64_t>& m) {
  HomomorphismCheck out;
  std::vector<TropInt> zs;
  zs.reserve(m.size());
  for (auto v : m) zs.emplace_back(v);
  for (const TropInt& z : f(zs)) out.tropical.push_back(z.value());

  mpq_class t = 2;
  for (int attempt = 0; attempt <= 4; ++attempt) {
    std::vector<PosRat> xs;
    xs.reserve(m.size());
    for (auto v : m) xs.push_back(pow(PosRat(t), static_cast<long>(v)));
    out.degrees.clear();
    for (const PosRat& x : f(xs)) out.degrees.push_back(tropical_degree(x.value(), t));
    out.base = t;
    out.ok = out.degrees.size() == out.tropical.size() &&
             std::equal(out.degrees.begin(), out.degrees.end(), out.tropical.begin());
    if (out.ok) return out;
    t = t * t;
  }
  return out;
}

}  // namespace geocrystal

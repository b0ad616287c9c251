#pragma once

#include <string>
#include <vector>

#include "geocrystal/braid.hpp"
#include "geocrystal/geomcrystal.hpp"
#include "geocrystal/json_io.hpp"
#include "geocrystal/kashiwara.hpp"
#include "geocrystal/verify.hpp"

namespace geocrystal::props {

void register_semifield(std::vector<Property>& out);
void register_geometric(std::vector<Property>& out);
void register_product(std::vector<Property>& out);
void register_crystal(std::vector<Property>& out);
void register_braid(std::vector<Property>& out);
void register_sln(std::vector<Property>& out);

inline CartanPtr transpose(const CartanPtr& a) {
  return std::make_shared<const CartanMatrix>(a->langlands_dual());
}

/// (first, second, first, ...) of the given length.
inline Word alternating(std::size_t len, Index first, Index second) {
  Word w;
  for (std::size_t k = 0; k < len; ++k) w.letters.push_back(k % 2 == 0 ? first : second);
  return w;
}

struct NamedCartan {
  std::string name;
  CartanPtr a;
};

/// Rank-2 data with the longest element of the Weyl group as (1,2,1,...).
struct Rank2Case {
  std::string name;
  CartanPtr a;
  std::size_t w0_length;
};

/// a1xa1, a2, b2 and its transpose, g2 and its transpose.
const std::vector<Rank2Case>& rank2_cases();

inline GeometricPoint<PosRat> random_point(Rng& rng, const CartanPtr& a, const Word& w) {
  std::vector<PosRat> c;
  c.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) c.push_back(rng.rat());
  return GeometricPoint<PosRat>(a, w, std::move(c));
}

inline GeometricPoint<TropInt> random_trop_point(Rng& rng, const CartanPtr& a, const Word& w,
                                                 std::int64_t bound) {
  std::vector<TropInt> c;
  for (std::size_t k = 0; k < w.size(); ++k) c.emplace_back(rng.integer(-bound, bound));
  return GeometricPoint<TropInt>(a, w, std::move(c));
}

/// Random word of length in [lo, hi] over the first `rank` letters.
inline Word random_word(Rng& rng, std::size_t rank, std::size_t lo, std::size_t hi) {
  Word w;
  const std::size_t len = lo + rng.index(hi - lo + 1);
  for (std::size_t k = 0; k < len; ++k) w.letters.push_back(rng.index(rank));
  return w;
}

template <class P>
std::string describe(const P& p) {
  return to_json(p).dump();
}

std::string describe_values(const std::vector<std::int64_t>& v);

/// Calls f(values) for every vector in [lo, hi]^k, reusing one buffer.
template <class F>
void for_each_grid(std::size_t k, std::int64_t lo, std::int64_t hi, F&& f) {
  std::vector<std::int64_t> v(k, lo);
  while (true) {
    f(v);
    std::size_t d = 0;
    while (d < k && v[d] == hi) v[d++] = lo;
    if (d == k) return;
    ++v[d];
  }
}

inline std::vector<TropInt> to_trop(const std::vector<std::int64_t>& v) {
  std::vector<TropInt> out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

inline std::vector<std::int64_t> from_trop(const std::vector<TropInt>& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(x.value());
  return out;
}

}  // namespace geocrystal::props

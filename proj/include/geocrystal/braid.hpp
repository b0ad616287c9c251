#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "geocrystal/cartan.hpp"
#include "geocrystal/geomcrystal.hpp"
#include "geocrystal/kashiwara.hpp"
#include "geocrystal/semifield.hpp"

namespace geocrystal {

enum class BraidClass { A1A1, A2, B2, G2 };

std::string_view to_string(BraidClass cls);
/// Throws Error{Parse}.
BraidClass parse_braid_class(std::string_view name);
/// Length of the alternating pattern: 2, 3, 4 or 6.
std::size_t pattern_length(BraidClass cls);

/// The alternating window (i, j, i, ...) starting at `pos` in a host word.
struct BraidMoveSpec {
  BraidClass cls;
  Index i;
  Index j;
  std::size_t pos;

  bool operator==(const BraidMoveSpec&) const = default;
};

/// A2 move on (i, j, i) -> (j, i, j):
/// d = ((c1 c3 + c2) / c1, c1 c3, c1 c2 / (c1 c3 + c2)).
template <Semifield K>
std::array<K, 3> braid_A2(std::span<const K, 3> c) {
  const K& c1 = c[0];
  const K& c2 = c[1];
  const K& c3 = c[2];
  const K s = c1 * c3 + c2;
  return {s / c1, c1 * c3, c1 * c2 / s};
}

/// B2 move on (i, j, i, j) -> (j, i, j, i) where a(i, j) = -2, a(j, i) = -1.
template <Semifield K>
std::array<K, 4> braid_B2(std::span<const K, 4> c) {
  const K& c1 = c[0];
  const K& c2 = c[1];
  const K& c3 = c[2];
  const K& c4 = c[3];
  const K one = K::one();
  const K u = c3 + c2 / c1;
  const K u2 = pow(u, 2);
  return {c4 + u2 / c2,
          c1 * c4 + c3 + c1 * pow(c3, 2) / c2,
          one / (one / c2 + u2 / (pow(c2, 2) * c4)),
          one / (c4 / c3 + c3 / c2 + one / c1)};
}

/// G2 move on (i, j, i, j, i, j) -> (j, i, j, i, j, i) where a(i, j) = -3,
/// a(j, i) = -1.
template <Semifield K>
std::array<K, 6> braid_G2(std::span<const K, 6> c) {
  const K& c1 = c[0];
  const K& c2 = c[1];
  const K& c3 = c[2];
  const K& c4 = c[3];
  const K& c5 = c[4];
  const K& c6 = c[5];
  const K one = K::one();
  const K two = K::constant(2);
  const K three = K::constant(3);
  const K u = c3 + c2 / c1;
  const K v = c5 + c4 / c3;
  const K v2 = pow(v, 2);
  const K v3 = pow(v, 3);

  const K d1 = pow(u, 3) / pow(c2, 2) + v3 / c4 + two * c4 / c2 + three * c4 / (c1 * c3) +
               three * c5 / c1 + three * c3 * c5 / c2 + c6;
  const K d2 = c1 / c4 * v3 + c1 * c3 / pow(c2, 2) * pow(u, 2) + three * c1 * c3 * c5 / c2 +
               two * c1 * c4 / c2 + two * c4 / c3 + c1 * c6 + two * c5;
  const K inner = v2 / c4 + c3 / c2 + one / c1;
  const K d5 = one / (pow(inner, 3) / c6 + c6 / c4 + two * v3 / pow(c4, 2) +
                      three * c3 * c5 / (c2 * c4) + three * c5 / (c1 * c4) + three / (c1 * c3) +
                      two / c2);
  const K d6 = one / (one / c1 + c3 / c2 + v2 / c4 + c6 / c5);
  const K d3 = c2 * c4 * c6 / (d1 * d5);
  const K d4 = c1 * c3 * c5 / (d2 * d6);
  return {d1, d2, d3, d4, d5, d6};
}

/// Applies the coordinate change of a move to a window, choosing the
/// displayed formula or its reverse-orientation conjugate from the Cartan
/// entries a(i, j), a(j, i). Throws Error{WrongType} when the class does not
/// match the entries.
template <Semifield K>
std::vector<K> braid_window(BraidClass cls, int a_ij, int a_ji, std::vector<K> c);

/// Moves the window of `spec` inside the host word. Coordinates outside the
/// window are unchanged. Throws Error{PatternMismatch} or Error{WrongType}.
template <Semifield K>
GeometricPoint<K> apply_move(const GeometricPoint<K>& p, const BraidMoveSpec& spec);

/// The explicit max-plus braid-type isomorphisms on the crystal side. The
/// orientation is read off the crystal's own Cartan datum C: the displayed
/// B2 (G2) formulas hold when C(i, j) = -1 and C(j, i) = -2 (-3).
std::vector<std::int64_t> tropical_braid_window(BraidClass cls, int c_ij, int c_ji,
                                                std::vector<std::int64_t> z);

/// Throws Error{PatternMismatch} or Error{WrongType}.
TensorCrystalElement tropical_braid(const TensorCrystalElement& b, const BraidMoveSpec& spec);

/// The nine-term maximum obtained by tropicalizing d1 of the G2 move
/// term by term; it agrees with the five-term Z1.
std::int64_t g2_d1_nine_term(std::span<const std::int64_t, 6> z);

/// The class of the move exchanging i and j, or nullopt when a(i,j) a(j,i) >= 4.
std::optional<BraidClass> braid_class_for(const CartanMatrix& a, Index i, Index j);

/// Throws Error{PatternMismatch} when the word does not show the pattern.
void check_pattern(const CartanMatrix& a, const Word& w, const BraidMoveSpec& spec);

/// The word after the move.
Word moved_word(const Word& w, const BraidMoveSpec& spec);

/// Shortest sequence of rank-2 moves turning `from` into `to`, searching
/// breadth-first over at most `max_nodes` words. nullopt when none is found.
std::optional<std::vector<BraidMoveSpec>> connect_words(const CartanMatrix& a, const Word& from,
                                                         const Word& to,
                                                         std::size_t max_nodes = 100000);

// Implementation

namespace detail {

template <Semifield K>
std::vector<K> reverse_inverse(std::vector<K> c) {
  std::reverse(c.begin(), c.end());
  for (K& x : c) x = K::one() / x;
  return c;
}

template <Semifield K, std::size_t N, class F>
std::vector<K> run_fixed(F f, const std::vector<K>& c) {
  auto r = f(std::span<const K, N>(c.data(), N));
  return std::vector<K>(r.begin(), r.end());
}

/// Whether the window starts on the letter carrying the -2 / -3 entry.
bool braid_forward(BraidClass cls, int a_ij, int a_ji);

}  // namespace detail

template <Semifield K>
std::vector<K> braid_window(BraidClass cls, int a_ij, int a_ji, std::vector<K> c) {
  if (c.size() != pattern_length(cls))
    throw Error(ErrorKind::PatternMismatch, "window has the wrong length");
  const bool forward = detail::braid_forward(cls, a_ij, a_ji);
  auto move = [&](const std::vector<K>& x) -> std::vector<K> {
    switch (cls) {
      case BraidClass::A1A1: return {x[1], x[0]};
      case BraidClass::A2: return detail::run_fixed<K, 3>(braid_A2<K>, x);
      case BraidClass::B2: return detail::run_fixed<K, 4>(braid_B2<K>, x);
      case BraidClass::G2: return detail::run_fixed<K, 6>(braid_G2<K>, x);
    }
    return x;
  };
  if (forward) return move(c);
  return detail::reverse_inverse(move(detail::reverse_inverse(std::move(c))));
}

template <Semifield K>
GeometricPoint<K> apply_move(const GeometricPoint<K>& p, const BraidMoveSpec& spec) {
  check_pattern(*p.cartan, p.word, spec);
  const std::size_t len = pattern_length(spec.cls);
  std::vector<K> window(p.coords.begin() + spec.pos, p.coords.begin() + spec.pos + len);
  auto d = braid_window(spec.cls, (*p.cartan)(spec.i, spec.j), (*p.cartan)(spec.j, spec.i),
                        std::move(window));
  GeometricPoint<K> out = p;
  out.word = moved_word(p.word, spec);
  std::copy(d.begin(), d.end(), out.coords.begin() + spec.pos);
  return out;
}

}  // namespace geocrystal

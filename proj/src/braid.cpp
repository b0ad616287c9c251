#include "geocrystal/braid.hpp"

#include <map>
#include <queue>

namespace geocrystal {

std::string_view to_string(BraidClass cls) {
  switch (cls) {
    case BraidClass::A1A1: return "A1A1";
    case BraidClass::A2: return "A2";
    case BraidClass::B2: return "B2";
    case BraidClass::G2: return "G2";
  }
  return "?";
}

BraidClass parse_braid_class(std::string_view name) {
  for (BraidClass c : {BraidClass::A1A1, BraidClass::A2, BraidClass::B2, BraidClass::G2})
    if (to_string(c) == name) return c;
  throw Error(ErrorKind::Parse, "unknown braid class '" + std::string(name) + "'");
}

std::size_t pattern_length(BraidClass cls) {
  switch (cls) {
    case BraidClass::A1A1: return 2;
    case BraidClass::A2: return 3;
    case BraidClass::B2: return 4;
    case BraidClass::G2: return 6;
  }
  return 0;
}

namespace detail {

bool braid_forward(BraidClass cls, int a_ij, int a_ji) {
  auto mismatch = [&]() -> bool {
    throw Error(ErrorKind::WrongType,
                "Cartan entries (" + std::to_string(a_ij) + "," + std::to_string(a_ji) +
                    ") do not fit a " + std::string(to_string(cls)) + " move");
  };
  switch (cls) {
    case BraidClass::A1A1: return (a_ij == 0 && a_ji == 0) || mismatch();
    case BraidClass::A2: return (a_ij == -1 && a_ji == -1) || mismatch();
    case BraidClass::B2:
      if (a_ij == -2 && a_ji == -1) return true;
      if (a_ij == -1 && a_ji == -2) return false;
      return mismatch();
    case BraidClass::G2:
      if (a_ij == -3 && a_ji == -1) return true;
      if (a_ij == -1 && a_ji == -3) return false;
      return mismatch();
  }
  return mismatch();
}

}  // namespace detail

std::optional<BraidClass> braid_class_for(const CartanMatrix& a, Index i, Index j) {
  switch (rank2_class(a, i, j).cls) {
    case Rank2Class::Commuting: return BraidClass::A1A1;
    case Rank2Class::Simply: return BraidClass::A2;
    case Rank2Class::Double: return BraidClass::B2;
    case Rank2Class::Triple: return BraidClass::G2;
    case Rank2Class::Free: break;
  }
  return std::nullopt;
}

void check_pattern(const CartanMatrix& a, const Word& w, const BraidMoveSpec& spec) {
  a.check_index(spec.i);
  a.check_index(spec.j);
  if (spec.i == spec.j) throw Error(ErrorKind::PatternMismatch, "a move needs i != j");
  const std::size_t len = pattern_length(spec.cls);
  if (spec.pos > w.size() || w.size() - spec.pos < len)
    throw Error(ErrorKind::PatternMismatch, "window runs past the end of the word", w.size());
  for (std::size_t k = 0; k < len; ++k) {
    const Index want = k % 2 == 0 ? spec.i : spec.j;
    if (w[spec.pos + k] != want)
      throw Error(ErrorKind::PatternMismatch,
                  "letter " + std::to_string(spec.pos + k + 1) + " is " +
                      a.label(w[spec.pos + k]) + ", expected " + a.label(want),
                  spec.pos + k);
  }
}

Word moved_word(const Word& w, const BraidMoveSpec& spec) {
  Word out = w;
  const std::size_t len = pattern_length(spec.cls);
  for (std::size_t k = 0; k < len; ++k) out.letters[spec.pos + k] = k % 2 == 0 ? spec.j : spec.i;
  return out;
}

namespace {

using Z = std::int64_t;

std::vector<Z> trop_a2(const std::vector<Z>& z) {
  const Z z1 = z[0], z2 = z[1], z3 = z[2];
  return {std::max(z3, z2 - z1), z1 + z3, -std::max(-z1, z3 - z2)};
}

std::vector<Z> trop_b2(const std::vector<Z>& z) {
  const Z z1 = z[0], z2 = z[1], z3 = z[2], z4 = z[3];
  return {std::max({z4, z2 - 2 * z1, 2 * z3 - z2}),
          std::max({z1 + z4, z3, z1 - z2 + 2 * z3}),
          -std::max({-z2, -z4 - 2 * z1, -2 * z2 + 2 * z3 - z4}),
          -std::max({-z3 + z4, -z1, z3 - z2})};
}

std::vector<Z> trop_g2(const std::vector<Z>& z) {
  const Z z1 = z[0], z2 = z[1], z3 = z[2], z4 = z[3], z5 = z[4], z6 = z[5];
  const Z Z1 = std::max({z6, 3 * z5 - z4, -3 * z3 + 2 * z4, -2 * z2 + 3 * z3, -3 * z1 + z2});
  const Z Z2 = std::max(
      {z1 + z6, z1 - z4 + 3 * z5, z1 - 3 * z3 + 2 * z4, z1 - 2 * z2 + 3 * z3, -z1 + z3});
  const Z Z5 = -std::max({-z4 + z6, -3 * z4 + 6 * z5 - z6, -6 * z3 + 3 * z4 - z6,
                          -3 * z2 + 3 * z3 - z6, -3 * z1 - z6});
  const Z Z6 = -std::max({-z1, -z2 + z3, -z4 + 2 * z5, -2 * z3 + z4, -z5 + z6});
  return {Z1, Z2, z2 + z4 + z6 - Z1 - Z5, z1 + z3 + z5 - Z2 - Z6, Z5, Z6};
}

std::vector<Z> negate_reverse(std::vector<Z> z) {
  std::reverse(z.begin(), z.end());
  for (Z& x : z) x = -x;
  return z;
}

}  // namespace

std::vector<std::int64_t> tropical_braid_window(BraidClass cls, int c_ij, int c_ji,
                                                std::vector<std::int64_t> z) {
  if (z.size() != pattern_length(cls))
    throw Error(ErrorKind::PatternMismatch, "window has the wrong length");
  // The crystal datum is the transpose of the geometric one.
  const bool forward = detail::braid_forward(cls, c_ji, c_ij);
  auto move = [&](const std::vector<Z>& x) -> std::vector<Z> {
    switch (cls) {
      case BraidClass::A1A1: return {x[1], x[0]};
      case BraidClass::A2: return trop_a2(x);
      case BraidClass::B2: return trop_b2(x);
      case BraidClass::G2: return trop_g2(x);
    }
    return x;
  };
  if (forward) return move(z);
  return negate_reverse(move(negate_reverse(std::move(z))));
}

TensorCrystalElement tropical_braid(const TensorCrystalElement& b, const BraidMoveSpec& spec) {
  check_pattern(*b.cartan, b.word, spec);
  const std::size_t len = pattern_length(spec.cls);
  std::vector<Z> window(b.values.begin() + spec.pos, b.values.begin() + spec.pos + len);
  auto d = tropical_braid_window(spec.cls, (*b.cartan)(spec.i, spec.j),
                                 (*b.cartan)(spec.j, spec.i), std::move(window));
  TensorCrystalElement out = b;
  out.word = moved_word(b.word, spec);
  std::copy(d.begin(), d.end(), out.values.begin() + spec.pos);
  return out;
}

std::int64_t g2_d1_nine_term(std::span<const std::int64_t, 6> z) {
  const Z z1 = z[0], z2 = z[1], z3 = z[2], z4 = z[3], z5 = z[4], z6 = z[5];
  return std::max({-2 * z2 + 3 * z3, -3 * z1 + z2, 3 * z5 - z4, -3 * z3 + 2 * z4, z6, z4 - z2,
                   z4 - z1 - z3, z5 - z1, z3 + z5 - z2});
}

std::optional<std::vector<BraidMoveSpec>> connect_words(const CartanMatrix& a, const Word& from,
                                                         const Word& to, std::size_t max_nodes) {
  check_word(a, from);
  check_word(a, to);
  if (from.size() != to.size()) return std::nullopt;
  std::map<Word, std::pair<Word, BraidMoveSpec>> parent;
  std::queue<Word> todo;
  parent.emplace(from, std::pair{from, BraidMoveSpec{BraidClass::A1A1, 0, 0, 0}});
  todo.push(from);
  while (!todo.empty() && parent.size() <= max_nodes) {
    Word w = todo.front();
    todo.pop();
    if (w == to) {
      std::vector<BraidMoveSpec> path;
      while (!(w == from)) {
        const auto& [prev, spec] = parent.at(w);
        path.push_back(spec);
        w = prev;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
      const Index i = w[pos];
      const Index j = w[pos + 1];
      if (i == j) continue;
      auto cls = braid_class_for(a, i, j);
      if (!cls) continue;
      BraidMoveSpec spec{*cls, i, j, pos};
      const std::size_t len = pattern_length(*cls);
      if (pos + len > w.size()) continue;
      bool fits = true;
      for (std::size_t k = 0; k < len && fits; ++k) fits = w[pos + k] == (k % 2 == 0 ? i : j);
      if (!fits) continue;
      Word next = moved_word(w, spec);
      if (parent.emplace(next, std::pair{w, spec}).second) todo.push(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace geocrystal

#include <array>

#include "doctest.h"
#include "geocrystal/braid.hpp"
#include "geocrystal/sln_oracle.hpp"
#include "support.hpp"

using namespace geocrystal;
using testing::kind_of;
using testing::q;
using testing::qs;

namespace {

using V = std::vector<std::int64_t>;

std::vector<PosRat> ones(std::size_t n) { return std::vector<PosRat>(n, PosRat::one()); }

}  // namespace

TEST_CASE("A2 move") {
  auto a2 = cartan_types::a(2);
  CHECK(braid_window(BraidClass::A2, -1, -1, ones(3)) == qs({"2", "1", "1/2"}));
  for (const char* s : {"2", "3", "5"}) {
    const PosRat c = q(s);
    const PosRat c2 = c * c;
    CHECK(braid_window(BraidClass::A2, -1, -1, std::vector<PosRat>{c, PosRat::one(), c}) ==
          std::vector<PosRat>{(c2 + PosRat::one()) / c, c2, c / (c2 + PosRat::one())});
  }
  GeometricPoint<PosRat> p(a2, Word{0, 1, 0}, qs({"2", "3", "5"}));
  auto m = apply_move(p, {BraidClass::A2, 0, 1, 0});
  CHECK(m.word == Word{1, 0, 1});
  CHECK(point_to_matrix(m) == point_to_matrix(p));
}

TEST_CASE("B2 and G2 moves at the unit point") {
  CHECK(braid_window(BraidClass::B2, -2, -1, ones(4)) == qs({"5", "3", "1/5", "1/3"}));
  const auto d = braid_window(BraidClass::G2, -3, -1, ones(6));
  CHECK(d == qs({"28", "22", "61/7", "7/22", "1/244", "1/7"}));
  CHECK(d[0] * d[2] * d[4] == PosRat::one());
  CHECK(d[1] * d[3] * d[5] == PosRat::one());
  CHECK(kind_of([] { braid_window(BraidClass::G2, -2, -1, ones(6)); }) == ErrorKind::WrongType);
}

TEST_CASE("reverse orientation undoes the move") {
  const auto c = qs({"2", "3/5", "7", "1/4"});
  const auto d = braid_window(BraidClass::B2, -2, -1, c);
  CHECK(braid_window(BraidClass::B2, -1, -2, d) == c);
  const auto e = qs({"2", "3/5", "7", "1/4", "9", "11/3"});
  CHECK(braid_window(BraidClass::G2, -1, -3, braid_window(BraidClass::G2, -3, -1, e)) == e);
}

TEST_CASE("moves inside a host word") {
  auto a3 = cartan_types::a(3);
  GeometricPoint<PosRat> p(a3, Word{0, 1, 0, 2}, qs({"2", "3", "5", "7"}));
  auto m = apply_move(p, {BraidClass::A2, 0, 1, 0});
  CHECK(m.word == Word{1, 0, 1, 2});
  CHECK(m.coords[3] == q("7"));
  CHECK(point_to_matrix(m) == point_to_matrix(p));

  const auto err = [&] {
    try {
      apply_move(p, {BraidClass::A2, 0, 1, 1});
    } catch (const Error& e) {
      return e;
    }
    FAIL("no error");
    return Error(ErrorKind::Parse, "");
  }();
  CHECK(err.kind() == ErrorKind::PatternMismatch);
  CHECK(err.position().has_value());
}

TEST_CASE("tropical moves") {
  for (std::int64_t z1 = -2; z1 <= 2; ++z1)
    for (std::int64_t z2 = -2; z2 <= 2; ++z2)
      for (std::int64_t z3 = -2; z3 <= 2; ++z3)
        CHECK(tropical_braid_window(BraidClass::A2, -1, -1, V{z1, z2, z3}) ==
              V{std::max(z3, z2 - z1), z1 + z3, -std::max(-z1, z3 - z2)});
  CHECK(tropical_braid_window(BraidClass::A2, -1, -1, V{0, 0, 0}) == V{0, 0, 0});
  CHECK(tropical_braid_window(BraidClass::A1A1, 0, 0, V{4, -1}) == V{-1, 4});

  // Crystal datum with C(i, j) = -1, C(j, i) = -2.
  for (std::int64_t z1 = -2; z1 <= 2; ++z1)
    for (std::int64_t z2 = -2; z2 <= 2; ++z2) {
      const V z{z1, z2, 1, -1};
      CHECK(tropical_braid_window(BraidClass::B2, -1, -2, z)[0] ==
            std::max({z[3], z[1] - 2 * z[0], 2 * z[2] - z[1]}));
    }

  auto b2t = make_cartan(cartan_types::b2()->langlands_dual().entries());
  TensorCrystalElement b(b2t, Word{0, 1, 0, 1}, {1, 2, 3, 4});
  auto moved = tropical_braid(b, {BraidClass::B2, 0, 1, 0});
  CHECK(moved.word == Word{1, 0, 1, 0});
  CHECK(tropical_braid(moved, {BraidClass::B2, 1, 0, 0}) == b);
}

TEST_CASE("G2 nine-term maximum") {
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t c = -2; c <= 2; ++c) {
      const std::array<std::int64_t, 6> z{a, 1, c, -a, 2, 0};
      const auto d = tropical_braid_window(BraidClass::G2, -1, -3, V(z.begin(), z.end()));
      CHECK(g2_d1_nine_term(std::span<const std::int64_t, 6>(z)) == d[0]);
    }
}

TEST_CASE("classes and word connectivity") {
  CHECK(braid_class_for(*cartan_types::g2(), 0, 1) == BraidClass::G2);
  CHECK(braid_class_for(*cartan_types::a1xa1(), 0, 1) == BraidClass::A1A1);
  CHECK(!braid_class_for(*make_cartan({{2, -2}, {-2, 2}}), 0, 1).has_value());
  CHECK(parse_braid_class("B2") == BraidClass::B2);
  CHECK(kind_of([] { parse_braid_class("C3"); }) == ErrorKind::Parse);

  auto a3 = cartan_types::a(3);
  const Word from{0, 1, 0, 2, 1, 0}, to{2, 1, 0, 2, 1, 2};
  auto path = connect_words(*a3, from, to);
  REQUIRE(path.has_value());
  Word w = from;
  for (const auto& m : *path) {
    check_pattern(*a3, w, m);
    w = moved_word(w, m);
  }
  CHECK(w == to);
  CHECK(!connect_words(*a3, Word{0, 1}, Word{1, 0}).has_value());
}

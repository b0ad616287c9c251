#include "doctest.h"
#include "geocrystal/kashiwara.hpp"
#include "support.hpp"

using namespace geocrystal;
using testing::kind_of;
using testing::ts;

namespace {

using V = std::vector<std::int64_t>;

TensorCrystalElement el(CartanPtr a, Word w, V b) {
  return TensorCrystalElement(std::move(a), std::move(w), std::move(b));
}

}  // namespace

TEST_CASE("extended integers") {
  const ExtendedInt inf = ExtendedInt::neg_inf();
  CHECK(max(inf, ExtendedInt(-5)) == ExtendedInt(-5));
  CHECK(inf < ExtendedInt(INT64_MIN));
  CHECK((inf + 3) == inf);
  CHECK(inf.str() == "-inf");
  CHECK(kind_of([&] { (void)inf.value(); }) == ErrorKind::WrongType);
}

TEST_CASE("single factor") {
  auto a1 = cartan_types::a(1);
  const auto b = el(a1, Word{0}, {4});
  CHECK(e_kashiwara(b, 0).values == V{5});
  CHECK(e_pow(b, 0, 3).values == V{7});
  CHECK(e_pow(b, 0, 0) == b);
  CHECK(epsilon(b, 0) == ExtendedInt(-4));
  CHECK(varphi(b, 0) == ExtendedInt(4));
  CHECK(weight(b).coeffs == std::vector<long>{4});

  auto a2 = cartan_types::a(2);
  const auto c = el(a2, Word{0}, {2});
  CHECK(epsilon(c, 1) == ExtendedInt::neg_inf());
  CHECK(varphi(c, 1) == ExtendedInt::neg_inf());
}

TEST_CASE("two factors") {
  const auto b = el(cartan_types::a(1), Word{0, 0}, {2, -1});
  CHECK(epsilon(b, 0) == ExtendedInt(-2));
  CHECK(varphi(b, 0) == ExtendedInt(0));
  CHECK(varphi(b, 0).value() == epsilon(b, 0).value() + weight_pairing(b, 0));
}

TEST_CASE("tensor examples") {
  auto dual = make_cartan(cartan_types::a(2)->langlands_dual().entries());
  const auto b = el(dual, Word{0, 1, 0}, {0, 0, 0});
  CHECK(e_pow(b, 0, 1).values == V{1, 0, 0});
  CHECK(e_kashiwara(b, 0) == e_pow(b, 0, 1));
}

TEST_CASE("iterated e matches the closed form") {
  const std::vector<CartanPtr> data = {cartan_types::a(2), cartan_types::b2(), cartan_types::g2()};
  for (const auto& a : data) {
    const Word w{0, 1, 0, 1};
    for (std::int64_t x = -2; x <= 2; ++x)
      for (std::int64_t y = -2; y <= 2; ++y) {
        auto b = el(a, w, {x, y, -x, 1});
        for (Index i : {0, 1}) {
          auto it = b;
          for (std::int64_t c = 0; c <= 3; ++c) {
            CHECK(it == e_pow(b, i, c));
            it = e_kashiwara(it, i);
          }
          const auto e = e_kashiwara(b, i);
          CHECK(epsilon(e, i) == epsilon(b, i) - 1);
          CHECK(varphi(e, i) == varphi(b, i) + 1);
        }
      }
  }
}

TEST_CASE("errors") {
  const auto b = el(cartan_types::a(2), Word{0}, {1});
  CHECK(kind_of([&] { e_pow(b, 1, 1); }) == ErrorKind::IndexAbsent);
  CHECK(kind_of([&] { e_pow(b, 0, -1); }) == ErrorKind::WrongType);
  CHECK(kind_of([&] { e_pow(el(cartan_types::a(1), Word{0}, {std::int64_t{1} << 50}), 0, 1); }) ==
        ErrorKind::Overflow);
  CHECK(kind_of([] { el(cartan_types::a(2), Word{0, 1}, {1}); }) == ErrorKind::BadIndex);
}

TEST_CASE("bridge between the two sides") {
  GeometricPoint<TropInt> p(cartan_types::a(1), Word{0}, ts({4}));
  CHECK(!ud_bridge(p, 0, 3).has_value());
  CHECK(e_act(p, 0, TropInt(3)).coords == ts({7}));

  auto b2 = cartan_types::b2();
  const auto d = to_dual_crystal(GeometricPoint<TropInt>(b2, Word{0, 1, 0, 1}, ts({1, -2, 3, 0})));
  CHECK((*d.cartan)(0, 1) == (*b2)(1, 0));
  for (std::int64_t x = -3; x <= 3; ++x)
    for (std::int64_t c = 0; c <= 3; ++c)
      for (Index i : {0, 1}) {
        GeometricPoint<TropInt> q(b2, Word{0, 1, 0, 1}, ts({x, 1, -x, 2}));
        CHECK(!ud_bridge(q, i, c).has_value());
      }
}

TEST_CASE("Btilde") {
  const BtildeElement x({0, 0, 0});
  CHECK(btilde_e(x, 0, 1) == BtildeElement({1, -1, 0}));
  CHECK(btilde_e(x, 1, 0) == x);
  CHECK(kind_of([] { BtildeElement({1, 0, 0}); }) == ErrorKind::WrongType);
}

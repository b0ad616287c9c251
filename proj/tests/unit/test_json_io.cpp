#include <random>

#include "doctest.h"
#include "geocrystal/braid.hpp"
#include "geocrystal/json_io.hpp"
#include "support.hpp"

using namespace geocrystal;
using testing::kind_of;
using testing::qs;
using testing::ts;

TEST_CASE("cartan round trip") {
  auto a = make_cartan({{2, -3}, {-1, 2}}, {"a", "b"});
  const Json j = to_json(*a);
  CHECK(*cartan_from_json(j) == *a);
  CHECK(kind_of([] { cartan_from_json(Json::parse(R"({"index":[1,2],"a":[[2,1],[-1,2]]})")); }) ==
        ErrorKind::NotGCM);
}

TEST_CASE("points round trip") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<long> d(1, 1000);
  std::uniform_int_distribution<int> letter(0, 1);
  const std::vector<CartanPtr> data = {cartan_types::a(2), cartan_types::b2(), cartan_types::g2()};
  for (int s = 0; s < 200; ++s) {
    const auto& a = data[s % data.size()];
    std::vector<Index> w;
    std::vector<PosRat> c;
    std::vector<TropInt> t;
    for (int k = 0; k < 1 + s % 6; ++k) {
      w.push_back(letter(gen));
      c.emplace_back(d(gen), d(gen));
      t.emplace_back(d(gen) - 500);
    }
    GeometricPoint<PosRat> p(a, Word(w), c);
    CHECK(rat_point_from_json(Json::parse(to_json(p).dump())) == p);
    GeometricPoint<TropInt> r(a, Word(w), t);
    CHECK(trop_point_from_json(Json::parse(to_json(r).dump())) == r);
    TensorCrystalElement e(a, Word(w), std::vector<std::int64_t>(w.size(), s - 100));
    CHECK(element_from_json(Json::parse(to_json(e).dump())) == e);
  }
}

TEST_CASE("fallback Cartan and labels") {
  auto a = cartan_types::a(2);
  const auto p = rat_point_from_json(Json::parse(R"({"word":[1,2,1],"coords":["2","3","1/4"]})"), a);
  CHECK(p.word == Word{0, 1, 0});
  CHECK(p.coords == qs({"2", "3", "1/4"}));
  CHECK(kind_of([] { rat_point_from_json(Json::parse(R"({"word":[1],"coords":["2"]})")); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([&] {
          rat_point_from_json(Json::parse(R"({"word":[1],"coords":["-2"]})"), a);
        }) == ErrorKind::NotPositive);
  CHECK(kind_of([&] { rat_point_from_json(Json::parse(R"({"word":[4],"coords":["2"]})"), a); }) ==
        ErrorKind::BadIndex);
  const auto t = trop_point_from_json(Json::parse(R"({"word":[2],"coords":[-3]})"), a);
  CHECK(t.coords == ts({-3}));
}

TEST_CASE("moves and errors") {
  auto g = cartan_types::g2();
  const BraidMoveSpec m{BraidClass::G2, 0, 1, 2};
  CHECK(move_from_json(*g, to_json(*g, m)) == m);
  const Json e = to_json(Error(ErrorKind::OutsideOpenCell, "minor vanishes", 2));
  CHECK(e["error"] == "OutsideOpenCell");
  CHECK(e["position"] == 2);
}

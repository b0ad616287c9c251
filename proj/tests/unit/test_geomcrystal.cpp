#include "doctest.h"
#include "geocrystal/geomcrystal.hpp"
#include "geocrystal/sln_oracle.hpp"
#include "support.hpp"

using namespace geocrystal;
using testing::kind_of;
using testing::q;
using testing::qs;
using testing::ts;

namespace {

GeometricPoint<PosRat> rat_point(CartanPtr a, Word w, std::initializer_list<const char*> c) {
  return GeometricPoint<PosRat>(std::move(a), std::move(w), qs(c));
}

}  // namespace

TEST_CASE("point validation") {
  auto a = cartan_types::a(2);
  CHECK(kind_of([&] { rat_point(a, Word{0, 1}, {"1"}); }) == ErrorKind::BadIndex);
  CHECK(kind_of([&] { rat_point(a, Word{0, 3}, {"1", "2"}); }) == ErrorKind::BadIndex);
}

TEST_CASE("phi") {
  CHECK(phi(rat_point(cartan_types::a(1), Word{0}, {"5"}), 0) == q("1/5"));
  const auto p = rat_point(cartan_types::a(2), Word{0, 1, 0}, {"2", "3", "4"});
  CHECK(phi(p, 0) == q("11/16"));
  CHECK(phi(p, 1) == q("2/3"));
  CHECK(kind_of([&] { phi(rat_point(cartan_types::a(2), Word{0}, {"2"}), 1); }) ==
        ErrorKind::IndexAbsent);
}

TEST_CASE("gamma and alpha") {
  auto a2 = cartan_types::a(2);
  CHECK(gamma(rat_point(a2, Word{0, 1}, {"5", "7"})).u == qs({"5", "7"}));
  CHECK(gamma(rat_point(a2, Word{0, 1, 0}, {"2", "3", "4"})).u == qs({"8", "3"}));
  GeometricPoint<TropInt> t(a2, Word{0, 1, 0}, ts({2, 3, 4}));
  CHECK(gamma(t).u == ts({6, 3}));

  TorusElement<PosRat> h(a2, qs({"2", "1"}));
  CHECK(alpha_eval(h, 0) == q("4"));
  CHECK(alpha_eval(h, 1) == q("1/2"));
  auto g = make_cartan({{2, -1}, {-3, 2}});
  CHECK(alpha_eval(TorusElement<PosRat>(g, qs({"1", "5"})), 0) == q("1/125"));
}

TEST_CASE("e action examples") {
  auto a1 = cartan_types::a(1);
  const auto p = rat_point(a1, Word{0}, {"5"});
  CHECK(e_act(p, 0, q("3")).coords == qs({"15"}));
  CHECK(e_act_recursive(p, 0, q("3")).coords == qs({"15"}));
  GeometricPoint<TropInt> t(a1, Word{0}, ts({5}));
  CHECK(e_act(t, 0, TropInt(3)).coords == ts({8}));

  CHECK(x_act_raw(p, 0, mpq_class(3)) == std::vector<mpq_class>{8});
  const auto r = rat_point(cartan_types::a(2), Word{0, 1, 0}, {"2", "3", "4"});
  CHECK(x_act_raw(r, 0, mpq_class(0)) == std::vector<mpq_class>{2, 3, 4});
  CHECK(e_act(r, 0, PosRat::one()) == r);
  const auto e = e_act(rat_point(cartan_types::a(2), Word{0, 1, 0}, {"1", "1", "1"}), 0, q("2"));
  CHECK(e == e_act_recursive(rat_point(cartan_types::a(2), Word{0, 1, 0}, {"1", "1", "1"}), 0, q("2")));
}

TEST_CASE("x action agrees with the matrix model") {
  const auto p = rat_point(cartan_types::a(2), Word{0, 1, 0}, {"2", "3", "4"});
  const auto raw = x_act_raw(p, 0, mpq_class(1));
  std::vector<PosRat> c;
  for (const auto& v : raw) c.emplace_back(v);
  const GeometricPoint<PosRat> moved(p.cartan, p.word, c);
  CHECK(point_to_matrix(moved) == pi_minus(gen_x(2, 0, 1) * point_to_matrix(p)).b);
}

TEST_CASE("e-strings agree on the two reduced words of w0") {
  auto a2 = cartan_types::a(2);
  const auto p = rat_point(a2, Word{0, 1, 0}, {"2", "3", "4"});
  TorusElement<PosRat> t(a2, qs({"3/7", "5"}));
  CHECK(e_string(Word{0, 1, 0}, t, p) == e_string(Word{1, 0, 1}, t, p));
  CHECK(e_string(Word{1}, t, p) == e_act(p, 1, alpha_eval(t, 1)));
}

TEST_CASE("products") {
  auto a2 = cartan_types::a(2);
  const auto p = rat_point(a2, Word{0}, {"2"});
  const auto r = rat_point(a2, Word{1}, {"3"});
  const auto pr = concat(p, r);
  CHECK(pr.word == Word{0, 1});
  CHECK(pr.coords == qs({"2", "3"}));
  CHECK(kind_of([&] { concat(p, rat_point(cartan_types::b2(), Word{1}, {"3"})); }) ==
        ErrorKind::CartanMismatch);

  auto [c1, c2] = product_split(PosRat::one(), q("2"), q("3"), q("5"));
  CHECK(c1 == PosRat::one());
  CHECK(c2 == PosRat::one());
  auto [d1, d2] = product_split(q("7/3"), q("2"), q("3"), q("5"));
  CHECK(d1 * d2 == q("7/3"));

  const auto x = rat_point(a2, Word{0, 1}, {"2", "3"});
  const auto y = rat_point(a2, Word{1, 0}, {"5", "7"});
  const PosRat c = q("4/9");
  auto [s1, s2] = product_split(c, phi(x, 0), phi(y, 0), alpha_eval(gamma(x), 0));
  CHECK(e_act(concat(x, y), 0, c) == concat(e_act(x, 0, s1), e_act(y, 0, s2)));
  CHECK(phi(concat(x, y), 0) == phi(x, 0) + phi(y, 0) / alpha_eval(gamma(x), 0));
}

TEST_CASE("symmetric chart") {
  auto a3 = cartan_types::a(3);
  const auto p = symmetric_chart(a3, qs({"2", "3", "5"}));
  CHECK(p.word == Word{0, 1, 2});
  CHECK(p.coords == qs({"2", "6", "30"}));
  CHECK(symmetric_chart_inverse(p) == qs({"2", "3", "5", "1/30"}));
  for (Index i = 0; i < 3; ++i) CHECK(phi(p, i) == PosRat::one() / qs({"2", "3", "5"})[i]);
  CHECK(symmetric_chart_inverse(e_act(p, 1, q("7"))) == qs({"2", "21", "5/7", "1/30"}));
  CHECK(kind_of([] { symmetric_chart(cartan_types::b2(), qs({"1", "1"})); }) ==
        ErrorKind::WrongType);
  CHECK(kind_of([&] { symmetric_chart_inverse(rat_point(a3, Word{1, 0, 2}, {"1", "1", "1"})); }) ==
        ErrorKind::WrongType);
}

#include "doctest.h"
#include "geocrystal/semifield.hpp"
#include "support.hpp"

using namespace geocrystal;
using testing::kind_of;
using testing::q;

TEST_CASE("PosRat arithmetic") {
  CHECK(q("1/2") + q("1/3") == q("5/6"));
  CHECK(q("2/3") * q("9/4") == q("3/2"));
  CHECK(q("2/3") / q("4") == q("1/6"));
  CHECK(pow(q("2/3"), -2) == q("9/4"));
  CHECK(pow(q("7"), 0) == PosRat::one());
  CHECK(PosRat::constant(3) == q("3"));
  CHECK(q("6/4").str() == "3/2");
}

TEST_CASE("PosRat rejects bad input") {
  CHECK(kind_of([] { PosRat(0, 1); }) == ErrorKind::NotPositive);
  CHECK(kind_of([] { PosRat(-1, 2); }) == ErrorKind::NotPositive);
  CHECK(kind_of([] { q("-3"); }) == ErrorKind::NotPositive);
  CHECK(kind_of([] { q("abc"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { q("1/0"); }) == ErrorKind::Parse);
}

TEST_CASE("TropInt arithmetic") {
  const TropInt a(4), b(7);
  CHECK(a + b == TropInt(7));
  CHECK(a * b == TropInt(11));
  CHECK(a / b == TropInt(-3));
  CHECK(pow(a, -3) == TropInt(-12));
  CHECK(TropInt::constant(3) == TropInt(0));
  CHECK(TropInt::one() == TropInt(0));
}

TEST_CASE("TropInt overflow is reported") {
  const TropInt big(INT64_MAX);
  CHECK(kind_of([&] { (void)(big * TropInt(1)); }) == ErrorKind::Overflow);
  CHECK(kind_of([&] { (void)(TropInt(INT64_MIN) / TropInt(1)); }) == ErrorKind::Overflow);
  CHECK(kind_of([&] { (void)pow(big, 2); }) == ErrorKind::Overflow);
}

TEST_CASE("tropical degree") {
  CHECK(tropical_degree(mpq_class(8), mpq_class(2)) == 3);
  CHECK(tropical_degree(mpq_class(1, 16), mpq_class(2)) == -4);
  CHECK(tropical_degree(mpq_class(1), mpq_class(4)) == 0);
}

TEST_CASE("tropical homomorphism on a subtraction-free expression") {
  auto f = []<class K>(const std::vector<K>& x) {
    return std::vector<K>{(x[0] * x[2] + x[1]) / x[0], x[0] * x[1] / (x[0] * x[2] + x[1])};
  };
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b) {
      auto r = check_tropical_homomorphism(f, {a, b, 2});
      CHECK(r.ok);
      CHECK(r.tropical[0] == std::max<std::int64_t>(2, b - a));
    }
}

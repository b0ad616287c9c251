#include "geocrystal/semifield.hpp"

#include <cmath>

namespace geocrystal {

PosRat PosRat::parse(const std::string& s) {
  mpq_class v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw Error(ErrorKind::Parse, "cannot parse rational '" + s + "'");
  if (v.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  return PosRat(std::move(v));
}

PosRat pow(const PosRat& x, long n) {
  mpz_class num = x.v_.get_num();
  mpz_class den = x.v_.get_den();
  if (n < 0) {
    std::swap(num, den);
    n = -n;
  }
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(r.get_den_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n));
  return PosRat(std::move(r), PosRat::Trusted{});
}

void TropInt::overflow() {
  throw Error(ErrorKind::Overflow, "tropical integer overflow");
}

namespace {

double log2_of(const mpz_class& z) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return static_cast<double>(exp) + std::log2(mant);
}

}  // namespace

long tropical_degree(const mpq_class& v, const mpq_class& t) {
  double lv = log2_of(v.get_num()) - log2_of(v.get_den());
  double lt = log2_of(t.get_num()) - log2_of(t.get_den());
  return std::lround(lv / lt);
}

}  // namespace geocrystal

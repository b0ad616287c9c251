#include "geocrystal/geomcrystal.hpp"

namespace geocrystal {

std::vector<mpq_class> x_act_raw(const GeometricPoint<PosRat>& p, Index i, const mpq_class& a) {
  p.cartan->check_index(i);
  const CartanMatrix& cm = *p.cartan;
  mpq_class bar = a;
  std::vector<mpq_class> out;
  out.reserve(p.word.size());
  for (std::size_t j = 0; j < p.word.size(); ++j) {
    const Index l = p.word[j];
    const mpq_class& cj = p.coords[j].value();
    mpq_class tilde = l == i ? mpq_class(cj + bar) : cj;
    if (sgn(tilde) == 0)
      throw Error(ErrorKind::SingularIntermediate,
                  "intermediate coordinate " + std::to_string(j + 1) + " vanishes", j);
    bar = bar * pow(PosRat(cj), 1 - cm(l, i)).value() / tilde;
    out.push_back(std::move(tilde));
  }
  return out;
}

GeometricPoint<PosRat> e_act_recursive(const GeometricPoint<PosRat>& p, Index i, const PosRat& c) {
  const mpq_class a = (c.value() - 1) / phi(p, i).value();
  std::vector<PosRat> coords;
  for (auto& v : x_act_raw(p, i, a)) coords.emplace_back(std::move(v));
  return GeometricPoint<PosRat>(p.cartan, p.word, std::move(coords));
}

void require_type_a(const CartanMatrix& a) {
  if (!(a.entries() == cartan_types::a(a.rank())->entries()))
    throw Error(ErrorKind::WrongType, "expected the type A_n Cartan matrix");
}

}  // namespace geocrystal

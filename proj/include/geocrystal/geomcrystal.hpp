#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "geocrystal/cartan.hpp"
#include "geocrystal/semifield.hpp"

namespace geocrystal {

/// Point Y_w(c_1, ..., c_k) of the torus chart on B^-_w: a word together with
/// one coordinate per letter. The word need not be reduced.
template <Semifield K>
struct GeometricPoint {
  CartanPtr cartan;
  Word word;
  std::vector<K> coords;

  GeometricPoint() = default;
  /// Throws Error{BadIndex} on a bad letter or a length mismatch.
  GeometricPoint(CartanPtr a, Word w, std::vector<K> c)
      : cartan(std::move(a)), word(std::move(w)), coords(std::move(c)) {
    check_word(*cartan, word);
    if (coords.size() != word.size())
      throw Error(ErrorKind::BadIndex, "coordinate count " + std::to_string(coords.size()) +
                                           " does not match word length " +
                                           std::to_string(word.size()));
  }

  friend bool operator==(const GeometricPoint& p, const GeometricPoint& q) {
    return *p.cartan == *q.cartan && p.word == q.word && p.coords == q.coords;
  }
};

/// Formal product of coroot values prod_i alpha_i^vee(u_i).
template <Semifield K>
struct TorusElement {
  CartanPtr cartan;
  std::vector<K> u;

  explicit TorusElement(CartanPtr a) : cartan(std::move(a)), u(cartan->rank(), K::one()) {}
  TorusElement(CartanPtr a, std::vector<K> values) : cartan(std::move(a)), u(std::move(values)) {
    if (u.size() != cartan->rank())
      throw Error(ErrorKind::BadIndex, "torus element needs one value per index");
  }

  bool operator==(const TorusElement& o) const { return *cartan == *o.cartan && u == o.u; }
};

namespace detail {

template <Semifield K>
void require_letter(const GeometricPoint<K>& p, Index i) {
  p.cartan->check_index(i);
  if (!p.word.contains(i))
    throw Error(ErrorKind::IndexAbsent,
                "index " + p.cartan->label(i) + " does not occur in the word", i);
}

/// Positions m with i_m = i and the terms 1 / (c_1^{a(i_1,i)} ... c_{m-1}^{a(i_{m-1},i)} c_m).
template <Semifield K>
std::pair<std::vector<std::size_t>, std::vector<K>> phi_terms(const GeometricPoint<K>& p, Index i) {
  std::vector<std::size_t> pos;
  std::vector<K> terms;
  K prefix = K::one();
  const CartanMatrix& a = *p.cartan;
  for (std::size_t m = 0; m < p.word.size(); ++m) {
    const Index l = p.word[m];
    if (l == i) {
      pos.push_back(m);
      terms.push_back(K::one() / (prefix * p.coords[m]));
    }
    const int e = a(l, i);
    if (e != 0) prefix = prefix * pow(p.coords[m], e);
  }
  return {std::move(pos), std::move(terms)};
}

}  // namespace detail

/// phi_i as the sum over letters equal to i of the terms above.
/// Throws Error{IndexAbsent} when i is not in the word.
template <Semifield K>
K phi(const GeometricPoint<K>& p, Index i) {
  detail::require_letter(p, i);
  auto [pos, terms] = detail::phi_terms(p, i);
  K s = terms[0];
  for (std::size_t t = 1; t < terms.size(); ++t) s = s + terms[t];
  return s;
}

/// gamma(p) = alpha_{i_1}^vee(c_1) ... alpha_{i_k}^vee(c_k).
template <Semifield K>
TorusElement<K> gamma(const GeometricPoint<K>& p) {
  TorusElement<K> t(p.cartan);
  for (std::size_t m = 0; m < p.word.size(); ++m) t.u[p.word[m]] = t.u[p.word[m]] * p.coords[m];
  return t;
}

/// alpha_j(prod alpha_i^vee(u_i)) = prod u_i^{a(i,j)}.
template <Semifield K>
K alpha_eval(const TorusElement<K>& t, Index j) {
  t.cartan->check_index(j);
  K r = K::one();
  for (Index i = 0; i < t.u.size(); ++i) {
    const int e = (*t.cartan)(i, j);
    if (e != 0) r = r * pow(t.u[i], e);
  }
  return r;
}

/// alpha_beta(t) for a root-lattice vector beta.
template <Semifield K>
K root_eval(const TorusElement<K>& t, const RootVector& beta) {
  K r = K::one();
  for (Index j = 0; j < beta.coeffs.size(); ++j)
    if (beta.coeffs[j] != 0) r = r * pow(alpha_eval(t, j), beta.coeffs[j]);
  return r;
}

/// e_i^c through its subtraction-free closed form. Only coordinates carrying
/// the letter i change.
template <Semifield K>
GeometricPoint<K> e_act(const GeometricPoint<K>& p, Index i, const K& c) {
  detail::require_letter(p, i);
  auto [pos, ms] = detail::phi_terms(p, i);
  const std::size_t r = ms.size();
  // N_t = c (M_0 + ... + M_{t-1}) + (M_t + ... + M_{r-1}) for t = 0..r.
  std::vector<std::optional<K>> pre(r + 1), suf(r + 1);
  for (std::size_t t = 0; t < r; ++t) pre[t + 1] = pre[t] ? *pre[t] + ms[t] : ms[t];
  for (std::size_t t = r; t-- > 0;) suf[t] = suf[t + 1] ? ms[t] + *suf[t + 1] : ms[t];
  auto n = [&](std::size_t t) {
    if (!pre[t]) return *suf[t];
    K left = c * *pre[t];
    return suf[t] ? left + *suf[t] : left;
  };
  GeometricPoint<K> out = p;
  K below = n(0);
  for (std::size_t t = 0; t < r; ++t) {
    K above = n(t + 1);
    out.coords[pos[t]] = p.coords[pos[t]] * above / below;
    below = std::move(above);
  }
  return out;
}

/// x_i(a) applied to Y_w(c) through the defining recursion, returning the
/// signed coordinates (C~_1, ..., C~_k). Throws Error{SingularIntermediate}
/// when an intermediate coordinate vanishes.
std::vector<mpq_class> x_act_raw(const GeometricPoint<PosRat>& p, Index i, const mpq_class& a);

/// e_i^c(x) = x_i((c - 1) / phi_i(x))(x) via the recursion.
GeometricPoint<PosRat> e_act_recursive(const GeometricPoint<PosRat>& p, Index i, const PosRat& c);

/// e_{j_1}^{alpha^{(1)}(t)} ... e_{j_l}^{alpha^{(l)}(t)}(p); the rightmost acts first.
template <Semifield K>
GeometricPoint<K> e_string(const Word& j, const TorusElement<K>& t, const GeometricPoint<K>& p) {
  check_word(*p.cartan, j);
  auto sup = alpha_superscripts(*p.cartan, j);
  GeometricPoint<K> q = p;
  for (std::size_t k = j.size(); k-- > 0;) q = e_act(q, j[k], root_eval(t, sup[k]));
  return q;
}

/// Product of Y-normal forms: the words and coordinates are concatenated.
template <Semifield K>
GeometricPoint<K> concat(const GeometricPoint<K>& p, const GeometricPoint<K>& q) {
  if (!(*p.cartan == *q.cartan))
    throw Error(ErrorKind::CartanMismatch, "points carry different Cartan data");
  std::vector<K> coords = p.coords;
  coords.insert(coords.end(), q.coords.begin(), q.coords.end());
  return GeometricPoint<K>(p.cartan, p.word.concat(q.word), std::move(coords));
}

/// Splits c between the two factors of a product:
/// c1 = (c A phiX + phiY) / (A phiX + phiY), c2 = (A phiX + phiY) / (A phiX + phiY / c).
template <Semifield K>
std::pair<K, K> product_split(const K& c, const K& phi_x, const K& phi_y, const K& alpha_gamma_x) {
  const K ax = alpha_gamma_x * phi_x;
  const K mid = ax + phi_y;
  return {(c * ax + phi_y) / mid, mid / (ax + phi_y / c)};
}

/// Throws Error{WrongType} unless `a` is the standard A_n matrix.
void require_type_a(const CartanMatrix& a);

/// Symmetric chart on type A_n: word (1, ..., n) with c_j = a_1 ... a_j.
template <Semifield K>
GeometricPoint<K> symmetric_chart(CartanPtr a, const std::vector<K>& vals) {
  require_type_a(*a);
  if (vals.size() != a->rank())
    throw Error(ErrorKind::BadIndex, "symmetric chart needs exactly n values");
  std::vector<Index> letters(a->rank());
  std::vector<K> coords;
  K acc = K::one();
  for (Index k = 0; k < a->rank(); ++k) {
    letters[k] = k;
    acc = acc * vals[k];
    coords.push_back(acc);
  }
  return GeometricPoint<K>(std::move(a), Word(std::move(letters)), std::move(coords));
}

/// Inverse of the symmetric chart: (a_1, ..., a_n, a_{n+1}) with
/// a_j = c_j / c_{j-1} and a_{n+1} = 1 / c_n.
template <Semifield K>
std::vector<K> symmetric_chart_inverse(const GeometricPoint<K>& p) {
  require_type_a(*p.cartan);
  const std::size_t n = p.cartan->rank();
  bool standard = p.word.size() == n;
  for (std::size_t k = 0; standard && k < n; ++k) standard = p.word[k] == k;
  if (!standard)
      throw Error(ErrorKind::WrongType, "point is not on the word (1, ..., n)");
  std::vector<K> out;
  K prev = K::one();
  for (const K& c : p.coords) {
    out.push_back(c / prev);
    prev = c;
  }
  out.push_back(K::one() / prev);
  return out;
}

}  // namespace geocrystal

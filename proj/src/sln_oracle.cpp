#include "geocrystal/sln_oracle.hpp"

namespace geocrystal {

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), e_(dim * dim) {}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<mpq_class>>& rows) {
  ExactMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw Error(ErrorKind::Parse, "matrix is not square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.dim_ != y.dim_) throw Error(ErrorKind::WrongType, "matrix sizes differ");
  const std::size_t n = x.dim_;
  ExactMatrix z(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(x(r, k)) == 0) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (sgn(y(k, c)) != 0) z(r, c) += x(r, k) * y(k, c);
    }
  return z;
}

mpq_class ExactMatrix::determinant() const {
  ExactMatrix m = *this;
  mpq_class det = 1;
  for (std::size_t k = 0; k < dim_; ++k) {
    std::size_t piv = k;
    while (piv < dim_ && sgn(m(piv, k)) == 0) ++piv;
    if (piv == dim_) return 0;
    if (piv != k) {
      for (std::size_t c = 0; c < dim_; ++c) std::swap(m(k, c), m(piv, c));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t r = k + 1; r < dim_; ++r) {
      if (sgn(m(r, k)) == 0) continue;
      mpq_class f = m(r, k) / m(k, k);
      for (std::size_t c = k; c < dim_; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return det;
}

ExactMatrix ExactMatrix::inverse() const {
  ExactMatrix m = *this;
  ExactMatrix inv = identity(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    std::size_t piv = k;
    while (piv < dim_ && sgn(m(piv, k)) == 0) ++piv;
    if (piv == dim_) throw Error(ErrorKind::SingularIntermediate, "matrix is singular", k);
    if (piv != k)
      for (std::size_t c = 0; c < dim_; ++c) {
        std::swap(m(k, c), m(piv, c));
        std::swap(inv(k, c), inv(piv, c));
      }
    const mpq_class p = m(k, k);
    for (std::size_t c = 0; c < dim_; ++c) {
      m(k, c) /= p;
      inv(k, c) /= p;
    }
    for (std::size_t r = 0; r < dim_; ++r) {
      if (r == k || sgn(m(r, k)) == 0) continue;
      const mpq_class f = m(r, k);
      for (std::size_t c = 0; c < dim_; ++c) {
        m(r, c) -= f * m(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

bool ExactMatrix::is_lower_triangular() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r + 1; c < dim_; ++c)
      if (sgn((*this)(r, c)) != 0) return false;
  return true;
}

bool ExactMatrix::is_unit_upper_triangular() const {
  for (std::size_t r = 0; r < dim_; ++r) {
    if ((*this)(r, r) != 1) return false;
    for (std::size_t c = 0; c < r; ++c)
      if (sgn((*this)(r, c)) != 0) return false;
  }
  return true;
}

std::vector<std::vector<std::string>> ExactMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out[r].push_back((*this)(r, c).get_str());
  return out;
}

namespace {

void check_gen_index(std::size_t n, Index i) {
  if (n == 0 || i >= n)
    throw Error(ErrorKind::BadIndex, "generator index outside 1..n", i);
}

}  // namespace

ExactMatrix gen_y(std::size_t n, Index i, const mpq_class& a) {
  check_gen_index(n, i);
  ExactMatrix m = ExactMatrix::identity(n + 1);
  m(i + 1, i) = a;
  return m;
}

ExactMatrix gen_x(std::size_t n, Index i, const mpq_class& a) {
  check_gen_index(n, i);
  ExactMatrix m = ExactMatrix::identity(n + 1);
  m(i, i + 1) = a;
  return m;
}

ExactMatrix gen_alpha_vee(std::size_t n, Index i, const mpq_class& c) {
  check_gen_index(n, i);
  if (sgn(c) == 0) throw Error(ErrorKind::ZeroTorusValue, "torus value is zero", i);
  ExactMatrix m = ExactMatrix::identity(n + 1);
  m(i, i) = c;
  m(i + 1, i + 1) = 1 / c;
  return m;
}

ExactMatrix gen_sbar(std::size_t n, Index i) {
  return gen_x(n, i, -1) * gen_y(n, i, 1) * gen_x(n, i, -1);
}

BUFactors pi_minus(const ExactMatrix& g) {
  const std::size_t n = g.dim();
  // Doolittle: g = L U with L unit lower, then b = L diag(U), u = diag(U)^{-1} U.
  ExactMatrix lower = ExactMatrix::identity(n);
  ExactMatrix upper = g;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(upper(k, k)) == 0)
      throw Error(ErrorKind::OutsideOpenCell,
                  "leading principal minor of size " + std::to_string(k + 1) + " vanishes",
                  k + 1);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(upper(r, k)) == 0) continue;
      const mpq_class f = upper(r, k) / upper(k, k);
      lower(r, k) = f;
      for (std::size_t c = k; c < n; ++c) upper(r, c) -= f * upper(k, c);
    }
  }
  BUFactors out{ExactMatrix(n), ExactMatrix(n)};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c <= r; ++c) out.b(r, c) = lower(r, c) * upper(c, c);
    for (std::size_t c = r; c < n; ++c) out.u(r, c) = upper(r, c) / upper(r, r);
  }
  return out;
}

mpq_class chi(const ExactMatrix& b, Index i) {
  if (i + 1 >= b.dim()) throw Error(ErrorKind::BadIndex, "chi index outside 1..n", i);
  if (sgn(b(i, i)) == 0) throw Error(ErrorKind::ZeroTorusValue, "zero diagonal entry", i);
  return b(i + 1, i) / b(i, i);
}

ExactMatrix point_to_matrix(const GeometricPoint<PosRat>& p) {
  require_type_a(*p.cartan);
  const std::size_t n = p.cartan->rank();
  ExactMatrix m = ExactMatrix::identity(n + 1);
  for (std::size_t k = 0; k < p.word.size(); ++k) {
    const mpq_class& c = p.coords[k].value();
    m = m * gen_y(n, p.word[k], 1 / c) * gen_alpha_vee(n, p.word[k], c);
  }
  return m;
}

ExactMatrix uw_to_matrix(std::size_t n, const Word& w, const std::vector<mpq_class>& a) {
  if (a.size() != w.size())
    throw Error(ErrorKind::BadIndex, "coordinate count does not match word length");
  ExactMatrix m = ExactMatrix::identity(n + 1);
  for (std::size_t k = 0; k < w.size(); ++k)
    m = m * gen_x(n, w[k], a[k]) * gen_sbar(n, w[k]);
  return m;
}

std::optional<std::vector<mpq_class>> extract_yw_coords(std::size_t n, const Word& w,
                                                        const std::vector<mpq_class>& a) {
  if (a.size() != w.size())
    throw Error(ErrorKind::BadIndex, "coordinate count does not match word length");
  std::vector<mpq_class> out;
  ExactMatrix prefix = ExactMatrix::identity(n + 1);
  ExactMatrix prev_b = ExactMatrix::identity(n + 1);
  for (std::size_t k = 0; k < w.size(); ++k) {
    prefix = prefix * gen_x(n, w[k], a[k]) * gen_sbar(n, w[k]);
    ExactMatrix b = pi_minus(prefix).b;
    ExactMatrix factor = prev_b.inverse() * b;
    const mpq_class c = factor(w[k], w[k]);
    if (sgn(c) == 0) return std::nullopt;
    if (!(factor == gen_y(n, w[k], 1 / c) * gen_alpha_vee(n, w[k], c))) return std::nullopt;
    out.push_back(c);
    prev_b = std::move(b);
  }
  return out;
}

ExactMatrix symmetric_chart_matrix(const std::vector<mpq_class>& a) {
  const std::size_t n = a.size();
  ExactMatrix m(n + 1);
  mpq_class prod = 1;
  for (std::size_t k = 0; k < n; ++k) {
    m(k, k) = a[k];
    prod *= a[k];
    m(k + 1, k) = 1;
  }
  if (sgn(prod) == 0) throw Error(ErrorKind::ZeroTorusValue, "zero chart value");
  m(n, n) = 1 / prod;
  return m;
}

}  // namespace geocrystal

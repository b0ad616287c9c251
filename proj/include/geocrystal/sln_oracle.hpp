#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "geocrystal/cartan.hpp"
#include "geocrystal/geomcrystal.hpp"
#include "geocrystal/semifield.hpp"

namespace geocrystal {

/// Square matrix of signed exact rationals.
class ExactMatrix {
 public:
  explicit ExactMatrix(std::size_t dim);
  static ExactMatrix identity(std::size_t dim);
  static ExactMatrix from_rows(const std::vector<std::vector<mpq_class>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  mpq_class& operator()(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }

  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
  bool operator==(const ExactMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }

  mpq_class determinant() const;
  /// Throws Error{SingularIntermediate} when singular.
  ExactMatrix inverse() const;
  bool is_lower_triangular() const;
  bool is_unit_upper_triangular() const;
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t dim_;
  std::vector<mpq_class> e_;
};

// Generators of SL_{n+1}; i is 0-based with i < n. Throw Error{BadIndex}.
ExactMatrix gen_y(std::size_t n, Index i, const mpq_class& a);
ExactMatrix gen_x(std::size_t n, Index i, const mpq_class& a);
/// Throws Error{ZeroTorusValue} for c = 0.
ExactMatrix gen_alpha_vee(std::size_t n, Index i, const mpq_class& c);
/// x_i(-1) y_i(1) x_i(-1).
ExactMatrix gen_sbar(std::size_t n, Index i);

struct BUFactors {
  ExactMatrix b;  // lower triangular
  ExactMatrix u;  // unit upper triangular
};

/// g = b u without pivoting. Throws Error{OutsideOpenCell} carrying the size
/// of the first vanishing leading principal minor.
BUFactors pi_minus(const ExactMatrix& g);

/// (i+1, i) entry of b diag(b)^{-1}.
mpq_class chi(const ExactMatrix& b, Index i);

/// y_{i_1}(1/c_1) alpha_{i_1}^vee(c_1) ... y_{i_k}(1/c_k) alpha_{i_k}^vee(c_k).
/// Throws Error{WrongType} unless the point lives on type A_n.
ExactMatrix point_to_matrix(const GeometricPoint<PosRat>& p);

/// x_{i_1}(a_1) sbar_{i_1} ... x_{i_k}(a_k) sbar_{i_k} in SL_{n+1}.
ExactMatrix uw_to_matrix(std::size_t n, const Word& w, const std::vector<mpq_class>& a);

/// Reads coordinates c' with pi_minus(uw_to_matrix(w, a)).b = Y_w(c') by
/// peeling one letter at a time: each quotient of consecutive prefix
/// projections must be y_i(1/c') alpha_i^vee(c'). nullopt when some quotient
/// is not of that form.
std::optional<std::vector<mpq_class>> extract_yw_coords(std::size_t n, const Word& w,
                                                        const std::vector<mpq_class>& a);

/// Bidiagonal image of the symmetric chart: diagonal (a_1, ..., a_n,
/// 1/(a_1...a_n)) and ones below the diagonal.
ExactMatrix symmetric_chart_matrix(const std::vector<mpq_class>& a);

}  // namespace geocrystal

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "trajent/dense.hpp"
#include "trajent/error.hpp"

namespace trajent {

inline constexpr double kDefaultRowTol = 1e-9;

/// A validated n x n row-stochastic transition matrix. Only `validate_matrix`
/// constructs one, so holding a StochasticMatrix means every entry lies in
/// [0, 1] and every row sums to 1 up to a few ulps.
class StochasticMatrix {
 public:
  std::size_t n() const noexcept { return p_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return p_(i, j); }
  std::span<const double> row(std::size_t i) const { return p_.row(i); }
  const Matrix& matrix() const noexcept { return p_; }

  double row_tol() const noexcept { return row_tol_; }
  /// Largest absolute change applied to any entry by clamping/renormalizing.
  double max_correction() const noexcept { return max_correction_; }

  friend bool operator==(const StochasticMatrix& a, const StochasticMatrix& b) { return a.p_ == b.p_; }

 private:
  StochasticMatrix(Matrix p, double row_tol, double correction)
      : p_(std::move(p)), row_tol_(row_tol), max_correction_(correction) {}

  friend StochasticMatrix validate_matrix(const Matrix& raw, double row_tol);

  Matrix p_;
  double row_tol_ = kDefaultRowTol;
  double max_correction_ = 0.0;
};

inline StochasticMatrix validate_matrix(const Matrix& raw, double row_tol = kDefaultRowTol) {
  if (!raw.square()) throw ChainError(ErrorKind::NonSquare, "transition matrix must be square");
  const std::size_t n = raw.rows();
  if (n == 0) throw ChainError(ErrorKind::NonSquare, "transition matrix must have at least one state");

  // Rows already within this many ulps of 1 are left untouched, which makes
  // validation idempotent.
  const double renorm_slack = 4.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon();

  Matrix p(n, n);
  double correction = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double raw_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double v = raw(i, j);
      if (!std::isfinite(v))
        throw ChainError(ErrorKind::NonFiniteEntry,
                         "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not finite");
      if (v < -row_tol)
        throw ChainError(ErrorKind::NegativeEntry,
                         "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(v));
      raw_sum += v;
    }
    if (std::abs(raw_sum - 1.0) > row_tol)
      throw ChainError(ErrorKind::RowSumViolation,
                       "row " + std::to_string(i) + " sums to " + std::to_string(raw_sum));

    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      p(i, j) = std::clamp(raw(i, j), 0.0, 1.0);
      sum += p(i, j);
    }
    if (std::abs(sum - 1.0) > renorm_slack)
      for (std::size_t j = 0; j < n; ++j) p(i, j) /= sum;
    for (std::size_t j = 0; j < n; ++j) correction = std::max(correction, std::abs(p(i, j) - raw(i, j)));
  }
  return StochasticMatrix(std::move(p), row_tol, correction);
}

inline StochasticMatrix validate_matrix(const std::vector<std::vector<double>>& rows,
                                        double row_tol = kDefaultRowTol) {
  const std::size_t n = rows.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw ChainError(ErrorKind::NonSquare, "row " + std::to_string(i) + " has " +
                                                 std::to_string(rows[i].size()) + " entries, expected " +
                                                 std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return validate_matrix(m, row_tol);
}

}  // namespace trajent

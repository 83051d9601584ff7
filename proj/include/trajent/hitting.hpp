#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "trajent/chain.hpp"
#include "trajent/dense.hpp"
#include "trajent/error.hpp"
#include "trajent/stochastic_matrix.hpp"

namespace trajent {

struct FundamentalMatrix {
  Matrix z;
  /// max |((I - P + Pi) Z - I)_{ij}|
  double inverse_residual = 0.0;
  /// max_i |sum_j Z_{ij} - 1|
  double row_sum_residual = 0.0;
};

struct HittingTimes {
  /// expected[i][j] = E_i(tau_j); the diagonal is exactly 0.
  Matrix expected;
  /// return_time[i] = E_i(tau_i^+) = 1 / pi_i.
  std::vector<double> return_time;
  /// commute[i][j] = E_i(tau_j) + E_j(tau_i).
  Matrix commute;
  double t_av = 0.0;

  std::size_t n() const noexcept { return expected.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return expected(i, j); }
};

/// Z = (I - P + Pi)^{-1}, where every row of Pi equals pi. Invertible for any
/// irreducible chain, periodic or not.
inline FundamentalMatrix fundamental_matrix(const StochasticMatrix& p, const StationaryDistribution& pi) {
  const std::size_t n = p.n();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j ? 1.0 : 0.0) - p(i, j) + pi[j];

  FundamentalMatrix out;
  out.z = LuDecomposition(a).inverse();
  out.inverse_residual = max_abs_diff(multiply(a, out.z), Matrix::identity(n));
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (double v : out.z.row(i)) s += v;
    out.row_sum_residual = std::max(out.row_sum_residual, std::abs(s - 1.0));
  }
  return out;
}

inline double average_hitting_time(const Matrix& expected, const StationaryDistribution& pi) {
  double t = 0.0;
  for (std::size_t i = 0; i < expected.rows(); ++i)
    for (std::size_t j = 0; j < expected.cols(); ++j) t += pi[i] * pi[j] * expected(i, j);
  return t;
}

inline double average_hitting_time(const HittingTimes& h, const StationaryDistribution& pi) {
  return average_hitting_time(h.expected, pi);
}

/// E_i(tau_j) = (Z_jj - Z_ij) / pi_j for i != j.
inline HittingTimes hitting_times(const FundamentalMatrix& fm, const StationaryDistribution& pi) {
  const std::size_t n = fm.z.rows();
  HittingTimes h;
  h.expected = Matrix(n, n);
  h.commute = Matrix(n, n);
  h.return_time.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    h.return_time[i] = 1.0 / pi[i];
    for (std::size_t j = 0; j < n; ++j)
      h.expected(i, j) = i == j ? 0.0 : (fm.z(j, j) - fm.z(i, j)) / pi[j];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h.commute(i, j) = h.expected(i, j) + h.expected(j, i);
  h.t_av = average_hitting_time(h.expected, pi);
  return h;
}

/// sum_j pi_j E_i(tau_j). Independent of i for any irreducible chain.
inline double random_target_value(const HittingTimes& h, const StationaryDistribution& pi, std::size_t i) {
  if (i >= h.n()) throw ChainError(ErrorKind::StateOutOfRange, "state " + std::to_string(i));
  double v = 0.0;
  for (std::size_t j = 0; j < h.n(); ++j) v += pi[j] * h(i, j);
  return v;
}

/// (E_i tau_j + E_j tau_k + E_k tau_i) - (E_i tau_k + E_k tau_j + E_j tau_i).
/// Vanishes for reversible chains.
inline double cyclic_tour_residual(const Matrix& m, std::size_t i, std::size_t j, std::size_t k) {
  if (i == j || j == k || i == k) throw ChainError(ErrorKind::StatesNotDistinct, "cyclic tour needs three distinct states");
  const std::size_t n = m.rows();
  if (i >= n || j >= n || k >= n) throw ChainError(ErrorKind::StateOutOfRange, "cyclic tour state out of range");
  return (m(i, j) + m(j, k) + m(k, i)) - (m(i, k) + m(k, j) + m(j, i));
}

inline double cyclic_tour_residual(const HittingTimes& h, std::size_t i, std::size_t j, std::size_t k) {
  return cyclic_tour_residual(h.expected, i, j, k);
}

/// Largest |cyclic_tour_residual| over all distinct triples; 0 when n < 3.
inline double max_cyclic_tour_residual(const Matrix& m) {
  const std::size_t n = m.rows();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) worst = std::max(worst, std::abs(cyclic_tour_residual(m, i, j, k)));
  return worst;
}

}  // namespace trajent

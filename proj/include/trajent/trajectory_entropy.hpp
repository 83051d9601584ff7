#pragma once

// Entropy of Markov trajectories H_{i,j}: the Shannon entropy of the law of the
// path from i up to its first visit to j (first return when i == j).
//
// Two routes are provided. The production route goes through the fundamental
// matrix: K = Z B with B_kj = h_k - [k == j] rate / pi_k, and
// H_ij = K_ij - K_jj off the diagonal. The second route rebuilds H_ij from
// hitting times alone,
//   H_ij = sum_k pi_k (E_j tau_k - E_i tau_k) h_k + E_i tau_j * rate,
// and exists to cross-check the first.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "trajent/chain.hpp"
#include "trajent/dense.hpp"
#include "trajent/entropy_rate.hpp"
#include "trajent/error.hpp"
#include "trajent/hitting.hpp"

namespace trajent {

struct EntropyProfile {
  std::vector<double> row_entropy;
  double rate = 0.0;
};

inline EntropyProfile entropy_profile(const StochasticMatrix& p, const StationaryDistribution& pi) {
  EntropyProfile e;
  e.row_entropy = row_entropies(p);
  e.rate = entropy_rate(e.row_entropy, pi.pi);
  return e;
}

struct TrajectoryEntropyMatrix {
  Matrix h;
  Matrix commute;
  double h_av = 0.0;

  std::size_t n() const noexcept { return h.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return h(i, j); }
};

/// sum_{i,j} pi_i pi_j H_ij, diagonal included.
inline double average_entropy(const Matrix& h, const StationaryDistribution& pi) {
  double total = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) total += pi[i] * pi[j] * h(i, j);
  return total;
}

inline double average_entropy(const TrajectoryEntropyMatrix& h, const StationaryDistribution& pi) {
  return average_entropy(h.h, pi);
}

inline TrajectoryEntropyMatrix trajectory_entropy_matrix(const StationaryDistribution& pi,
                                                         const FundamentalMatrix& fm,
                                                         std::span<const double> row_h, double rate) {
  const std::size_t n = pi.size();
  Matrix b(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) b(k, j) = row_h[k] - (k == j ? rate / pi[k] : 0.0);
  const Matrix k = multiply(fm.z, b);

  TrajectoryEntropyMatrix out;
  out.h = Matrix(n, n);
  out.commute = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      // The return-trajectory entropy is rate / pi_i; K_ii - K_ii would give 0.
      out.h(i, j) = i == j ? rate / pi[i] : k(i, j) - k(j, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.commute(i, j) = out.h(i, j) + out.h(j, i);
  out.h_av = average_entropy(out.h, pi);
  return out;
}

inline TrajectoryEntropyMatrix trajectory_entropy_matrix(const StationaryDistribution& pi,
                                                         const FundamentalMatrix& fm,
                                                         const EntropyProfile& profile) {
  return trajectory_entropy_matrix(pi, fm, profile.row_entropy, profile.rate);
}

/// Hitting-time route to H_ij for i != j.
inline double lemma_decomposition(const StationaryDistribution& pi, const HittingTimes& ht,
                                  std::span<const double> row_h, double rate, std::size_t i, std::size_t j) {
  if (i == j) throw ChainError(ErrorKind::StatesEqual, "hitting-time route is defined for i != j");
  const std::size_t n = ht.n();
  if (i >= n || j >= n) throw ChainError(ErrorKind::StateOutOfRange, "state out of range");
  double drift = 0.0;
  for (std::size_t k = 0; k < n; ++k) drift += pi[k] * (ht(j, k) - ht(i, k)) * row_h[k];
  return drift + ht(i, j) * rate;
}

/// Full matrix via the hitting-time route; the diagonal uses E_i(tau_i^+) * rate.
inline Matrix lemma_matrix(const StationaryDistribution& pi, const HittingTimes& ht,
                           std::span<const double> row_h, double rate) {
  const std::size_t n = ht.n();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = i == j ? ht.return_time[i] * rate : lemma_decomposition(pi, ht, row_h, rate, i, j);
  return out;
}

/// sum_j pi_j H_ij for the given start state.
inline double entropic_random_target_value(const TrajectoryEntropyMatrix& h, const StationaryDistribution& pi,
                                           std::size_t i) {
  double v = 0.0;
  for (std::size_t j = 0; j < h.n(); ++j) v += pi[j] * h(i, j);
  return v;
}

}  // namespace trajent

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "trajent/chain.hpp"
#include "trajent/dense.hpp"
#include "trajent/error.hpp"

namespace trajent {

inline constexpr double kSpectralGapFloor = 1e-12;

struct SpectralSummary {
  std::vector<double> eigenvalues;  // non-increasing
  double relaxation_time = 0.0;
  double eigentime = 0.0;
};

/// Eigenvalues of a reversible P, via the symmetric similar matrix
/// S_ij = sqrt(pi_i / pi_j) P_ij. Sorted non-increasing.
inline std::vector<double> reversible_eigenvalues(const StochasticMatrix& p, const StationaryDistribution& pi,
                                                  double tol = kDefaultStructureTol) {
  if (!check_reversible(p, pi, tol))
    throw ChainError(ErrorKind::NotReversible, "detailed balance defect " + std::to_string(detailed_balance_defect(p, pi)));
  const std::size_t n = p.n();
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    s(i, i) = p(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double upper = std::sqrt(pi[i] / pi[j]) * p(i, j);
      const double lower = std::sqrt(pi[j] / pi[i]) * p(j, i);
      s(i, j) = s(j, i) = 0.5 * (upper + lower);
    }
  }
  auto eigs = jacobi_eigenvalues(std::move(s), 1e-12).eigenvalues;
  std::sort(eigs.begin(), eigs.end(), std::greater<>());
  return eigs;
}

/// 1 / (1 - lambda_2).
inline double relaxation_time(std::span<const double> eigs) {
  if (eigs.size() < 2) throw ChainError(ErrorKind::DegenerateSpectrum, "relaxation time needs at least two eigenvalues");
  if (eigs[1] >= 1.0 - kSpectralGapFloor) throw ChainError(ErrorKind::DegenerateSpectrum, "lambda_2 is 1");
  return 1.0 / (1.0 - eigs[1]);
}

/// sum_{i >= 2} 1 / (1 - lambda_i); 0 for a single-state chain.
inline double eigentime(std::span<const double> eigs) {
  double total = 0.0;
  for (std::size_t i = 1; i < eigs.size(); ++i) {
    if (eigs[i] >= 1.0 - kSpectralGapFloor) throw ChainError(ErrorKind::DegenerateSpectrum, "repeated unit eigenvalue");
    total += 1.0 / (1.0 - eigs[i]);
  }
  return total;
}

inline SpectralSummary spectral_summary(const StochasticMatrix& p, const StationaryDistribution& pi,
                                        double tol = kDefaultStructureTol) {
  SpectralSummary s;
  s.eigenvalues = reversible_eigenvalues(p, pi, tol);
  s.relaxation_time = relaxation_time(s.eigenvalues);
  s.eigentime = eigentime(s.eigenvalues);
  return s;
}

}  // namespace trajent

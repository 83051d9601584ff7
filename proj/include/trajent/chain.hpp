#pragma once

// Structural classification of a transition matrix and its stationary law.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "trajent/dense.hpp"
#include "trajent/entropy_rate.hpp"
#include "trajent/error.hpp"
#include "trajent/stochastic_matrix.hpp"

namespace trajent {

inline constexpr double kDefaultStructureTol = 1e-9;

struct StationaryDistribution {
  std::vector<double> pi;
  /// ||pi P - pi||_inf after normalization.
  double residual = 0.0;

  std::size_t size() const noexcept { return pi.size(); }
  double operator[](std::size_t i) const { return pi[i]; }
};

struct ChainStructure {
  bool irreducible = false;
  bool reversible = false;
  bool constant_row_entropy = false;
  bool deterministic = false;
  double structure_tol = kDefaultStructureTol;
};

namespace detail {

inline std::vector<bool> reachable_from_zero(const StochasticMatrix& p, bool reverse) {
  const std::size_t n = p.n();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      const double w = reverse ? p(v, u) : p(u, v);
      if (w > 0.0 && !seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace detail

/// Strong connectivity of the support graph (i -> j iff P[i][j] > 0): every
/// state must be reachable from state 0 and reach state 0.
inline bool check_irreducible(const StochasticMatrix& p) {
  const auto fwd = detail::reachable_from_zero(p, false);
  const auto bwd = detail::reachable_from_zero(p, true);
  return std::all_of(fwd.begin(), fwd.end(), [](bool b) { return b; }) &&
         std::all_of(bwd.begin(), bwd.end(), [](bool b) { return b; });
}

/// Solves pi (I - P) = 0 with the last balance equation replaced by
/// sum(pi) = 1, using a dense LU solve.
inline StationaryDistribution stationary_distribution(const StochasticMatrix& p) {
  if (!check_irreducible(p)) throw ChainError(ErrorKind::NotIrreducible, "stationary distribution requires an irreducible chain");
  const std::size_t n = p.n();

  // Row k of the system is the balance equation for state k: sum_i pi_i (P[i][k] - [i==k]) = 0.
  Matrix a(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) a(k, i) = p(i, k) - (i == k ? 1.0 : 0.0);
  for (std::size_t i = 0; i < n; ++i) a(n - 1, i) = 1.0;
  std::vector<double> rhs(n, 0.0);
  rhs[n - 1] = 1.0;

  StationaryDistribution out;
  out.pi = LuDecomposition(std::move(a)).solve(rhs);

  double total = 0.0;
  for (double v : out.pi) {
    if (!(v > 0.0)) throw ChainError(ErrorKind::SingularSystem, "non-positive stationary mass for an irreducible chain");
    total += v;
  }
  for (double& v : out.pi) v /= total;

  const auto pi_p = left_multiply(out.pi, p.matrix());
  for (std::size_t i = 0; i < n; ++i) out.residual = std::max(out.residual, std::abs(pi_p[i] - out.pi[i]));
  return out;
}

/// max_{i,j} |pi_i P[i][j] - pi_j P[j][i]|.
inline double detailed_balance_defect(const StochasticMatrix& p, const StationaryDistribution& pi) {
  double worst = 0.0;
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = i + 1; j < p.n(); ++j)
      worst = std::max(worst, std::abs(pi[i] * p(i, j) - pi[j] * p(j, i)));
  return worst;
}

inline bool check_reversible(const StochasticMatrix& p, const StationaryDistribution& pi,
                             double tol = kDefaultStructureTol) {
  return detailed_balance_defect(p, pi) <= tol;
}

inline bool check_constant_row_entropy(const StochasticMatrix& p, double tol = kDefaultStructureTol) {
  const auto h = row_entropies(p);
  const auto [lo, hi] = std::minmax_element(h.begin(), h.end());
  return *hi - *lo <= tol;
}

inline bool check_deterministic(const StochasticMatrix& p) {
  for (std::size_t i = 0; i < p.n(); ++i)
    for (double v : p.row(i))
      if (v != 0.0 && v != 1.0) return false;
  return true;
}

/// Computes every structural flag. Reversibility is only tested for
/// irreducible chains, where pi exists and is unique.
inline ChainStructure classify(const StochasticMatrix& p, double structure_tol = kDefaultStructureTol) {
  ChainStructure s;
  s.structure_tol = structure_tol;
  s.irreducible = check_irreducible(p);
  s.deterministic = check_deterministic(p);
  s.constant_row_entropy = s.deterministic || check_constant_row_entropy(p, structure_tol);
  if (s.irreducible) s.reversible = check_reversible(p, stationary_distribution(p), structure_tol);
  return s;
}

}  // namespace trajent

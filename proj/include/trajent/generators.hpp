#pragma once

// Closed-form example chains and seeded random families.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trajent/chain.hpp"
#include "trajent/dense.hpp"
#include "trajent/error.hpp"
#include "trajent/random.hpp"
#include "trajent/stochastic_matrix.hpp"

namespace trajent::gen {

namespace detail {

[[noreturn]] inline void out_of_range(const std::string& what) {
  throw ChainError(ErrorKind::ParameterOutOfRange, what);
}

// Weight in (0, 1].
inline double positive_weight(Xoshiro256& rng) { return 1.0 - rng.uniform(); }

inline Matrix normalize_rows(Matrix w) {
  for (std::size_t i = 0; i < w.rows(); ++i) {
    double s = 0.0;
    for (double v : w.row(i)) s += v;
    for (double& v : w.row(i)) v /= s;
  }
  return w;
}

}  // namespace detail

/// P_00 = P_11 = 1 - p, P_01 = P_10 = p, with p strictly inside (0, 1).
inline StochasticMatrix two_state(double p) {
  if (!(p > 0.0 && p < 1.0)) detail::out_of_range("two_state requires p in (0, 1), got " + std::to_string(p));
  return validate_matrix(Matrix{{1.0 - p, p}, {p, 1.0 - p}});
}

/// Random walk on the complete graph without self-loops.
inline StochasticMatrix complete_graph(std::size_t n) {
  if (n < 2) detail::out_of_range("complete_graph requires n >= 2");
  Matrix m(n, n, 1.0 / static_cast<double>(n - 1));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 0.0;
  return validate_matrix(m);
}

/// Every row equals pi; pi must be strictly positive.
inline StochasticMatrix rank_one(std::span<const double> pi, double row_tol = kDefaultRowTol) {
  if (pi.empty()) detail::out_of_range("rank_one requires a non-empty distribution");
  double total = 0.0;
  for (double v : pi) {
    if (!(v > 0.0)) detail::out_of_range("rank_one requires strictly positive entries");
    total += v;
  }
  if (std::abs(total - 1.0) > row_tol) detail::out_of_range("rank_one distribution sums to " + std::to_string(total));
  Matrix m(pi.size(), pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = 0; j < pi.size(); ++j) m(i, j) = pi[j];
  return validate_matrix(m, row_tol);
}

inline StochasticMatrix rank_one_uniform(std::size_t n) {
  if (n < 1) detail::out_of_range("rank_one requires n >= 1");
  return rank_one(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

/// Simple random walk on Z_n.
inline StochasticMatrix cycle(std::size_t n) {
  if (n < 3) detail::out_of_range("cycle requires n >= 3");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, (i + 1) % n) = 0.5;
    m(i, (i + n - 1) % n) = 0.5;
  }
  return validate_matrix(m);
}

/// Row i is `first_row` shifted right by i, so P_ij = first_row[(j - i) mod n].
inline StochasticMatrix circulant(std::span<const double> first_row, double row_tol = kDefaultRowTol) {
  const std::size_t n = first_row.size();
  if (n < 1) detail::out_of_range("circulant requires a non-empty row");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = first_row[(j + n - i) % n];
  StochasticMatrix p = [&] {
    try {
      return validate_matrix(m, row_tol);
    } catch (const ChainError& e) {
      detail::out_of_range(std::string("circulant first row is not stochastic: ") + e.what());
    }
  }();
  if (!check_irreducible(p)) throw ChainError(ErrorKind::NotIrreducible, "circulant support does not generate Z_n");
  return p;
}

/// Seeded irreducible chain: a random directed Hamiltonian cycle, plus each
/// remaining ordered pair (self-loops included) with probability `density`,
/// weights uniform in (0, 1], rows normalized.
inline StochasticMatrix random_irreducible(std::size_t n, double density, std::uint64_t seed) {
  if (n < 2) detail::out_of_range("random_irreducible requires n >= 2");
  if (!(density > 0.0 && density <= 1.0)) detail::out_of_range("density must lie in (0, 1]");
  Xoshiro256 rng(seed);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);

  Matrix w(n, n);
  for (std::size_t k = 0; k < n; ++k) w(order[k], order[(k + 1) % n]) = detail::positive_weight(rng);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (w(i, j) > 0.0) continue;
      const bool keep = rng.uniform() < density;
      const double weight = detail::positive_weight(rng);
      if (keep) w(i, j) = weight;
    }
  return validate_matrix(detail::normalize_rows(std::move(w)));
}

/// P_ij = W_ij / sum_k W_ik for a seeded symmetric W with entries in (0, 1];
/// reversible with pi_i proportional to the row sums of W.
inline StochasticMatrix random_reversible(std::size_t n, std::uint64_t seed) {
  if (n < 2) detail::out_of_range("random_reversible requires n >= 2");
  Xoshiro256 rng(seed);
  Matrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) w(i, j) = w(j, i) = detail::positive_weight(rng);
  return validate_matrix(detail::normalize_rows(std::move(w)));
}

/// Seeded symmetric (hence doubly stochastic and reversible w.r.t. uniform)
/// chain: symmetric off-diagonal weights in (0, 1] scaled so the largest
/// off-diagonal row sum is `1 - min_hold`, remaining mass on the diagonal.
inline StochasticMatrix random_symmetric(std::size_t n, std::uint64_t seed, double min_hold = 0.1) {
  if (n < 2) detail::out_of_range("random_symmetric requires n >= 2");
  if (!(min_hold >= 0.0 && min_hold < 1.0)) detail::out_of_range("min_hold must lie in [0, 1)");
  Xoshiro256 rng(seed);
  Matrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) w(i, j) = w(j, i) = detail::positive_weight(rng);
  double widest = 0.0;
  for (std::size_t i = 0; i < n; ++i) widest = std::max(widest, std::accumulate(w.row(i).begin(), w.row(i).end(), 0.0));
  const double scale = (1.0 - min_hold) / widest;
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) off += (w(i, j) *= scale);
    w(i, i) = 1.0 - off;
  }
  // Rows are exact up to rounding in `off`; leave symmetry intact by letting
  // validate_matrix skip renormalization whenever it can.
  return validate_matrix(w);
}

/// Seeded circulant chain: shift 1 always carries weight (so the support
/// generates Z_n), every other shift, 0 included, with probability `density`.
inline StochasticMatrix random_circulant(std::size_t n, double density, std::uint64_t seed) {
  if (n < 2) detail::out_of_range("random_circulant requires n >= 2");
  if (!(density > 0.0 && density <= 1.0)) detail::out_of_range("density must lie in (0, 1]");
  Xoshiro256 rng(seed);
  std::vector<double> row(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    const bool keep = s == 1 || rng.uniform() < density;
    const double weight = detail::positive_weight(rng);
    if (keep) row[s] = weight;
  }
  const double total = std::accumulate(row.begin(), row.end(), 0.0);
  for (double& v : row) v /= total;
  return circulant(row);
}

}  // namespace trajent::gen

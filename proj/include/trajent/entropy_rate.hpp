#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "trajent/error.hpp"
#include "trajent/stochastic_matrix.hpp"

namespace trajent {

/// -sum p log p in nats, with 0 log 0 = 0 applied term by term.
inline double shannon_entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs)
    if (p > 0.0) h -= p * std::log(p);
  return h;
}

inline std::vector<double> row_entropies(const StochasticMatrix& p) {
  std::vector<double> h(p.n());
  for (std::size_t i = 0; i < p.n(); ++i) h[i] = shannon_entropy(p.row(i));
  return h;
}

/// pi-weighted mean of the row entropies.
inline double entropy_rate(std::span<const double> row_h, std::span<const double> pi) {
  if (row_h.size() != pi.size())
    throw ChainError(ErrorKind::ParameterOutOfRange, "row entropy and stationary vector lengths differ");
  double rate = 0.0;
  for (std::size_t i = 0; i < row_h.size(); ++i) rate += pi[i] * row_h[i];
  return rate;
}

}  // namespace trajent

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

#include "trajent/chain.hpp"
#include "trajent/entropy_rate.hpp"
#include "trajent/error.hpp"
#include "trajent/hitting.hpp"
#include "trajent/spectral.hpp"
#include "trajent/stochastic_matrix.hpp"
#include "trajent/trajectory_entropy.hpp"

namespace trajent {

/// Everything computed for one chain. One fundamental matrix feeds both the
/// hitting times and the trajectory entropies.
struct ChainAnalysis {
  StochasticMatrix p;
  ChainStructure structure;
  StationaryDistribution stationary;
  FundamentalMatrix fundamental;
  HittingTimes hitting;
  EntropyProfile entropy;
  TrajectoryEntropyMatrix trajectory;
  /// Hitting-time route to H, kept for the built-in cross-check.
  Matrix trajectory_by_hitting_times;
  /// max |H (fundamental-matrix route) - H (hitting-time route)|
  double route_disagreement = 0.0;
  /// Present for reversible chains with at least two states.
  std::optional<SpectralSummary> spectral;

  std::size_t n() const noexcept { return p.n(); }
};

inline ChainAnalysis analyze(const StochasticMatrix& p, double structure_tol = kDefaultStructureTol) {
  ChainStructure structure = classify(p, structure_tol);
  if (!structure.irreducible) throw ChainError(ErrorKind::NotIrreducible, "chain is not irreducible");

  auto stationary = stationary_distribution(p);
  auto fundamental = fundamental_matrix(p, stationary);
  auto hitting = hitting_times(fundamental, stationary);
  auto entropy = entropy_profile(p, stationary);
  auto trajectory = trajectory_entropy_matrix(stationary, fundamental, entropy);
  auto by_hitting = lemma_matrix(stationary, hitting, entropy.row_entropy, entropy.rate);
  const double disagreement = max_abs_diff(trajectory.h, by_hitting);

  std::optional<SpectralSummary> spectral;
  if (structure.reversible && p.n() >= 2) spectral = spectral_summary(p, stationary, structure_tol);

  return ChainAnalysis{p,
                       structure,
                       std::move(stationary),
                       std::move(fundamental),
                       std::move(hitting),
                       std::move(entropy),
                       std::move(trajectory),
                       std::move(by_hitting),
                       disagreement,
                       std::move(spectral)};
}

}  // namespace trajent

#pragma once

// Monte Carlo estimates of H_{i,j} and E_i(tau_j) from simulated trajectories.
//
// Sample k draws from Xoshiro256::substream(seed, k) and nothing else, and the
// reduction runs in sample-index order, so estimates are bit-identical for any
// worker count.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "trajent/error.hpp"
#include "trajent/random.hpp"
#include "trajent/stochastic_matrix.hpp"

namespace trajent::mc {

inline constexpr std::uint64_t kDefaultStepCap = 1'000'000;
inline constexpr std::uint64_t kDefaultSamples = 100'000;

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t truncated = 0;
  std::uint64_t seed = 0;
  std::uint64_t step_cap = kDefaultStepCap;

  bool reliable() const noexcept { return truncated == 0; }
};

struct Trajectory {
  std::uint64_t length = 0;
  double neg_log_prob = 0.0;
};

struct SimulationOptions {
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = 0;
  std::uint64_t step_cap = kDefaultStepCap;
  unsigned workers = 1;
};

/// Per-row cumulative distribution and -log P, precomputed once per chain.
class Sampler {
 public:
  explicit Sampler(const StochasticMatrix& p) : n_(p.n()), cdf_(n_ * n_), cost_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      double acc = 0.0;
      std::size_t last_positive = 0;
      for (std::size_t j = 0; j < n_; ++j) {
        const double v = p(i, j);
        acc += v;
        cdf_[i * n_ + j] = acc;
        cost_[i * n_ + j] = v > 0.0 ? -std::log(v) : std::numeric_limits<double>::infinity();
        if (v > 0.0) last_positive = j;
      }
      // Absorb the rounding gap at the top of the row into the last reachable state.
      for (std::size_t j = last_positive; j < n_; ++j) cdf_[i * n_ + j] = 2.0;
    }
  }

  std::size_t n() const noexcept { return n_; }

  std::size_t step(std::size_t from, double u) const noexcept {
    const double* row = cdf_.data() + from * n_;
    std::size_t j = 0;
    while (!(u < row[j])) ++j;
    return j;
  }

  double cost(std::size_t from, std::size_t to) const noexcept { return cost_[from * n_ + to]; }

  /// Runs from `start` until the first visit to `target` at time >= 1.
  /// Returns nullopt when `step_cap` steps pass without arrival.
  std::optional<Trajectory> run(std::size_t start, std::size_t target, Xoshiro256& rng,
                                std::uint64_t step_cap) const noexcept {
    Trajectory t;
    std::size_t state = start;
    while (t.length < step_cap) {
      const std::size_t next = step(state, rng.uniform());
      t.neg_log_prob += cost(state, next);
      ++t.length;
      if (next == target) return t;
      state = next;
    }
    return std::nullopt;
  }

 private:
  std::size_t n_;
  std::vector<double> cdf_;
  std::vector<double> cost_;
};

inline void check_states(const StochasticMatrix& p, std::size_t from, std::size_t to) {
  if (from >= p.n() || to >= p.n())
    throw ChainError(ErrorKind::StateOutOfRange, "states must lie in [0, " + std::to_string(p.n()) + ")");
}

/// One trajectory from i to the first arrival at j (first return if i == j).
inline std::optional<Trajectory> sample_trajectory(const StochasticMatrix& p, std::size_t i, std::size_t j,
                                                   Xoshiro256& rng, std::uint64_t step_cap = kDefaultStepCap) {
  check_states(p, i, j);
  return Sampler(p).run(i, j, rng, step_cap);
}

struct PathEstimates {
  McEstimate entropy;
  McEstimate hitting;
};

/// Simulates `samples` trajectories once and summarizes both path length and
/// -log p(T). Truncated trajectories are excluded from both means.
inline PathEstimates estimate_paths(const StochasticMatrix& p, std::size_t i, std::size_t j,
                                    const SimulationOptions& opt) {
  check_states(p, i, j);
  if (opt.samples == 0) throw ChainError(ErrorKind::ParameterOutOfRange, "samples must be positive");
  if (opt.step_cap == 0) throw ChainError(ErrorKind::ParameterOutOfRange, "step_cap must be positive");

  const Sampler sampler(p);
  const std::uint64_t count = opt.samples;
  std::vector<double> lengths(count);
  std::vector<double> costs(count);
  std::vector<unsigned char> ok(count);

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t k = begin; k < end; ++k) {
      auto rng = Xoshiro256::substream(opt.seed, k);
      const auto t = sampler.run(i, j, rng, opt.step_cap);
      ok[k] = t.has_value();
      lengths[k] = t ? static_cast<double>(t->length) : 0.0;
      costs[k] = t ? t->neg_log_prob : 0.0;
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(std::min<std::uint64_t>(count, 1024))));
  if (workers == 1) {
    work(0, count);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work, count * w / workers, count * (w + 1) / workers);
  }

  auto summarize = [&](const std::vector<double>& values) {
    McEstimate e;
    e.samples = count;
    e.seed = opt.seed;
    e.step_cap = opt.step_cap;
    double sum = 0.0;
    std::uint64_t used = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
      if (!ok[k]) continue;
      sum += values[k];
      ++used;
    }
    e.truncated = count - used;
    if (used == 0) {
      e.mean = std::numeric_limits<double>::quiet_NaN();
      e.std_error = std::numeric_limits<double>::quiet_NaN();
      return e;
    }
    e.mean = sum / static_cast<double>(used);
    double ss = 0.0;
    for (std::uint64_t k = 0; k < count; ++k)
      if (ok[k]) ss += (values[k] - e.mean) * (values[k] - e.mean);
    const double variance = used > 1 ? ss / static_cast<double>(used - 1) : 0.0;
    e.std_error = std::sqrt(variance / static_cast<double>(used));
    return e;
  };

  return {summarize(costs), summarize(lengths)};
}

inline McEstimate estimate_trajectory_entropy(const StochasticMatrix& p, std::size_t i, std::size_t j,
                                              const SimulationOptions& opt) {
  return estimate_paths(p, i, j, opt).entropy;
}

inline McEstimate estimate_hitting_time(const StochasticMatrix& p, std::size_t i, std::size_t j,
                                        const SimulationOptions& opt) {
  return estimate_paths(p, i, j, opt).hitting;
}

/// (mean - expected) / std_error; 0 when both the gap and the error vanish.
inline double z_score(const McEstimate& e, double expected) {
  const double gap = e.mean - expected;
  if (e.std_error > 0.0) return gap / e.std_error;
  return gap == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), gap);
}

}  // namespace trajent::mc

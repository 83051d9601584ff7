#pragma once

// Certification of the entropy/hitting-time velocity identities on a concrete
// chain. Each check records whether its structural preconditions hold, the
// worst residual, and a verdict.
//
//   lemma21            H_ij equals the hitting-time decomposition (any chain)
//   commute_T131       H^c_ij = t^c_ij * rate for i != j (any chain)
//   velocity_T12       H_ij = E_i(tau_j) * rate, H_ii = E_i(tau_i^+) * rate
//   average_T132       H^av = (t^av + 1) * rate
//   random_target_T133 sum_j pi_j H_ij does not depend on i
//   cyclic_tour_T134   entropic cyclic tour identity
//   bounds_T132        (t_rel + 1) rate <= H^av <= ((n - 1) t_rel + 1) log n
//   eigentime_remark   t^av = sum_{k >= 2} 1 / (1 - lambda_k)

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trajent/analysis.hpp"
#include "trajent/error.hpp"

namespace trajent {

inline constexpr double kDefaultCheckTol = 1e-8;
inline constexpr double kBoundSlackFloor = -1e-8;

enum class CheckId {
  average_T132,
  bounds_T132,
  commute_T131,
  cyclic_tour_T134,
  eigentime_remark,
  lemma21,
  random_target_T133,
  velocity_T12,
};

inline std::string_view to_string(CheckId id) {
  switch (id) {
    case CheckId::average_T132: return "average_T132";
    case CheckId::bounds_T132: return "bounds_T132";
    case CheckId::commute_T131: return "commute_T131";
    case CheckId::cyclic_tour_T134: return "cyclic_tour_T134";
    case CheckId::eigentime_remark: return "eigentime_remark";
    case CheckId::lemma21: return "lemma21";
    case CheckId::random_target_T133: return "random_target_T133";
    case CheckId::velocity_T12: return "velocity_T12";
  }
  return "unknown";
}

struct TheoremCheck {
  CheckId id{};
  bool applicable = false;
  std::optional<double> max_residual;
  std::optional<bool> passed;
  std::string detail;
  // Only populated by bounds_T132.
  std::optional<double> lower_slack;
  std::optional<double> upper_slack;
};

struct ReportScalars {
  double rate = 0.0;
  double t_av = 0.0;
  double h_av = 0.0;
  double route_disagreement = 0.0;
  std::optional<double> t_rel;
  std::optional<double> eigentime;
};

struct VelocityReport {
  ChainStructure structure;
  ReportScalars scalars;
  std::vector<TheoremCheck> checks;  // sorted by id name
  double tolerance = kDefaultCheckTol;

  bool all_applicable_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const TheoremCheck& c) { return !c.applicable || c.passed.value_or(false); });
  }

  const TheoremCheck& check(CheckId id) const {
    for (const auto& c : checks)
      if (c.id == id) return c;
    throw ChainError(ErrorKind::ParameterOutOfRange, "no such check");
  }
};

/// Two-sided relaxation-time bound on the average entropy. Slacks are
/// lower = H^av - (t_rel + 1) rate and upper = ((n-1) t_rel + 1) log n - H^av.
inline TheoremCheck check_bounds(double h_av, double rate, double t_rel, std::size_t n) {
  TheoremCheck c;
  c.id = CheckId::bounds_T132;
  c.applicable = true;
  const double lower = (t_rel + 1.0) * rate;
  const double upper = (static_cast<double>(n - 1) * t_rel + 1.0) * std::log(static_cast<double>(n));
  c.lower_slack = h_av - lower;
  c.upper_slack = upper - h_av;
  c.max_residual = std::max(0.0, -std::min(*c.lower_slack, *c.upper_slack));
  c.passed = *c.lower_slack >= kBoundSlackFloor && *c.upper_slack >= kBoundSlackFloor;
  c.detail = "lower slack " + std::to_string(*c.lower_slack) + ", upper slack " + std::to_string(*c.upper_slack);
  return c;
}

namespace detail {

inline TheoremCheck equality_check(CheckId id, double residual, double tol, std::string detail) {
  TheoremCheck c;
  c.id = id;
  c.applicable = true;
  c.max_residual = residual;
  c.passed = residual <= tol;
  c.detail = std::move(detail);
  return c;
}

inline TheoremCheck skipped(CheckId id, std::string why) {
  TheoremCheck c;
  c.id = id;
  c.detail = std::move(why);
  return c;
}

}  // namespace detail

inline VelocityReport evaluate_checks(const ChainAnalysis& a, double tol = kDefaultCheckTol) {
  using detail::equality_check;
  using detail::skipped;

  const std::size_t n = a.n();
  const auto& pi = a.stationary;
  const auto& e = a.hitting;
  const auto& h = a.trajectory;
  const double rate = a.entropy.rate;
  const bool cre = a.structure.constant_row_entropy;
  const bool rev = a.structure.reversible;

  VelocityReport r;
  r.structure = a.structure;
  r.tolerance = tol;
  r.scalars.rate = rate;
  r.scalars.t_av = e.t_av;
  r.scalars.h_av = h.h_av;
  r.scalars.route_disagreement = a.route_disagreement;
  if (a.spectral) {
    r.scalars.t_rel = a.spectral->relaxation_time;
    r.scalars.eigentime = a.spectral->eigentime;
  }

  r.checks.push_back(equality_check(CheckId::lemma21, a.route_disagreement, tol,
                                    "fundamental-matrix route vs hitting-time route, all ordered pairs"));

  double commute = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) commute = std::max(commute, std::abs(h.commute(i, j) - e.commute(i, j) * rate));
  r.checks.push_back(equality_check(CheckId::commute_T131, commute, tol, "max |H^c - t^c * rate| over i != j"));

  if (cre) {
    double velocity = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double time = i == j ? e.return_time[i] : e(i, j);
        velocity = std::max(velocity, std::abs(h(i, j) - time * rate));
      }
    r.checks.push_back(equality_check(CheckId::velocity_T12, velocity, tol,
                                      "max |H_ij - E_i(tau_j) * rate|, return time on the diagonal"));

    r.checks.push_back(equality_check(CheckId::average_T132, std::abs(h.h_av - (e.t_av + 1.0) * rate), tol,
                                      "|H^av - (t^av + 1) * rate|"));

    double lo = entropic_random_target_value(h, pi, 0);
    double hi = lo;
    for (std::size_t i = 1; i < n; ++i) {
      const double v = entropic_random_target_value(h, pi, i);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    r.checks.push_back(equality_check(CheckId::random_target_T133, hi - lo, tol,
                                      "spread of sum_j pi_j H_ij over start states"));
  } else {
    r.checks.push_back(skipped(CheckId::velocity_T12, "row entropies are not constant"));
    r.checks.push_back(skipped(CheckId::average_T132, "row entropies are not constant"));
    r.checks.push_back(skipped(CheckId::random_target_T133, "row entropies are not constant"));
  }

  if (cre && rev) {
    r.checks.push_back(equality_check(CheckId::cyclic_tour_T134, max_cyclic_tour_residual(h.h), tol,
                                      n < 3 ? "fewer than three states; identity is vacuous"
                                            : "max entropic cyclic tour residual over distinct triples"));
  } else {
    r.checks.push_back(skipped(CheckId::cyclic_tour_T134, rev ? "row entropies are not constant" : "chain is not reversible"));
  }

  if (rev && a.spectral) {
    r.checks.push_back(equality_check(CheckId::eigentime_remark, std::abs(a.spectral->eigentime - e.t_av), tol,
                                      "|sum 1/(1 - lambda_k) - t^av|"));
    if (cre)
      r.checks.push_back(check_bounds(h.h_av, rate, a.spectral->relaxation_time, n));
    else
      r.checks.push_back(skipped(CheckId::bounds_T132, "row entropies are not constant"));
  } else {
    const char* why = rev ? "single-state chain has no spectral gap" : "chain is not reversible";
    r.checks.push_back(skipped(CheckId::eigentime_remark, why));
    r.checks.push_back(skipped(CheckId::bounds_T132, why));
  }

  std::sort(r.checks.begin(), r.checks.end(),
            [](const TheoremCheck& x, const TheoremCheck& y) { return to_string(x.id) < to_string(y.id); });
  return r;
}

inline VelocityReport build_report(const StochasticMatrix& p, double tol = kDefaultCheckTol,
                                   double structure_tol = kDefaultStructureTol) {
  return evaluate_checks(analyze(p, structure_tol), tol);
}

}  // namespace trajent

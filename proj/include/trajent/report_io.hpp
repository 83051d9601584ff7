#pragma once

// Serialization of analyses, reports and Monte Carlo estimates.
//
// JSON documents for `analyze` and `verify` have the top-level keys
// meta, structure, scalars, matrices, checks in that order. A log base of 2
// divides entropy values by log 2 at this layer only; check residuals stay in
// nats because the tolerance is expressed in nats.

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trajent/analysis.hpp"
#include "trajent/io.hpp"
#include "trajent/monte_carlo.hpp"
#include "trajent/velocity_report.hpp"

namespace trajent::io {

using ojson = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "trajent";
inline constexpr std::string_view kToolVersion = "1.0.0";

enum class LogBase { e, two };

inline double entropy_scale(LogBase base) { return base == LogBase::two ? 1.0 / std::log(2.0) : 1.0; }

inline std::string_view to_string(LogBase base) { return base == LogBase::two ? "2" : "e"; }

inline ojson vector_json(std::span<const double> v, double scale = 1.0) {
  auto arr = ojson::array();
  for (double x : v) arr.push_back(x * scale);
  return arr;
}

inline ojson optional_json(const std::optional<double>& v) { return v ? ojson(*v) : ojson(nullptr); }

inline ojson structure_json(const ChainStructure& s) {
  ojson j;
  j["irreducible"] = s.irreducible;
  j["reversible"] = s.reversible;
  j["constant_row_entropy"] = s.constant_row_entropy;
  j["deterministic"] = s.deterministic;
  j["structure_tol"] = s.structure_tol;
  return j;
}

inline ojson check_json(const TheoremCheck& c) {
  ojson j;
  j["id"] = std::string(to_string(c.id));
  j["applicable"] = c.applicable;
  j["max_residual"] = optional_json(c.max_residual);
  j["passed"] = c.passed ? ojson(*c.passed) : ojson(nullptr);
  if (c.lower_slack) j["lower_slack"] = *c.lower_slack;
  if (c.upper_slack) j["upper_slack"] = *c.upper_slack;
  j["detail"] = c.detail;
  return j;
}

struct DocumentOptions {
  std::string command = "analyze";
  LogBase log_base = LogBase::e;
};

inline ojson report_document(const ChainAnalysis& a, const VelocityReport& r, const DocumentOptions& opt) {
  const double s = entropy_scale(opt.log_base);
  ojson doc;

  ojson meta;
  meta["tool"] = std::string(kToolName);
  meta["version"] = std::string(kToolVersion);
  meta["command"] = opt.command;
  meta["n"] = a.n();
  meta["log_base"] = std::string(to_string(opt.log_base));
  meta["entropy_unit"] = opt.log_base == LogBase::two ? "bits" : "nats";
  meta["residual_unit"] = "nats";
  meta["tolerance"] = r.tolerance;
  doc["meta"] = std::move(meta);

  doc["structure"] = structure_json(r.structure);

  ojson scalars;
  scalars["entropy_rate"] = r.scalars.rate * s;
  scalars["t_av"] = r.scalars.t_av;
  scalars["H_av"] = r.scalars.h_av * s;
  scalars["t_rel"] = optional_json(r.scalars.t_rel);
  scalars["eigentime"] = optional_json(r.scalars.eigentime);
  scalars["route_disagreement"] = r.scalars.route_disagreement;
  scalars["stationary_residual"] = a.stationary.residual;
  doc["scalars"] = std::move(scalars);

  ojson m;
  m["P"] = matrix_json(a.p.matrix());
  m["pi"] = vector_json(a.stationary.pi);
  m["row_entropy"] = vector_json(a.entropy.row_entropy, s);
  m["hitting_time"] = matrix_json(a.hitting.expected);
  m["return_time"] = vector_json(a.hitting.return_time);
  m["commute_time"] = matrix_json(a.hitting.commute);
  m["trajectory_entropy"] = matrix_json(a.trajectory.h, s);
  m["commute_entropy"] = matrix_json(a.trajectory.commute, s);
  m["eigenvalues"] = a.spectral ? vector_json(a.spectral->eigenvalues) : ojson(nullptr);
  doc["matrices"] = std::move(m);

  auto checks = ojson::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  doc["checks"] = std::move(checks);
  return doc;
}

namespace detail {

inline void csv_matrix(std::string& out, std::string_view name, const Matrix& m, double scale = 1.0) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out += std::string(name) + "," + std::to_string(i) + "," + std::to_string(j) + "," +
             format_number(m(i, j) * scale) + "\n";
}

inline void csv_vector(std::string& out, std::string_view name, std::span<const double> v, double scale = 1.0) {
  for (std::size_t i = 0; i < v.size(); ++i)
    out += std::string(name) + "," + std::to_string(i) + ",," + format_number(v[i] * scale) + "\n";
}

inline void csv_scalar(std::string& out, std::string_view name, const std::optional<double>& v) {
  if (v) out += std::string(name) + ",,," + format_number(*v) + "\n";
}

inline std::string fixed(double v, int digits = 10) {
  if (!std::isfinite(v)) return format_number(v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline void text_matrix(std::ostringstream& os, std::string_view title, const Matrix& m, double scale = 1.0) {
  os << title << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%14.8g", m(i, j) * scale);
      os << buf;
    }
    os << '\n';
  }
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

/// Long-format CSV: quantity,i,j,value (i and j left blank where unused).
inline std::string analysis_csv(const ChainAnalysis& a, const VelocityReport& r, LogBase base) {
  const double s = entropy_scale(base);
  std::string out = "quantity,i,j,value\n";
  detail::csv_scalar(out, "entropy_rate", r.scalars.rate * s);
  detail::csv_scalar(out, "t_av", r.scalars.t_av);
  detail::csv_scalar(out, "H_av", r.scalars.h_av * s);
  detail::csv_scalar(out, "t_rel", r.scalars.t_rel);
  detail::csv_scalar(out, "eigentime", r.scalars.eigentime);
  detail::csv_scalar(out, "route_disagreement", r.scalars.route_disagreement);
  detail::csv_vector(out, "pi", a.stationary.pi);
  detail::csv_vector(out, "row_entropy", a.entropy.row_entropy, s);
  detail::csv_vector(out, "return_time", a.hitting.return_time);
  if (a.spectral) detail::csv_vector(out, "eigenvalue", a.spectral->eigenvalues);
  detail::csv_matrix(out, "hitting_time", a.hitting.expected);
  detail::csv_matrix(out, "commute_time", a.hitting.commute);
  detail::csv_matrix(out, "trajectory_entropy", a.trajectory.h, s);
  detail::csv_matrix(out, "commute_entropy", a.trajectory.commute, s);
  return out;
}

inline std::string checks_csv(const VelocityReport& r) {
  std::string out = "id,applicable,passed,max_residual,detail\n";
  for (const auto& c : r.checks) {
    out += std::string(to_string(c.id)) + "," + (c.applicable ? "true" : "false") + "," +
           (c.passed ? (*c.passed ? "true" : "false") : "") + "," +
           (c.max_residual ? format_number(*c.max_residual) : "") + ",\"" + c.detail + "\"\n";
  }
  return out;
}

inline std::string structure_text(const ChainStructure& s) {
  std::ostringstream os;
  os << "structure: irreducible=" << detail::yes_no(s.irreducible) << " reversible=" << detail::yes_no(s.reversible)
     << " constant_row_entropy=" << detail::yes_no(s.constant_row_entropy)
     << " deterministic=" << detail::yes_no(s.deterministic) << "\n";
  return os.str();
}

inline std::string analysis_text(const ChainAnalysis& a, const VelocityReport& r, LogBase base) {
  const double s = entropy_scale(base);
  const char* unit = base == LogBase::two ? "bits" : "nats";
  std::ostringstream os;
  os << "states: " << a.n() << "\n" << structure_text(r.structure);
  os << "entropy rate H(X): " << detail::fixed(r.scalars.rate * s) << " " << unit << "\n";
  os << "average hitting time t_av: " << detail::fixed(r.scalars.t_av) << "\n";
  os << "average entropy H_av: " << detail::fixed(r.scalars.h_av * s) << " " << unit << "\n";
  if (r.scalars.t_rel) os << "relaxation time t_rel: " << detail::fixed(*r.scalars.t_rel) << "\n";
  if (r.scalars.eigentime) os << "eigentime sum: " << detail::fixed(*r.scalars.eigentime) << "\n";
  os << "route disagreement: " << detail::fixed(r.scalars.route_disagreement, 3) << "\n";

  os << "pi:";
  for (double v : a.stationary.pi) os << " " << detail::fixed(v);
  os << "\nrow entropy:";
  for (double v : a.entropy.row_entropy) os << " " << detail::fixed(v * s);
  os << "\n";
  if (a.spectral) {
    os << "eigenvalues:";
    for (double v : a.spectral->eigenvalues) os << " " << detail::fixed(v);
    os << "\n";
  }
  detail::text_matrix(os, "hitting times E_i(tau_j)", a.hitting.expected);
  detail::text_matrix(os, std::string("trajectory entropy H_ij (") + unit + ")", a.trajectory.h, s);
  detail::text_matrix(os, std::string("commute entropy (") + unit + ")", a.trajectory.commute, s);
  return os.str();
}

inline std::string checks_text(const VelocityReport& r) {
  std::ostringstream os;
  os << structure_text(r.structure);
  char line[160];
  std::snprintf(line, sizeof line, "%-20s %-10s %-8s %-14s\n", "check", "applicable", "result", "max_residual");
  os << line;
  std::size_t applicable = 0;
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    const char* verdict = !c.applicable ? "-" : (*c.passed ? "PASS" : "FAIL");
    applicable += c.applicable;
    passed += c.applicable && *c.passed;
    std::snprintf(line, sizeof line, "%-20s %-10s %-8s %-14s ", std::string(to_string(c.id)).c_str(),
                  c.applicable ? "yes" : "no", verdict,
                  c.max_residual ? detail::fixed(*c.max_residual, 3).c_str() : "-");
    os << line << c.detail << "\n";
  }
  os << passed << "/" << applicable << " applicable checks passed (tolerance " << detail::fixed(r.tolerance, 3)
     << ")\n";
  return os.str();
}

inline ojson estimate_json(const mc::McEstimate& e, std::optional<double> analytic, double scale = 1.0) {
  ojson j;
  j["mean"] = e.mean * scale;
  j["std_error"] = e.std_error * scale;
  j["samples"] = e.samples;
  j["truncated"] = e.truncated;
  j["reliable"] = e.reliable();
  j["seed"] = e.seed;
  j["step_cap"] = e.step_cap;
  j["analytic"] = analytic ? ojson(*analytic * scale) : ojson(nullptr);
  j["z_score"] = analytic ? ojson(mc::z_score(e, *analytic)) : ojson(nullptr);
  return j;
}

}  // namespace trajent::io

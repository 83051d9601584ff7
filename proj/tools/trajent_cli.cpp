// Command-line front end for the trajent library.
//
//   trajent analyze  <matrix> [--format json|csv|text] [--log-base e|2] [--tol x]
//   trajent verify   <matrix> [--format ...] [--log-base ...] [--tol x]
//   trajent generate <family> [--n k] [--p x] [--pi a,b,..] [--row a,b,..]
//                             [--density x] [--seed s] [--format json|csv]
//   trajent simulate <matrix> --from i --to j [--samples m] [--seed s]
//                             [--step-cap c] [--workers w] [--format ...]
//
// Exit codes: 0 success, 1 an applicable check failed (verify only),
// 2 parse/validation/argument error, 3 chain not irreducible.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "trajent/trajent.hpp"

namespace {

using namespace trajent;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitReducible = 3;

struct CommonFlags {
  std::string format = "text";
  std::string log_base = "e";
  double tol = kDefaultCheckTol;
  std::string output;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_tol) {
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--log-base", flags.log_base, "Entropy display base")
      ->check(CLI::IsMember({"e", "2"}))
      ->capture_default_str();
  if (with_tol) cmd->add_option("--tol", flags.tol, "Absolute residual tolerance")->capture_default_str();
  cmd->add_option("-o,--output", flags.output, "Write to this file instead of stdout");
}

io::LogBase log_base(const CommonFlags& f) { return f.log_base == "2" ? io::LogBase::two : io::LogBase::e; }

void emit(const CommonFlags& flags, const std::string& text) {
  if (flags.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(flags.output, std::ios::binary);
  if (!out) throw ChainError(ErrorKind::ParseError, "cannot write " + flags.output);
  out << text;
}

std::vector<double> parse_list(const std::string& text) {
  const auto rows = io::parse_csv(text);
  if (rows.size() != 1) throw ChainError(ErrorKind::ParseError, "expected a single comma-separated list");
  return rows.front();
}

int run_report(const std::string& path, const CommonFlags& flags, bool verify) {
  const auto p = io::load_matrix(path);
  const auto analysis = analyze(p);
  const auto report = evaluate_checks(analysis, flags.tol);

  if (flags.format == "json") {
    emit(flags, io::dump_json(io::report_document(analysis, report, {verify ? "verify" : "analyze", log_base(flags)})));
  } else if (flags.format == "csv") {
    emit(flags, verify ? io::checks_csv(report) : io::analysis_csv(analysis, report, log_base(flags)));
  } else {
    emit(flags, verify ? io::checks_text(report) : io::analysis_text(analysis, report, log_base(flags)));
  }
  if (verify && !report.all_applicable_passed()) return kExitCheckFailed;
  return kExitOk;
}

struct GenerateArgs {
  std::string family;
  std::optional<std::size_t> n;
  std::optional<double> p;
  std::optional<std::string> pi;
  std::optional<std::string> row;
  double density = 0.5;
  std::uint64_t seed = 1;
};

StochasticMatrix generate(const GenerateArgs& g) {
  auto need_n = [&] {
    if (!g.n) throw ChainError(ErrorKind::ParameterOutOfRange, g.family + " requires --n");
    return *g.n;
  };
  if (g.family == "two-state") {
    if (!g.p) throw ChainError(ErrorKind::ParameterOutOfRange, "two-state requires --p");
    return gen::two_state(*g.p);
  }
  if (g.family == "complete") return gen::complete_graph(need_n());
  if (g.family == "cycle") return gen::cycle(need_n());
  if (g.family == "rank-one") {
    if (g.pi) return gen::rank_one(parse_list(*g.pi));
    return gen::rank_one_uniform(need_n());
  }
  if (g.family == "circulant") {
    if (!g.row) throw ChainError(ErrorKind::ParameterOutOfRange, "circulant requires --row");
    return gen::circulant(parse_list(*g.row));
  }
  if (g.family == "random-irreducible") return gen::random_irreducible(need_n(), g.density, g.seed);
  if (g.family == "random-reversible") return gen::random_reversible(need_n(), g.seed);
  if (g.family == "random-circulant") return gen::random_circulant(need_n(), g.density, g.seed);
  if (g.family == "random-symmetric") return gen::random_symmetric(need_n(), g.seed);
  throw ChainError(ErrorKind::ParameterOutOfRange, "unknown family " + g.family);
}

struct SimulateArgs {
  std::string path;
  std::size_t from = 0;
  std::size_t to = 0;
  std::uint64_t samples = mc::kDefaultSamples;
  std::uint64_t seed = 1;
  std::uint64_t step_cap = mc::kDefaultStepCap;
  unsigned workers = 0;
};

int run_simulate(const SimulateArgs& s, const CommonFlags& flags) {
  const auto p = io::load_matrix(s.path);
  mc::check_states(p, s.from, s.to);
  const auto analysis = analyze(p);

  mc::SimulationOptions opt;
  opt.samples = s.samples;
  opt.seed = s.seed;
  opt.step_cap = s.step_cap;
  opt.workers = s.workers > 0 ? s.workers : std::max(1u, std::thread::hardware_concurrency());
  const auto est = mc::estimate_paths(p, s.from, s.to, opt);

  const double h_exact = analysis.trajectory.h(s.from, s.to);
  const double t_exact = s.from == s.to ? analysis.hitting.return_time[s.from] : analysis.hitting(s.from, s.to);
  const double scale = io::entropy_scale(log_base(flags));

  if (flags.format == "json") {
    io::ojson doc;
    doc["meta"] = {{"tool", std::string(io::kToolName)},
                   {"version", std::string(io::kToolVersion)},
                   {"command", "simulate"},
                   {"n", p.n()},
                   {"from", s.from},
                   {"to", s.to},
                   {"log_base", std::string(io::to_string(log_base(flags)))}};
    doc["trajectory_entropy"] = io::estimate_json(est.entropy, h_exact, scale);
    doc["hitting_time"] = io::estimate_json(est.hitting, t_exact);
    emit(flags, io::dump_json(doc));
    return kExitOk;
  }

  auto row = [](const std::string& name, const mc::McEstimate& e, double exact, double sc) {
    return name + "," + io::format_number(e.mean * sc) + "," + io::format_number(e.std_error * sc) + "," +
           std::to_string(e.samples) + "," + std::to_string(e.truncated) + "," + io::format_number(exact * sc) +
           "," + io::format_number(mc::z_score(e, exact)) + "\n";
  };
  if (flags.format == "csv") {
    emit(flags, "quantity,mean,std_error,samples,truncated,analytic,z_score\n" +
                    row("trajectory_entropy", est.entropy, h_exact, scale) +
                    row("hitting_time", est.hitting, t_exact, 1.0));
    return kExitOk;
  }

  char buf[256];
  std::string text;
  std::snprintf(buf, sizeof buf, "trajectories %zu -> %zu: %llu samples, seed %llu, step cap %llu, truncated %llu%s\n",
                s.from, s.to, static_cast<unsigned long long>(s.samples), static_cast<unsigned long long>(s.seed),
                static_cast<unsigned long long>(s.step_cap), static_cast<unsigned long long>(est.hitting.truncated),
                est.hitting.reliable() ? "" : " (UNRELIABLE)");
  text += buf;
  std::snprintf(buf, sizeof buf, "%-20s %16s %14s %16s %9s\n", "quantity", "mc mean", "std error", "analytic", "z");
  text += buf;
  std::snprintf(buf, sizeof buf, "%-20s %16.10g %14.6g %16.10g %9.3f\n", "trajectory entropy", est.entropy.mean * scale,
                est.entropy.std_error * scale, h_exact * scale, mc::z_score(est.entropy, h_exact));
  text += buf;
  std::snprintf(buf, sizeof buf, "%-20s %16.10g %14.6g %16.10g %9.3f\n", "hitting time", est.hitting.mean,
                est.hitting.std_error, t_exact, mc::z_score(est.hitting, t_exact));
  text += buf;
  emit(flags, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trajectory entropy and hitting times of finite Markov chains"};
  app.require_subcommand(1);

  CommonFlags analyze_flags, verify_flags, generate_flags, simulate_flags;
  std::string analyze_path, verify_path;

  auto* analyze_cmd = app.add_subcommand("analyze", "Compute all chain quantities");
  analyze_cmd->add_option("matrix", analyze_path, "CSV or JSON matrix file")->required();
  add_common(analyze_cmd, analyze_flags, true);

  auto* verify_cmd = app.add_subcommand("verify", "Certify the velocity identities");
  verify_cmd->add_option("matrix", verify_path, "CSV or JSON matrix file")->required();
  add_common(verify_cmd, verify_flags, true);

  GenerateArgs gen_args;
  auto* generate_cmd = app.add_subcommand("generate", "Emit an example or random chain");
  generate_cmd
      ->add_option("family", gen_args.family,
                   "two-state | complete | rank-one | cycle | circulant | random-irreducible | "
                   "random-reversible | random-circulant | random-symmetric")
      ->required();
  generate_cmd->add_option("--n", gen_args.n, "Number of states");
  generate_cmd->add_option("--p", gen_args.p, "Two-state switching probability");
  generate_cmd->add_option("--pi", gen_args.pi, "Rank-one row, comma separated");
  generate_cmd->add_option("--row", gen_args.row, "Circulant first row, comma separated");
  generate_cmd->add_option("--density", gen_args.density, "Extra-edge probability for random families")
      ->capture_default_str();
  generate_cmd->add_option("--seed", gen_args.seed, "Seed for random families")->capture_default_str();
  add_common(generate_cmd, generate_flags, false);

  SimulateArgs sim_args;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimates of H_ij and E_i(tau_j)");
  simulate_cmd->add_option("matrix", sim_args.path, "CSV or JSON matrix file")->required();
  simulate_cmd->add_option("--from", sim_args.from, "Start state")->required();
  simulate_cmd->add_option("--to", sim_args.to, "Target state")->required();
  simulate_cmd->add_option("--samples", sim_args.samples, "Number of trajectories")->capture_default_str();
  simulate_cmd->add_option("--seed", sim_args.seed, "Master seed")->capture_default_str();
  simulate_cmd->add_option("--step-cap", sim_args.step_cap, "Maximum steps per trajectory")->capture_default_str();
  simulate_cmd->add_option("--workers", sim_args.workers, "Worker threads (0 = hardware concurrency)");
  add_common(simulate_cmd, simulate_flags, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*analyze_cmd) return run_report(analyze_path, analyze_flags, false);
    if (*verify_cmd) return run_report(verify_path, verify_flags, true);
    if (*simulate_cmd) return run_simulate(sim_args, simulate_flags);
    if (*generate_cmd) {
      try {
        const auto p = generate(gen_args);
        emit(generate_flags, generate_flags.format == "json" ? io::to_json(p.matrix()) : io::to_csv(p.matrix()));
      } catch (const ChainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
      }
      return kExitOk;
    }
  } catch (const ChainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::NotIrreducible ? kExitReducible : kExitInvalid;
  }
  return kExitInvalid;
}

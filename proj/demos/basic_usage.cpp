// Analyze the random walk on a 6-cycle and print the velocity identity
// H_0j = E_0(tau_j) * H(X) for every target state.

#include <cstdio>

#include "trajent/trajent.hpp"

int main() {
  const auto chain = trajent::gen::cycle(6);
  const auto a = trajent::analyze(chain);
  std::printf("entropy rate %.6f nats\n", a.entropy.rate);
  for (std::size_t j = 1; j < chain.n(); ++j)
    std::printf("H_0%zu = %.6f   E_0(tau_%zu) * rate = %.6f\n", j, a.trajectory(0, j), j,
                a.hitting(0, j) * a.entropy.rate);

  const auto report = trajent::evaluate_checks(a);
  std::fputs(trajent::io::checks_text(report).c_str(), stdout);
  return report.all_applicable_passed() ? 0 : 1;
}

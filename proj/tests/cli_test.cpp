#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "trajent/generators.hpp"
#include "trajent/io.hpp"

namespace fs = std::filesystem;
using namespace trajent;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / ("trajent_cli_test_" + std::to_string(::getpid()) + ".out");
  const std::string cmd = std::string(TRAJENT_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  fs::remove(out);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / (std::to_string(::getpid()) + "_" + name);
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST(Cli, AnalyzeCycleFive) {
  const auto path = write_temp("cycle5.csv", io::to_csv(gen::cycle(5).matrix()));
  const auto r = run("analyze " + path + " --format json");
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["scalars"]["t_av"].get<double>(), 4.0, 1e-10);
  EXPECT_NEAR(doc["scalars"]["H_av"].get<double>(), 5.0 * std::log(2.0), 1e-10);

  const auto bits = nlohmann::json::parse(run("analyze " + path + " --format json --log-base 2").out);
  EXPECT_NEAR(bits["scalars"]["H_av"].get<double>(), 5.0, 1e-10);
  EXPECT_EQ(bits["meta"]["entropy_unit"], "bits");
}

TEST(Cli, AnalyzeFormats) {
  const auto path = write_temp("complete4.csv", io::to_csv(gen::complete_graph(4).matrix()));
  const auto csv = run("analyze " + path + " --format csv");
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("quantity,i,j,value\n", 0), 0u);
  const auto text = run("analyze " + path);
  ASSERT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("average entropy H_av"), std::string::npos);
}

TEST(Cli, ReducibleExitsThree) {
  const auto path = write_temp("reducible.csv", "1,0\n0,1\n");
  EXPECT_EQ(run("analyze " + path).code, 3);
  EXPECT_EQ(run("verify " + path).code, 3);
}

TEST(Cli, MalformedExitsTwo) {
  EXPECT_EQ(run("verify " + write_temp("badsum.csv", "0.5,1.0\n0.5,0.5\n")).code, 2);
  EXPECT_EQ(run("verify " + write_temp("ragged.csv", "0.5,0.5\n1\n")).code, 2);
  EXPECT_EQ(run("verify /nonexistent/file.csv").code, 2);
  EXPECT_EQ(run("verify").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
}

TEST(Cli, VerifyExitCodes) {
  const auto good = write_temp("complete5.json", io::to_json(gen::complete_graph(5).matrix()));
  const auto r = run("verify " + good + " --format json");
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  int applicable = 0;
  for (const auto& c : doc["checks"]) applicable += c["applicable"].get<bool>();
  EXPECT_EQ(applicable, 8);
  EXPECT_EQ(run("verify " + good + " --tol -1").code, 1);
}

TEST(Cli, GenerateRoundTrip) {
  const auto r = run("generate complete --n 3 --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(validate_matrix(io::parse_matrix_text(r.out)), gen::complete_graph(3));

  const auto circ = run("generate circulant --row 0,0.5,0.5,0");
  ASSERT_EQ(circ.code, 0);
  EXPECT_EQ(validate_matrix(io::parse_matrix_text(circ.out)),
            gen::circulant(std::vector<double>{0, 0.5, 0.5, 0}));

  const auto rnd = run("generate random-irreducible --n 6 --density 0.5 --seed 1 --format json");
  EXPECT_EQ(validate_matrix(io::parse_matrix_text(rnd.out)), gen::random_irreducible(6, 0.5, 1));
}

TEST(Cli, GenerateRejectsBadParameters) {
  EXPECT_EQ(run("generate two-state --p 1.0").code, 2);
  EXPECT_EQ(run("generate complete").code, 2);
  EXPECT_EQ(run("generate circulant --row 0,0,1,0").code, 2);
  EXPECT_EQ(run("generate nonsense --n 3").code, 2);
}

TEST(Cli, Simulate) {
  const auto path = write_temp("cycle5_sim.csv", io::to_csv(gen::cycle(5).matrix()));
  const auto r = run("simulate " + path + " --from 0 --to 2 --samples 20000 --seed 7 --format json");
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["hitting_time"]["analytic"].get<double>(), 6.0, 1e-10);
  EXPECT_LE(std::abs(doc["hitting_time"]["z_score"].get<double>()), 4.0);
  EXPECT_EQ(doc["hitting_time"]["truncated"].get<int>(), 0);

  const auto rot = write_temp("rot.csv", "0,1,0\n0,0,1\n1,0,0\n");
  const auto d = nlohmann::json::parse(run("simulate " + rot + " --from 0 --to 2 --samples 100 --format json").out);
  EXPECT_EQ(d["trajectory_entropy"]["mean"].get<double>(), 0.0);

  EXPECT_EQ(run("simulate " + path + " --from 0 --to 99").code, 2);
}

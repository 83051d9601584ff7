#include <gtest/gtest.h>

#include "trajent/chain.hpp"
#include "trajent/generators.hpp"

using namespace trajent;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const ChainError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ChainError thrown";
  return ErrorKind::ParseError;
}

// Strong-connectivity oracle by Floyd-Warshall transitive closure.
bool closure_connected(const StochasticMatrix& p) {
  const std::size_t n = p.n();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = i == j || p(i, j) > 0.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] || (r[i][k] && r[k][j]);
  for (const auto& row : r)
    for (bool b : row)
      if (!b) return false;
  return true;
}

}  // namespace

TEST(Generators, TwoState) {
  EXPECT_EQ(gen::two_state(0.25).matrix(), (Matrix{{0.75, 0.25}, {0.25, 0.75}}));
  EXPECT_EQ(gen::two_state(0.5).matrix(), (Matrix{{0.5, 0.5}, {0.5, 0.5}}));
  EXPECT_EQ(kind_of([] { gen::two_state(0.0); }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind_of([] { gen::two_state(1.0); }), ErrorKind::ParameterOutOfRange);
}

TEST(Generators, CompleteGraph) {
  EXPECT_EQ(gen::complete_graph(3).matrix(), (Matrix{{0, .5, .5}, {.5, 0, .5}, {.5, .5, 0}}));
  EXPECT_EQ(gen::complete_graph(2).matrix(), (Matrix{{0, 1}, {1, 0}}));
  EXPECT_TRUE(check_irreducible(gen::complete_graph(2)));
  EXPECT_EQ(kind_of([] { gen::complete_graph(1); }), ErrorKind::ParameterOutOfRange);
}

TEST(Generators, RankOne) {
  const auto u = gen::rank_one_uniform(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_DOUBLE_EQ(u(i, j), 1.0 / 3.0);
  const auto r = gen::rank_one(std::vector<double>{0.1, 0.2, 0.7});
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(r(i, 2), 0.7);
  EXPECT_EQ(kind_of([] { gen::rank_one(std::vector<double>{1.0, 0.0}); }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind_of([] { gen::rank_one(std::vector<double>{0.5, 0.6}); }), ErrorKind::ParameterOutOfRange);
}

TEST(Generators, Cycle) {
  EXPECT_EQ(gen::cycle(3), gen::complete_graph(3));
  EXPECT_EQ(kind_of([] { gen::cycle(2); }), ErrorKind::ParameterOutOfRange);
  const auto c = gen::cycle(4);
  EXPECT_EQ(c(0, 1), 0.5);
  EXPECT_EQ(c(0, 3), 0.5);
  EXPECT_EQ(c(0, 2), 0.0);
}

TEST(Generators, Circulant) {
  const auto a = gen::circulant(std::vector<double>{0, 0.5, 0.5, 0});
  EXPECT_NE(a, gen::cycle(4));
  EXPECT_TRUE(closure_connected(a));
  EXPECT_EQ(a(1, 2), 0.5);
  EXPECT_EQ(a(1, 3), 0.5);
  EXPECT_EQ(a(3, 0), 0.5);

  const auto rot = gen::circulant(std::vector<double>{0, 1, 0});
  EXPECT_TRUE(classify(rot).deterministic);

  const auto b = gen::circulant(std::vector<double>{0, 0.5, 0, 0.5});
  EXPECT_TRUE(closure_connected(b));
  EXPECT_EQ(b, gen::cycle(4));

  // Shift 2 alone only reaches the even states of Z_4.
  EXPECT_EQ(kind_of([] { gen::circulant(std::vector<double>{0, 0, 1, 0}); }), ErrorKind::NotIrreducible);
  EXPECT_EQ(kind_of([] { gen::circulant(std::vector<double>{0.5, 0.7}); }), ErrorKind::ParameterOutOfRange);
}

TEST(Generators, CirculantCommutesWithShift) {
  const auto p = gen::random_circulant(7, 0.6, 12);
  Matrix shift(7, 7);
  for (std::size_t i = 0; i < 7; ++i) shift(i, (i + 1) % 7) = 1.0;
  EXPECT_EQ(multiply(p.matrix(), shift), multiply(shift, p.matrix()));
}

TEST(Generators, RandomIrreducibleDeterministicAndConnected) {
  EXPECT_EQ(gen::random_irreducible(5, 0.5, 42), gen::random_irreducible(5, 0.5, 42));
  EXPECT_NE(gen::random_irreducible(5, 0.5, 42), gen::random_irreducible(5, 0.5, 43));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto p = gen::random_irreducible(2 + seed % 10, 0.1, seed);
    EXPECT_TRUE(check_irreducible(p));
    EXPECT_TRUE(closure_connected(p));
  }
  const auto dense = gen::random_irreducible(3, 1.0, 8);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_GT(dense(i, j), 0.0);
  EXPECT_EQ(kind_of([] { gen::random_irreducible(1, 0.5, 1); }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind_of([] { gen::random_irreducible(4, 0.0, 1); }), ErrorKind::ParameterOutOfRange);
}

TEST(Generators, RandomReversible) {
  EXPECT_EQ(gen::random_reversible(4, 7), gen::random_reversible(4, 7));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto p = gen::random_reversible(2 + seed % 10, seed);
    const auto pi = stationary_distribution(p);
    EXPECT_TRUE(check_reversible(p, pi, 1e-10));
    EXPECT_TRUE(check_irreducible(p));
  }
}

TEST(Generators, RandomSymmetricIsSymmetricStochastic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = gen::random_symmetric(3 + seed % 8, seed);
    for (std::size_t i = 0; i < p.n(); ++i)
      for (std::size_t j = 0; j < p.n(); ++j) EXPECT_EQ(p(i, j), p(j, i));
    EXPECT_TRUE(classify(p).reversible);
  }
}

TEST(Generators, FamiliesMatchClaimedStructure) {
  for (const auto& p : {gen::two_state(0.3), gen::complete_graph(6), gen::rank_one_uniform(5), gen::cycle(8),
                        gen::circulant(std::vector<double>{0.2, 0.3, 0, 0.5}), gen::random_circulant(9, 0.4, 2)}) {
    const auto s = classify(p);
    EXPECT_TRUE(s.irreducible);
    EXPECT_TRUE(s.constant_row_entropy);
  }
  EXPECT_TRUE(classify(gen::random_reversible(8, 3)).reversible);
}

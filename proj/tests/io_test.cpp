#include <gtest/gtest.h>

#include "trajent/generators.hpp"
#include "trajent/io.hpp"

using namespace trajent;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const ChainError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ChainError thrown";
  return ErrorKind::NonSquare;
}

}  // namespace

TEST(Io, CsvParses) {
  const auto rows = io::parse_csv("0.5,0.5\n 0.25 , 0.75 \n\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][0], 0.25);
  EXPECT_EQ(rows[1][1], 0.75);
  EXPECT_EQ(io::parse_csv("1e-1,9e-1\r\n0.5,5E-1\r\n")[0][0], 0.1);
}

TEST(Io, CsvRejectsRaggedAndGarbage) {
  EXPECT_EQ(kind_of([] { io::parse_csv("0.5,0.5\n1\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::parse_csv("0.5,abc\n0.5,0.5\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::parse_csv("0.5,,0.5\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::parse_csv("\n\n"); }), ErrorKind::ParseError);
}

TEST(Io, JsonParses) {
  const auto rows = io::parse_json(R"({"n": 2, "P": [[0.5, 0.5], [1, 0]]})");
  EXPECT_EQ(rows, (io::RawRows{{0.5, 0.5}, {1.0, 0.0}}));
}

TEST(Io, JsonRejectsBadShapes) {
  EXPECT_EQ(kind_of([] { io::parse_json(R"({"n": 2, "P": [[0.5, 0.5], [1]]})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::parse_json(R"({"n": 3, "P": [[0.5, 0.5], [1, 0]]})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::parse_json(R"({"Q": []})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::parse_json(R"({"P": [["a"]]})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::parse_json("{not json"); }), ErrorKind::ParseError);
}

TEST(Io, FormatDetection) {
  EXPECT_EQ(io::parse_matrix_text("  {\"P\": [[1]]}"), (io::RawRows{{1.0}}));
  EXPECT_EQ(io::parse_matrix_text("1\n"), (io::RawRows{{1.0}}));
}

TEST(Io, SeventeenSignificantDigits) {
  EXPECT_EQ(io::format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(io::format_number(0.5), "0.5");
  EXPECT_EQ(io::format_number(1.0 / 3.0), "0.33333333333333331");
}

TEST(Io, RoundTripIsBitExact) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto p = gen::random_irreducible(2 + seed % 9, 0.5, seed);
    EXPECT_EQ(validate_matrix(io::parse_matrix_text(io::to_csv(p.matrix()))), p);
    EXPECT_EQ(validate_matrix(io::parse_matrix_text(io::to_json(p.matrix()))), p);
  }
}

TEST(Io, JsonDumpKeepsInsertionOrder) {
  nlohmann::ordered_json j;
  j["z"] = 1;
  j["a"] = 0.25;
  j["m"] = nlohmann::ordered_json::array({1.5, 2});
  EXPECT_EQ(io::dump_json(j, -1), "{\"z\":1,\"a\":0.25,\"m\":[1.5, 2]}\n");
}

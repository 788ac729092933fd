#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "liouville/classical.hpp"
#include "liouville/errors.hpp"
#include "liouville/io.hpp"
#include "liouville/ring.hpp"
#include "oracles.hpp"

using namespace liouville;

TEST(Json, Format) {
  std::vector<Coefficient> v{Coefficient(mpq_class(1, 2)), Coefficient(-3, Domain::Rational),
                             Coefficient(0, Domain::Rational)};
  EXPECT_EQ(to_json(ArithFunc::make(v, Domain::Rational)),
            R"({"domain":"Q","bound":3,"values":["1/2","-3","0"]})");
  EXPECT_EQ(to_json(nu(2, 2, Domain::Integer)), R"({"domain":"Z","bound":2,"values":["0","1"]})");
}

TEST(Json, RoundTripsExactly) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const ArithFunc q = oracle::random_rational_function(rng, 1 + trial * 7);
    EXPECT_EQ(from_json(to_json(q)), q);
    const ArithFunc z = oracle::random_function(rng, 1 + trial * 5, Domain::Integer, -1000000, 1000000);
    EXPECT_EQ(from_json(to_json(z)), z);
  }
  const ArithFunc big = classical::build("id_30", 64);
  EXPECT_EQ(from_json(to_json(big)), big);
}

TEST(Json, AcceptsIntegerValues) {
  EXPECT_EQ(from_json(R"({"domain":"Z","values":[1,0,-2]})").at(3), Coefficient(-2, Domain::Integer));
}

TEST(Json, Errors) {
  EXPECT_THROW(from_json("{"), ParseError);
  EXPECT_THROW(from_json("[]"), ParseError);
  EXPECT_THROW(from_json(R"({"domain":"R","values":["1"]})"), ParseError);
  EXPECT_THROW(from_json(R"({"domain":"Q","values":[]})"), ParseError);
  EXPECT_THROW(from_json(R"({"domain":"Q","bound":3,"values":["1"]})"), ParseError);
  EXPECT_THROW(from_json(R"({"domain":"Z","values":["1/2"]})"), ParseError);
  EXPECT_THROW(from_json(R"({"domain":"Q","values":[1.5]})"), ParseError);
  try {
    from_json("{\n\"domain\": \"Q\",\n\"values\": [\"1\",,]\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Csv, RoundTripsExactly) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const ArithFunc q = oracle::random_rational_function(rng, 1 + trial * 9);
    EXPECT_EQ(from_csv(to_csv(q), Domain::Rational), q);
  }
  EXPECT_EQ(to_csv(nu(2, 3, Domain::Integer)), "1,0\n2,1\n3,0\n");
}

TEST(Csv, HeaderCommentsAndSparseInput) {
  const ArithFunc f = from_csv("index,value\n# nu_3 + 1/2 at 5\n3,1\n\n5,1/2\n", Domain::Rational);
  EXPECT_EQ(f.bound(), 5u);
  EXPECT_EQ(f.at(3), Coefficient(1, Domain::Rational));
  EXPECT_EQ(f.at(5).to_string(), "1/2");
  EXPECT_TRUE(f.is_zero_at(4));
}

TEST(Csv, ErrorsCarryLineNumbers) {
  const auto line_of = [](std::string_view text, Domain d) -> std::size_t {
    try {
      from_csv(text, d);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("1,1\n2\n", Domain::Rational), 2u);
  EXPECT_EQ(line_of("1,1\n2,1\n0,4\n", Domain::Rational), 3u);
  EXPECT_EQ(line_of("1,1\n1,2\n", Domain::Rational), 2u);
  EXPECT_EQ(line_of("1,1\n2,abc\n", Domain::Rational), 2u);
  EXPECT_EQ(line_of("1,1\n2,1/3\n", Domain::Integer), 2u);
  EXPECT_THROW(from_csv("", Domain::Rational), ParseError);
}

TEST(LoadFunction, DispatchesOnExtension) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto json_path = dir / "liouville_io_test.json";
  const auto csv_path = dir / "liouville_io_test.csv";
  const ArithFunc mu = classical::build("mobius", 30);
  std::ofstream(json_path) << to_json(mu);
  std::ofstream(csv_path) << to_csv(mu);
  EXPECT_EQ(load_function(json_path, Domain::Rational), mu);
  EXPECT_EQ(load_function(csv_path, Domain::Integer), mu);
  EXPECT_THROW(load_function(dir / "does_not_exist.json", Domain::Rational), InvalidArgument);
  std::filesystem::remove(json_path);
  std::filesystem::remove(csv_path);
}

TEST(Text, SpaceSeparated) {
  EXPECT_EQ(to_text(classical::build("mobius", 6)), "1 -1 -1 0 -1 1");
}

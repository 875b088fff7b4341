#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "onetri/error.hpp"
#include "onetri/io.hpp"

using namespace onetri;

namespace {

PointConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_points(in);
}

SquaredDistanceMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_distance_matrix(in);
}

void expect_parse_error(const std::string& text, ParseErrorKind kind, std::size_t line) {
  try {
    parse(text);
    ADD_FAILURE() << "no error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), kind) << text;
    EXPECT_EQ(e.line(), line) << text;
    EXPECT_NE(std::string(e.what()).find("line " + std::to_string(line)), std::string::npos);
  }
}

}  // namespace

TEST(ParsePoints, Examples) {
  const auto cfg = parse("0 0\n1 0\n0 1\n");
  ASSERT_EQ(cfg.size(), 3u);
  EXPECT_EQ(cfg.ambient_dim(), 2u);
  EXPECT_EQ(cfg[2][1], 1);

  const auto mixed = parse("# header\n\n1/2  0.25\n\t-3 1e-3  # trailing\n");
  ASSERT_EQ(mixed.size(), 2u);
  EXPECT_EQ(mixed[0][0], Rational(1, 2));
  EXPECT_EQ(mixed[0][1], Rational(1, 4));
  EXPECT_EQ(mixed[1][0], -3);
  EXPECT_EQ(mixed[1][1], Rational(1, 1000));
}

TEST(ParsePoints, Errors) {
  expect_parse_error("0 0\n1 x\n", ParseErrorKind::malformed_literal, 2);
  expect_parse_error("1/0 2\n", ParseErrorKind::malformed_literal, 1);
  expect_parse_error("0 0\n\n1 0 0\n", ParseErrorKind::ragged_arity, 3);
  expect_parse_error("0 0\n1 1\n0 0\n", ParseErrorKind::duplicate_point, 3);
  expect_parse_error("0 0\n0.5 1\n1/2 1.0\n", ParseErrorKind::duplicate_point, 3);
  try {
    parse("# nothing\n\n");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseErrorKind::empty_input);
  }
}

TEST(ParsePoints, ShortestDecimalsRoundTrip) {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> gauss(0.0, 100.0);
  Coordinates x(20, 3);
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index k = 0; k < x.cols(); ++k) x(i, k) = gauss(rng);
  x(0, 0) = 1e-300;
  x(1, 1) = -0.0 + 3.0;
  const auto back = to_coordinates(parse(format_points(x)));
  EXPECT_EQ(back, x);
}

TEST(ParsePoints, RationalFormatRoundTrip) {
  const auto cfg = parse("1/3 -2/7\n5 0\n");
  EXPECT_EQ(parse(format_points(cfg)).points(), cfg.points());
}

TEST(ParseDistanceMatrix, StrictAndDiagonalForms) {
  const auto strict = parse_matrix("3\n1 1\n1\n");
  const auto diag = parse_matrix("3\n0 1 1\n0 1\n0\n");
  EXPECT_EQ(strict, diag);
  EXPECT_EQ(strict(2, 1), 1);
  EXPECT_EQ(parse_matrix(format_distance_matrix(strict)), strict);
}

TEST(ParseDistanceMatrix, Errors) {
  auto kind_of = [](const std::string& text) {
    try {
      parse_matrix(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    return ParseErrorKind::empty_input;  // sentinel, checked against other kinds
  };
  EXPECT_EQ(kind_of("x\n1 1 1\n"), ParseErrorKind::bad_header);
  EXPECT_EQ(kind_of("0\n"), ParseErrorKind::bad_header);
  EXPECT_EQ(parse_matrix("1\n").size(), 1u);
  EXPECT_EQ(kind_of("3\n1 1\n"), ParseErrorKind::ragged_arity);
  EXPECT_EQ(kind_of("3\n1 1 1 1\n"), ParseErrorKind::ragged_arity);
  EXPECT_EQ(kind_of("3\n1 q 1\n"), ParseErrorKind::malformed_literal);
  EXPECT_THROW(parse_matrix("3\n1 0 1\n"), PreconditionError);
}

#include <gtest/gtest.h>

#include "hgl/spec_io.hpp"

using namespace hgl;

TEST(SpecIo, ParsesPresentation) {
  const auto l = parse_spec(R"({"generators": 3, "relations": [[0,0,2]],
                                "form": [[0,1,0],[-1,0,0],[0,0,0]], "names": ["a","b","t"]})");
  EXPECT_EQ(l.spec.describe(), "Z^2 + Z/2");
  EXPECT_FALSE(l.surface);
  EXPECT_EQ(l.spec.names()[2], "t");
}

TEST(SpecIo, SurfaceShorthand) {
  const auto l = parse_spec(R"({"surface": {"genus": 2, "boundary": 3}})");
  ASSERT_TRUE(l.surface);
  EXPECT_EQ(l.surface->first, 2);
  EXPECT_EQ(l.spec.n_generators(), 7u);
}

TEST(SpecIo, SyntaxErrorHasPosition) {
  try {
    parse_spec("{\"generators\": 2,\n  \"form\": [[0,1],[-1,0]\n}");
    FAIL();
  } catch (const SpecParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 1u);
  }
}

TEST(SpecIo, SchemaErrors) {
  EXPECT_THROW(parse_spec(R"({"generators": 2})"), SpecParseError);
  EXPECT_THROW(parse_spec(R"({"generators": 2, "form": [[0,1]]})"), SpecParseError);
  EXPECT_THROW(parse_spec(R"({"generators": 2, "form": [[0,1],[-1,0.5]]})"), SpecParseError);
  EXPECT_THROW(parse_spec(R"({"generators": 2, "form": [[0,1],[-1,0]], "extra": 1})"), SpecParseError);
  EXPECT_THROW(parse_spec(R"([1,2])"), SpecParseError);
  // well-formed but invalid presentations surface as SpecError
  EXPECT_THROW(parse_spec(R"({"generators": 2, "form": [[1,0],[0,0]]})"), SpecError);
}

TEST(SpecIo, Gradings) {
  const auto s = GroupSpec::surface(1, 2);
  EXPECT_EQ(parse_grading(s, "0"), s.zero());
  EXPECT_EQ(parse_grading(s, "2C1"), s.element({0, 0, 2, 0}));
  EXPECT_EQ(parse_grading(s, "2*C1 - A1"), s.element({-1, 0, 2, 0}));
  EXPECT_EQ(parse_grading(s, "1,0,0,0"), s.generator(0));
  EXPECT_EQ(parse_grading(s, "-C2"), s.element({0, 0, 1, 0}));
  const auto list = parse_gradings(s, "0; C1; 2C1; C1");
  EXPECT_EQ(list.size(), 3u);
  EXPECT_THROW(parse_grading(s, "Q7"), std::invalid_argument);
  EXPECT_THROW(parse_grading(s, "1,2"), std::invalid_argument);
  EXPECT_THROW(parse_grading(s, "3"), std::invalid_argument);
}

TEST(SpecIo, SurfacePair) {
  EXPECT_EQ(parse_surface_pair("2,3"), std::make_pair(2, 3));
  EXPECT_THROW(parse_surface_pair("2"), std::invalid_argument);
  EXPECT_THROW(parse_surface_pair("0,0"), std::invalid_argument);
  EXPECT_THROW(parse_surface_pair("x,1"), std::invalid_argument);
}

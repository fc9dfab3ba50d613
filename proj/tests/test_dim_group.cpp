#include <gtest/gtest.h>

#include <regex>
#include <string>

#include "oracles.hpp"

using namespace tnorm;
using Kind = PositivitySign::Kind;

namespace {

const IntMatrix kFib{{1, 1}, {1, 0}};
const IntMatrix kGolden{{2, 1}, {1, 1}};

std::size_t count(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

const std::regex kEdge(R"(v\d+_\d+ -> v\d+_\d+;)");
const std::regex kNode(R"(^  v\d+_\d+;$)", std::regex::multiline);

}  // namespace

TEST(DimGroup, Construction) {
  EXPECT_EQ(make_dim_group(kFib).primitivity_witness(), 2u);
  EXPECT_EQ(make_dim_group(kGolden).primitivity_witness(), 1u);
  try {
    make_dim_group(IntMatrix::identity(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrimitive);
  }
  try {
    make_dim_group(IntMatrix{{1, -1}, {1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNonnegative);
  }
}

TEST(DimGroup, Telescope) {
  auto g = make_dim_group(kFib);
  auto e1 = telescope(g, {make_vector({1, 2}), 0}, 1);
  EXPECT_EQ(e1.v, make_vector({3, 1}));
  EXPECT_EQ(e1.stage, 1u);
  auto e2 = telescope(g, {make_vector({1, 0}), 0}, 2);
  EXPECT_EQ(e2.v, make_vector({2, 1}));
  DimGroupElement e{make_vector({4, -7}), 3};
  auto same = telescope(g, e, 3);
  EXPECT_EQ(same.v, e.v);
  EXPECT_EQ(same.stage, 3u);
  try {
    telescope(g, e, 2);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::BackwardTelescope);
  }
  EXPECT_TRUE(equivalent(g, e, telescope(g, e, 7)));
  EXPECT_FALSE(equivalent(g, e, {make_vector({4, -6}), 3}));
}

TEST(DimGroup, EquivalenceSeesKernelOfSingularMatrix) {
  // [[1,1],[1,1]] kills (1,-1) after one step
  auto g = make_dim_group(IntMatrix{{1, 1}, {1, 1}});
  EXPECT_TRUE(equivalent(g, {make_vector({1, -1}), 0}, {make_vector({0, 0}), 0}));
  EXPECT_EQ(is_positive(g, {make_vector({1, -1}), 0}).kind, Kind::Zero);
}

TEST(DimGroup, IsPositive) {
  auto g = make_dim_group(kFib);
  EXPECT_EQ(is_positive(g, {make_vector({1, -1}), 0}), (PositivitySign{Kind::Positive, 3}));
  EXPECT_EQ(is_positive(g, {make_vector({-1, 1}), 0}).kind, Kind::Negative);
  EXPECT_EQ(is_positive(g, {make_vector({0, 0}), 5}).kind, Kind::Zero);
}

TEST(DimGroup, OrderUnit) {
  for (const IntMatrix& a : {kFib, kGolden, IntMatrix{{1, 1, 0}, {1, 0, 1}, {1, 0, 0}}}) {
    auto g = make_dim_group(a);
    auto u = order_unit(g);
    EXPECT_EQ(u.v, IntVector(a.size(), Integer(1)));
    EXPECT_EQ(u.stage, 0u);
    auto s = is_positive(g, u);
    EXPECT_EQ(s.kind, Kind::Positive);
    EXPECT_LE(s.witness, g.primitivity_witness());
  }
}

TEST(DimGroup, OrderRespectsTelescopingAndAddition) {
  for (const IntMatrix& a : {kFib, kGolden}) {
    auto g = make_dim_group(a);
    std::vector<DimGroupElement> positives;
    for (long x = -3; x <= 3; ++x)
      for (long y = -3; y <= 3; ++y)
        for (std::size_t stage = 0; stage <= 4; ++stage) {
          DimGroupElement e{make_vector({x, y}), stage};
          auto s = is_positive(g, e);
          ASSERT_NE(s.kind, Kind::Undecided);
          for (std::size_t n = stage; n <= 4; ++n) EXPECT_EQ(is_positive(g, telescope(g, e, n)).kind, s.kind);
          if (s.kind == Kind::Positive) positives.push_back(e);
        }
    for (std::size_t i = 0; i < positives.size(); i += 7)
      for (std::size_t j = 0; j < positives.size(); j += 5)
        EXPECT_EQ(is_positive(g, add(g, positives[i], positives[j])).kind, Kind::Positive);
  }
}

TEST(DimGroup, OrderUnitDominates) {
  for (const IntMatrix& a : {kFib, kGolden}) {
    auto g = make_dim_group(a);
    auto u = order_unit(g);
    for (long x = -2; x <= 2; ++x)
      for (long y = -2; y <= 2; ++y) {
        DimGroupElement e{make_vector({x, y}), 0};
        if (is_positive(g, e).kind != Kind::Positive) continue;
        bool dominated = false;
        for (long c = 1; c <= 50 && !dominated; ++c)
          dominated = is_positive(g, subtract(g, scale(Integer(c), u), e)).kind == Kind::Positive;
        EXPECT_TRUE(dominated) << format_list(e.v);
      }
  }
}

TEST(Bratteli, EdgeAndVertexCounts) {
  auto fib = bratteli_dot(make_dim_group(kFib), 2);
  EXPECT_EQ(count(fib, kEdge), 3u);
  EXPECT_EQ(count(fib, kNode), 4u);
  auto golden = bratteli_dot(make_dim_group(kGolden), 3);
  EXPECT_EQ(count(golden, kEdge), 10u);
  EXPECT_EQ(count(golden, kNode), 6u);
  auto trib = bratteli_dot(make_dim_group(IntMatrix{{1, 1, 0}, {1, 0, 1}, {1, 0, 0}}), 2);
  EXPECT_EQ(count(trib, kNode), 6u);
}

TEST(Bratteli, ExactText) {
  const std::string expected =
      "digraph bratteli {\n"
      "  v0_0;\n"
      "  v0_1;\n"
      "  v1_0;\n"
      "  v1_1;\n"
      "  v0_0 -> v1_0;\n"
      "  v0_0 -> v1_1;\n"
      "  v0_1 -> v1_0;\n"
      "}\n";
  EXPECT_EQ(bratteli_dot(make_dim_group(kFib), 2), expected);
}

TEST(Bratteli, PerFloorEdgesFollowIncidence) {
  IntMatrix a{{2, 1}, {0, 1}};
  a(1, 0) = 3;
  auto g = make_dim_group(a);
  auto dot = bratteli_dot(g, 4);
  EXPECT_EQ(dot, bratteli_dot(g, 4));
  for (std::size_t t = 0; t < 3; ++t)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t i = 0; i < 2; ++i) {
        std::regex edge("v" + std::to_string(t) + "_" + std::to_string(j) + " -> v" + std::to_string(t + 1) + "_" +
                        std::to_string(i) + ";");
        EXPECT_EQ(count(dot, edge), a(i, j).get_ui());
      }
  try {
    bratteli_dot(g, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooFewLevels);
  }
}

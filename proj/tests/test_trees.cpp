#include <gtest/gtest.h>

#include "ordia/trees.hpp"

using namespace ordia;

namespace {

Vec v1(long a) { return Vec{Rational(a)}; }
Vec v2(const Rational& a, const Rational& b) { return Vec{a, b}; }

LabelledTree line_tree(long left, long right) {
  LabelledTree t;
  t.shape = build_shape(TreeKind::Dyadic, Ordinal::natural(1), {});
  t.space = NormedSpace{1, Norm::L2};
  t.delta = 1;
  t.labels[{}] = v1(0);
  t.labels[{Step{0, 0}}] = v1(left);
  t.labels[{Step{0, 1}}] = v1(right);
  return t;
}

LabelledTree spider() {
  LabelledTree t;
  TruncationSpec trunc;
  trunc.fan_width = 2;
  t.shape = build_shape(TreeKind::Sprawling, Ordinal::natural(1), trunc);
  t.space = NormedSpace{2, Norm::LInf};
  t.delta = 1;
  t.labels[{}] = v2(0, 0);
  t.labels[{Step{0, 0}}] = v2(1, 0);
  t.labels[{Step{1, 0}}] = v2(-1, 0);
  t.labels[{Step{0, 1}}] = v2(0, 1);
  t.labels[{Step{1, 1}}] = v2(0, -1);
  return t;
}

}  // namespace

TEST(TreeShape, DyadicCounts) {
  EXPECT_EQ(build_shape(TreeKind::Dyadic, Ordinal(), {}).size(), 1u);
  EXPECT_EQ(build_shape(TreeKind::Dyadic, Ordinal::natural(2), {}).size(), 7u);
  for (std::uint64_t n = 0; n <= 6; ++n) {
    auto s = build_shape(TreeKind::Dyadic, Ordinal::natural(n), {});
    EXPECT_EQ(s.size(), (std::size_t{1} << (n + 1)) - 1) << n;
    EXPECT_FALSE(s.truncated());
  }
}

TEST(TreeShape, SprawlingWindow) {
  TruncationSpec trunc;
  trunc.fan_width = 2;
  auto s = build_shape(TreeKind::Sprawling, Ordinal::natural(1), trunc);
  ASSERT_EQ(s.size(), 5u);
  for (NodePath p : {NodePath{}, NodePath{Step{0, 0}}, NodePath{Step{0, 1}}, NodePath{Step{1, 0}}, NodePath{Step{1, 1}}}) {
    EXPECT_TRUE(s.nodes.count(p)) << to_string(p, TreeKind::Sprawling);
  }
  EXPECT_TRUE(s.truncated());
  for (std::uint64_t f = 2; f <= 5; ++f) {
    trunc.fan_width = f;
    EXPECT_EQ(build_shape(TreeKind::Sprawling, Ordinal::natural(1), trunc).size(), 1 + 2 * f);
  }
}

TEST(TreeShape, LimitStagesSumTheirSummands) {
  TruncationSpec trunc;
  trunc.limit_width = 3;
  // Summands of w are 0, 1, 2.
  EXPECT_EQ(build_shape(TreeKind::Dyadic, Ordinal::omega(), trunc).size(), 1u + 1 + 3 + 7);
  for (std::uint64_t width = 1; width <= 6; ++width) {
    trunc.limit_width = width;
    std::size_t expect = 1;
    for (std::uint64_t n = 0; n < width; ++n) expect += (std::size_t{1} << (n + 1)) - 1;
    EXPECT_EQ(build_shape(TreeKind::Dyadic, Ordinal::omega(), trunc).size(), expect);
  }
}

TEST(TreeShape, PrefixClosedAndCapped) {
  auto s = build_shape(TreeKind::Dyadic, parse_ordinal("w+2"), {});
  for (const auto& [p, _] : s.nodes) {
    if (!p.empty()) EXPECT_TRUE(s.nodes.count(NodePath(p.begin(), p.end() - 1)));
  }
  EXPECT_THROW(build_shape(TreeKind::Dyadic, Ordinal::natural(20), {}, 1000), BudgetExceeded);
  TruncationSpec bad;
  bad.fan_width = 1;
  EXPECT_THROW(build_shape(TreeKind::Sprawling, Ordinal::natural(1), bad), std::invalid_argument);
}

TEST(TreeShape, DepthBudgetCutsAndFlags) {
  TruncationSpec trunc;
  trunc.depth_budget = 2;
  auto s = build_shape(TreeKind::Dyadic, Ordinal::natural(5), trunc);
  EXPECT_EQ(s.size(), 7u);
  EXPECT_TRUE(s.truncated());
}

TEST(VerifyDyadic, LineExamples) {
  EXPECT_TRUE(verify_dyadic(line_tree(-1, 1)).pass);
  auto bad = line_tree(-1, 2);
  auto r = verify_dyadic(bad);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.witness.has_value());
}

TEST(VerifyDyadic, SeparationAndMidpoint) {
  auto t = line_tree(-1, 1);
  t.delta = Rational(3, 2);
  EXPECT_FALSE(verify_dyadic(t).pass);
  t = line_tree(-1, 1);
  t.labels[{}] = Vec{Rational(1, 8)};
  EXPECT_FALSE(verify_dyadic(t).pass);
  t = line_tree(-1, 1);
  t.labels.erase({Step{0, 1}});
  EXPECT_THROW(verify_dyadic(t), std::invalid_argument);
}

TEST(VerifyDyadic, FansMustBeConstant) {
  auto t = linf_dyadic_tree(Ordinal::omega(), {}, 3);
  EXPECT_TRUE(verify_dyadic(t).pass);
  t.labels[{Step{0, 1}}][0] = Rational(1, 2);
  EXPECT_FALSE(verify_dyadic(t).pass);
}

TEST(VerifyDyadic, HaarTrees) {
  for (unsigned d = 0; d <= 8; ++d) {
    auto t = haar_tree(d);
    auto r = verify_dyadic(t);
    EXPECT_TRUE(r.pass) << d << ": " << r.reason;
    for (const auto& [_, x] : t.labels) EXPECT_EQ(norm_exact(Norm::L1, x), 1);
  }
  auto one = haar_tree(1);
  EXPECT_EQ(one.label({}), v2(Rational(1, 2), Rational(1, 2)));
  EXPECT_EQ(one.label({Step{0, 0}}), v2(1, 0));
  EXPECT_EQ(one.label({Step{0, 1}}), v2(0, 1));
  EXPECT_EQ(haar_tree(0).label({}), v1(1));
  EXPECT_EQ(haar_tree(2).labels.size(), 7u);
  EXPECT_THROW(haar_tree(13), std::invalid_argument);
}

TEST(VerifySprawling, SpiderExamples) {
  EXPECT_TRUE(verify_sprawling(spider()).pass);
  auto t = spider();
  t.labels[{Step{0, 1}}] = v2(1, 0);
  t.labels[{Step{1, 1}}] = v2(-1, 0);
  EXPECT_FALSE(verify_sprawling(t).pass);
  LabelledTree root;
  root.shape = build_shape(TreeKind::Sprawling, Ordinal(), {});
  root.space = NormedSpace{2, Norm::LInf};
  root.labels[{}] = v2(Rational(1, 2), 0);
  EXPECT_TRUE(verify_sprawling(root).pass);
}

TEST(VerifySprawling, GeneratedTrees) {
  for (std::uint64_t fan = 2; fan <= 4; ++fan) {
    TruncationSpec trunc;
    trunc.fan_width = fan;
    for (const char* a : {"1", "2", "w", "w+1"}) {
      auto t = linf_sprawling_tree(parse_ordinal(a), trunc, fan * 11);
      auto r = verify_sprawling(t);
      EXPECT_TRUE(r.pass) << a << " fan " << fan << ": " << r.reason;
    }
  }
}

TEST(VerifyBush, WeightedExample) {
  LabelledTree t;
  t.shape.kind = TreeKind::Bush;
  t.shape.alpha = Ordinal::natural(1);
  t.shape.nodes[{}] = NodeInfo{Profile::Split, {Step{0, 0}, Step{0, 1}}, false};
  t.shape.nodes[{Step{0, 0}}] = NodeInfo{};
  t.shape.nodes[{Step{0, 1}}] = NodeInfo{};
  t.space = NormedSpace{1, Norm::L1};
  t.delta = 1;
  t.radius = 2;
  t.labels[{}] = v1(0);
  t.labels[{Step{0, 0}}] = v1(-2);
  t.labels[{Step{0, 1}}] = v1(1);
  t.weights[{}] = Vec{Rational(1, 3), Rational(2, 3)};
  EXPECT_TRUE(check_bush_shape(t.shape).pass);
  EXPECT_TRUE(verify_bush(t).pass);
  t.weights[{}] = Vec{Rational(3, 10), Rational(6, 10)};
  EXPECT_FALSE(verify_bush(t).pass);
  t.weights.clear();
  EXPECT_THROW(verify_bush(t), std::invalid_argument);
}

TEST(VerifyBush, TreesAreBushes) {
  std::vector<LabelledTree> inputs{line_tree(-1, 1), haar_tree(3), linf_dyadic_tree(parse_ordinal("w+1"), {}, 5)};
  for (const auto& t : inputs) {
    auto b = tree_as_bush(t);
    EXPECT_EQ(b.delta, t.delta);
    EXPECT_TRUE(check_bush_shape(b.shape).pass);
    auto r = verify_bush(b);
    EXPECT_TRUE(r.pass) << r.reason;
  }
  EXPECT_THROW(tree_as_bush(line_tree(-1, 2)), std::invalid_argument);
}

TEST(Relabel, WindowKeepsTreesValid) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto t = window_labels(linf_dyadic_tree(parse_ordinal("3"), {}, seed));
    EXPECT_EQ(t.delta, Rational(1, 8));
    EXPECT_TRUE(verify_dyadic(t).pass);
    for (const auto& [_, x] : t.labels) {
      EXPECT_GE(norm_exact(Norm::LInf, x), Rational(1, 2));
      EXPECT_LE(norm_exact(Norm::LInf, x), 1);
    }
  }
}

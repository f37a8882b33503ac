#include <gtest/gtest.h>

#include <random>

#include "ordia/dinfty.hpp"

using namespace ordia;

namespace {

DInfCode code(std::vector<std::uint64_t> a, long p, long q) { return DInfCode{std::move(a), DyadicRational(Rational(p, q))}; }

DiamondSpec omega_spec(const char* alpha) {
  DiamondSpec s;
  s.alpha = parse_ordinal(alpha);
  s.branching = std::nullopt;
  s.trunc.fan_width = 3;
  s.trunc.limit_width = 3;
  return s;
}

}  // namespace

TEST(DInfCodes, Normalize) {
  EXPECT_EQ(normalize(code({4, 2}, 1, 1)), DInfCode::top());
  EXPECT_EQ(normalize(code({4}, 0, 1)), DInfCode::bottom());
  EXPECT_EQ(normalize(code({4, 2, 9}, 1, 2)), code({4}, 1, 2));
  EXPECT_THROW(normalize(code({}, 1, 2)), std::invalid_argument);
  EXPECT_THROW(normalize(code({1}, 3, 2)), std::invalid_argument);
  EXPECT_TRUE(is_canonical(code({0, 1}, 1, 4)));
  EXPECT_FALSE(is_canonical(code({0, 1, 2}, 1, 4)));
}

TEST(DInfCodes, PrintAndParse) {
  auto c = code({0, 1}, 3, 4);
  EXPECT_EQ(to_string(c), "A=[0,1];r=3/4");
  EXPECT_EQ(parse_dinf_code("A=[0,1];r=3/4"), c);
  EXPECT_EQ(parse_dinf_code("A=[];r=1"), DInfCode::top());
  EXPECT_THROW(parse_dinf_code("A=[0;r=1"), std::invalid_argument);
}

TEST(DInfScaling, Examples) {
  EXPECT_EQ(g_map(0, false, DInfCode::top()), code({0}, 1, 2));
  EXPECT_EQ(g_map(1, true, DInfCode::bottom()), code({1}, 1, 2));
  EXPECT_EQ(g_map(0, false, code({1}, 1, 2)), code({0, 1}, 1, 4));
  EXPECT_EQ(g_map(2, true, DInfCode::top()), DInfCode::top());
  EXPECT_EQ(g_map(2, false, DInfCode::bottom()), DInfCode::bottom());
}

TEST(DInfDistance, Examples) {
  EXPECT_EQ(dinf_dist(DInfCode::top(), DInfCode::bottom()), 1);
  EXPECT_EQ(dinf_dist(code({0}, 1, 2), code({1}, 1, 2)), 1);
  EXPECT_EQ(dinf_dist(code({0}, 1, 2), code({0, 1}, 1, 4)), DyadicRational(Rational(1, 4)));
  EXPECT_EQ(dinf_dist(code({0, 3}, 3, 4), code({1, 5}, 3, 4)), DyadicRational(Rational(1, 2)));
  EXPECT_EQ(dinf_dist(code({2, 2}, 1, 4), code({2, 2}, 1, 4)), 0);
}

TEST(DInfDistance, HalvesUnderEveryScalingMap) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 2000; ++k) {
    auto x = random_code(rng, 5, 4);
    auto y = random_code(rng, 5, 4);
    ASSERT_TRUE(is_canonical(x));
    const auto d = dinf_dist(x, y);
    EXPECT_EQ(d, dinf_dist(y, x));
    for (std::uint64_t i = 0; i < 3; ++i) {
      for (bool plus : {false, true}) {
        ASSERT_EQ(dinf_dist(g_map(i, plus, x), g_map(i, plus, y)), d.half()) << to_string(x) << " " << to_string(y);
      }
    }
  }
}

TEST(DInfPsi, Examples) {
  EXPECT_EQ(psi(Vertex::top()), DInfCode::top());
  EXPECT_EQ(psi(Vertex::bottom()), DInfCode::bottom());
  for (std::uint64_t i = 0; i < 5; ++i) EXPECT_EQ(psi(Vertex::hub(i)), code({i}, 1, 2));
  auto w = omega_spec("w");
  auto v = normalize(w, parse_vertex("[2]/0-/h1"));
  auto c = psi(v);
  ASSERT_EQ(c.A.size(), 2u);
  EXPECT_EQ(c.A[0], cantor_pair(2, 0));
  EXPECT_EQ(c.r, DyadicRational(Rational(1, 4)));
}

TEST(DInfPsi, IsAnIsometryOnWindows) {
  for (const char* a : {"1", "2", "w", "w+1", "w*2", "w^2"}) {
    auto s = omega_spec(a);
    auto verts = window_vertices(s);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 1500; ++k) {
      const auto& u = verts[rng() % verts.size()];
      const auto& v = verts[rng() % verts.size()];
      ASSERT_TRUE(is_canonical(psi(u)));
      ASSERT_EQ(dinf_dist(psi(u), psi(v)), dist(u, v)) << a << " " << to_string(u) << " " << to_string(v);
    }
  }
}

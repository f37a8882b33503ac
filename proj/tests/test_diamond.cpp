#include <gtest/gtest.h>

#include <set>

#include "ordia/diamond.hpp"
#include "support/oracles.hpp"

using namespace ordia;

namespace {

DiamondSpec spec_of(const char* alpha, std::optional<std::uint64_t> b, std::uint64_t width = 3) {
  DiamondSpec s;
  s.alpha = parse_ordinal(alpha);
  s.branching = b;
  s.trunc.limit_width = width;
  s.trunc.fan_width = width;
  return s;
}

Vertex V(const DiamondSpec& s, const char* text) { return normalize(s, parse_vertex(text)); }

DyadicRational q(long p, long r) { return DyadicRational(Rational(p, r)); }

}  // namespace

TEST(DiamondNormalize, GluesNestedPoles) {
  auto s = spec_of("2", 4);
  EXPECT_EQ(V(s, "0+/B"), Vertex::hub(0));
  EXPECT_EQ(V(s, "3-/T"), Vertex::hub(3));
  EXPECT_EQ(V(s, "1-/B"), Vertex::bottom());
  EXPECT_EQ(V(s, "2+/T"), Vertex::top());
  EXPECT_EQ(V(s, "0+/1-/T"), V(s, "0+/h1"));
  EXPECT_EQ(V(s, "1-/0+/B"), V(s, "1-/h0"));
  auto w = spec_of("w", std::nullopt);
  EXPECT_EQ(V(w, "[5]/T"), Vertex::top());
  EXPECT_EQ(V(w, "[2]/0+/B"), V(w, "[2]/h0"));
}

TEST(DiamondNormalize, IdempotentAndChecksStages) {
  auto s = spec_of("w+1", 3);
  for (const auto& v : window_vertices(s)) EXPECT_EQ(normalize(s, v), v) << to_string(v);
  EXPECT_THROW(V(s, "[0]/h0"), std::invalid_argument);
  EXPECT_THROW(V(s, "0+/0+/h0"), std::invalid_argument);
  EXPECT_THROW(V(spec_of("2", 2), "2+/h0"), std::invalid_argument);
  EXPECT_THROW(V(spec_of("0", 2), "h0"), std::invalid_argument);
  EXPECT_THROW(parse_vertex("0*/h1"), std::invalid_argument);
}

TEST(DiamondPrint, RoundTrips) {
  for (const char* text : {"T", "B", "h3", "0+/1-/h2", "[4]/h0", "2-/[1]/T"}) {
    EXPECT_EQ(to_string(parse_vertex(text)), text);
  }
  EXPECT_EQ(parse_branching("w"), std::nullopt);
  EXPECT_EQ(parse_branching("omega"), std::nullopt);
  EXPECT_EQ(parse_branching("4"), std::optional<std::uint64_t>(4));
  EXPECT_THROW(parse_branching("1"), std::invalid_argument);
}

TEST(DiamondDistance, PoleDistances) {
  auto top = dist_to_poles(Vertex::top());
  EXPECT_EQ(top.to_bottom, 1);
  EXPECT_EQ(top.to_top, 0);
  auto hub = dist_to_poles(Vertex::hub(7));
  EXPECT_EQ(hub.to_bottom, q(1, 2));
  EXPECT_EQ(hub.to_top, q(1, 2));
  auto inner = dist_to_poles(V(spec_of("2", 3), "0-/h2"));
  EXPECT_EQ(inner.to_bottom, q(1, 4));
  EXPECT_EQ(inner.to_top, q(3, 4));
}

TEST(DiamondDistance, Examples) {
  auto s = spec_of("2", 2);
  EXPECT_EQ(dist(Vertex::top(), Vertex::bottom()), 1);
  EXPECT_EQ(dist(Vertex::hub(0), Vertex::hub(1)), 1);
  EXPECT_EQ(dist(V(s, "0+/h0"), V(s, "0-/h0")), q(1, 2));
  EXPECT_EQ(dist(V(s, "0+/h0"), V(s, "1+/h1")), q(1, 2));
  EXPECT_EQ(dist(V(s, "0-/h1"), V(s, "1-/h0")), q(1, 2));
  EXPECT_EQ(dist(V(s, "0+/h0"), V(s, "0+/h1")), q(1, 2));
  EXPECT_EQ(dist(V(s, "0-/h0"), Vertex::hub(1)), q(3, 4));
  EXPECT_EQ(dist(V(s, "0-/h0"), V(s, "0-/h0")), 0);
}

TEST(DiamondDistance, MatchesFloydWarshall) {
  std::vector<DiamondSpec> specs{spec_of("0", 2), spec_of("1", 2), spec_of("1", 5), spec_of("2", 2), spec_of("2", 3),
                                 spec_of("3", 2), spec_of("w", 2), spec_of("w+1", 2), spec_of("w*2", 2),
                                 spec_of("w", std::nullopt)};
  for (const auto& s : specs) {
    auto m = materialize(s);
    auto fw = oracle::floyd_warshall(m);
    for (std::size_t a = 0; a < m.vertices.size(); ++a) {
      for (std::size_t b = 0; b < m.vertices.size(); ++b) {
        ASSERT_EQ(dist(m.vertices[a], m.vertices[b]).value(), fw[a][b])
            << s.alpha.to_string() << " " << to_string(m.vertices[a]) << " " << to_string(m.vertices[b]);
      }
    }
    ASSERT_EQ(oracle_dist(m, Vertex::top(), Vertex::bottom()), 1);
  }
}

TEST(DiamondMaterialize, Counts) {
  for (std::uint64_t b = 2; b <= 6; ++b) EXPECT_EQ(materialize(spec_of("1", b)).vertices.size(), b + 2);
  EXPECT_EQ(materialize(spec_of("0", 2)).vertices.size(), 2u);
  auto m = materialize(spec_of("2", 2));
  EXPECT_EQ(m.vertices.size(), 12u);
  EXPECT_EQ(m.edges.size(), 16u);
  for (const auto& e : m.edges) EXPECT_EQ(e.weight, q(1, 4));
  EXPECT_EQ(materialize(spec_of("3", 4)).vertices.size(), 294u);
  EXPECT_THROW(materialize(spec_of("8", 4), 1000), BudgetExceeded);
  EXPECT_THROW(m.id(parse_vertex("5+/h0")), std::out_of_range);
  EXPECT_NE(to_dot(m).find("graph"), std::string::npos);
}

TEST(DiamondMaterialize, DijkstraAgreesOnSmallCases) {
  auto m = materialize(spec_of("1", 2));
  EXPECT_EQ(oracle_dist(m, Vertex::hub(0), Vertex::hub(1)), 1);
  EXPECT_EQ(oracle_dist(m, Vertex::hub(0), Vertex::hub(0)), 0);
  EXPECT_EQ(oracle_dist(m, Vertex::hub(0), Vertex::top()), Rational(1, 2));
}

TEST(DiamondActivePairs, Counts) {
  EXPECT_EQ(active_pairs(spec_of("0", 2)).size(), 1u);
  auto one = active_pairs(spec_of("1", 2));
  EXPECT_EQ(one.size(), 6u);
  EXPECT_EQ(active_pairs(spec_of("2", 2)).size(), 26u);
  EXPECT_EQ(active_pairs(spec_of("3", 4)).size(), 1023u);
}

TEST(DiamondActivePairs, FirstLevelIsTheCompleteGraph) {
  for (std::uint64_t b = 2; b <= 5; ++b) {
    auto s = spec_of("1", b);
    auto pairs = active_pairs(s);
    auto verts = window_vertices(s);
    EXPECT_EQ(pairs.size(), verts.size() * (verts.size() - 1) / 2);
  }
}

TEST(DiamondActivePairs, DistinctNormalizedAndDeterministic) {
  auto s = spec_of("w+1", 3);
  auto pairs = active_pairs(s);
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& p : pairs) {
    EXPECT_EQ(normalize(s, p.u), p.u);
    EXPECT_NE(p.u, p.v);
    EXPECT_TRUE(in_window(s, p.u) && in_window(s, p.v));
    auto key = p.u < p.v ? std::pair(p.u, p.v) : std::pair(p.v, p.u);
    EXPECT_TRUE(seen.insert(key).second);
  }
  auto again = active_pairs(s);
  ASSERT_EQ(again.size(), pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) EXPECT_EQ(again[k].u, pairs[k].u);
}

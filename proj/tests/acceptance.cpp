// Runs the acceptance suite and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ordia/embed.hpp"
#include "ordia/l1opt.hpp"
#include "ordia/peel.hpp"
#include "ordia/trees.hpp"
#include "ordia/verify.hpp"
#include "support/oracles.hpp"

using namespace ordia;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Notes {
 public:
  void fail(const std::string& what) {
    if (pass_) first_ = what;
    pass_ = false;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  Outcome done(const std::string& summary) const { return {pass_, pass_ ? summary : first_}; }

 private:
  bool pass_ = true;
  std::string first_;
};

DiamondSpec make_spec(const char* alpha, std::optional<std::uint64_t> b, std::uint64_t width = 3) {
  DiamondSpec s;
  s.alpha = parse_ordinal(alpha);
  s.branching = b;
  s.trunc.fan_width = width;
  s.trunc.limit_width = width;
  return s;
}

std::string name(const DiamondSpec& s) { return "D_" + s.alpha.to_string() + "^" + branching_to_string(s); }

Outcome distance_oracle() {
  Notes n;
  std::size_t pairs = 0;
  std::vector<DiamondSpec> specs;
  for (const char* a : {"0", "1", "2", "3"}) {
    for (std::uint64_t b = 2; b <= 4; ++b) specs.push_back(make_spec(a, b));
  }
  for (const char* a : {"w", "w+1", "w*2"}) specs.push_back(make_spec(a, 3));
  for (const auto& s : specs) {
    auto r = oracle_sweep(s);
    pairs += r.checked;
    n.expect(r.pass(), name(s) + ": " + r.witness);
  }
  return n.done(std::to_string(specs.size()) + " specs, " + std::to_string(pairs) + " pairs, 0 mismatches");
}

Outcome isometry() {
  Notes n;
  std::size_t pairs = 0;
  for (const char* a : {"1", "2", "3", "w", "w+1", "w*2", "w^2"}) {
    auto s = make_spec(a, std::nullopt);
    auto r = isometry_sweep(s, 10'000, 7);
    pairs += r.checked;
    n.expect(r.pass() && r.checked >= 10'000, name(s) + ": " + r.witness);
  }
  return n.done(std::to_string(pairs) + " pairs over 7 heights");
}

Outcome scaling() {
  auto r = scaling_sweep(1000, 7);
  Notes n;
  n.expect(r.pass() && r.checked >= 6000, r.witness);
  return n.done(std::to_string(r.checked) + " map applications");
}

Outcome round_trips() {
  Notes n;
  std::size_t checks = 0;
  for (unsigned depth = 0; depth <= 5; ++depth) {
    auto tree = haar_tree(depth);
    tree.delta = Rational(1, 2);
    auto f = build_dyadic_embedding(tree);
    auto r = check_distortion(f, tree.delta, 1);
    n.expect(r.pass, "haar depth " + std::to_string(depth) + ": distortion");
    auto back = extract_dyadic_tree(f, tree.delta);
    n.expect(verify_dyadic(back).pass, "haar depth " + std::to_string(depth) + ": extracted tree");
    n.expect(back.label({}) == sub(f(Vertex::top()), f(Vertex::bottom())), "haar root identity");
    checks += r.pairs_checked;
  }
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    auto tree = window_labels(linf_dyadic_tree(Ordinal::natural(3), {}, seed));
    auto f = build_dyadic_embedding(tree);
    auto r = check_distortion(f, tree.delta, 1);
    n.expect(r.pass, "linf dyadic seed " + std::to_string(seed));
    n.expect(verify_dyadic(extract_dyadic_tree(f, tree.delta)).pass, "linf dyadic extraction");
    checks += r.pairs_checked;
  }
  for (std::uint64_t fan = 2; fan <= 4; ++fan) {
    TruncationSpec trunc;
    trunc.fan_width = fan;
    trunc.limit_width = 2;
    for (const char* a : {"1", "2", "w"}) {
      auto tree = window_labels(linf_sprawling_tree(parse_ordinal(a), trunc, fan));
      auto f = build_sprawling_embedding(tree);
      auto r = check_distortion(f, tree.delta / 2, 1);
      std::string where = std::string("sprawling ") + a + " fan " + std::to_string(fan);
      n.expect(r.pass, where + ": distortion");
      auto back = extract_sprawling_tree(f, tree.delta / 2);
      n.expect(back.delta == tree.delta && verify_sprawling(back).pass, where + ": extracted tree");
      checks += r.pairs_checked;
    }
  }
  return n.done(std::to_string(checks) + " active pairs checked exactly");
}

FiniteMetric diamond_metric(const char* a, std::uint64_t b) {
  return metric_from_materialization(materialize(make_spec(a, b)));
}

Outcome distortion_two() {
  Notes n;
  std::ostringstream out;
  const std::vector<std::pair<const char*, std::uint64_t>> cases{{"1", 2}, {"1", 3}, {"1", 4}, {"1", 5}, {"2", 2}};
  for (const auto& [a, b] : cases) {
    auto m = diamond_metric(a, b);
    auto r = min_distortion_l1(m);
    std::string where = std::string("D_") + a + "^" + std::to_string(b);
    n.expect(r.c.get_d() <= 2 + 1e-6, where + ": c = " + to_string(r.c));
    n.expect(verify_cut_sandwich(m, r.cuts, r.c).pass, where + ": certificate");
    out << where << " c=" << to_string(r.c) << " ";
  }
  FiniteMetric cycle;
  cycle.labels = {"0", "1", "2", "3"};
  cycle.d = {{0, 1, 2, 1}, {1, 0, 1, 2}, {2, 1, 0, 1}, {1, 2, 1, 0}};
  auto r = min_distortion_l1(cycle);
  n.expect(r.c >= 1 && r.c.get_d() <= 1 + 1e-6, "4-cycle: c = " + to_string(r.c));
  n.expect(verify_cut_sandwich(cycle, r.cuts, r.c).pass, "4-cycle certificate");
  out << "C_4 c=" << to_string(r.c);
  return n.done(out.str());
}

PointSet2D point_set(const std::vector<std::pair<long, long>>& xy) {
  PointSet2D c;
  for (auto [x, y] : xy) c.points.push_back(Point2{Rational(x), Rational(y)});
  return c;
}

Outcome peeling() {
  Notes n;
  std::mt19937_64 rng(6);
  const Norm norms[] = {Norm::L2, Norm::L1, Norm::LInf};
  for (int trial = 0; trial < 100; ++trial) {
    std::set<std::pair<long, long>> seen;
    const std::size_t size = 1 + rng() % 10;
    while (seen.size() < size) seen.emplace(static_cast<long>(rng() % 6), static_cast<long>(rng() % 6));
    auto c = point_set({seen.begin(), seen.end()});
    c.norm = norms[trial % 3];
    const Rational eps(1 + static_cast<long>(rng() % 8), 2);
    n.expect(survivors(c, eps) == oracle::brute_survivors(c, eps), "point set " + std::to_string(trial));
  }
  n.expect(peel_index(point_set({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), Rational(1, 2)).index == 1, "unit square");
  for (long k = 0; k <= 5; ++k) {
    std::vector<std::pair<long, long>> line;
    for (long x = 0; x <= 2 * k; ++x) line.emplace_back(x, 0);
    n.expect(peel_index(point_set(line), Rational(1, 2)).index == static_cast<std::size_t>(k + 1),
             std::to_string(2 * k + 1) + " collinear points");
  }
  return n.done("100 sets against the exhaustive oracle, documented indices reproduced");
}

Outcome structural_counts() {
  Notes n;
  for (std::uint64_t k = 0; k <= 6; ++k) {
    n.expect(build_shape(TreeKind::Dyadic, Ordinal::natural(k), {}).size() == (std::size_t{1} << (k + 1)) - 1,
             "|T_" + std::to_string(k) + "|");
  }
  for (std::uint64_t b = 2; b <= 6; ++b) {
    auto s = make_spec("1", b);
    const std::size_t v = materialize(s).vertices.size();
    n.expect(v == b + 2, "|V(D_1^" + std::to_string(b) + ")|");
    n.expect(active_pairs(s).size() == v * (v - 1) / 2, "AP(D_1^" + std::to_string(b) + ")");
  }
  auto w = make_spec("1", std::nullopt, 4);
  const std::size_t wv = window_vertices(w).size();
  n.expect(active_pairs(w).size() == wv * (wv - 1) / 2, "AP(D_1^w window)");
  n.expect(materialize(make_spec("2", 2)).vertices.size() == 12, "|V(D_2^2)|");
  return n.done("tree sizes, vertex counts and first-level active pairs exact");
}

Outcome metric_axioms() {
  Notes n;
  std::size_t triples = 0;
  std::vector<DiamondSpec> specs{make_spec("1", 3), make_spec("2", 2), make_spec("3", 4), make_spec("w", 3),
                                 make_spec("w+1", 3), make_spec("w*2", 3), make_spec("w^2", std::nullopt)};
  for (const auto& s : specs) {
    auto r = metric_sweep(s, 10'000, 7);
    triples += r.checked;
    n.expect(r.pass(), name(s) + ": " + r.witness);
    auto p = pole_sweep(s);
    n.expect(p.pass(), name(s) + " poles: " + p.witness);
  }
  return n.done(std::to_string(triples) + " triples over " + std::to_string(specs.size()) + " specs");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"distance oracle equivalence", distance_oracle},
      {"isometry into D_inf", isometry},
      {"scaling law", scaling},
      {"construction/extraction round trips", round_trips},
      {"distortion-2 consistency", distortion_two},
      {"peeling oracle equivalence", peeling},
      {"structural counts", structural_counts},
      {"metric axioms", metric_axioms},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

#include "ordia/verify.hpp"

#include <random>

#include "ordia/dinfty.hpp"

namespace ordia {

namespace {

void record(SweepReport& r, bool ok, const std::string& what) {
  ++r.checked;
  if (ok) return;
  if (r.mismatches == 0) r.witness = what;
  ++r.mismatches;
}

}  // namespace

SweepReport oracle_sweep(const DiamondSpec& spec) {
  SweepReport r;
  Materialization m = materialize(spec);
  for (std::size_t a = 0; a < m.vertices.size(); ++a) {
    auto oracle = oracle_distances(m, a);
    for (std::size_t b = a; b < m.vertices.size(); ++b) {
      const DyadicRational d = dist(m.vertices[a], m.vertices[b]);
      record(r, d.value() == oracle[b],
             "(" + to_string(m.vertices[a]) + ", " + to_string(m.vertices[b]) + "): recursive " + d.to_string() +
                 ", oracle " + to_string(oracle[b]));
    }
  }
  return r;
}

SweepReport isometry_sweep(const DiamondSpec& spec, std::size_t pairs, std::uint64_t seed) {
  SweepReport r;
  record(r, psi(Vertex::top()) == DInfCode::top(), "top does not map to the top pole");
  record(r, psi(Vertex::bottom()) == DInfCode::bottom(), "bottom does not map to the bottom pole");
  const auto vertices = window_vertices(spec);
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < pairs; ++k) {
    const Vertex& u = vertices[rng() % vertices.size()];
    const Vertex& v = vertices[rng() % vertices.size()];
    const DInfCode pu = psi(u);
    const DInfCode pv = psi(v);
    const DyadicRational d = dist(u, v);
    const DyadicRational e = dinf_dist(pu, pv);
    record(r, d == e && is_canonical(pu) && is_canonical(pv),
           "(" + to_string(u) + ", " + to_string(v) + "): diamond " + d.to_string() + ", D_inf " + e.to_string() +
               " between " + to_string(pu) + " and " + to_string(pv));
  }
  return r;
}

SweepReport scaling_sweep(std::size_t pairs, std::uint64_t seed) {
  SweepReport r;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < pairs; ++k) {
    const DInfCode x = random_code(rng, 6, 4);
    const DInfCode y = random_code(rng, 6, 4);
    const DyadicRational d = dinf_dist(x, y);
    for (std::uint64_t i = 0; i < 3; ++i) {
      for (bool plus : {false, true}) {
        const DyadicRational e = dinf_dist(g_map(i, plus, x), g_map(i, plus, y));
        record(r, e == d.half(),
               "g^(" + std::to_string(i) + (plus ? ",+)" : ",-)") + " on " + to_string(x) + ", " + to_string(y) +
                   ": " + e.to_string() + " vs half of " + d.to_string());
      }
    }
  }
  return r;
}

SweepReport metric_sweep(const DiamondSpec& spec, std::size_t triples, std::uint64_t seed) {
  SweepReport r;
  const auto vertices = window_vertices(spec);
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < triples; ++k) {
    const Vertex& x = vertices[rng() % vertices.size()];
    const Vertex& y = vertices[rng() % vertices.size()];
    const Vertex& z = vertices[rng() % vertices.size()];
    const DyadicRational xy = dist(x, y);
    const DyadicRational yz = dist(y, z);
    const DyadicRational xz = dist(x, z);
    const std::string names = to_string(x) + ", " + to_string(y) + ", " + to_string(z);
    record(r, xy == dist(y, x) && yz == dist(z, y) && xz == dist(z, x), "asymmetric distance among " + names);
    record(r, xz <= xy + yz, "triangle inequality fails for " + names);
    record(r, (xy == DyadicRational(0)) == (x == y), "zero distance between distinct vertices " + names);
  }
  return r;
}

SweepReport pole_sweep(const DiamondSpec& spec) {
  SweepReport r;
  for (const auto& v : window_vertices(spec)) {
    auto p = dist_to_poles(v);
    record(r, p.to_bottom + p.to_top == DyadicRational(1) && p.to_bottom == dist(v, Vertex::bottom()) &&
                  p.to_top == dist(v, Vertex::top()),
           "pole distances of " + to_string(v));
  }
  for (const auto& pair : active_pairs(spec)) {
    record(r, dist(pair.u, pair.v) > DyadicRational(0),
           "active pair (" + to_string(pair.u) + ", " + to_string(pair.v) + ") at distance 0");
  }
  return r;
}

}  // namespace ordia

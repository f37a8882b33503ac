#pragma once

// Verification sweeps shared by the CLI and the test suites. Every sweep is
// deterministic for a given seed.

#include <cstdint>
#include <string>

#include "ordia/diamond.hpp"

namespace ordia {

struct SweepReport {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::string witness;  // first failing item, empty on success

  bool pass() const { return mismatches == 0; }
};

/// Recursive distance against exact Dijkstra on every pair of the window.
SweepReport oracle_sweep(const DiamondSpec& spec);

/// dinf_dist(psi u, psi v) == dist(u, v) on seeded pairs of window vertices,
/// plus the two poles.
SweepReport isometry_sweep(const DiamondSpec& spec, std::size_t pairs, std::uint64_t seed);

/// d(g x, g y) == d(x, y) / 2 for the six maps g^(i,+-), i < 3, on seeded
/// random code pairs.
SweepReport scaling_sweep(std::size_t pairs, std::uint64_t seed);

/// Exact symmetry on every sampled pair and the triangle inequality on seeded
/// triples of window vertices.
SweepReport metric_sweep(const DiamondSpec& spec, std::size_t triples, std::uint64_t seed);

/// Pole distances summing to 1 on every window vertex and positive distance
/// on every active pair.
SweepReport pole_sweep(const DiamondSpec& spec);

}  // namespace ordia

#pragma once

// The limit diamond D_infinity. A vertex is coded (A, r): A is a finite
// branch address and r in [0, 1] is the distance to the bottom pole. The
// poles are (empty, 0) and (empty, 1); any other canonical code has |A| = k
// and r = m / 2^k with m odd.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ordia/diamond.hpp"
#include "ordia/exact.hpp"
#include "ordia/ordinal.hpp"

namespace ordia {

struct DInfCode {
  std::vector<std::uint64_t> A;
  DyadicRational r;

  static DInfCode top() { return {{}, DyadicRational(1)}; }
  static DInfCode bottom() { return {{}, DyadicRational(0)}; }
  bool is_pole() const { return A.empty(); }

  friend bool operator==(const DInfCode&, const DInfCode&) = default;
};

/// Collapses poles and truncates A to the length fixed by the denominator
/// of r. Throws std::invalid_argument when r is outside [0, 1] or A is too
/// short for r.
DInfCode normalize(const DInfCode& raw);
bool is_canonical(const DInfCode& c);

/// "A=[0,1];r=3/8".
std::string to_string(const DInfCode& c);
DInfCode parse_dinf_code(std::string_view text);

/// g^(i,-)(A, r) = (i A, r/2) and g^(i,+)(A, r) = (i A, (r+1)/2).
DInfCode g_map(std::uint64_t i, bool plus, const DInfCode& c);

DyadicRational dinf_dist(const DInfCode& x, const DInfCode& y);

/// The isometry D_alpha^omega -> D_infinity. At a limit stage the summand
/// index n and the first branch index i of the summand's image are merged
/// into the branch index <n, i>.
DInfCode psi(const Vertex& v);

/// A pseudo-random canonical code with |A| <= max_depth and branch indices
/// below `width`; poles are included with small probability.
DInfCode random_code(std::mt19937_64& rng, std::size_t max_depth, std::uint64_t width);

}  // namespace ordia

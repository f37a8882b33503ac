#pragma once

// The open half-space derivation on finite planar point sets: a point is
// removed when some open half-plane contains it and meets the set in a piece
// of diameter < eps. Iterating until the set is empty gives the peeling index.

#include <cstddef>
#include <vector>

#include "ordia/exact.hpp"

namespace ordia {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

struct PointSet2D {
  std::vector<Point2> points;
  Norm norm = Norm::L2;

  /// Throws std::invalid_argument on duplicate points.
  void validate() const;
};

/// For each point, whether it survives one derivation.
std::vector<bool> survivors(const PointSet2D& c, const Rational& eps);

PointSet2D derive_once(const PointSet2D& c, const Rational& eps);

struct PeelReport {
  Rational eps;
  std::vector<PointSet2D> stages;  // stages[0] is the input, the last is empty unless stalled
  std::size_t index = 0;
  bool stalled = false;            // a nonempty stage did not shrink
};

PeelReport peel_index(const PointSet2D& c, const Rational& eps);

}  // namespace ordia

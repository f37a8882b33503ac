#include "ordia/peel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ordia {

namespace {

Rational dot(const Point2& u, const Point2& p) { return u.x * p.x + u.y * p.y; }

Rational dist_comparable(Norm norm, const Point2& a, const Point2& b) {
  return norm_comparable(norm, Vec{a.x - b.x, a.y - b.y});
}

// Candidate directions with a tie-break direction. Sorting by (<u,x>, <w,x>)
// realizes the order for u rotated slightly towards w, so every set cut off by
// an open half-plane is a suffix of one of these orders.
std::vector<std::pair<Point2, Point2>> candidate_orders(const std::vector<Point2>& pts) {
  std::vector<Point2> dirs{{1, 0}, {0, 1}};
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      dirs.push_back(Point2{pts[a].y - pts[b].y, pts[b].x - pts[a].x});
    }
  }
  std::vector<std::pair<Point2, Point2>> out;
  for (const auto& d : dirs) {
    for (int s : {1, -1}) {
      Point2 u{d.x * s, d.y * s};
      Point2 w{-u.y, u.x};
      out.push_back({u, w});
      out.push_back({u, Point2{-w.x, -w.y}});
    }
  }
  return out;
}

}  // namespace

void PointSet2D::validate() const {
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (points[a] == points[b]) throw std::invalid_argument("duplicate point in point set");
    }
  }
}

std::vector<bool> survivors(const PointSet2D& c, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  c.validate();
  const auto& pts = c.points;
  const std::size_t n = pts.size();
  const Rational limit = radius_comparable(c.norm, eps);
  std::vector<bool> keep(n, true);
  std::vector<std::size_t> order(n);
  for (const auto& [u, w] : candidate_orders(pts)) {
    std::vector<std::pair<Rational, Rational>> key(n);
    for (std::size_t k = 0; k < n; ++k) key[k] = {dot(u, pts[k]), dot(w, pts[k])};
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
    // Longest suffix of diameter < eps.
    Rational diam = 0;
    for (std::size_t taken = 0; taken < n; ++taken) {
      const std::size_t next = order[n - 1 - taken];
      for (std::size_t j = 0; j < taken; ++j) {
        diam = std::max(diam, dist_comparable(c.norm, pts[next], pts[order[n - 1 - j]]));
      }
      if (diam >= limit) break;
      keep[next] = false;
    }
  }
  return keep;
}

PointSet2D derive_once(const PointSet2D& c, const Rational& eps) {
  auto keep = survivors(c, eps);
  PointSet2D out{{}, c.norm};
  for (std::size_t k = 0; k < c.points.size(); ++k) {
    if (keep[k]) out.points.push_back(c.points[k]);
  }
  return out;
}

PeelReport peel_index(const PointSet2D& c, const Rational& eps) {
  if (c.points.empty()) throw std::invalid_argument("peel_index needs a nonempty point set");
  PeelReport r;
  r.eps = eps;
  r.stages.push_back(c);
  while (!r.stages.back().points.empty()) {
    PointSet2D next = derive_once(r.stages.back(), eps);
    if (next.points.size() == r.stages.back().points.size()) {
      r.stalled = true;
      break;
    }
    r.stages.push_back(std::move(next));
    ++r.index;
  }
  return r;
}

}  // namespace ordia

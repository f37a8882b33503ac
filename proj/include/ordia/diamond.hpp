#pragma once

// Diamond graphs D_alpha^kappa of ordinal height.
//
// A vertex is addressed by the chain of subdiamond copies that contain it,
// outermost first, ending at a terminal (Top, Bottom or a hub of the innermost
// successor stage). Successor stages contribute branch slots (i, +/-), limit
// stages contribute summand slots [n]. Poles of nested copies are glued to
// their parents' poles and hubs; `normalize` applies that gluing so that equal
// vertices have equal addresses.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordia/exact.hpp"
#include "ordia/ordinal.hpp"
#include "ordia/trees.hpp"

namespace ordia {

struct Slot {
  enum class Kind : std::uint8_t { Branch, Summand };
  Kind kind = Kind::Branch;
  std::uint64_t index = 0;
  bool plus = false;  // Branch only: the (i,+) copy spans hub..top

  static Slot branch(std::uint64_t i, bool plus) { return Slot{Kind::Branch, i, plus}; }
  static Slot summand(std::uint64_t n) { return Slot{Kind::Summand, n, false}; }

  friend auto operator<=>(const Slot&, const Slot&) = default;
};

struct Terminal {
  enum class Kind : std::uint8_t { Bottom, Top, Hub };
  Kind kind = Kind::Bottom;
  std::uint64_t hub = 0;

  static Terminal top() { return Terminal{Kind::Top, 0}; }
  static Terminal bottom() { return Terminal{Kind::Bottom, 0}; }
  static Terminal hub_at(std::uint64_t i) { return Terminal{Kind::Hub, i}; }

  friend auto operator<=>(const Terminal&, const Terminal&) = default;
};

struct Vertex {
  std::vector<Slot> path;
  Terminal end;

  static Vertex top() { return Vertex{{}, Terminal::top()}; }
  static Vertex bottom() { return Vertex{{}, Terminal::bottom()}; }
  static Vertex hub(std::uint64_t i) { return Vertex{{}, Terminal::hub_at(i)}; }

  bool is_pole() const { return path.empty() && end.kind != Terminal::Kind::Hub; }
  /// The same vertex seen from one level up: `s` prepended to the path.
  Vertex under(const Slot& s) const;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// "T", "B", "h3", "0+/1-/h2", "[4]/h0".
std::string to_string(const Vertex& v);
/// Parses the printed form; the result is not normalized.
Vertex parse_vertex(std::string_view text);

struct DiamondSpec {
  Ordinal alpha;
  std::optional<std::uint64_t> branching = 2;  // nullopt = countably many
  TruncationSpec trunc;

  /// Number of hubs materialized per successor stage.
  std::uint64_t hub_window() const { return branching ? *branching : trunc.fan_width; }
  void validate() const;
};

std::string branching_to_string(const DiamondSpec& spec);
/// "2", "3", ..., or "w"/"omega" for countable branching.
std::optional<std::uint64_t> parse_branching(std::string_view text);

/// Applies the pole/hub identifications and checks that every slot matches
/// the stage it is used at. Throws std::invalid_argument on inconsistency.
/// Idempotent.
Vertex normalize(const DiamondSpec& spec, const Vertex& raw);

/// Whether the vertex lies in the truncation window (hub and summand indices
/// below the window widths).
bool in_window(const DiamondSpec& spec, const Vertex& v);

struct PoleDistances {
  DyadicRational to_bottom;
  DyadicRational to_top;
};

PoleDistances dist_to_poles(const Vertex& v);

/// Exact distance between two normalized vertices.
DyadicRational dist(const Vertex& u, const Vertex& v);

struct ActivePair {
  Vertex u;
  Vertex v;
  std::size_t stage = 0;  // nesting depth of the copy that created the pair
};

/// Active pairs restricted to the window, deduplicated, first occurrence
/// kept, in a deterministic order.
std::vector<ActivePair> active_pairs(const DiamondSpec& spec);

/// All vertices of the window, sorted.
std::vector<Vertex> window_vertices(const DiamondSpec& spec, std::size_t max_vertices = 100'000);

struct WeightedEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  DyadicRational weight;
};

struct Materialization {
  std::vector<Vertex> vertices;
  std::vector<WeightedEdge> edges;
  std::map<Vertex, std::size_t> index;

  std::size_t id(const Vertex& v) const;  // throws std::out_of_range
};

/// The window as an explicit weighted graph. Throws BudgetExceeded past
/// `max_vertices`.
Materialization materialize(const DiamondSpec& spec, std::size_t max_vertices = 100'000);

/// Single-source exact shortest paths (label setting with rational keys).
std::vector<Rational> oracle_distances(const Materialization& m, std::size_t source);
Rational oracle_dist(const Materialization& m, const Vertex& u, const Vertex& v);

std::string to_dot(const Materialization& m);

}  // namespace ordia

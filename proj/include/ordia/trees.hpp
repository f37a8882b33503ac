#pragma once

// Tree shapes of ordinal height (dyadic T_alpha, sprawling S_alpha and bush
// members of RT_alpha) and verifiers for labelled trees in finite-dimensional
// normed spaces.
//
// Countably infinite fans are kept as finite windows: a TruncationSpec fixes
// how many fan members and limit-stage summands are materialized, and nodes
// whose successor set was cut carry the `truncated` flag.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordia/exact.hpp"
#include "ordia/ordinal.hpp"

namespace ordia {

enum class TreeKind { Dyadic, Sprawling, Bush };

TreeKind parse_tree_kind(const std::string& text);
std::string to_string(TreeKind kind);

/// One edge of a node path. Dyadic and bush paths use `index` only (side 0);
/// sprawling paths use (side, index) pairs with side in {0, 1}.
struct Step {
  std::uint32_t side = 0;
  std::uint64_t index = 0;

  friend auto operator<=>(const Step&, const Step&) = default;
};

using NodePath = std::vector<Step>;

NodePath child(const NodePath& parent, Step step);
std::string to_string(const NodePath& path, TreeKind kind);

struct TruncationSpec {
  std::uint64_t fan_width = 3;    // explicit members kept per infinite fan (>= 2)
  std::uint64_t limit_width = 3;  // summands kept per limit stage (>= 1)
  std::optional<std::uint64_t> depth_budget;

  void validate() const;
  friend bool operator==(const TruncationSpec&, const TruncationSpec&) = default;
};

/// Successor structure of a node.
///   Leaf:  no successors.
///   Split: finitely many successors that the label must be a (convex)
///          combination of; for sprawling trees this is case (B), whose
///          (0,n)/(1,n) pairs are an infinite fan kept as a window.
///   Fan:   infinitely many successors that all repeat the node's label
///          (limit stages; case (C) for sprawling trees).
enum class Profile { Leaf, Split, Fan };

struct NodeInfo {
  Profile profile = Profile::Leaf;
  std::vector<Step> children;  // materialized successors, in order
  bool truncated = false;      // successor set is a strict window
};

struct TreeShape {
  TreeKind kind = TreeKind::Dyadic;
  Ordinal alpha;
  TruncationSpec trunc;
  std::map<NodePath, NodeInfo> nodes;

  std::size_t size() const { return nodes.size(); }
  bool truncated() const;
  std::size_t max_depth() const;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds the windowed shape of T_alpha (Dyadic), S_alpha (Sprawling) or the
/// binary member of RT_alpha (Bush). Throws BudgetExceeded past `max_nodes`.
TreeShape build_shape(TreeKind kind, const Ordinal& alpha, const TruncationSpec& trunc,
                      std::size_t max_nodes = 1'000'000);

struct LabelledTree {
  TreeShape shape;
  NormedSpace space;
  Rational delta = 1;
  Rational radius = 1;  // labels must lie in radius * B_X
  std::map<NodePath, Vec> labels;
  std::map<NodePath, Vec> weights;  // Bush only: one weight per child, in child order

  const Vec& label(const NodePath& p) const;
};

struct VerificationReport {
  bool pass = true;
  std::string reason;
  std::optional<NodePath> witness;
  bool truncated = false;
  std::size_t nodes_checked = 0;
};

/// delta-alpha-tree conditions on every materialized node. Throws
/// std::invalid_argument on a kind or labelling mismatch.
VerificationReport verify_dyadic(const LabelledTree& t);
/// delta-alpha-sprawling-tree conditions (a delta-spider when alpha = 1).
VerificationReport verify_sprawling(const LabelledTree& t);
/// delta-alpha-bush conditions with ball radius t.radius.
VerificationReport verify_bush(const LabelledTree& t);

/// Checks that a bush shape is a member of RT_alpha under the canonical limit
/// enumeration (finite splits at successor stages, fans at limit stages).
VerificationReport check_bush_shape(const TreeShape& shape);

/// Reinterprets a verified dyadic tree as a bush with weights (1/2, 1/2).
/// Throws std::invalid_argument if the input fails verify_dyadic.
LabelledTree tree_as_bush(const LabelledTree& t);

/// Normalized dyadic-indicator tree in l1 of dimension 2^depth, delta = 1.
LabelledTree haar_tree(unsigned depth);

/// A valid (1/2)-alpha-tree in l-infinity whose labels all have norm exactly 1:
/// coordinate 0 is constant 1 and each binary node moves a fresh coordinate by
/// +-c with c drawn from {1/2, 3/4, 1} according to `seed`.
LabelledTree linf_dyadic_tree(const Ordinal& alpha, const TruncationSpec& trunc, std::uint64_t seed);

/// A valid delta-alpha-sprawling tree in l-infinity with all label norms 1.
/// Each (B) node moves a fresh coordinate to +-c_n with the c_n spread evenly
/// over [-1, 1]; delta = min(1, 2/(fan_width-1)).
LabelledTree linf_sprawling_tree(const Ordinal& alpha, const TruncationSpec& trunc, std::uint64_t seed);

/// Applies x -> s*x + shift to every label and scales delta by s. Radius is
/// left unchanged; the caller re-verifies. Used to move a tree into the window
/// of norms [1/2, 1] required by the embedding constructions.
LabelledTree affine_relabel(const LabelledTree& t, const Rational& s, const Vec& shift);

/// The default rescale-and-translate step: x -> x/4 + (3/4) e_0. A delta-tree in
/// the unit ball becomes a (delta/4)-tree whose labels have norms in [1/2, 1].
LabelledTree window_labels(const LabelledTree& t);

}  // namespace ordia

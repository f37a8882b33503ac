#pragma once

// Sub-Lipschitz embeddings of diamond graphs built from labelled trees, the
// reverse extraction of trees from embeddings, and distortion checks over
// active pairs.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "ordia/diamond.hpp"
#include "ordia/exact.hpp"
#include "ordia/trees.hpp"

namespace ordia {

/// A lazily evaluated map from diamond vertices to vectors. Evaluation is
/// memoized; copies share the cache, which is internally synchronized.
class PointMap {
 public:
  using Eval = std::function<Vec(const Vertex&)>;

  PointMap(DiamondSpec spec, NormedSpace space, Eval eval);

  const DiamondSpec& spec() const { return spec_; }
  const NormedSpace& space() const { return space_; }

  /// Normalizes `v` against the spec, then evaluates.
  Vec operator()(const Vertex& v) const;

  /// v -> lambda * f(v).
  PointMap scaled(const Rational& lambda) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<Vertex, Vec> values;
  };

  DiamondSpec spec_;
  NormedSpace space_;
  Eval eval_;
  std::shared_ptr<Cache> cache_;
};

class EmbeddingPrecondition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The witness hub when neither hub of a successor stage passes the 2A test.
class BranchTestFailed : public std::runtime_error {
 public:
  BranchTestFailed(const std::string& what, Vertex hub) : std::runtime_error(what), hub_(std::move(hub)) {}
  const Vertex& hub() const { return hub_; }

 private:
  Vertex hub_;
};

/// Embedding of D_alpha^2 from a dyadic tree with delta in (0, 1/2] and all
/// label norms in [1/2, 1]. Throws EmbeddingPrecondition otherwise.
PointMap build_dyadic_embedding(const LabelledTree& t);

/// Embedding of D_alpha^omega (windowed by the tree's truncation) from a
/// sprawling tree with all label norms in [1/2, 1].
PointMap build_sprawling_embedding(const LabelledTree& t);

/// (f(x) - f(y)) / d(x, y) for distinct vertices.
Vec quotient(const PointMap& f, const Vertex& x, const Vertex& y);

/// The A-alpha-tree whose root is f_{t,b}. Throws BranchTestFailed.
LabelledTree extract_dyadic_tree(const PointMap& f, const Rational& A);

/// The bounded 2A-alpha-sprawling tree whose root is f_{t,b}, windowed by the
/// spec's fan width.
LabelledTree extract_sprawling_tree(const PointMap& f, const Rational& A);

struct DistortionReport {
  std::size_t pairs_checked = 0;
  /// Extremes of ||f(u) - f(v)|| / d(u, v); squared for l2.
  Rational min_ratio;
  Rational max_ratio;
  bool squared = false;
  std::optional<ActivePair> min_witness;
  std::optional<ActivePair> max_witness;
  Rational A;
  Rational B;
  bool pass = true;
  std::optional<ActivePair> failure;  // first pair violating the sandwich
};

/// Exact check of A d(u, v) <= ||f(u) - f(v)|| <= B d(u, v) over the windowed
/// active pairs.
DistortionReport check_distortion(const PointMap& f, const Rational& A, const Rational& B);

}  // namespace ordia

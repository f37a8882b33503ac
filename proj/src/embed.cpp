#include "ordia/embed.hpp"

#include <utility>

namespace ordia {

namespace {

void require_norm_window(const LabelledTree& t) {
  for (const auto& [path, x] : t.labels) {
    if (compare_norm(t.space.norm, x, Rational(1, 2)) < 0 || compare_norm(t.space.norm, x, Rational(1)) > 0) {
      throw EmbeddingPrecondition("label at " + to_string(path, t.shape.kind) + " has norm outside [1/2, 1]");
    }
  }
}

const Vec& label_at(const LabelledTree& t, const NodePath& s) {
  auto it = t.labels.find(s);
  if (it == t.labels.end()) {
    throw std::out_of_range("vertex lies outside the tree window at node " + to_string(s, t.shape.kind));
  }
  return it->second;
}

// Shared evaluation of both constructions. `minus_step(i)` and `plus_step(i)`
// name the tree successor feeding the (i,-) and (i,+) copies; `hub_step(i)`
// the successor whose half is the hub image; `summand_step(n)` the limit
// successor.
struct TreeWalk {
  const LabelledTree& tree;
  Step (*minus_step)(std::uint64_t);
  Step (*plus_step)(std::uint64_t);
  Step (*hub_step)(std::uint64_t);
  Step (*summand_step)(std::uint64_t);

  Vec operator()(const Vertex& v) const {
    NodePath s;
    Vec off = zeros(tree.space.dim);
    Rational scale_by = 1;
    for (const auto& slot : v.path) {
      if (slot.kind == Slot::Kind::Summand) {
        s.push_back(summand_step(slot.index));
        continue;
      }
      scale_by /= 2;
      if (slot.plus) {
        off = add(off, scale(label_at(tree, child(s, hub_step(slot.index))), scale_by));
        s.push_back(plus_step(slot.index));
      } else {
        s.push_back(minus_step(slot.index));
      }
    }
    switch (v.end.kind) {
      case Terminal::Kind::Bottom: return off;
      case Terminal::Kind::Top: return add(off, scale(label_at(tree, s), scale_by));
      case Terminal::Kind::Hub:
        return add(off, scale(label_at(tree, child(s, hub_step(v.end.hub))), scale_by / 2));
    }
    return off;
  }
};

Step dyadic_minus(std::uint64_t i) { return Step{0, i}; }
Step dyadic_plus(std::uint64_t i) { return Step{0, 1 - i}; }
Step sprawl_minus(std::uint64_t i) { return Step{0, i}; }
Step sprawl_plus(std::uint64_t i) { return Step{1, i}; }
Step plain_index(std::uint64_t n) { return Step{0, n}; }

struct Extractor {
  const PointMap& f;
  const Rational& A;
  LabelledTree& out;
  bool sprawling;

  Vec eval(const std::vector<Slot>& prefix, const Rational& factor, Terminal end) const {
    return scale(f(Vertex{prefix, end}), factor);
  }

  void run(const Ordinal& alpha, std::vector<Slot>& prefix, const Rational& factor, const NodePath& s) {
    const Vec top = eval(prefix, factor, Terminal::top());
    const Vec bottom = eval(prefix, factor, Terminal::bottom());
    out.labels[s] = sub(top, bottom);
    auto cls = classify(alpha);
    if (cls.kind == OrdinalKind::Zero) return;
    if (cls.kind == OrdinalKind::Limit) {
      for (std::uint64_t n = 0; n < f.spec().trunc.limit_width; ++n) {
        prefix.push_back(Slot::summand(n));
        run(enumerate_below(alpha, n), prefix, factor, child(s, Step{0, n}));
        prefix.pop_back();
      }
      return;
    }
    const Rational twice = factor * 2;
    auto descend = [&](std::uint64_t i, bool plus, Step step) {
      prefix.push_back(Slot::branch(i, plus));
      run(*cls.predecessor, prefix, twice, child(s, step));
      prefix.pop_back();
    };
    if (sprawling) {
      for (std::uint64_t i = 0; i < f.spec().hub_window(); ++i) {
        descend(i, false, Step{0, i});
        descend(i, true, Step{1, i});
      }
      return;
    }
    for (std::uint64_t i = 0; i < 2; ++i) {
      const Vec hub = eval(prefix, factor, Terminal::hub_at(i));
      const Vec upper = scale(sub(top, hub), Rational(2));
      const Vec lower = scale(sub(hub, bottom), Rational(2));
      if (compare_dist(f.space().norm, upper, lower, 2 * A) >= 0) {
        descend(i, true, Step{0, 0});
        descend(i, false, Step{0, 1});
        return;
      }
    }
    throw BranchTestFailed("no hub passes the 2A branch test", Vertex{prefix, Terminal::hub_at(1)});
  }
};

}  // namespace

PointMap::PointMap(DiamondSpec spec, NormedSpace space, Eval eval)
    : spec_(std::move(spec)), space_(space), eval_(std::move(eval)), cache_(std::make_shared<Cache>()) {
  spec_.validate();
}

Vec PointMap::operator()(const Vertex& v) const {
  Vertex key = normalize(spec_, v);
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->values.find(key);
    if (it != cache_->values.end()) return it->second;
  }
  Vec value = eval_(key);
  if (value.size() != space_.dim) throw std::logic_error("point map returned a vector of the wrong dimension");
  std::lock_guard lock(cache_->mu);
  return cache_->values.emplace(std::move(key), std::move(value)).first->second;
}

PointMap PointMap::scaled(const Rational& lambda) const {
  PointMap inner = *this;
  return PointMap(spec_, space_, [inner, lambda](const Vertex& v) { return scale(inner(v), lambda); });
}

PointMap build_dyadic_embedding(const LabelledTree& t) {
  if (t.shape.kind != TreeKind::Dyadic) throw EmbeddingPrecondition("expected a dyadic tree");
  if (t.delta <= 0 || t.delta > Rational(1, 2)) throw EmbeddingPrecondition("delta must lie in (0, 1/2]");
  auto report = verify_dyadic(t);
  if (!report.pass) throw EmbeddingPrecondition("tree fails verification: " + report.reason);
  require_norm_window(t);
  DiamondSpec spec{t.shape.alpha, 2, t.shape.trunc};
  auto tree = std::make_shared<const LabelledTree>(t);
  return PointMap(spec, t.space, [tree](const Vertex& v) {
    return TreeWalk{*tree, dyadic_minus, dyadic_plus, dyadic_minus, plain_index}(v);
  });
}

PointMap build_sprawling_embedding(const LabelledTree& t) {
  if (t.shape.kind != TreeKind::Sprawling) throw EmbeddingPrecondition("expected a sprawling tree");
  if (t.delta <= 0 || t.delta > 1) throw EmbeddingPrecondition("delta must lie in (0, 1]");
  auto report = verify_sprawling(t);
  if (!report.pass) throw EmbeddingPrecondition("tree fails verification: " + report.reason);
  require_norm_window(t);
  DiamondSpec spec{t.shape.alpha, std::nullopt, t.shape.trunc};
  auto tree = std::make_shared<const LabelledTree>(t);
  return PointMap(spec, t.space, [tree](const Vertex& v) {
    return TreeWalk{*tree, sprawl_minus, sprawl_plus, sprawl_minus, plain_index}(v);
  });
}

Vec quotient(const PointMap& f, const Vertex& x, const Vertex& y) {
  DyadicRational d = dist(normalize(f.spec(), x), normalize(f.spec(), y));
  if (d == DyadicRational(0)) throw std::invalid_argument("quotient of a vertex with itself");
  return scale(sub(f(x), f(y)), 1 / d.value());
}

LabelledTree extract_dyadic_tree(const PointMap& f, const Rational& A) {
  if (f.spec().branching != std::optional<std::uint64_t>(2)) {
    throw std::invalid_argument("dyadic extraction needs a 2-branching diamond");
  }
  if (A <= 0) throw std::invalid_argument("A must be positive");
  LabelledTree out;
  out.shape = build_shape(TreeKind::Dyadic, f.spec().alpha, f.spec().trunc);
  out.space = f.space();
  out.delta = A;
  std::vector<Slot> prefix;
  Extractor{f, A, out, false}.run(f.spec().alpha, prefix, Rational(1), {});
  return out;
}

LabelledTree extract_sprawling_tree(const PointMap& f, const Rational& A) {
  if (A <= 0) throw std::invalid_argument("A must be positive");
  TruncationSpec trunc = f.spec().trunc;
  trunc.fan_width = f.spec().hub_window();
  LabelledTree out;
  out.shape = build_shape(TreeKind::Sprawling, f.spec().alpha, trunc);
  out.space = f.space();
  out.delta = 2 * A;
  std::vector<Slot> prefix;
  Extractor{f, A, out, true}.run(f.spec().alpha, prefix, Rational(1), {});
  return out;
}

DistortionReport check_distortion(const PointMap& f, const Rational& A, const Rational& B) {
  DistortionReport r;
  const Norm norm = f.space().norm;
  r.squared = norm == Norm::L2;
  r.A = A;
  r.B = B;
  const Rational lo = radius_comparable(norm, A);
  const Rational hi = radius_comparable(norm, B);
  for (const auto& pair : active_pairs(f.spec())) {
    const Rational d = dist(pair.u, pair.v).value();
    const Rational ratio = norm_comparable(norm, sub(f(pair.u), f(pair.v))) / (r.squared ? d * d : d);
    if (r.pairs_checked == 0 || ratio < r.min_ratio) {
      r.min_ratio = ratio;
      r.min_witness = pair;
    }
    if (r.pairs_checked == 0 || ratio > r.max_ratio) {
      r.max_ratio = ratio;
      r.max_witness = pair;
    }
    if (r.pass && (ratio < lo || ratio > hi)) {
      r.pass = false;
      r.failure = pair;
    }
    ++r.pairs_checked;
  }
  return r;
}

}  // namespace ordia

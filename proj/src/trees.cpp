#include "ordia/trees.hpp"

#include <algorithm>
#include <random>

namespace ordia {

namespace {

struct ShapeBuilder {
  TreeShape& shape;
  std::size_t max_nodes;

  void build(const NodePath& at, const Ordinal& alpha) {
    if (shape.nodes.size() >= max_nodes) {
      throw BudgetExceeded("tree shape exceeds node cap of " + std::to_string(max_nodes));
    }
    NodeInfo& info = shape.nodes[at];
    auto cls = classify(alpha);
    if (cls.kind == OrdinalKind::Zero) return;

    bool depth_cut = shape.trunc.depth_budget && at.size() >= *shape.trunc.depth_budget;
    std::vector<std::pair<Step, Ordinal>> kids;
    if (cls.kind == OrdinalKind::Successor) {
      info.profile = Profile::Split;
      if (shape.kind == TreeKind::Sprawling) {
        info.truncated = true;
        for (std::uint64_t n = 0; n < shape.trunc.fan_width; ++n) {
          kids.push_back({Step{0, n}, *cls.predecessor});
          kids.push_back({Step{1, n}, *cls.predecessor});
        }
      } else {
        kids.push_back({Step{0, 0}, *cls.predecessor});
        kids.push_back({Step{0, 1}, *cls.predecessor});
      }
    } else {
      info.profile = Profile::Fan;
      info.truncated = true;
      for (std::uint64_t n = 0; n < shape.trunc.limit_width; ++n) {
        kids.push_back({Step{0, n}, enumerate_below(alpha, n)});
      }
    }
    if (depth_cut) {
      info.truncated = true;
      return;
    }
    for (const auto& [step, _] : kids) info.children.push_back(step);
    for (const auto& [step, beta] : kids) build(child(at, step), beta);
  }
};

void require_kind(const LabelledTree& t, TreeKind kind) {
  if (t.shape.kind != kind) {
    throw std::invalid_argument("expected a " + to_string(kind) + " tree, got " + to_string(t.shape.kind));
  }
}

void require_labels(const LabelledTree& t) {
  for (const auto& [path, _] : t.shape.nodes) {
    auto it = t.labels.find(path);
    if (it == t.labels.end()) throw std::invalid_argument("unlabelled node " + to_string(path, t.shape.kind));
    if (it->second.size() != t.space.dim) {
      throw std::invalid_argument("label of node " + to_string(path, t.shape.kind) + " has dimension " +
                                  std::to_string(it->second.size()) + ", space has " + std::to_string(t.space.dim));
    }
  }
  if (t.labels.size() != t.shape.nodes.size()) throw std::invalid_argument("labels for nodes outside the shape");
}

VerificationReport fail(VerificationReport r, const NodePath& at, std::string why) {
  r.pass = false;
  r.witness = at;
  r.reason = std::move(why);
  return r;
}

// Checks shared by every tree kind: ball containment and fan constancy.
std::optional<std::string> common_checks(const LabelledTree& t, const NodePath& at, const NodeInfo& info) {
  const Vec& x = t.label(at);
  if (compare_norm(t.space.norm, x, t.radius) > 0) return "label outside the ball of radius " + to_string(t.radius);
  if (info.profile == Profile::Fan) {
    for (const auto& c : info.children) {
      if (t.label(child(at, c)) != x) return "fan successor label differs from its parent";
    }
  }
  return std::nullopt;
}

std::uint64_t next_draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

TreeKind parse_tree_kind(const std::string& text) {
  if (text == "dyadic") return TreeKind::Dyadic;
  if (text == "sprawling") return TreeKind::Sprawling;
  if (text == "bush") return TreeKind::Bush;
  throw std::invalid_argument("unknown tree kind: " + text);
}

std::string to_string(TreeKind kind) {
  switch (kind) {
    case TreeKind::Dyadic: return "dyadic";
    case TreeKind::Sprawling: return "sprawling";
    case TreeKind::Bush: return "bush";
  }
  return "?";
}

NodePath child(const NodePath& parent, Step step) {
  NodePath out = parent;
  out.push_back(step);
  return out;
}

std::string to_string(const NodePath& path, TreeKind kind) {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ",";
    if (kind == TreeKind::Sprawling) {
      out += "(" + std::to_string(path[i].side) + "," + std::to_string(path[i].index) + ")";
    } else {
      out += std::to_string(path[i].index);
    }
  }
  return out + "]";
}

void TruncationSpec::validate() const {
  if (fan_width < 2) throw std::invalid_argument("fan_width must be >= 2");
  if (limit_width < 1) throw std::invalid_argument("limit_width must be >= 1");
  if (depth_budget && *depth_budget == 0) throw std::invalid_argument("depth_budget must be positive");
}

bool TreeShape::truncated() const {
  return std::any_of(nodes.begin(), nodes.end(), [](const auto& kv) { return kv.second.truncated; });
}

std::size_t TreeShape::max_depth() const {
  std::size_t d = 0;
  for (const auto& [p, _] : nodes) d = std::max(d, p.size());
  return d;
}

TreeShape build_shape(TreeKind kind, const Ordinal& alpha, const TruncationSpec& trunc, std::size_t max_nodes) {
  trunc.validate();
  TreeShape shape{kind, alpha, trunc, {}};
  ShapeBuilder{shape, max_nodes}.build({}, alpha);
  return shape;
}

const Vec& LabelledTree::label(const NodePath& p) const {
  auto it = labels.find(p);
  if (it == labels.end()) throw std::invalid_argument("no label at node " + to_string(p, shape.kind));
  return it->second;
}

VerificationReport verify_dyadic(const LabelledTree& t) {
  require_kind(t, TreeKind::Dyadic);
  require_labels(t);
  VerificationReport r;
  r.truncated = t.shape.truncated();
  const Rational two_delta = 2 * t.delta;
  for (const auto& [at, info] : t.shape.nodes) {
    ++r.nodes_checked;
    if (auto why = common_checks(t, at, info)) return fail(r, at, *why);
    if (info.profile == Profile::Split && info.children.size() == 2) {
      const Vec& x0 = t.label(child(at, info.children[0]));
      const Vec& x1 = t.label(child(at, info.children[1]));
      if (midpoint(x0, x1) != t.label(at)) return fail(r, at, "label is not the midpoint of its two successors");
      if (compare_dist(t.space.norm, x0, x1, two_delta) < 0) {
        return fail(r, at, "successors closer than 2*delta");
      }
    }
  }
  return r;
}

VerificationReport verify_sprawling(const LabelledTree& t) {
  require_kind(t, TreeKind::Sprawling);
  require_labels(t);
  VerificationReport r;
  r.truncated = t.shape.truncated();
  const Norm norm = t.space.norm;
  for (const auto& [at, info] : t.shape.nodes) {
    ++r.nodes_checked;
    if (auto why = common_checks(t, at, info)) return fail(r, at, *why);
    if (info.profile != Profile::Split) continue;
    const Vec& x = t.label(at);
    std::vector<std::uint64_t> fan;
    for (const auto& c : info.children) {
      if (c.side == 0) fan.push_back(c.index);
    }
    for (auto n : fan) {
      const Vec& lo = t.label(child(at, Step{0, n}));
      const Vec& hi = t.label(child(at, Step{1, n}));
      if (midpoint(lo, hi) != x) return fail(r, at, "label is not the midpoint of pair " + std::to_string(n));
    }
    for (std::size_t a = 0; a < fan.size(); ++a) {
      for (std::size_t b = a + 1; b < fan.size(); ++b) {
        const Vec& xa = t.label(child(at, Step{0, fan[a]}));
        const Vec& xb = t.label(child(at, Step{0, fan[b]}));
        if (compare_dist(norm, xa, xb, t.delta) < 0) {
          return fail(r, at, "(0,n)-successors " + std::to_string(fan[a]) + " and " + std::to_string(fan[b]) +
                                 " closer than delta");
        }
        // Consequence of the two conditions above; a failure here means the
        // arithmetic itself is inconsistent.
        Vec cross = midpoint(xa, t.label(child(at, Step{1, fan[b]})));
        if (compare_dist(norm, x, cross, t.delta / 2) < 0) {
          return fail(r, at, "cross midpoint closer than delta/2");
        }
      }
    }
  }
  return r;
}

VerificationReport verify_bush(const LabelledTree& t) {
  require_kind(t, TreeKind::Bush);
  require_labels(t);
  VerificationReport r;
  r.truncated = t.shape.truncated();
  for (const auto& [at, info] : t.shape.nodes) {
    ++r.nodes_checked;
    if (auto why = common_checks(t, at, info)) return fail(r, at, *why);
    if (info.profile != Profile::Split || info.children.empty()) continue;
    auto wit = t.weights.find(at);
    if (wit == t.weights.end()) throw std::invalid_argument("missing weights at node " + to_string(at, TreeKind::Bush));
    const Vec& w = wit->second;
    if (w.size() != info.children.size()) {
      throw std::invalid_argument("weight count does not match successor count at " + to_string(at, TreeKind::Bush));
    }
    Rational total = 0;
    Vec combo = zeros(t.space.dim);
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] <= 0 || w[k] > 1) return fail(r, at, "weight outside (0,1]");
      total += w[k];
      combo = add(combo, scale(t.label(child(at, info.children[k])), w[k]));
    }
    if (total != 1) return fail(r, at, "weights sum to " + to_string(total) + ", not 1");
    const Vec& x = t.label(at);
    if (combo != x) return fail(r, at, "label is not the weighted combination of its successors");
    for (const auto& c : info.children) {
      if (compare_dist(t.space.norm, x, t.label(child(at, c)), t.delta) < 0) {
        return fail(r, at, "successor closer than delta");
      }
    }
  }
  return r;
}

namespace {

std::optional<std::string> bush_shape_at(const TreeShape& shape, const NodePath& at, const Ordinal& alpha,
                                         NodePath& witness) {
  auto it = shape.nodes.find(at);
  if (it == shape.nodes.end()) {
    witness = at;
    return "missing node";
  }
  const NodeInfo& info = it->second;
  auto cls = classify(alpha);
  auto fail_here = [&](std::string why) {
    witness = at;
    return std::optional<std::string>(std::move(why));
  };
  switch (cls.kind) {
    case OrdinalKind::Zero:
      if (!info.children.empty() || info.profile != Profile::Leaf) return fail_here("height-0 node has successors");
      return std::nullopt;
    case OrdinalKind::Successor:
      if (info.profile != Profile::Split) return fail_here("successor-height node must have finitely many successors");
      if (info.children.empty() && !info.truncated) return fail_here("successor-height node has no successors");
      for (std::size_t k = 0; k < info.children.size(); ++k) {
        if (info.children[k] != Step{0, k}) return fail_here("finite successors must be numbered 0..n");
        if (auto e = bush_shape_at(shape, child(at, info.children[k]), *cls.predecessor, witness)) return e;
      }
      return std::nullopt;
    case OrdinalKind::Limit:
      if (info.profile != Profile::Fan) return fail_here("limit-height node must be an infinite fan");
      for (const auto& c : info.children) {
        if (c.side != 0) return fail_here("bush steps carry no side");
        if (auto e = bush_shape_at(shape, child(at, c), enumerate_below(alpha, c.index), witness)) return e;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

VerificationReport check_bush_shape(const TreeShape& shape) {
  VerificationReport r;
  r.truncated = shape.truncated();
  NodePath witness;
  if (auto why = bush_shape_at(shape, {}, shape.alpha, witness)) return fail(r, witness, *why);
  for (const auto& [at, info] : shape.nodes) {
    ++r.nodes_checked;
    if (!at.empty()) {
      NodePath parent(at.begin(), at.end() - 1);
      auto pit = shape.nodes.find(parent);
      if (pit == shape.nodes.end() ||
          std::find(pit->second.children.begin(), pit->second.children.end(), at.back()) ==
              pit->second.children.end()) {
        return fail(r, at, "node is not reachable from the root");
      }
    }
  }
  return r;
}

LabelledTree tree_as_bush(const LabelledTree& t) {
  auto report = verify_dyadic(t);
  if (!report.pass) throw std::invalid_argument("tree_as_bush: input is not a valid delta-alpha-tree: " + report.reason);
  LabelledTree out = t;
  out.shape.kind = TreeKind::Bush;
  out.weights.clear();
  for (const auto& [at, info] : out.shape.nodes) {
    if (info.profile == Profile::Split && !info.children.empty()) {
      out.weights[at] = Vec(info.children.size(), Rational(1, 2));
    }
  }
  return out;
}

LabelledTree haar_tree(unsigned depth) {
  if (depth > 12) throw std::invalid_argument("haar_tree depth must be <= 12");
  LabelledTree t;
  t.shape = build_shape(TreeKind::Dyadic, Ordinal::natural(depth), TruncationSpec{});
  const std::size_t dim = std::size_t{1} << depth;
  t.space = NormedSpace{dim, Norm::L1};
  t.delta = 1;
  for (const auto& [at, _] : t.shape.nodes) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < at.size(); ++i) start += at[i].index << (depth - 1 - i);
    const std::size_t len = std::size_t{1} << (depth - at.size());
    Vec x = zeros(dim);
    Rational height(1, static_cast<unsigned long>(len));
    for (std::size_t k = start; k < start + len; ++k) x[k] = height;
    t.labels[at] = std::move(x);
  }
  return t;
}

LabelledTree linf_dyadic_tree(const Ordinal& alpha, const TruncationSpec& trunc, std::uint64_t seed) {
  LabelledTree t;
  t.shape = build_shape(TreeKind::Dyadic, alpha, trunc);
  t.space = NormedSpace{1 + t.shape.max_depth(), Norm::LInf};
  t.delta = Rational(1, 2);
  std::mt19937_64 rng(seed);
  const Rational steps[] = {Rational(1, 2), Rational(3, 4), Rational(1)};
  Vec root = zeros(t.space.dim);
  root[0] = 1;
  t.labels[{}] = root;
  // std::map iterates parents before children (prefix order).
  for (const auto& [at, info] : t.shape.nodes) {
    const Vec& x = t.labels.at(at);
    if (info.profile == Profile::Fan) {
      for (const auto& c : info.children) t.labels[child(at, c)] = x;
    } else if (info.profile == Profile::Split) {
      Rational c = steps[next_draw(rng, 3)];
      if (next_draw(rng, 2)) c = -c;
      Vec up = x, down = x;
      up[at.size() + 1] += c;
      down[at.size() + 1] -= c;
      if (!info.children.empty()) {
        t.labels[child(at, info.children[0])] = up;
        t.labels[child(at, info.children[1])] = down;
      }
    }
  }
  return t;
}

LabelledTree linf_sprawling_tree(const Ordinal& alpha, const TruncationSpec& trunc, std::uint64_t seed) {
  LabelledTree t;
  t.shape = build_shape(TreeKind::Sprawling, alpha, trunc);
  t.space = NormedSpace{1 + t.shape.max_depth(), Norm::LInf};
  const std::uint64_t fan = trunc.fan_width;
  Rational spacing(2, static_cast<unsigned long>(fan - 1));
  spacing.canonicalize();
  t.delta = spacing < 1 ? spacing : Rational(1);
  std::mt19937_64 rng(seed);
  Vec root = zeros(t.space.dim);
  root[0] = 1;
  t.labels[{}] = root;
  for (const auto& [at, info] : t.shape.nodes) {
    const Vec& x = t.labels.at(at);
    if (info.profile == Profile::Fan) {
      for (const auto& c : info.children) t.labels[child(at, c)] = x;
      continue;
    }
    if (info.profile != Profile::Split || info.children.empty()) continue;
    std::vector<Rational> values;
    for (std::uint64_t n = 0; n < fan; ++n) values.push_back(Rational(-1) + spacing * static_cast<unsigned long>(n));
    for (std::size_t i = values.size(); i > 1; --i) std::swap(values[i - 1], values[next_draw(rng, i)]);
    if (next_draw(rng, 2)) {
      for (auto& v : values) v = -v;
    }
    for (std::uint64_t n = 0; n < fan; ++n) {
      Vec lo = x, hi = x;
      lo[at.size() + 1] += values[n];
      hi[at.size() + 1] -= values[n];
      t.labels[child(at, Step{0, n})] = lo;
      t.labels[child(at, Step{1, n})] = hi;
    }
  }
  return t;
}

LabelledTree affine_relabel(const LabelledTree& t, const Rational& s, const Vec& shift) {
  if (s <= 0) throw std::invalid_argument("affine_relabel scale must be positive");
  if (shift.size() != t.space.dim) throw std::invalid_argument("affine_relabel shift has wrong dimension");
  LabelledTree out = t;
  for (auto& [_, x] : out.labels) x = add(scale(x, s), shift);
  out.delta = t.delta * s;
  return out;
}

LabelledTree window_labels(const LabelledTree& t) {
  Vec shift = zeros(t.space.dim);
  shift[0] = Rational(3, 4);
  return affine_relabel(t, Rational(1, 4), shift);
}

}  // namespace ordia

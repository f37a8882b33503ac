#include "ordia/diamond.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace ordia {

namespace {

std::uint64_t parse_index(std::string_view s, std::string_view whole) {
  std::uint64_t out = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw std::invalid_argument("malformed vertex address: " + std::string(whole));
  }
  return out;
}

// Gluing rules only; the caller is responsible for stage consistency.
Vertex collapse(Vertex v) {
  while (!v.path.empty() && v.end.kind != Terminal::Kind::Hub) {
    Slot s = v.path.back();
    v.path.pop_back();
    if (s.kind == Slot::Kind::Summand) continue;
    bool at_top = v.end.kind == Terminal::Kind::Top;
    if (s.plus && !at_top) {
      v.end = Terminal::hub_at(s.index);
    } else if (!s.plus && at_top) {
      v.end = Terminal::hub_at(s.index);
    }
  }
  return v;
}

Vertex join(const std::vector<Slot>& prefix, Terminal end) { return collapse(Vertex{prefix, end}); }

DyadicRational local_to_bottom(const std::vector<Slot>& path, std::size_t from, const Terminal& end) {
  DyadicRational off = 0;
  DyadicRational scale = 1;
  for (std::size_t k = from; k < path.size(); ++k) {
    const Slot& s = path[k];
    if (s.kind == Slot::Kind::Summand) continue;
    if (s.plus) off += scale.half();
    scale = scale.half();
  }
  switch (end.kind) {
    case Terminal::Kind::Bottom: return off;
    case Terminal::Kind::Top: return off + scale;
    case Terminal::Kind::Hub: return off + scale.half();
  }
  return off;
}

// Walks the stages of spec.alpha along v and rejects slots or hubs that do
// not exist at the stage they are used at.
void check_stages(const DiamondSpec& spec, const Vertex& v) {
  Ordinal alpha = spec.alpha;
  const std::string where = to_string(v);
  for (std::size_t k = 0; k < v.path.size(); ++k) {
    const Slot& s = v.path[k];
    auto cls = classify(alpha);
    switch (cls.kind) {
      case OrdinalKind::Zero:
        throw std::invalid_argument("address " + where + " descends below height 0");
      case OrdinalKind::Successor:
        if (s.kind != Slot::Kind::Branch) {
          throw std::invalid_argument("address " + where + ": summand slot at successor stage " + alpha.to_string());
        }
        if (spec.branching && s.index >= *spec.branching) {
          throw std::invalid_argument("address " + where + ": branch index exceeds branching");
        }
        alpha = *cls.predecessor;
        break;
      case OrdinalKind::Limit:
        if (s.kind != Slot::Kind::Summand) {
          throw std::invalid_argument("address " + where + ": branch slot at limit stage " + alpha.to_string());
        }
        alpha = enumerate_below(alpha, s.index);
        break;
    }
  }
  if (v.end.kind == Terminal::Kind::Hub) {
    if (classify(alpha).kind != OrdinalKind::Successor) {
      throw std::invalid_argument("address " + where + ": hub at non-successor stage " + alpha.to_string());
    }
    if (spec.branching && v.end.hub >= *spec.branching) {
      throw std::invalid_argument("address " + where + ": hub index exceeds branching");
    }
  }
}

// Shared recursion over the window; on_stage sees every copy at every stage.
struct WindowWalker {
  const DiamondSpec& spec;
  std::function<void(const std::vector<Slot>&, const Ordinal&, std::size_t depth, const DyadicRational& scale)> on_stage;

  void walk(const Ordinal& alpha, std::vector<Slot>& prefix, std::size_t depth, const DyadicRational& scale) {
    on_stage(prefix, alpha, depth, scale);
    auto cls = classify(alpha);
    if (cls.kind == OrdinalKind::Successor) {
      for (std::uint64_t i = 0; i < spec.hub_window(); ++i) {
        for (bool plus : {true, false}) {
          prefix.push_back(Slot::branch(i, plus));
          walk(*cls.predecessor, prefix, depth + 1, scale.half());
          prefix.pop_back();
        }
      }
    } else if (cls.kind == OrdinalKind::Limit) {
      for (std::uint64_t n = 0; n < spec.trunc.limit_width; ++n) {
        prefix.push_back(Slot::summand(n));
        walk(enumerate_below(alpha, n), prefix, depth, scale);
        prefix.pop_back();
      }
    }
  }

  void run() {
    std::vector<Slot> prefix;
    walk(spec.alpha, prefix, 0, DyadicRational(1));
  }
};

}  // namespace

Vertex Vertex::under(const Slot& s) const {
  Vertex out;
  out.path.reserve(path.size() + 1);
  out.path.push_back(s);
  out.path.insert(out.path.end(), path.begin(), path.end());
  out.end = end;
  return out;
}

std::string to_string(const Vertex& v) {
  std::string out;
  for (const auto& s : v.path) {
    if (s.kind == Slot::Kind::Summand) {
      out += "[" + std::to_string(s.index) + "]/";
    } else {
      out += std::to_string(s.index) + (s.plus ? "+/" : "-/");
    }
  }
  switch (v.end.kind) {
    case Terminal::Kind::Top: out += "T"; break;
    case Terminal::Kind::Bottom: out += "B"; break;
    case Terminal::Kind::Hub: out += "h" + std::to_string(v.end.hub); break;
  }
  return out;
}

Vertex parse_vertex(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto slash = text.find('/', start);
    parts.push_back(text.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  Vertex v;
  for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
    std::string_view p = parts[k];
    if (p.size() >= 3 && p.front() == '[' && p.back() == ']') {
      v.path.push_back(Slot::summand(parse_index(p.substr(1, p.size() - 2), text)));
    } else if (p.size() >= 2 && (p.back() == '+' || p.back() == '-')) {
      v.path.push_back(Slot::branch(parse_index(p.substr(0, p.size() - 1), text), p.back() == '+'));
    } else {
      throw std::invalid_argument("malformed vertex address: " + std::string(text));
    }
  }
  std::string_view last = parts.back();
  if (last == "T") {
    v.end = Terminal::top();
  } else if (last == "B") {
    v.end = Terminal::bottom();
  } else if (last.size() >= 2 && last.front() == 'h') {
    v.end = Terminal::hub_at(parse_index(last.substr(1), text));
  } else {
    throw std::invalid_argument("malformed vertex address: " + std::string(text));
  }
  return v;
}

void DiamondSpec::validate() const {
  if (branching && *branching < 2) throw std::invalid_argument("branching must be >= 2");
  trunc.validate();
}

std::string branching_to_string(const DiamondSpec& spec) {
  return spec.branching ? std::to_string(*spec.branching) : "w";
}

std::optional<std::uint64_t> parse_branching(std::string_view text) {
  if (text == "w" || text == "omega") return std::nullopt;
  std::uint64_t b = parse_index(text, text);
  if (b < 2) throw std::invalid_argument("branching must be >= 2");
  return b;
}

Vertex normalize(const DiamondSpec& spec, const Vertex& raw) {
  check_stages(spec, raw);
  return collapse(raw);
}

bool in_window(const DiamondSpec& spec, const Vertex& v) {
  for (const auto& s : v.path) {
    if (s.kind == Slot::Kind::Branch && s.index >= spec.hub_window()) return false;
    if (s.kind == Slot::Kind::Summand && s.index >= spec.trunc.limit_width) return false;
  }
  return v.end.kind != Terminal::Kind::Hub || v.end.hub < spec.hub_window();
}

PoleDistances dist_to_poles(const Vertex& v) {
  DyadicRational b = local_to_bottom(v.path, 0, v.end);
  return {b, DyadicRational(1) - b};
}

DyadicRational dist(const Vertex& u, const Vertex& v) {
  if (u == v) return 0;
  std::size_t k = 0;
  DyadicRational scale = 1;
  while (k < u.path.size() && k < v.path.size() && u.path[k] == v.path[k]) {
    if (u.path[k].kind == Slot::Kind::Branch) scale = scale.half();
    ++k;
  }
  const DyadicRational ru = local_to_bottom(u.path, k, u.end);
  const DyadicRational rv = local_to_bottom(v.path, k, v.end);
  const bool u_pole = k == u.path.size() && u.end.kind != Terminal::Kind::Hub;
  const bool v_pole = k == v.path.size() && v.end.kind != Terminal::Kind::Hub;
  const DyadicRational diff = (ru - rv).abs();
  DyadicRational local;
  if (u_pole || v_pole) {
    local = diff;
  } else {
    // First divergent element: either a slot or a hub of the same stage.
    auto branch_of = [k](const Vertex& w) -> std::pair<bool, std::uint64_t> {
      if (k == w.path.size()) return {true, w.end.hub};
      return {w.path[k].kind == Slot::Kind::Branch, w.path[k].index};
    };
    auto [u_succ, ui] = branch_of(u);
    auto [v_succ, vi] = branch_of(v);
    if (u_succ != v_succ) throw std::invalid_argument("vertices " + to_string(u) + " and " + to_string(v) + " disagree on stage kind");
    const DyadicRational s = ru + rv;
    if (u_succ && ui == vi) {
      local = diff;
    } else {
      local = min(s, DyadicRational(2) - s);
    }
  }
  return local * scale;
}

std::vector<ActivePair> active_pairs(const DiamondSpec& spec) {
  spec.validate();
  std::vector<ActivePair> out;
  std::set<std::pair<Vertex, Vertex>> seen;
  auto emit = [&](Vertex a, Vertex b, std::size_t depth) {
    if (b < a) std::swap(a, b);
    if (a == b) return;
    if (seen.emplace(a, b).second) out.push_back(ActivePair{std::move(a), std::move(b), depth});
  };
  WindowWalker walker{spec, [&](const std::vector<Slot>& prefix, const Ordinal& alpha, std::size_t depth,
                                const DyadicRational&) {
    auto cls = classify(alpha);
    if (cls.kind == OrdinalKind::Limit) return;
    std::vector<Vertex> local{join(prefix, Terminal::top()), join(prefix, Terminal::bottom())};
    if (cls.kind == OrdinalKind::Successor) {
      for (std::uint64_t i = 0; i < spec.hub_window(); ++i) local.push_back(join(prefix, Terminal::hub_at(i)));
    }
    for (std::size_t a = 0; a < local.size(); ++a) {
      for (std::size_t b = a + 1; b < local.size(); ++b) emit(local[a], local[b], depth);
    }
  }};
  walker.run();
  return out;
}

std::vector<Vertex> window_vertices(const DiamondSpec& spec, std::size_t max_vertices) {
  spec.validate();
  std::set<Vertex> all;
  auto add = [&](Vertex v) {
    all.insert(std::move(v));
    if (all.size() > max_vertices) {
      throw BudgetExceeded("diamond window exceeds vertex cap of " + std::to_string(max_vertices));
    }
  };
  WindowWalker walker{spec, [&](const std::vector<Slot>& prefix, const Ordinal& alpha, std::size_t,
                                const DyadicRational&) {
    add(join(prefix, Terminal::top()));
    add(join(prefix, Terminal::bottom()));
    if (classify(alpha).kind == OrdinalKind::Successor) {
      for (std::uint64_t i = 0; i < spec.hub_window(); ++i) add(join(prefix, Terminal::hub_at(i)));
    }
  }};
  walker.run();
  return {all.begin(), all.end()};
}

std::size_t Materialization::id(const Vertex& v) const {
  auto it = index.find(v);
  if (it == index.end()) throw std::out_of_range("vertex " + to_string(v) + " is not in the materialization");
  return it->second;
}

Materialization materialize(const DiamondSpec& spec, std::size_t max_vertices) {
  Materialization m;
  m.vertices = window_vertices(spec, max_vertices);
  for (std::size_t k = 0; k < m.vertices.size(); ++k) m.index.emplace(m.vertices[k], k);
  WindowWalker walker{spec, [&](const std::vector<Slot>& prefix, const Ordinal& alpha, std::size_t,
                                const DyadicRational& scale) {
    if (!alpha.is_zero()) return;
    m.edges.push_back(WeightedEdge{m.id(join(prefix, Terminal::bottom())), m.id(join(prefix, Terminal::top())), scale});
  }};
  walker.run();
  return m;
}

std::vector<Rational> oracle_distances(const Materialization& m, std::size_t source) {
  const std::size_t n = m.vertices.size();
  if (source >= n) throw std::out_of_range("source vertex out of range");
  std::vector<std::vector<std::pair<std::size_t, const Rational*>>> adj(n);
  for (const auto& e : m.edges) {
    adj[e.a].push_back({e.b, &e.weight.value()});
    adj[e.b].push_back({e.a, &e.weight.value()});
  }
  std::vector<std::optional<Rational>> best(n);
  std::vector<bool> done(n, false);
  using Item = std::pair<Rational, std::size_t>;
  auto cmp = [](const Item& a, const Item& b) { return a.first > b.first || (a.first == b.first && a.second > b.second); };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> queue(cmp);
  best[source] = Rational(0);
  queue.push({Rational(0), source});
  while (!queue.empty()) {
    auto [d, at] = queue.top();
    queue.pop();
    if (done[at]) continue;
    done[at] = true;
    for (const auto& [to, w] : adj[at]) {
      Rational cand = d + *w;
      if (!best[to] || cand < *best[to]) {
        best[to] = cand;
        queue.push({cand, to});
      }
    }
  }
  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!best[k]) throw std::logic_error("materialization is disconnected at " + to_string(m.vertices[k]));
    out[k] = *best[k];
  }
  return out;
}

Rational oracle_dist(const Materialization& m, const Vertex& u, const Vertex& v) {
  return oracle_distances(m, m.id(u))[m.id(v)];
}

std::string to_dot(const Materialization& m) {
  std::string out = "graph diamond {\n";
  for (const auto& v : m.vertices) out += "  \"" + to_string(v) + "\";\n";
  for (const auto& e : m.edges) {
    out += "  \"" + to_string(m.vertices[e.a]) + "\" -- \"" + to_string(m.vertices[e.b]) + "\" [label=\"" +
           e.weight.to_pow2_string() + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace ordia

#include "ordia/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordia {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  Vec out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json to_json(const TruncationSpec& t) {
  Json out{{"fan_width", t.fan_width}, {"limit_width", t.limit_width}};
  if (t.depth_budget) out["depth_budget"] = *t.depth_budget;
  return out;
}

TruncationSpec trunc_from_json(const Json& j) {
  TruncationSpec t;
  if (j.contains("fan_width")) t.fan_width = j.at("fan_width").get<std::uint64_t>();
  if (j.contains("limit_width")) t.limit_width = j.at("limit_width").get<std::uint64_t>();
  if (j.contains("depth_budget")) t.depth_budget = j.at("depth_budget").get<std::uint64_t>();
  t.validate();
  return t;
}

Json to_json(const NodePath& p, TreeKind kind) {
  Json out = Json::array();
  for (const auto& s : p) {
    if (kind == TreeKind::Sprawling) {
      out.push_back(Json::array({s.side, s.index}));
    } else {
      out.push_back(s.index);
    }
  }
  return out;
}

NodePath path_from_json(const Json& j, TreeKind kind) {
  if (!j.is_array()) throw std::invalid_argument("node path must be an array");
  NodePath out;
  for (const auto& s : j) {
    if (kind == TreeKind::Sprawling) {
      if (!s.is_array() || s.size() != 2) throw std::invalid_argument("sprawling steps are [side, index] pairs");
      out.push_back(Step{s[0].get<std::uint32_t>(), s[1].get<std::uint64_t>()});
    } else {
      out.push_back(Step{0, s.get<std::uint64_t>()});
    }
  }
  return out;
}

Json to_json(const LabelledTree& t) {
  Json labels = Json::array();
  for (const auto& [p, x] : t.labels) labels.push_back(Json::array({to_json(p, t.shape.kind), to_json(x)}));
  Json out{{"kind", to_string(t.shape.kind)},
           {"alpha", t.shape.alpha.to_string()},
           {"trunc", to_json(t.shape.trunc)},
           {"space", {{"dim", t.space.dim}, {"norm", to_string(t.space.norm)}}},
           {"delta", to_string(t.delta)},
           {"radius", to_string(t.radius)},
           {"labels", labels}};
  if (!t.weights.empty()) {
    Json weights = Json::array();
    for (const auto& [p, w] : t.weights) weights.push_back(Json::array({to_json(p, t.shape.kind), to_json(w)}));
    out["weights"] = weights;
  }
  return out;
}

LabelledTree tree_from_json(const Json& j) {
  try {
    LabelledTree t;
    const TreeKind kind = parse_tree_kind(field(j, "kind").get<std::string>());
    const Ordinal alpha = parse_ordinal(field(j, "alpha").get<std::string>());
    const TruncationSpec trunc = j.contains("trunc") ? trunc_from_json(j.at("trunc")) : TruncationSpec{};
    t.shape = build_shape(kind, alpha, trunc);
    const Json& space = field(j, "space");
    t.space = NormedSpace{field(space, "dim").get<std::size_t>(), parse_norm(field(space, "norm").get<std::string>())};
    t.delta = rational_from_json(field(j, "delta"));
    if (j.contains("radius")) t.radius = rational_from_json(j.at("radius"));
    for (const auto& entry : field(j, "labels")) {
      if (!entry.is_array() || entry.size() != 2) throw std::invalid_argument("labels are [path, vector] pairs");
      t.labels[path_from_json(entry[0], kind)] = vec_from_json(entry[1]);
    }
    if (j.contains("weights")) {
      for (const auto& entry : j.at("weights")) {
        if (!entry.is_array() || entry.size() != 2) throw std::invalid_argument("weights are [path, vector] pairs");
        t.weights[path_from_json(entry[0], kind)] = vec_from_json(entry[1]);
      }
    }
    return t;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("tree JSON: ") + e.what());
  }
}

Json to_json(const FiniteMetric& m) {
  Json d = Json::array();
  for (const auto& row : m.d) d.push_back(to_json(row));
  return Json{{"labels", m.labels}, {"d", d}};
}

FiniteMetric metric_from_json(const Json& j) {
  try {
    FiniteMetric m;
    const Json& d = field(j, "d");
    for (const auto& row : d) m.d.push_back(vec_from_json(row));
    if (j.contains("labels")) {
      m.labels = j.at("labels").get<std::vector<std::string>>();
    } else {
      for (std::size_t k = 0; k < m.d.size(); ++k) m.labels.push_back(std::to_string(k));
    }
    m.validate();
    return m;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("metric JSON: ") + e.what());
  }
}

Json to_json(const L1Result& r, const FiniteMetric& m) {
  Json cuts = Json::array();
  for (const auto& [cut, w] : r.cuts) {
    Json subset = Json::array();
    for (std::size_t x = 0; x < m.size(); ++x) {
      if ((cut >> x) & 1U) subset.push_back(m.labels[x]);
    }
    cuts.push_back(Json{{"subset", subset}, {"weight", to_string(w)}});
  }
  return Json{{"c", to_string(r.c)},
              {"c_float", r.c_float},
              {"status", r.status == LpStatus::Optimal ? "optimal" : "certified-fallback"},
              {"cuts", cuts}};
}

std::pair<Rational, CutCombination> certificate_from_json(const Json& j, const FiniteMetric& m) {
  try {
    Rational c = rational_from_json(field(j, "c"));
    CutCombination cuts;
    for (const auto& entry : field(j, "cuts")) {
      std::uint32_t mask = 0;
      for (const auto& name : field(entry, "subset")) {
        auto it = std::find(m.labels.begin(), m.labels.end(), name.get<std::string>());
        if (it == m.labels.end()) throw std::invalid_argument("unknown point in cut: " + name.get<std::string>());
        mask |= std::uint32_t{1} << (it - m.labels.begin());
      }
      // Cuts are stored without point 0; a subset containing it denotes the same cut.
      if (mask & 1U) mask = ((std::uint32_t{1} << m.size()) - 1) & ~mask;
      cuts[mask] += rational_from_json(field(entry, "weight"));
    }
    return {c, cuts};
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("certificate JSON: ") + e.what());
  }
}

Json to_json(const PointSet2D& c) {
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(Json::array({to_string(p.x), to_string(p.y)}));
  return Json{{"norm", to_string(c.norm)}, {"points", pts}};
}

PointSet2D points_from_json(const Json& j) {
  try {
    PointSet2D c;
    if (j.contains("norm")) c.norm = parse_norm(j.at("norm").get<std::string>());
    for (const auto& p : field(j, "points")) {
      if (!p.is_array() || p.size() != 2) throw std::invalid_argument("points are [x, y] pairs");
      c.points.push_back(Point2{rational_from_json(p[0]), rational_from_json(p[1])});
    }
    c.validate();
    return c;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("point set JSON: ") + e.what());
  }
}

Json to_json(const PeelReport& r) {
  Json stages = Json::array();
  for (const auto& s : r.stages) stages.push_back(to_json(s)["points"]);
  return Json{{"eps", to_string(r.eps)}, {"index", r.index}, {"stalled", r.stalled}, {"stages", stages}};
}

Json to_json(const ActivePair& p) {
  return Json{{"u", to_string(p.u)}, {"v", to_string(p.v)}, {"stage", p.stage}};
}

Json to_json(const DistortionReport& r) {
  Json out{{"pairs", r.pairs_checked},
           {"min_ratio", to_string(r.min_ratio)},
           {"max_ratio", to_string(r.max_ratio)},
           {"ratios_squared", r.squared},
           {"A", to_string(r.A)},
           {"B", to_string(r.B)},
           {"pass", r.pass}};
  Json witnesses = Json::object();
  if (r.min_witness) witnesses["min"] = to_json(*r.min_witness);
  if (r.max_witness) witnesses["max"] = to_json(*r.max_witness);
  out["witnesses"] = witnesses;
  if (r.failure) out["failure"] = to_json(*r.failure);
  return out;
}

Json to_json(const Materialization& m) {
  Json vertices = Json::array();
  for (const auto& v : m.vertices) vertices.push_back(to_string(v));
  Json edges = Json::array();
  for (const auto& e : m.edges) {
    edges.push_back(Json{{"u", to_string(m.vertices[e.a])}, {"v", to_string(m.vertices[e.b])},
                         {"weight", e.weight.to_pow2_string()}});
  }
  return Json{{"vertices", vertices}, {"edges", edges}};
}

Json to_json(const VerificationReport& r, TreeKind kind) {
  Json out{{"pass", r.pass}, {"truncated", r.truncated}, {"nodes_checked", r.nodes_checked}};
  if (!r.pass) {
    out["reason"] = r.reason;
    if (r.witness) out["witness"] = to_json(*r.witness, kind);
  }
  return out;
}

}  // namespace ordia

#pragma once

// JSON reading and writing for trees, metrics, certificates, point sets and
// reports. Rationals are always strings ("3/8"); ordinals use their printed
// form.

#include <json.hpp>

#include "ordia/diamond.hpp"
#include "ordia/embed.hpp"
#include "ordia/l1opt.hpp"
#include "ordia/peel.hpp"
#include "ordia/trees.hpp"

namespace ordia {

using Json = nlohmann::json;

Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json to_json(const TruncationSpec& t);
TruncationSpec trunc_from_json(const Json& j);

Json to_json(const LabelledTree& t);
/// Rebuilds the shape from kind/alpha/trunc and reads labels and weights.
/// Throws std::invalid_argument on schema errors.
LabelledTree tree_from_json(const Json& j);

Json to_json(const NodePath& p, TreeKind kind);
NodePath path_from_json(const Json& j, TreeKind kind);

Json to_json(const FiniteMetric& m);
FiniteMetric metric_from_json(const Json& j);

Json to_json(const L1Result& r, const FiniteMetric& m);
/// Reads the {c, cuts: [{subset, weight}]} certificate written by to_json.
std::pair<Rational, CutCombination> certificate_from_json(const Json& j, const FiniteMetric& m);

Json to_json(const PointSet2D& c);
PointSet2D points_from_json(const Json& j);
Json to_json(const PeelReport& r);

Json to_json(const ActivePair& p);
Json to_json(const DistortionReport& r);
Json to_json(const Materialization& m);
Json to_json(const VerificationReport& r, TreeKind kind);

}  // namespace ordia

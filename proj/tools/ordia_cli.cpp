// ordia: command-line front end.
//
// Exit status: 0 success, 1 verification failure (report still written),
// 2 usage or input error, 3 budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "ordia/diamond.hpp"
#include "ordia/dinfty.hpp"
#include "ordia/embed.hpp"
#include "ordia/json_io.hpp"
#include "ordia/l1opt.hpp"
#include "ordia/ordinal.hpp"
#include "ordia/peel.hpp"
#include "ordia/trees.hpp"
#include "ordia/verify.hpp"

using namespace ordia;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Options {
  std::string alpha = "1";
  std::string branching = "2";
  std::uint64_t fan_width = 3;
  std::uint64_t limit_width = 3;
  std::optional<std::uint64_t> depth_budget;
  std::uint64_t seed = 1;
  std::size_t pairs = 10'000;
  std::string format = "human";
  std::string input;
  std::string output;
  std::string kind = "dyadic";
  std::string labels = "none";
  std::string u, v, x, y, vertex, eps, a_const, b_const, certificate;
  std::size_t enumerate = 0;
  unsigned haar_depth = 0;
  bool window = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

TruncationSpec trunc_of(const Options& o) {
  TruncationSpec t{o.fan_width, o.limit_width, o.depth_budget};
  t.validate();
  return t;
}

DiamondSpec spec_of(const Options& o) {
  DiamondSpec s{parse_ordinal(o.alpha), parse_branching(o.branching), trunc_of(o)};
  s.validate();
  return s;
}

Json read_json(const std::string& path) {
  if (path.empty()) throw UsageError("an --input file is required");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw UsageError("cannot write " + o.output);
  out << text;
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

int sweep_result(const Options& o, const std::string& name, const SweepReport& r, bool exhaustive) {
  if (o.format == "json") {
    Json j{{"check", name}, {"checked", r.checked}, {"mismatches", r.mismatches}, {"pass", r.pass()}};
    if (!r.pass()) j["witness"] = r.witness;
    emit_json(o, j);
  } else {
    std::ostringstream out;
    out << name << ": pairs: " << (exhaustive ? std::string("all") : std::to_string(r.checked))
        << ", mismatches: " << r.mismatches << "\n";
    if (!r.pass()) out << "witness: " << r.witness << "\n";
    emit(o, out.str());
  }
  return r.pass() ? kOk : kFailed;
}

// --- subcommand bodies -----------------------------------------------------

int cmd_ordinal(const Options& o) {
  Ordinal a = parse_ordinal(o.alpha);
  auto cls = classify(a);
  Json j{{"ordinal", a.to_string()}};
  switch (cls.kind) {
    case OrdinalKind::Zero: j["kind"] = "zero"; break;
    case OrdinalKind::Successor:
      j["kind"] = "successor";
      j["predecessor"] = cls.predecessor->to_string();
      break;
    case OrdinalKind::Limit: j["kind"] = "limit"; break;
  }
  if (o.enumerate > 0) {
    if (cls.kind != OrdinalKind::Limit) throw UsageError("--enumerate needs a limit ordinal");
    Json list = Json::array();
    for (std::size_t n = 0; n < o.enumerate; ++n) list.push_back(enumerate_below(a, n).to_string());
    j["enumeration"] = list;
  }
  if (o.format == "json") {
    emit_json(o, j);
  } else {
    std::string text = j["ordinal"].get<std::string>() + " (" + j["kind"].get<std::string>() + ")\n";
    if (j.contains("predecessor")) text += "predecessor: " + j["predecessor"].get<std::string>() + "\n";
    if (j.contains("enumeration")) {
      for (std::size_t n = 0; n < j["enumeration"].size(); ++n) {
        text += std::to_string(n) + " -> " + j["enumeration"][n].get<std::string>() + "\n";
      }
    }
    emit(o, text);
  }
  return kOk;
}

int cmd_tree_build(const Options& o) {
  const TreeKind kind = parse_tree_kind(o.kind);
  const TruncationSpec trunc = trunc_of(o);
  LabelledTree t;
  if (o.labels == "haar") {
    if (kind != TreeKind::Dyadic) throw UsageError("haar labels are dyadic");
    t = haar_tree(o.haar_depth);
  } else if (o.labels == "linf") {
    const Ordinal alpha = parse_ordinal(o.alpha);
    if (kind == TreeKind::Dyadic) {
      t = linf_dyadic_tree(alpha, trunc, o.seed);
    } else if (kind == TreeKind::Sprawling) {
      t = linf_sprawling_tree(alpha, trunc, o.seed);
    } else {
      t = tree_as_bush(linf_dyadic_tree(alpha, trunc, o.seed));
    }
  } else if (o.labels == "none") {
    TreeShape shape = build_shape(kind, parse_ordinal(o.alpha), trunc);
    Json nodes = Json::array();
    for (const auto& [p, _] : shape.nodes) nodes.push_back(to_json(p, kind));
    emit_json(o, Json{{"kind", to_string(kind)},
                      {"alpha", shape.alpha.to_string()},
                      {"trunc", to_json(trunc)},
                      {"size", shape.size()},
                      {"truncated", shape.truncated()},
                      {"nodes", nodes}});
    return kOk;
  } else {
    throw UsageError("--labels must be none, haar or linf");
  }
  if (o.window) t = window_labels(t);
  emit_json(o, to_json(t));
  return kOk;
}

VerificationReport verify_any(const LabelledTree& t) {
  switch (t.shape.kind) {
    case TreeKind::Dyadic: return verify_dyadic(t);
    case TreeKind::Sprawling: return verify_sprawling(t);
    case TreeKind::Bush: {
      auto shape = check_bush_shape(t.shape);
      return shape.pass ? verify_bush(t) : shape;
    }
  }
  return {};
}

int cmd_tree_verify(const Options& o) {
  LabelledTree t = tree_from_json(read_json(o.input));
  auto r = verify_any(t);
  if (o.format == "json") {
    emit_json(o, to_json(r, t.shape.kind));
  } else {
    std::string text = std::string(r.pass ? "pass" : "fail") + " (" + std::to_string(r.nodes_checked) + " nodes" +
                       (r.truncated ? ", truncated window" : "") + ")\n";
    if (!r.pass) text += "reason: " + r.reason + "\nwitness: " + to_string(*r.witness, t.shape.kind) + "\n";
    emit(o, text);
  }
  return r.pass ? kOk : kFailed;
}

int cmd_diamond_dist(const Options& o) {
  DiamondSpec s = spec_of(o);
  Vertex u = normalize(s, parse_vertex(o.u));
  Vertex v = normalize(s, parse_vertex(o.v));
  DyadicRational d = dist(u, v);
  if (o.format == "json") {
    emit_json(o, Json{{"u", to_string(u)}, {"v", to_string(v)}, {"dist", d.to_string()}});
  } else {
    emit(o, d.to_string() + "\n");
  }
  return kOk;
}

int cmd_diamond_materialize(const Options& o) {
  Materialization m = materialize(spec_of(o));
  if (o.format == "dot") {
    emit(o, to_dot(m));
  } else if (o.format == "json") {
    emit_json(o, to_json(m));
  } else {
    DyadicRational lightest = 1;
    for (const auto& e : m.edges) lightest = min(lightest, e.weight);
    emit(o, "vertices: " + std::to_string(m.vertices.size()) + "\nedges: " + std::to_string(m.edges.size()) +
                "\nsmallest edge weight: " + lightest.to_pow2_string() + "\n");
  }
  return kOk;
}

int cmd_diamond_active_pairs(const Options& o) {
  auto pairs = active_pairs(spec_of(o));
  if (o.format == "json") {
    Json list = Json::array();
    for (const auto& p : pairs) list.push_back(to_json(p));
    emit_json(o, Json{{"count", pairs.size()}, {"pairs", list}});
  } else {
    std::string text;
    for (const auto& p : pairs) {
      text += to_string(p.u) + " " + to_string(p.v) + " " + std::to_string(p.stage) + "\n";
    }
    emit(o, text + "count: " + std::to_string(pairs.size()) + "\n");
  }
  return kOk;
}

int cmd_dinfty_psi(const Options& o) {
  DiamondSpec s = spec_of(o);
  Vertex v = normalize(s, parse_vertex(o.vertex));
  emit(o, to_string(psi(v)) + "\n");
  return kOk;
}

int cmd_dinfty_dist(const Options& o) {
  emit(o, dinf_dist(parse_dinf_code(o.x), parse_dinf_code(o.y)).to_string() + "\n");
  return kOk;
}

int cmd_dinfty_psi_check(const Options& o) {
  DiamondSpec s = spec_of(o);
  return sweep_result(o, "psi-check", isometry_sweep(s, o.pairs, o.seed), false);
}

struct Embedding {
  LabelledTree tree;
  PointMap map;
};

Embedding embedding_from_input(const Options& o) {
  LabelledTree t = tree_from_json(read_json(o.input));
  if (t.shape.kind == TreeKind::Dyadic) return {t, build_dyadic_embedding(t)};
  if (t.shape.kind == TreeKind::Sprawling) return {t, build_sprawling_embedding(t)};
  throw UsageError("embeddings are built from dyadic or sprawling trees");
}

int cmd_embed_build(const Options& o) {
  Embedding e = embedding_from_input(o);
  Json images = Json::object();
  for (const auto& v : window_vertices(e.map.spec())) images[to_string(v)] = to_json(e.map(v));
  emit_json(o, Json{{"tree", o.input},
                    {"spec", {{"alpha", e.map.spec().alpha.to_string()},
                              {"branching", branching_to_string(e.map.spec())},
                              {"trunc", to_json(e.map.spec().trunc)}}},
                    {"images", images}});
  return kOk;
}

Rational lower_constant(const Options& o, const LabelledTree& t) {
  if (!o.a_const.empty()) return parse_rational(o.a_const);
  return t.shape.kind == TreeKind::Dyadic ? t.delta : Rational(t.delta / 2);
}

int cmd_embed_check(const Options& o) {
  Embedding e = embedding_from_input(o);
  const Rational A = lower_constant(o, e.tree);
  const Rational B = o.b_const.empty() ? Rational(1) : parse_rational(o.b_const);
  auto r = check_distortion(e.map, A, B);
  if (o.format == "json") {
    emit_json(o, to_json(r));
  } else {
    std::string text = std::string(r.pass ? "pass" : "fail") + ": " + std::to_string(r.pairs_checked) +
                       " active pairs, ratio range [" + to_string(r.min_ratio) + ", " + to_string(r.max_ratio) + "]" +
                       (r.squared ? " (squared)" : "") + "\n";
    if (r.failure) text += "witness: " + to_string(r.failure->u) + " " + to_string(r.failure->v) + "\n";
    emit(o, text);
  }
  return r.pass ? kOk : kFailed;
}

int cmd_embed_extract(const Options& o) {
  Embedding e = embedding_from_input(o);
  const Rational A = lower_constant(o, e.tree);
  LabelledTree out;
  try {
    out = e.tree.shape.kind == TreeKind::Dyadic ? extract_dyadic_tree(e.map, A) : extract_sprawling_tree(e.map, A);
  } catch (const BranchTestFailed& err) {
    std::cerr << "extraction failed: " << err.what() << " at " << to_string(err.hub()) << "\n";
    return kFailed;
  }
  auto r = verify_any(out);
  emit_json(o, Json{{"tree", to_json(out)}, {"verification", to_json(r, out.shape.kind)}});
  return r.pass ? kOk : kFailed;
}

FiniteMetric metric_input(const Options& o) {
  if (!o.input.empty()) return metric_from_json(read_json(o.input));
  return metric_from_materialization(materialize(spec_of(o)));
}

int cmd_l1_min_distortion(const Options& o) {
  FiniteMetric m = metric_input(o);
  L1Result r = min_distortion_l1(m);
  auto check = verify_cut_sandwich(m, r.cuts, r.c);
  if (o.format == "json") {
    Json j = to_json(r, m);
    j["certified"] = check.pass;
    emit_json(o, j);
  } else {
    std::string text = "c = " + to_string(r.c) + " (float " + std::to_string(r.c_float) + ")\ncuts: " +
                       std::to_string(r.cuts.size()) + "\ncertificate: " + (check.pass ? "pass" : "FAIL " + check.reason) +
                       "\n";
    emit(o, text);
  }
  return check.pass ? kOk : kFailed;
}

int cmd_l1_certify(const Options& o) {
  FiniteMetric m = metric_input(o);
  if (o.certificate.empty()) throw UsageError("--certificate is required");
  auto [c, cuts] = certificate_from_json(read_json(o.certificate), m);
  auto r = verify_cut_sandwich(m, cuts, c);
  std::string text = std::string(r.pass ? "pass" : "fail") + " at c = " + to_string(c) + "\n";
  if (!r.pass) {
    text += "reason: " + r.reason + "\n";
    if (r.witness) text += "witness: " + m.labels[r.witness->first] + " " + m.labels[r.witness->second] + "\n";
  }
  emit(o, text);
  return r.pass ? kOk : kFailed;
}

int cmd_peel(const Options& o) {
  if (o.eps.empty()) throw UsageError("--eps is required");
  PointSet2D c = points_from_json(read_json(o.input));
  auto r = peel_index(c, parse_rational(o.eps));
  if (o.format == "json") {
    emit_json(o, to_json(r));
  } else {
    std::string text = r.stalled ? "index: infinite at this scale (stage " + std::to_string(r.index) + " is stationary)\n"
                                 : "index: " + std::to_string(r.index) + "\n";
    for (std::size_t k = 0; k < r.stages.size(); ++k) {
      text += "stage " + std::to_string(k) + ": " + std::to_string(r.stages[k].points.size()) + " points\n";
    }
    emit(o, text);
  }
  return r.stalled ? kFailed : kOk;
}

int cmd_verify_oracle(const Options& o) { return sweep_result(o, "oracle", oracle_sweep(spec_of(o)), true); }

int cmd_verify_all(const Options& o) {
  DiamondSpec s = spec_of(o);
  DiamondSpec omega = s;
  omega.branching = std::nullopt;
  int status = kOk;
  std::string text;
  auto run = [&](const std::string& name, const SweepReport& r) {
    text += name + ": checked " + std::to_string(r.checked) + ", mismatches " + std::to_string(r.mismatches) + "\n";
    if (!r.pass()) {
      text += "  witness: " + r.witness + "\n";
      status = kFailed;
    }
  };
  run("oracle", oracle_sweep(s));
  run("poles", pole_sweep(s));
  run("metric", metric_sweep(s, o.pairs, o.seed));
  run("isometry", isometry_sweep(omega, o.pairs, o.seed));
  run("scaling", scaling_sweep(o.pairs / 10, o.seed));
  emit(o, text);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Diamond graphs of ordinal height, trees and embeddings in exact arithmetic"};
  app.require_subcommand(1);
  std::function<int(const Options&)> action;

  auto spec_flags = [&](CLI::App* c) {
    c->add_option("--alpha", o.alpha, "ordinal height, e.g. w^2+1")->capture_default_str();
    c->add_option("--branching", o.branching, "finite branching >= 2 or w")->capture_default_str();
    c->add_option("--fan-width", o.fan_width, "members kept per infinite fan")->capture_default_str();
    c->add_option("--limit-width", o.limit_width, "summands kept per limit stage")->capture_default_str();
  };
  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "human, json or dot")->capture_default_str();
    c->add_option("-o,--output", o.output, "write the report here instead of stdout");
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, int (*fn)(const Options&)) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->callback([&action, fn] { action = fn; });
    common(c);
    return c;
  };

  CLI::App* ord = leaf(&app, "ordinal", "parse, classify and enumerate an ordinal", cmd_ordinal);
  ord->add_option("expr", o.alpha, "ordinal expression")->required();
  ord->add_option("--enumerate", o.enumerate, "print the first N ordinals of the canonical enumeration");

  CLI::App* tree = app.add_subcommand("tree", "tree shapes and labelled trees");
  tree->require_subcommand(1);
  CLI::App* tb = leaf(tree, "build", "build a shape or a stock labelled tree", cmd_tree_build);
  spec_flags(tb);
  tb->add_option("--kind", o.kind, "dyadic, sprawling or bush")->capture_default_str();
  tb->add_option("--labels", o.labels, "none, haar or linf")->capture_default_str();
  tb->add_option("--depth", o.haar_depth, "depth of the haar tree");
  tb->add_option("--depth-budget", o.depth_budget, "cut the shape below this depth");
  tb->add_option("--seed", o.seed, "label seed")->capture_default_str();
  tb->add_flag("--window", o.window, "map labels by x -> x/4 + 3/4 e_0");
  CLI::App* tv = leaf(tree, "verify", "verify a labelled tree", cmd_tree_verify);
  tv->add_option("-i,--input", o.input, "tree JSON")->required();

  CLI::App* diamond = app.add_subcommand("diamond", "diamond graphs");
  diamond->require_subcommand(1);
  CLI::App* dd = leaf(diamond, "dist", "distance between two vertices", cmd_diamond_dist);
  spec_flags(dd);
  dd->add_option("--u", o.u, "vertex address")->required();
  dd->add_option("--v", o.v, "vertex address")->required();
  CLI::App* dm = leaf(diamond, "materialize", "summarize the window as a weighted graph", cmd_diamond_materialize);
  spec_flags(dm);
  CLI::App* dx = leaf(diamond, "export", "write the window as DOT or JSON", cmd_diamond_materialize);
  spec_flags(dx);
  CLI::App* dap = leaf(diamond, "active-pairs", "list the windowed active pairs", cmd_diamond_active_pairs);
  spec_flags(dap);

  CLI::App* dinf = app.add_subcommand("dinfty", "the limit diamond");
  dinf->require_subcommand(1);
  CLI::App* dp = leaf(dinf, "psi", "image of a vertex of D_alpha^w", cmd_dinfty_psi);
  spec_flags(dp);
  dp->add_option("--vertex", o.vertex, "vertex address")->required();
  CLI::App* ddist = leaf(dinf, "dist", "distance between two codes", cmd_dinfty_dist);
  ddist->add_option("--x", o.x, "code, e.g. A=[0];r=1/2")->required();
  ddist->add_option("--y", o.y, "code")->required();
  CLI::App* dpc = leaf(dinf, "psi-check", "sampled isometry check", cmd_dinfty_psi_check);
  spec_flags(dpc);
  dpc->add_option("--pairs", o.pairs, "sampled pairs")->capture_default_str();
  dpc->add_option("--seed", o.seed, "sampling seed")->capture_default_str();

  CLI::App* embed = app.add_subcommand("embed", "embeddings built from trees");
  embed->require_subcommand(1);
  for (auto [name, help, fn] : {std::tuple{"build", "images of the window vertices", &cmd_embed_build},
                                std::tuple{"check", "distortion on active pairs", &cmd_embed_check},
                                std::tuple{"extract", "build, then extract a tree back", &cmd_embed_extract}}) {
    CLI::App* c = leaf(embed, name, help, fn);
    c->add_option("-i,--input", o.input, "tree JSON")->required();
    c->add_option("--A", o.a_const, "lower constant (default delta, or delta/2 for sprawling trees)");
    c->add_option("--B", o.b_const, "upper constant (default 1)");
  }

  CLI::App* l1 = app.add_subcommand("l1", "minimum l1 distortion through the cut cone");
  l1->require_subcommand(1);
  CLI::App* lm = leaf(l1, "min-distortion", "solve the cut LP", cmd_l1_min_distortion);
  spec_flags(lm);
  lm->add_option("--metric", o.input, "metric JSON (default: the diamond window)");
  CLI::App* lc = leaf(l1, "certify", "check a certificate exactly", cmd_l1_certify);
  spec_flags(lc);
  lc->add_option("--metric", o.input, "metric JSON (default: the diamond window)");
  lc->add_option("--certificate", o.certificate, "certificate JSON")->required();

  CLI::App* peel = leaf(&app, "peel", "half-space peeling of a planar point set", cmd_peel);
  peel->add_option("--eps", o.eps, "slice diameter bound")->required();
  peel->add_option("-i,--input", o.input, "point set JSON")->required();

  CLI::App* verify = app.add_subcommand("verify", "verification sweeps");
  verify->require_subcommand(1);
  CLI::App* vo = leaf(verify, "oracle", "recursive distance against Dijkstra on all pairs", cmd_verify_oracle);
  spec_flags(vo);
  CLI::App* va = leaf(verify, "all", "every sweep for one spec", cmd_verify_all);
  spec_flags(va);
  va->add_option("--pairs", o.pairs, "sampled pairs and triples")->capture_default_str();
  va->add_option("--seed", o.seed, "sampling seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (dx->parsed() && o.format == "human") o.format = "dot";
  try {
    return action(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

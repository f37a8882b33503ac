#include "ordia/l1opt.hpp"

#include <algorithm>
#include <stdexcept>

#include "simplex.hpp"

namespace ordia {

namespace {

bool separates(std::uint32_t cut, std::size_t x, std::size_t y) { return ((cut >> x) & 1U) != ((cut >> y) & 1U); }

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) out.push_back({x, y});
  }
  return out;
}

}  // namespace

void FiniteMetric::validate() const {
  const std::size_t n = labels.size();
  if (d.size() != n) throw std::invalid_argument("distance matrix size does not match the label count");
  for (const auto& row : d) {
    if (row.size() != n) throw std::invalid_argument("distance matrix is not square");
  }
  auto where = [&](std::size_t x, std::size_t y) { return " at (" + labels[x] + ", " + labels[y] + ")"; };
  for (std::size_t x = 0; x < n; ++x) {
    if (d[x][x] != 0) throw std::invalid_argument("nonzero diagonal" + where(x, x));
    for (std::size_t y = 0; y < n; ++y) {
      if (d[x][y] != d[y][x]) throw std::invalid_argument("asymmetric distance" + where(x, y));
      if (x != y && d[x][y] <= 0) throw std::invalid_argument("nonpositive distance" + where(x, y));
      for (std::size_t z = 0; z < n; ++z) {
        if (d[x][z] > d[x][y] + d[y][z]) throw std::invalid_argument("triangle inequality fails" + where(x, z));
      }
    }
  }
}

FiniteMetric metric_from_materialization(const Materialization& m) {
  FiniteMetric out;
  const std::size_t n = m.vertices.size();
  out.d.assign(n, std::vector<Rational>(n));
  for (std::size_t x = 0; x < n; ++x) {
    out.labels.push_back(to_string(m.vertices[x]));
    for (std::size_t y = 0; y < n; ++y) out.d[x][y] = dist(m.vertices[x], m.vertices[y]).value();
  }
  return out;
}

SandwichReport verify_cut_sandwich(const FiniteMetric& m, const CutCombination& cuts, const Rational& c) {
  SandwichReport r;
  for (const auto& [cut, w] : cuts) {
    if (w < 0) {
      r.pass = false;
      r.reason = "negative cut weight";
      return r;
    }
    if (cut == 0 || (cut & 1U) || cut >= (std::uint32_t{1} << m.size())) {
      r.pass = false;
      r.reason = "cut " + std::to_string(cut) + " is not a proper subset avoiding point 0";
      return r;
    }
  }
  for (auto [x, y] : all_pairs(m.size())) {
    Rational rho = 0;
    for (const auto& [cut, w] : cuts) {
      if (separates(cut, x, y)) rho += w;
    }
    if (rho < m.d[x][y] || rho > c * m.d[x][y]) {
      r.pass = false;
      r.witness = {x, y};
      r.reason = "cut distance " + to_string(rho) + " outside [d, c d] for d = " + to_string(m.d[x][y]);
      return r;
    }
  }
  return r;
}

L1Result min_distortion_l1(const FiniteMetric& m) {
  const std::size_t n = m.size();
  if (n > kMaxCutPoints) {
    throw std::invalid_argument("min_distortion_l1 supports at most " + std::to_string(kMaxCutPoints) + " points");
  }
  m.validate();
  L1Result out;
  if (n < 2) {
    out.c = 1;
    out.c_float = 1.0;
    return out;
  }
  // max t  s.t.  rho_xy <= d_xy  and  t d_xy - rho_xy <= 0, rho = sum lambda_S delta_S.
  // At the optimum the distortion is 1/t with certificate lambda / t.
  const auto pairs = all_pairs(n);
  const std::size_t P = pairs.size();
  const std::uint32_t cut_count = (std::uint32_t{1} << (n - 1)) - 1;
  detail::SparseLp lp;
  lp.rows = 2 * P;
  lp.b.assign(2 * P, Rational(0));
  for (std::size_t p = 0; p < P; ++p) lp.b[p] = m.d[pairs[p].first][pairs[p].second];
  std::vector<std::uint32_t> cut_of;
  for (std::uint32_t k = 1; k <= cut_count; ++k) {
    const std::uint32_t cut = k << 1;  // never contains point 0
    std::vector<std::pair<std::size_t, Rational>> col;
    for (std::size_t p = 0; p < P; ++p) {
      if (separates(cut, pairs[p].first, pairs[p].second)) {
        col.push_back({p, Rational(1)});
        col.push_back({P + p, Rational(-1)});
      }
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    lp.columns.push_back(std::move(col));
    lp.c.push_back(Rational(0));
    cut_of.push_back(cut);
  }
  std::vector<std::pair<std::size_t, Rational>> tcol;
  for (std::size_t p = 0; p < P; ++p) tcol.push_back({P + p, lp.b[p]});
  lp.columns.push_back(std::move(tcol));
  lp.c.push_back(Rational(1));

  auto sol = detail::solve_lp(lp);
  const Rational t = sol.x.back();
  if (t <= 0) throw std::logic_error("cut LP returned a nonpositive scale");
  out.c = 1 / t;
  out.c_float = sol.float_objective > 0 ? 1.0 / sol.float_objective : 0.0;
  out.float_pivots = sol.float_pivots;
  out.exact_pivots = sol.exact_pivots;
  out.status = sol.float_basis_optimal ? LpStatus::Optimal : LpStatus::CertifiedFallback;
  for (std::size_t j = 0; j < cut_of.size(); ++j) {
    if (sol.x[j] != 0) out.cuts[cut_of[j]] = sol.x[j] / t;
  }
  return out;
}

std::vector<Vec> cuts_to_embedding(const FiniteMetric& m, const CutCombination& cuts) {
  std::vector<Vec> out(m.size(), zeros(cuts.size()));
  std::size_t k = 0;
  for (const auto& [cut, w] : cuts) {
    for (std::size_t x = 0; x < m.size(); ++x) {
      if ((cut >> x) & 1U) out[x][k] = w;
    }
    ++k;
  }
  return out;
}

// --- step functions ----------------------------------------------------------

DyadicStepFunction::DyadicStepFunction() : breaks_{DyadicRational(0), DyadicRational(1)}, values_{Rational(0)} {}

DyadicStepFunction::DyadicStepFunction(std::vector<DyadicRational> breakpoints, std::vector<Rational> values)
    : breaks_(std::move(breakpoints)), values_(std::move(values)) {
  if (breaks_.size() != values_.size() + 1 || breaks_.front() != DyadicRational(0) ||
      breaks_.back() != DyadicRational(1)) {
    throw std::invalid_argument("step function breakpoints must run from 0 to 1 around the values");
  }
  for (std::size_t k = 0; k + 1 < breaks_.size(); ++k) {
    if (!(breaks_[k] < breaks_[k + 1])) throw std::invalid_argument("step function breakpoints must increase");
  }
  simplify();
}

DyadicStepFunction DyadicStepFunction::indicator(const DyadicRational& a, const DyadicRational& b,
                                                 const Rational& value) {
  if (!(DyadicRational(0) <= a && a <= b && b <= DyadicRational(1))) {
    throw std::invalid_argument("indicator interval must satisfy 0 <= a <= b <= 1");
  }
  if (a == b) return DyadicStepFunction();
  std::vector<DyadicRational> br{DyadicRational(0)};
  std::vector<Rational> vals;
  if (a > DyadicRational(0)) {
    br.push_back(a);
    vals.push_back(0);
  }
  vals.push_back(value);
  br.push_back(b);
  if (b < DyadicRational(1)) {
    vals.push_back(0);
    br.push_back(DyadicRational(1));
  }
  return DyadicStepFunction(std::move(br), std::move(vals));
}

void DyadicStepFunction::simplify() {
  std::vector<DyadicRational> br{breaks_.front()};
  std::vector<Rational> vals;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!vals.empty() && vals.back() == values_[k]) {
      br.back() = breaks_[k + 1];
    } else {
      vals.push_back(values_[k]);
      br.push_back(breaks_[k + 1]);
    }
  }
  breaks_ = std::move(br);
  values_ = std::move(vals);
}

Rational DyadicStepFunction::l1_norm() const {
  Rational acc = 0;
  for (std::size_t k = 0; k < values_.size(); ++k) acc += abs(values_[k]) * (breaks_[k + 1] - breaks_[k]).value();
  return acc;
}

namespace {

DyadicStepFunction combine(const DyadicStepFunction& f, const DyadicStepFunction& g, int sign) {
  std::vector<DyadicRational> br;
  std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
             std::back_inserter(br));
  br.erase(std::unique(br.begin(), br.end()), br.end());
  std::vector<Rational> vals;
  std::size_t i = 0, j = 0;
  for (std::size_t k = 0; k + 1 < br.size(); ++k) {
    while (f.breakpoints()[i + 1] <= br[k]) ++i;
    while (g.breakpoints()[j + 1] <= br[k]) ++j;
    vals.push_back(sign > 0 ? Rational(f.values()[i] + g.values()[j]) : Rational(f.values()[i] - g.values()[j]));
  }
  return DyadicStepFunction(std::move(br), std::move(vals));
}

}  // namespace

DyadicStepFunction operator+(const DyadicStepFunction& f, const DyadicStepFunction& g) { return combine(f, g, 1); }
DyadicStepFunction operator-(const DyadicStepFunction& f, const DyadicStepFunction& g) { return combine(f, g, -1); }

DyadicStepFunction DyadicStepFunction::scaled(const Rational& s) const {
  std::vector<Rational> vals = values_;
  for (auto& v : vals) v *= s;
  return DyadicStepFunction(breaks_, std::move(vals));
}

std::vector<DyadicStepFunction> cuts_to_step_functions(const FiniteMetric& m, const CutCombination& cuts) {
  long e = 0;
  while ((std::size_t{1} << e) < cuts.size()) ++e;
  const DyadicRational width = DyadicRational::pow2(-e);
  const Rational height = DyadicRational::pow2(e).value();
  std::vector<DyadicStepFunction> out(m.size());
  long k = 0;
  for (const auto& [cut, w] : cuts) {
    const DyadicRational a = width * DyadicRational(k);
    for (std::size_t x = 0; x < m.size(); ++x) {
      if ((cut >> x) & 1U) out[x] = out[x] + DyadicStepFunction::indicator(a, a + width, w * height);
    }
    ++k;
  }
  return out;
}

ProviderReport verify_provider(const L1Provider& provider, const std::vector<std::pair<DInfCode, DInfCode>>& pairs) {
  ProviderReport r;
  for (const auto& [x, y] : pairs) {
    const Rational d = dinf_dist(x, y).value();
    const Rational n = (provider(x) - provider(y)).l1_norm();
    ++r.pairs_checked;
    if (n * 2 < d || n > d) {
      r.pass = false;
      r.witness = {x, y};
      return r;
    }
  }
  return r;
}

}  // namespace ordia

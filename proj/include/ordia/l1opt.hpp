#pragma once

// Minimum-distortion embeddings of small finite metrics into l1 through the
// cut cone, and exact dyadic step functions on [0, 1).

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ordia/diamond.hpp"
#include "ordia/dinfty.hpp"
#include "ordia/exact.hpp"

namespace ordia {

struct FiniteMetric {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> d;

  std::size_t size() const { return labels.size(); }
  /// Symmetry, zero diagonal, positivity and the triangle inequality.
  /// Throws std::invalid_argument with the offending indices.
  void validate() const;
};

FiniteMetric metric_from_materialization(const Materialization& m);

/// Subsets are bitmasks over the points; a cut never contains point 0, so
/// each unordered cut {S, complement} appears once.
using CutCombination = std::map<std::uint32_t, Rational>;

inline constexpr std::size_t kMaxCutPoints = 14;

struct SandwichReport {
  bool pass = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string reason;
};

/// Exact check of d <= sum_S lambda_S delta_S <= c d on all pairs.
SandwichReport verify_cut_sandwich(const FiniteMetric& m, const CutCombination& cuts, const Rational& c);

enum class LpStatus { Optimal, CertifiedFallback };

struct L1Result {
  Rational c;             // exact minimum distortion
  double c_float = 0.0;   // value reported by the floating-point solve
  CutCombination cuts;    // exact certificate, scaled so that d <= cut metric
  LpStatus status = LpStatus::Optimal;
  std::size_t float_pivots = 0;
  std::size_t exact_pivots = 0;
};

/// Solves the cut-cone LP in floating point, then re-solves the final basis
/// in exact rationals (pivoting further in exact arithmetic when the float
/// basis is not exactly optimal). Throws std::invalid_argument past
/// kMaxCutPoints points.
L1Result min_distortion_l1(const FiniteMetric& m);

/// One coordinate per cut with value lambda_S on the members of S.
std::vector<Vec> cuts_to_embedding(const FiniteMetric& m, const CutCombination& cuts);

/// A piecewise-constant function on [0, 1) with dyadic breakpoints.
/// breakpoints has one more entry than values and runs from 0 to 1.
class DyadicStepFunction {
 public:
  DyadicStepFunction();  // the zero function
  DyadicStepFunction(std::vector<DyadicRational> breakpoints, std::vector<Rational> values);

  /// value on [a, b), zero elsewhere.
  static DyadicStepFunction indicator(const DyadicRational& a, const DyadicRational& b,
                                      const Rational& value = Rational(1));

  const std::vector<DyadicRational>& breakpoints() const { return breaks_; }
  const std::vector<Rational>& values() const { return values_; }

  Rational l1_norm() const;

  friend DyadicStepFunction operator+(const DyadicStepFunction& f, const DyadicStepFunction& g);
  friend DyadicStepFunction operator-(const DyadicStepFunction& f, const DyadicStepFunction& g);
  DyadicStepFunction scaled(const Rational& s) const;

 private:
  void simplify();

  std::vector<DyadicRational> breaks_;
  std::vector<Rational> values_;
};

/// Images of each point under the cut embedding as step functions: cut k of
/// q total is placed on [k/2^m, (k+1)/2^m) with 2^m >= q, with height
/// lambda * 2^m.
std::vector<DyadicStepFunction> cuts_to_step_functions(const FiniteMetric& m, const CutCombination& cuts);

/// A user-supplied map D_infinity -> L1[0, 1].
using L1Provider = std::function<DyadicStepFunction(const DInfCode&)>;

struct ProviderReport {
  std::size_t pairs_checked = 0;
  bool pass = true;
  std::optional<std::pair<DInfCode, DInfCode>> witness;
};

/// Checks d/2 <= ||P(x) - P(y)||_1 <= d on the given pairs.
ProviderReport verify_provider(const L1Provider& provider, const std::vector<std::pair<DInfCode, DInfCode>>& pairs);

}  // namespace ordia

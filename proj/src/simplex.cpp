#include "simplex.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>

namespace ordia::detail {

namespace {

constexpr double kEps = 1e-9;
constexpr std::size_t kDegenerateStreak = 50;
constexpr std::size_t kFloatPivotCap = 200000;

// Dense tableau over [A | I]; returns the final basis.
std::vector<std::size_t> float_phase(const SparseLp& lp, std::size_t& pivots, double& objective) {
  const std::size_t m = lp.rows;
  const std::size_t n = lp.columns.size();
  const std::size_t width = n + m + 1;  // last column is the right-hand side
  std::vector<double> t((m + 1) * width, 0.0);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return t[i * width + j]; };
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [i, v] : lp.columns[j]) at(i, j) = v.get_d();
    at(m, j) = lp.c[j].get_d();
  }
  for (std::size_t i = 0; i < m; ++i) {
    at(i, n + i) = 1.0;
    at(i, width - 1) = lp.b[i].get_d();
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  std::size_t streak = 0;
  pivots = 0;
  while (pivots < kFloatPivotCap) {
    const bool bland = streak >= kDegenerateStreak;
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (at(m, j) <= kEps) continue;
      if (!enter || (!bland && at(m, j) > at(m, *enter))) enter = j;
      if (bland) break;
    }
    if (!enter) break;
    std::optional<std::size_t> leave;
    double best = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double a = at(i, *enter);
      if (a <= kEps) continue;
      double ratio = at(i, width - 1) / a;
      if (!leave || ratio < best - kEps || (ratio <= best + kEps && basis[i] < basis[*leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (!leave) throw std::runtime_error("linear program is unbounded");
    streak = best <= kEps ? streak + 1 : 0;
    const std::size_t r = *leave;
    const double p = at(r, *enter);
    for (std::size_t j = 0; j < width; ++j) at(r, j) /= p;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r) continue;
      double f = at(i, *enter);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) at(i, j) -= f * at(r, j);
    }
    basis[r] = *enter;
    ++pivots;
  }
  objective = -at(m, width - 1);
  return basis;
}

class ExactSimplex {
 public:
  explicit ExactSimplex(const SparseLp& lp) : lp_(lp), m_(lp.rows), n_(lp.columns.size()) {}

  // Loads a basis; false if it is singular or infeasible.
  bool load(const std::vector<std::size_t>& basis) {
    std::vector<std::vector<Rational>> mat(m_, std::vector<Rational>(2 * m_));
    for (std::size_t k = 0; k < m_; ++k) {
      for (const auto& [i, v] : column(basis[k])) mat[i][k] = v;
      mat[k][m_ + k] = 1;
    }
    for (std::size_t col = 0; col < m_; ++col) {
      std::size_t piv = col;
      while (piv < m_ && mat[piv][col] == 0) ++piv;
      if (piv == m_) return false;
      std::swap(mat[piv], mat[col]);
      Rational inv = 1 / mat[col][col];
      for (auto& v : mat[col]) {
        if (v != 0) v *= inv;
      }
      for (std::size_t i = 0; i < m_; ++i) {
        if (i == col || mat[i][col] == 0) continue;
        Rational f = mat[i][col];
        for (std::size_t j = 0; j < 2 * m_; ++j) {
          if (mat[col][j] != 0) mat[i][j] -= f * mat[col][j];
        }
      }
    }
    binv_.assign(m_, std::vector<Rational>(m_));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) binv_[i][j] = mat[i][m_ + j];
    }
    basis_ = basis;
    xb_.assign(m_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t k = 0; k < m_; ++k) {
        if (binv_[i][k] != 0 && lp_.b[k] != 0) xb_[i] += binv_[i][k] * lp_.b[k];
      }
      if (xb_[i] < 0) return false;
    }
    return true;
  }

  void load_slack() {
    std::vector<std::size_t> basis(m_);
    for (std::size_t i = 0; i < m_; ++i) basis[i] = n_ + i;
    load(basis);
  }

  // Bland's rule pivots until optimal. Returns the number of pivots.
  std::size_t optimize() {
    std::size_t pivots = 0;
    while (true) {
      std::vector<Rational> y(m_);
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& cb = cost(basis_[i]);
        if (cb == 0) continue;
        for (std::size_t k = 0; k < m_; ++k) {
          if (binv_[i][k] != 0) y[k] += cb * binv_[i][k];
        }
      }
      std::vector<bool> basic(n_ + m_, false);
      for (auto j : basis_) basic[j] = true;
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < n_ + m_ && !enter; ++j) {
        if (basic[j]) continue;
        Rational rc = cost(j);
        for (const auto& [i, v] : column(j)) rc -= y[i] * v;
        if (rc > 0) enter = j;
      }
      if (!enter) return pivots;
      std::vector<Rational> dcol(m_);
      for (const auto& [k, v] : column(*enter)) {
        for (std::size_t i = 0; i < m_; ++i) {
          if (binv_[i][k] != 0) dcol[i] += binv_[i][k] * v;
        }
      }
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (dcol[i] <= 0) continue;
        Rational ratio = xb_[i] / dcol[i];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) throw std::runtime_error("linear program is unbounded");
      const std::size_t r = *leave;
      const Rational p = dcol[r];
      for (auto& v : binv_[r]) {
        if (v != 0) v /= p;
      }
      xb_[r] /= p;
      for (std::size_t i = 0; i < m_; ++i) {
        if (i == r || dcol[i] == 0) continue;
        const Rational f = dcol[i];
        for (std::size_t k = 0; k < m_; ++k) {
          if (binv_[r][k] != 0) binv_[i][k] -= f * binv_[r][k];
        }
        xb_[i] -= f * xb_[r];
      }
      basis_[r] = *enter;
      ++pivots;
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = xb_[i];
    }
    return x;
  }

 private:
  const std::vector<std::pair<std::size_t, Rational>>& column(std::size_t j) {
    if (j < n_) return lp_.columns[j];
    auto it = slack_cols_.find(j);
    if (it == slack_cols_.end()) {
      it = slack_cols_.emplace(j, std::vector<std::pair<std::size_t, Rational>>{{j - n_, Rational(1)}}).first;
    }
    return it->second;
  }
  const Rational& cost(std::size_t j) const { return j < n_ ? lp_.c[j] : zero_; }

  const SparseLp& lp_;
  std::size_t m_;
  std::size_t n_;
  Rational zero_{0};
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> slack_cols_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> xb_;
};

}  // namespace

LpSolution solve_lp(const SparseLp& lp) {
  if (lp.b.size() != lp.rows || lp.c.size() != lp.columns.size()) throw std::invalid_argument("malformed LP");
  for (const auto& v : lp.b) {
    if (v < 0) throw std::invalid_argument("LP right-hand side must be nonnegative");
  }
  LpSolution out;
  auto basis = float_phase(lp, out.float_pivots, out.float_objective);
  ExactSimplex exact(lp);
  const bool loaded = exact.load(basis);
  if (!loaded) exact.load_slack();
  out.exact_pivots = exact.optimize();
  out.float_basis_optimal = loaded && out.exact_pivots == 0;
  out.x = exact.solution();
  out.objective = 0;
  for (std::size_t j = 0; j < out.x.size(); ++j) out.objective += lp.c[j] * out.x[j];
  return out;
}

}  // namespace ordia::detail

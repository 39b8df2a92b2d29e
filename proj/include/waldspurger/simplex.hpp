#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "waldspurger/error.hpp"
#include "waldspurger/matrix.hpp"

namespace wald {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value = 0;
  RatVector x;
};

namespace detail {

// Dense tableau: rows 0..k-1 are constraints (last column is the right hand
// side), row k is the objective row holding reduced costs of a maximization.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t vars) : t_(rows + 1, vars + 1), basis_(rows, 0) {}

  Rational& at(std::size_t i, std::size_t j) { return t_(i, j); }
  const Rational& at(std::size_t i, std::size_t j) const { return t_(i, j); }
  std::size_t rows() const { return t_.rows() - 1; }
  std::size_t vars() const { return t_.cols() - 1; }
  Rational& rhs(std::size_t i) { return t_(i, vars()); }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t_(r, c);
    for (std::size_t j = 0; j < t_.cols(); ++j) t_(r, j) /= p;
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      if (i == r || t_(i, c) == 0) continue;
      const Rational f = t_(i, c);
      for (std::size_t j = 0; j < t_.cols(); ++j)
        if (t_(r, j) != 0) t_(i, j) -= f * t_(r, j);
    }
    basis_[r] = c;
  }

  // Objective row stores c_j - z_j; maximize until no positive entry among
  // the allowed columns. Bland's rule prevents cycling.
  bool optimize(std::size_t allowed) {
    const std::size_t obj = rows();
    while (true) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (t_(obj, j) > 0) {
          enter = j;
          break;
        }
      if (enter == allowed) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < obj; ++i) {
        if (t_(i, enter) <= 0) continue;
        const Rational ratio = t_(i, vars()) / t_(i, enter);
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, enter);
    }
  }

  // Objective row for cost vector c over the first c.size() columns.
  void set_objective(const RatVector& c) {
    const std::size_t obj = rows();
    for (std::size_t j = 0; j < t_.cols(); ++j) t_(obj, j) = j < c.size() ? c[j] : Rational(0);
    for (std::size_t i = 0; i < obj; ++i) {
      const std::size_t b = basis_[i];
      if (b >= c.size() || c[b] == 0) continue;
      const Rational f = c[b];
      for (std::size_t j = 0; j < t_.cols(); ++j) t_(obj, j) -= f * t_(i, j);
    }
  }

  Rational objective_value() const { return -t_(rows(), vars()); }

 private:
  RatMatrix t_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

// maximize c.x subject to A x = b, x >= 0, exactly over the rationals.
inline LpResult solve_lp(const RatMatrix& a, const RatVector& b, const RatVector& c) {
  const std::size_t k = a.rows(), nv = a.cols();
  if (b.size() != k || c.size() != nv) throw InputError("solve_lp: dimension mismatch");
  detail::Tableau tab(k, nv + k);
  for (std::size_t i = 0; i < k; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < nv; ++j) tab.at(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    tab.at(i, nv + i) = 1;
    tab.rhs(i) = flip ? Rational(-b[i]) : b[i];
    tab.basis()[i] = nv + i;
  }
  // Phase one: maximize minus the sum of artificials.
  RatVector phase1(nv + k, 0);
  for (std::size_t i = 0; i < k; ++i) phase1[nv + i] = -1;
  tab.set_objective(phase1);
  tab.optimize(nv + k);
  LpResult res;
  if (tab.objective_value() != 0) return res;
  // Drive remaining artificials out of the basis where possible.
  for (std::size_t i = 0; i < k; ++i) {
    if (tab.basis()[i] < nv) continue;
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < nv && !col; ++j)
      if (tab.at(i, j) != 0) col = j;
    // A row with no such column is redundant; its artificial stays basic at 0.
    if (col) tab.pivot(i, *col);
  }
  tab.set_objective(c);
  if (!tab.optimize(nv)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.value = tab.objective_value();
  res.x.assign(nv, 0);
  for (std::size_t i = 0; i < k; ++i)
    if (tab.basis()[i] < nv) res.x[tab.basis()[i]] = tab.rhs(i);
  return res;
}

inline bool lp_feasible(const RatMatrix& a, const RatVector& b) {
  return solve_lp(a, b, RatVector(a.cols(), 0)).status == LpStatus::Optimal;
}

}  // namespace wald

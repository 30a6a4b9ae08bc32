// Copyright 2026 The gte Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gte/lp.hpp"

#include <cmath>
#include <string>

#include "gte/errors.hpp"

namespace gte {

namespace {

constexpr int kMaxConstraints = 20'000;
constexpr int kMaxVariables = 5'000;
constexpr double kPivotTol = 1e-9;

// Standard-form problem: min c.y  s.t.  A y = b (b >= 0), y >= 0.
struct Standard {
  int rows = 0;
  int cols = 0;                    // structural + slack columns
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  std::vector<double> c;
  // Mapping back to the original variables: x[i] = shift[i] + sign[i]*y[pos[i]]
  // (+ for shifted, split vars use neg[i] as the second half).
  std::vector<double> shift;
  std::vector<double> sign;
  std::vector<int> pos;
  std::vector<int> neg;  // -1 unless the variable was split
};

// Dense tableau simplex core. Returns false on unboundedness.
class Tableau {
 public:
  Tableau(const Standard& sf)
      : rows_(sf.rows), cols_(sf.cols), t_(sf.rows + 1), basis_(sf.rows, -1) {
    for (int i = 0; i <= rows_; ++i) t_[i].assign(cols_ + rows_ + 1, 0.0);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) t_[i][j] = sf.a[i][j];
      t_[i][cols_ + i] = 1.0;  // artificial
      t_[i].back() = sf.b[i];
      basis_[i] = cols_ + i;
    }
  }

  // Phase 1: minimize the sum of artificials.
  bool phase1() {
    auto& cost = t_[rows_];
    std::fill(cost.begin(), cost.end(), 0.0);
    for (int j = cols_; j < cols_ + rows_; ++j) cost[j] = 1.0;
    for (int i = 0; i < rows_; ++i) sub_row(rows_, i, cost[basis_[i]]);
    if (!iterate(cols_ + rows_)) return false;  // cannot be unbounded, defensive
    if (-t_[rows_].back() > kLpTol) return false;
    drive_out_artificials();
    return true;
  }

  // Phase 2 over the original costs; artificial columns barred from entering.
  bool phase2(const std::vector<double>& c) {
    auto& cost = t_[rows_];
    std::fill(cost.begin(), cost.end(), 0.0);
    for (int j = 0; j < cols_; ++j) cost[j] = c[j];
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) sub_row(rows_, i, cost[basis_[i]]);
    }
    return iterate(cols_);
  }

  std::vector<double> solution() const {
    std::vector<double> y(cols_, 0.0);
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) y[basis_[i]] = t_[i].back();
    }
    return y;
  }

 private:
  void sub_row(int dst, int src, double factor) {
    if (factor == 0.0) return;
    const int width = cols_ + rows_ + 1;
    for (int j = 0; j < width; ++j) t_[dst][j] -= factor * t_[src][j];
  }

  void pivot(int row, int col) {
    const int width = cols_ + rows_ + 1;
    const double p = t_[row][col];
    for (int j = 0; j < width; ++j) t_[row][j] /= p;
    for (int i = 0; i <= rows_; ++i) {
      if (i != row) sub_row(i, row, t_[i][col]);
    }
    basis_[row] = col;
  }

  // Bland's rule: smallest-index entering column with negative reduced cost,
  // leaving row by min ratio with smallest basis index on ties.
  bool iterate(int allowed_cols) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < allowed_cols; ++j) {
        if (t_[rows_][j] < -kLpTol) { enter = j; break; }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < rows_; ++i) {
        if (t_[i][enter] > kPivotTol) {
          const double ratio = t_[i].back() / t_[i][enter];
          if (leave < 0 || ratio < best_ratio - kPivotTol ||
              (std::abs(ratio - best_ratio) <= kPivotTol &&
               basis_[i] < basis_[leave])) {
            leave = i;
            best_ratio = ratio;
          }
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  // Remove zero-valued artificials from the basis where possible.
  void drive_out_artificials() {
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) continue;
      int col = -1;
      for (int j = 0; j < cols_; ++j) {
        if (std::abs(t_[i][j]) > kPivotTol) { col = j; break; }
      }
      if (col >= 0) pivot(i, col);
      // else: redundant row, the artificial stays basic at value zero.
    }
  }

  int rows_, cols_;
  std::vector<std::vector<double>> t_;
  std::vector<int> basis_;
};

Standard to_standard_form(const LinearProgram& lp) {
  const int n = lp.num_vars();
  Standard sf;
  sf.shift.assign(n, 0.0);
  sf.sign.assign(n, 1.0);
  sf.pos.assign(n, -1);
  sf.neg.assign(n, -1);

  std::vector<LpConstraint> extra_rows;
  int cols = 0;
  for (int i = 0; i < n; ++i) {
    const double lo = i < static_cast<int>(lp.lower.size()) ? lp.lower[i] : 0.0;
    const double hi = i < static_cast<int>(lp.upper.size()) ? lp.upper[i] : kLpInf;
    if (lo > hi) throw ValidationError("variable bounds cross");
    if (std::isinf(lo) && std::isinf(hi)) {
      sf.pos[i] = cols++;
      sf.neg[i] = cols++;
    } else if (std::isinf(lo)) {
      // x = hi - y, y >= 0
      sf.shift[i] = hi;
      sf.sign[i] = -1.0;
      sf.pos[i] = cols++;
    } else {
      sf.shift[i] = lo;
      sf.pos[i] = cols++;
      if (!std::isinf(hi)) {
        LpConstraint row;
        row.coeffs.assign(n, 0.0);
        row.coeffs[i] = 1.0;
        row.relation = LpRelation::kLessEqual;
        row.rhs = hi;
        extra_rows.push_back(std::move(row));
      }
    }
  }

  std::vector<const LpConstraint*> rows;
  rows.reserve(lp.constraints.size() + extra_rows.size());
  for (const auto& r : lp.constraints) rows.push_back(&r);
  for (const auto& r : extra_rows) rows.push_back(&r);

  const int m = static_cast<int>(rows.size());
  int slack_count = 0;
  for (const auto* r : rows) {
    if (r->relation != LpRelation::kEqual) ++slack_count;
  }

  sf.rows = m;
  sf.cols = cols + slack_count;
  sf.a.assign(m, std::vector<double>(sf.cols, 0.0));
  sf.b.assign(m, 0.0);
  sf.c.assign(sf.cols, 0.0);

  const double obj_sign = lp.sense == LpSense::kMinimize ? 1.0 : -1.0;
  for (int i = 0; i < n; ++i) {
    const double ci = obj_sign * lp.objective[i];
    sf.c[sf.pos[i]] += ci * sf.sign[i];
    if (sf.neg[i] >= 0) sf.c[sf.neg[i]] -= ci;
  }

  int slack = cols;
  for (int r = 0; r < m; ++r) {
    const auto& row = *rows[r];
    double rhs = row.rhs;
    for (int i = 0; i < n; ++i) {
      const double a = row.coeffs[i];
      if (a == 0.0) continue;
      rhs -= a * sf.shift[i];
      sf.a[r][sf.pos[i]] += a * sf.sign[i];
      if (sf.neg[i] >= 0) sf.a[r][sf.neg[i]] -= a;
    }
    if (row.relation == LpRelation::kLessEqual) {
      sf.a[r][slack++] = 1.0;
    } else if (row.relation == LpRelation::kGreaterEqual) {
      sf.a[r][slack++] = -1.0;
    }
    sf.b[r] = rhs;
    if (rhs < 0.0) {
      for (auto& v : sf.a[r]) v = -v;
      sf.b[r] = -rhs;
    }
  }
  return sf;
}

}  // namespace

LpConstraint& LinearProgram::add_constraint(std::vector<double> coeffs,
                                            LpRelation rel, double rhs) {
  constraints.push_back({std::move(coeffs), rel, rhs});
  return constraints.back();
}

void LinearProgram::make_free(int var) {
  if (static_cast<int>(lower.size()) < num_vars()) lower.resize(num_vars(), 0.0);
  lower[var] = -kLpInf;
}

void LinearProgram::validate() const {
  const int n = num_vars();
  if (n == 0) throw ValidationError("LP has no variables");
  if (n > kMaxVariables) throw CapacityError("LP exceeds variable cap");
  if (static_cast<int>(constraints.size()) > kMaxConstraints) {
    throw CapacityError("LP exceeds constraint cap");
  }
  for (double c : objective) {
    if (!std::isfinite(c)) throw ValidationError("non-finite objective coefficient");
  }
  for (const auto& row : constraints) {
    if (static_cast<int>(row.coeffs.size()) != n) {
      throw ValidationError("constraint row width does not match variable count");
    }
    for (double a : row.coeffs) {
      if (!std::isfinite(a)) throw ValidationError("non-finite constraint coefficient");
    }
    if (!std::isfinite(row.rhs)) throw ValidationError("non-finite constraint rhs");
  }
}

LpSolution lp_solve(const LinearProgram& lp) {
  lp.validate();
  const Standard sf = to_standard_form(lp);

  Tableau tab(sf);
  if (!tab.phase1()) {
    return LpSolution{LpStatus::kInfeasible, {}, 0.0};
  }
  if (!tab.phase2(sf.c)) {
    return LpSolution{LpStatus::kUnbounded, {}, 0.0};
  }

  const std::vector<double> y = tab.solution();
  LpSolution out;
  out.x.assign(lp.num_vars(), 0.0);
  for (int i = 0; i < lp.num_vars(); ++i) {
    double v = sf.shift[i] + sf.sign[i] * y[sf.pos[i]];
    if (sf.neg[i] >= 0) v -= y[sf.neg[i]];
    out.x[i] = v;
  }
  out.value = 0.0;
  for (int i = 0; i < lp.num_vars(); ++i) out.value += lp.objective[i] * out.x[i];
  return out;
}

}  // namespace gte

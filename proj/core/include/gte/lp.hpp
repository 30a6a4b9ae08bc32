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

#ifndef GTE_LP_HPP_
#define GTE_LP_HPP_

#include <limits>
#include <vector>

namespace gte {

inline constexpr double kLpTol = 1e-7;
inline constexpr double kLpInf = std::numeric_limits<double>::infinity();

enum class LpSense { kMinimize, kMaximize };
enum class LpRelation { kLessEqual, kGreaterEqual, kEqual };

struct LpConstraint {
  std::vector<double> coeffs;
  LpRelation relation = LpRelation::kLessEqual;
  double rhs = 0.0;
};

/// Dense LP in the form  opt c.x  s.t.  rows,  lower <= x <= upper.
/// Default bounds are [0, +inf); -inf lower bounds (free variables) are
/// allowed and handled by splitting.
struct LinearProgram {
  LpSense sense = LpSense::kMinimize;
  std::vector<double> objective;
  std::vector<LpConstraint> constraints;
  std::vector<double> lower;  // optional; defaults to 0
  std::vector<double> upper;  // optional; defaults to +inf

  int num_vars() const { return static_cast<int>(objective.size()); }

  LpConstraint& add_constraint(std::vector<double> coeffs, LpRelation rel, double rhs);
  void make_free(int var);  // lower = -inf
  void validate() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kOptimal;
  std::vector<double> x;
  double value = 0.0;
};

/// Two-phase dense simplex with Bland's rule (deterministic, always
/// terminating). Tolerance kLpTol for feasibility and optimality.
LpSolution lp_solve(const LinearProgram& lp);

}  // namespace gte

#endif  // GTE_LP_HPP_

// Copyright 2026 The Origrip Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace origrip::detail {
namespace {

constexpr double kEps = 1e-11;
constexpr int kMaxPivots = 100000;

struct Tableau {
  Eigen::MatrixXd t;  // last row: reduced costs, last column: rhs
  std::vector<int> basis;

  int rows() const { return static_cast<int>(t.rows()) - 1; }
  int rhs() const { return static_cast<int>(t.cols()) - 1; }

  void pivot(int r, int col) {
    t.row(r) /= t(r, col);
    for (int i = 0; i < t.rows(); ++i) {
      if (i != r && t(i, col) != 0.0) t.row(i) -= t(i, col) * t.row(r);
    }
    basis[r] = col;
  }

  // Minimises the objective in the last row over columns [0, ncols).
  // Returns false when unbounded.
  bool optimise(int ncols) {
    for (int it = 0; it < kMaxPivots; ++it) {
      int enter = -1;
      for (int j = 0; j < ncols; ++j) {
        if (t(rows(), j) < -kEps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < rows(); ++i) {
        if (t(i, enter) > kEps) {
          const double ratio = t(i, rhs()) / t(i, enter);
          if (ratio < best - kEps || (ratio <= best + kEps && leave >= 0 && basis[i] < basis[leave])) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    return true;
  }
};

}  // namespace

LpResult solve_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  Tableau tab;
  tab.t = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    const double sign = b(i) < 0.0 ? -1.0 : 1.0;
    tab.t.row(i).head(n) = sign * A.row(i);
    tab.t(i, n + i) = 1.0;
    tab.t(i, n + m) = sign * b(i);
    tab.basis[i] = n + i;
  }
  // Phase 1: minimise the sum of artificials.
  for (int i = 0; i < m; ++i) tab.t.row(m) -= tab.t.row(i);
  for (int i = 0; i < m; ++i) tab.t(m, n + i) = 0.0;
  tab.optimise(n + m);

  LpResult result;
  const double scale = 1.0 + b.cwiseAbs().sum();
  if (-tab.t(m, n + m) > 1e-9 * scale) return result;

  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    for (int j = 0; j < n; ++j) {
      if (std::abs(tab.t(i, j)) > 1e-9) {
        tab.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2 with the artificial columns barred from re-entering.
  tab.t.row(m).setZero();
  tab.t.row(m).head(n) = -c.transpose();
  for (int i = 0; i < m; ++i) {
    const int bj = tab.basis[i];
    const double cb = bj < n ? -c(bj) : 0.0;
    if (cb != 0.0) tab.t.row(m) -= cb * tab.t.row(i);
  }
  if (!tab.optimise(n)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) result.x(tab.basis[i]) = tab.t(i, n + m);
  }
  result.objective = c.dot(result.x);
  return result;
}

}  // namespace origrip::detail

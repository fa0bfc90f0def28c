// Copyright 2026 The grapheq Authors
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

#include "grapheq/simplex.h"

#include <stdexcept>

namespace grapheq {
namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t columns)
      : rows_(rows), columns_(columns), cells_(rows * (columns + 1)), objective_(columns + 1) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r * (columns_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return at(r, columns_); }
  // Reduced costs; the last entry holds minus the current objective value.
  std::vector<Rational>& objective() { return objective_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::size_t rows() const { return rows_; }
  std::size_t columns() const { return columns_; }

  void pivot(std::size_t row, std::size_t column) {
    const Rational inv = 1 / at(row, column);
    std::vector<std::size_t> nonzero;
    for (std::size_t c = 0; c <= columns_; ++c) {
      Rational& cell = at(row, c);
      if (cell != 0) {
        cell *= inv;
        nonzero.push_back(c);
      }
    }
    auto eliminate = [&](auto&& cell_at, const Rational& factor) {
      for (std::size_t c : nonzero) cell_at(c) -= factor * at(row, c);
    };
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, column) == 0) continue;
      const Rational factor = at(r, column);
      eliminate([&](std::size_t c) -> Rational& { return at(r, c); }, factor);
    }
    if (objective_[column] != 0) {
      const Rational factor = objective_[column];
      eliminate([&](std::size_t c) -> Rational& { return objective_[c]; }, factor);
    }
    basis_[row] = column;
  }

  // Installs cost vector `cost` (to be maximised) as reduced costs against
  // the current basis.
  void set_costs(const std::vector<Rational>& cost) {
    for (std::size_t c = 0; c < columns_; ++c) objective_[c] = cost[c];
    objective_[columns_] = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t c = 0; c <= columns_; ++c) {
        if (at(r, c) != 0) objective_[c] -= cb * at(r, c);
      }
    }
  }

  // Largest-coefficient pricing; after a run of degenerate pivots it falls
  // back to Bland's rule for good, which rules out cycling. Columns with
  // `allowed[c] == false` never enter. Returns false when unbounded.
  bool optimise(const std::vector<bool>& allowed, std::size_t& pivots) {
    constexpr std::size_t kDegenerateLimit = 50;
    bool bland = false;
    std::size_t degenerate = 0;
    while (true) {
      std::size_t entering = columns_;
      for (std::size_t c = 0; c < columns_; ++c) {
        if (!allowed[c] || objective_[c] <= 0) continue;
        if (entering == columns_ || objective_[c] > objective_[entering]) entering = c;
        if (bland) break;
      }
      if (entering == columns_) return true;
      std::size_t leaving = rows_;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Rational& a = at(r, entering);
        if (a <= 0) continue;
        Rational ratio = rhs(r) / a;
        if (leaving == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == rows_) return false;
      if (best_ratio == 0) {
        if (++degenerate >= kDegenerateLimit) bland = true;
      } else {
        degenerate = 0;
      }
      pivot(leaving, entering);
      ++pivots;
    }
  }

  void drop_row(std::size_t row) {
    const std::size_t width = columns_ + 1;
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(row * width),
                 cells_.begin() + static_cast<std::ptrdiff_t>((row + 1) * width));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t columns_;
  std::vector<Rational> cells_;
  std::vector<Rational> objective_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve(const LinearProgram& program) {
  const std::size_t n = program.variables;
  if (program.objective.size() != n) throw std::invalid_argument("objective size mismatch");
  const std::size_t m = program.constraints.size();

  // Normalise to non-negative right-hand sides.
  struct Normalised {
    std::vector<Rational> coefficients;
    Relation relation;
    Rational rhs;
  };
  std::vector<Normalised> rows;
  rows.reserve(m);
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const LinearConstraint& c : program.constraints) {
    if (c.coefficients.size() != n) throw std::invalid_argument("constraint size mismatch");
    Normalised row{c.coefficients, c.relation, c.rhs};
    if (row.rhs < 0) {
      for (Rational& a : row.coefficients) a = -a;
      row.rhs = -row.rhs;
      if (row.relation == Relation::kLessEqual) {
        row.relation = Relation::kGreaterEqual;
      } else if (row.relation == Relation::kGreaterEqual) {
        row.relation = Relation::kLessEqual;
      }
    }
    if (row.relation != Relation::kEqual) ++slack_count;
    if (row.relation != Relation::kLessEqual) ++artificial_count;
    rows.push_back(std::move(row));
  }

  const std::size_t first_slack = n;
  const std::size_t first_artificial = n + slack_count;
  const std::size_t columns = first_artificial + artificial_count;
  Tableau t(m, columns);
  t.basis().assign(m, 0);
  std::size_t slack = first_slack;
  std::size_t artificial = first_artificial;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) t.at(r, c) = rows[r].coefficients[c];
    t.rhs(r) = rows[r].rhs;
    switch (rows[r].relation) {
      case Relation::kLessEqual:
        t.at(r, slack) = 1;
        t.basis()[r] = slack++;
        break;
      case Relation::kGreaterEqual:
        t.at(r, slack++) = -1;
        t.at(r, artificial) = 1;
        t.basis()[r] = artificial++;
        break;
      case Relation::kEqual:
        t.at(r, artificial) = 1;
        t.basis()[r] = artificial++;
        break;
    }
  }

  LpSolution solution;
  std::vector<bool> allowed(columns, true);
  if (artificial_count > 0) {
    std::vector<Rational> phase_one(columns, Rational(0));
    for (std::size_t c = first_artificial; c < columns; ++c) phase_one[c] = -1;
    t.set_costs(phase_one);
    t.optimise(allowed, solution.pivots);
    // objective()[columns] is minus the phase-one value (= +sum of artificials).
    if (t.objective()[columns] != 0) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basis()[r] < first_artificial) {
        ++r;
        continue;
      }
      std::size_t replacement = columns;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (t.at(r, c) != 0) {
          replacement = c;
          break;
        }
      }
      if (replacement == columns) {
        t.drop_row(r);
      } else {
        t.pivot(r, replacement);
        ++solution.pivots;
        ++r;
      }
    }
    for (std::size_t c = first_artificial; c < columns; ++c) allowed[c] = false;
  }

  std::vector<Rational> cost(columns, Rational(0));
  for (std::size_t c = 0; c < n; ++c) cost[c] = program.objective[c];
  t.set_costs(cost);
  if (!t.optimise(allowed, solution.pivots)) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }
  solution.status = LpStatus::kOptimal;
  solution.value = -t.objective()[columns];
  solution.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.basis()[r] < n) solution.x[t.basis()[r]] = t.rhs(r);
  }
  return solution;
}

}  // namespace grapheq

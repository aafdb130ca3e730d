#pragma once

#include <vector>

#include "ordot/numeric.hpp"

namespace ordot::lp {

enum class Rel { le, eq, ge };
enum class Status { optimal, infeasible, unbounded };

/// A small dense linear program in exact rational arithmetic.
/// Variables are nonnegative unless marked free. Minimizes by default.
struct Problem {
  int num_vars = 0;
  bool maximize = false;
  std::vector<Q> objective;
  std::vector<uint8_t> free_var;

  struct Row {
    std::vector<Q> coeffs;
    Rel rel;
    Q rhs;
  };
  std::vector<Row> rows;

  /// Returns the new variable's index.
  int add_var(Q obj = 0, bool is_free = false);
  void add_row(std::vector<Q> coeffs, Rel rel, Q rhs);
};

struct Solution {
  Status status = Status::infeasible;
  Q objective = 0;    // in the problem's own orientation
  std::vector<Q> x;   // empty unless optimal
};

/// Two-phase primal simplex with Bland's rule throughout: entering column is
/// the lowest index with negative reduced cost, leaving row breaks ratio ties
/// by lowest basic-variable index. Terminates on every input; results exact.
Solution solve(const Problem& p);

}  // namespace ordot::lp

#include "ordot/lp.hpp"

#include <stdexcept>

namespace ordot::lp {

int Problem::add_var(Q obj, bool is_free) {
  objective.push_back(std::move(obj));
  free_var.push_back(is_free ? 1 : 0);
  return num_vars++;
}

void Problem::add_row(std::vector<Q> coeffs, Rel rel, Q rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars)
    throw std::invalid_argument("row width does not match variable count");
  rows.push_back({std::move(coeffs), rel, std::move(rhs)});
}

namespace {

struct Tableau {
  int m = 0;                        // constraint rows
  int n = 0;                        // columns (excluding rhs)
  std::vector<std::vector<Q>> a;    // m x (n+1), last column is rhs
  std::vector<int> basis;           // basic column per row
  std::vector<Q> z;                 // n+1 reduced-cost row
  std::vector<uint8_t> blocked;     // columns excluded from entering

  void pivot(int r, int c) {
    const Q p = a[r][c];
    for (Q& v : a[r]) v /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Q f = a[i][c];
      for (int j = 0; j <= n; ++j) a[i][j] -= f * a[r][j];
    }
    if (z[c] != 0) {
      const Q f = z[c];
      for (int j = 0; j <= n; ++j) z[j] -= f * a[r][j];
    }
    basis[r] = c;
  }

  void rebuild_z(const std::vector<Q>& cost) {
    z.assign(n + 1, Q(0));
    for (int j = 0; j < n; ++j) z[j] = cost[j];
    for (int i = 0; i < m; ++i) {
      const Q cb = cost[basis[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= n; ++j) z[j] -= cb * a[i][j];
    }
  }

  // Returns optimal=true, or false when unbounded.
  bool run() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n; ++j)
        if (!blocked[j] && z[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Q best_ratio = 0;
      for (int i = 0; i < m; ++i) {
        if (a[i][enter] <= 0) continue;
        Q ratio = a[i][n] / a[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

Solution solve(const Problem& p) {
  // Column layout: per variable one column (two for free variables, x+ / x-),
  // then one slack/surplus column per inequality row, then artificials.
  const int m = static_cast<int>(p.rows.size());
  std::vector<int> col_pos(p.num_vars), col_neg(p.num_vars, -1);
  int n = 0;
  for (int j = 0; j < p.num_vars; ++j) {
    col_pos[j] = n++;
    if (p.free_var[j]) col_neg[j] = n++;
  }
  const int slack_base = n;
  int num_slacks = 0;
  for (const auto& row : p.rows)
    if (row.rel != Rel::eq) ++num_slacks;
  n += num_slacks;
  const int art_base = n;

  Tableau t;
  t.m = m;
  t.basis.assign(m, -1);
  t.a.assign(m, {});

  // sign-normalized rows (rhs >= 0), slack columns, artificial columns
  std::vector<std::vector<Q>> body(m, std::vector<Q>(art_base, Q(0)));
  std::vector<Q> rhs(m);
  int slack_idx = 0;
  std::vector<int> art_of_row(m, -1);
  int num_arts = 0;
  for (int i = 0; i < m; ++i) {
    const auto& row = p.rows[i];
    const bool flip = row.rhs < 0;
    Rel rel = row.rel;
    if (flip && rel != Rel::eq) rel = (rel == Rel::le) ? Rel::ge : Rel::le;
    rhs[i] = flip ? Q(-row.rhs) : row.rhs;
    for (int j = 0; j < p.num_vars; ++j) {
      Q c = flip ? Q(-row.coeffs[j]) : row.coeffs[j];
      body[i][col_pos[j]] = c;
      if (col_neg[j] >= 0) body[i][col_neg[j]] = -c;
    }
    if (rel != Rel::eq) {
      const int sc = slack_base + slack_idx++;
      body[i][sc] = (rel == Rel::le) ? Q(1) : Q(-1);
      if (rel == Rel::le) t.basis[i] = sc;
    }
    if (t.basis[i] < 0) art_of_row[i] = num_arts++;
  }
  t.n = art_base + num_arts;
  t.blocked.assign(t.n, 0);
  for (int i = 0; i < m; ++i) {
    t.a[i] = std::move(body[i]);
    t.a[i].resize(t.n + 1, Q(0));
    t.a[i][t.n] = rhs[i];
    if (art_of_row[i] >= 0) {
      const int ac = art_base + art_of_row[i];
      t.a[i][ac] = 1;
      t.basis[i] = ac;
    }
  }

  Solution sol;

  // Phase 1: minimize the sum of artificials.
  if (num_arts > 0) {
    std::vector<Q> cost1(t.n, Q(0));
    for (int c = art_base; c < t.n; ++c) cost1[c] = 1;
    t.rebuild_z(cost1);
    if (!t.run()) throw internal_check_error("phase-1 objective unbounded");
    Q art_sum = 0;
    for (int i = 0; i < m; ++i)
      if (t.basis[i] >= art_base) art_sum += t.a[i][t.n];
    if (art_sum != 0) {
      sol.status = Status::infeasible;
      return sol;
    }
    // Pivot remaining zero-level artificials out; drop rows that are redundant.
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < art_base) continue;
      int c = -1;
      for (int j = 0; j < art_base; ++j)
        if (t.a[i][j] != 0) {
          c = j;
          break;
        }
      if (c >= 0) t.pivot(i, c);
    }
    for (int c = art_base; c < t.n; ++c) t.blocked[c] = 1;
  }

  // Phase 2.
  std::vector<Q> cost2(t.n, Q(0));
  for (int j = 0; j < p.num_vars; ++j) {
    Q c = p.maximize ? Q(-p.objective[j]) : p.objective[j];
    cost2[col_pos[j]] = c;
    if (col_neg[j] >= 0) cost2[col_neg[j]] = -c;
  }
  t.rebuild_z(cost2);
  if (!t.run()) {
    // rows whose basic variable is a stuck artificial are redundant; an
    // unbounded ray here is genuine
    sol.status = Status::unbounded;
    return sol;
  }

  std::vector<Q> full(t.n, Q(0));
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < t.n) full[t.basis[i]] = t.a[i][t.n];
  sol.x.assign(p.num_vars, Q(0));
  for (int j = 0; j < p.num_vars; ++j) {
    sol.x[j] = full[col_pos[j]];
    if (col_neg[j] >= 0) sol.x[j] -= full[col_neg[j]];
  }
  sol.objective = 0;
  for (int j = 0; j < p.num_vars; ++j) sol.objective += p.objective[j] * sol.x[j];
  sol.status = Status::optimal;
  return sol;
}

}  // namespace ordot::lp

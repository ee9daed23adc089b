#include "orbitvol/ratlp.hpp"

#include "orbitvol/errors.hpp"

namespace orbitvol {

namespace {

// Full-tableau simplex state. Columns 0..n_struct-1 are the structural
// variables, columns n_struct..n_struct+m-1 the phase-1 artificials; the last
// column is the right-hand side. `zrow` holds reduced costs, its rhs cell is
// -(current objective).
struct Tableau {
  int m = 0;
  int n_struct = 0;
  int n_total = 0;
  std::vector<RatVec> row;  // m rows, each n_total + 1 entries
  RatVec zrow;              // n_total + 1
  std::vector<int> basis;   // m entries

  void pivot(int r, int c) {
    const Rat p = row[r][c];
    for (Rat& v : row[r]) v /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r || row[i][c] == 0) continue;
      const Rat f = row[i][c];
      for (int j = 0; j <= n_total; ++j) row[i][j] -= f * row[r][j];
    }
    if (zrow[c] != 0) {
      const Rat f = zrow[c];
      for (int j = 0; j <= n_total; ++j) zrow[j] -= f * row[r][j];
    }
    basis[r] = c;
  }

  // Bland's rule: smallest improving column, smallest basic index on ties.
  // Returns false at optimality, throws never; `limit` restricts entering
  // columns (structural only in phase 2).
  enum class Step { Optimal, Pivoted, Unbounded };
  Step step(int limit) {
    int enter = -1;
    for (int j = 0; j < limit; ++j) {
      if (zrow[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return Step::Optimal;
    int leave = -1;
    Rat best_ratio;
    for (int i = 0; i < m; ++i) {
      if (row[i][enter] <= 0) continue;
      Rat ratio = row[i][n_total] / row[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return Step::Unbounded;
    pivot(leave, enter);
    return Step::Pivoted;
  }
};

Tableau make_phase1(const RatMat& E, const RatVec& f) {
  Tableau t;
  t.m = E.rows;
  t.n_struct = E.cols;
  t.n_total = E.cols + E.rows;
  t.row.assign(t.m, RatVec(t.n_total + 1));
  t.basis.resize(t.m);
  for (int i = 0; i < t.m; ++i) {
    const bool neg = f[i] < 0;
    for (int j = 0; j < E.cols; ++j) t.row[i][j] = neg ? -E.at(i, j) : E.at(i, j);
    t.row[i][t.n_struct + i] = 1;
    t.row[i][t.n_total] = neg ? -f[i] : f[i];
    t.basis[i] = t.n_struct + i;
  }
  // Phase-1 objective: maximize -(sum of artificials). With the artificial
  // basis, the reduced cost of structural column j is the column sum, and
  // the rhs cell is the sum of the (nonnegative) right-hand sides.
  t.zrow.assign(t.n_total + 1, Rat(0));
  for (int i = 0; i < t.m; ++i)
    for (int j = 0; j <= t.n_total; ++j)
      if (j < t.n_struct || j == t.n_total) t.zrow[j] += t.row[i][j];
  return t;
}

// Runs phase 1; returns true when a feasible basis was reached.
bool run_phase1(Tableau& t) {
  while (true) {
    const Tableau::Step s = t.step(t.n_struct);
    if (s == Tableau::Step::Pivoted) continue;
    // Unbounded cannot happen: the phase-1 objective is bounded above by 0.
    break;
  }
  return t.zrow[t.n_total] == 0;  // -w == 0  <=>  all artificials vanish
}

// Pivot zero-valued artificial basics onto structural columns when possible;
// rows of redundant constraints keep their artificial and stay inert.
void drive_out_artificials(Tableau& t) {
  for (int i = 0; i < t.m; ++i) {
    if (t.basis[i] < t.n_struct) continue;
    for (int j = 0; j < t.n_struct; ++j) {
      if (t.row[i][j] != 0) {
        t.pivot(i, j);
        break;
      }
    }
  }
}

}  // namespace

LpResult lp_solve_max(const RatMat& E, const RatVec& f, const RatVec& c) {
  if (static_cast<int>(f.size()) != E.rows || static_cast<int>(c.size()) != E.cols) {
    throw DimensionMismatchError("lp_solve_max: shape mismatch");
  }
  Tableau t = make_phase1(E, f);
  if (!run_phase1(t)) return {LpStatus::Infeasible, Rat(0), {}};
  drive_out_artificials(t);

  // Phase 2: rebuild the reduced-cost row for the real objective.
  t.zrow.assign(t.n_total + 1, Rat(0));
  for (int j = 0; j < t.n_struct; ++j) t.zrow[j] = c[j];
  for (int i = 0; i < t.m; ++i) {
    const int b = t.basis[i];
    if (b >= t.n_struct || c[b] == 0) continue;
    const Rat f2 = c[b];
    for (int j = 0; j <= t.n_total; ++j) t.zrow[j] -= f2 * t.row[i][j];
  }
  while (true) {
    const Tableau::Step s = t.step(t.n_struct);
    if (s == Tableau::Step::Pivoted) continue;
    if (s == Tableau::Step::Unbounded) return {LpStatus::Unbounded, Rat(0), {}};
    break;
  }
  RatVec x(t.n_struct, Rat(0));
  for (int i = 0; i < t.m; ++i) {
    if (t.basis[i] < t.n_struct) x[t.basis[i]] = t.row[i][t.n_total];
  }
  Rat obj = 0;
  for (int j = 0; j < t.n_struct; ++j) obj += c[j] * x[j];
  return {LpStatus::Optimal, obj, std::move(x)};
}

bool lp_feasible(const RatMat& E, const RatVec& f) {
  if (static_cast<int>(f.size()) != E.rows) {
    throw DimensionMismatchError("lp_feasible: shape mismatch");
  }
  Tableau t = make_phase1(E, f);
  return run_phase1(t);
}

}  // namespace orbitvol

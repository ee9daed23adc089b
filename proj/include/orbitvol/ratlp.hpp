#pragma once

#include "orbitvol/ratmat.hpp"

namespace orbitvol {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat objective;
  RatVec x;
};

/// maximize c.x  subject to  E x = f, x >= 0.
///
/// Two-phase simplex with Bland's rule over exact rationals, so termination
/// is guaranteed and results are deterministic. Rows of E may be linearly
/// dependent; redundant rows keep a zero-valued artificial basic.
LpResult lp_solve_max(const RatMat& E, const RatVec& f, const RatVec& c);

/// Phase-1 only: is { x >= 0 : E x = f } nonempty?
bool lp_feasible(const RatMat& E, const RatVec& f);

}  // namespace orbitvol

#pragma once

#include <optional>

#include "orbitvol/rational.hpp"

namespace orbitvol {

/// Three positive side lengths: the weights of an SU(2) triple in the single
/// simple-root coordinate.
struct TriangleInstance {
  Rat c1, c2, c3;
};

struct PointCount {
  int count = 0;        // number of points in the reduced space (0 or 1)
  bool boundary = false;  // degenerate triangle (some equality holds)
};

/// 1 when the strict triangle inequalities hold, 0 when one fails strictly;
/// equality cases are boundary-flagged.
PointCount su2_point_count(const TriangleInstance& t);

struct Su2CheckReport {
  Rat raw;                      // signed sum, kappa = 1
  std::optional<Rat> calibrated;  // -raw/2
  PointCount points;
  bool consistent = false;  // calibrated value equals the point count (off boundary)
};

/// Cross-check of the A1, N = 3 formula against the combinatorial ground
/// truth.
Su2CheckReport su2_check_against_formula(const TriangleInstance& t);

}  // namespace orbitvol

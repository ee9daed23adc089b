#pragma once

#include <optional>
#include <vector>

#include "orbitvol/rational.hpp"

namespace orbitvol {

/// Dense row-major rational matrix. Only the handful of exact operations the
/// project needs; pivots are always taken in fixed (first nonzero) order so
/// every derived quantity is deterministic.
struct RatMat {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

  Rat& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static RatMat identity(int n);
};

RatVec mat_vec(const RatMat& m, const RatVec& x);
RatMat mat_mul(const RatMat& lhs, const RatMat& rhs);
RatMat transpose(const RatMat& m);

Rat det(RatMat m);
int rank(RatMat m);

/// Reduced row echelon form in place; returns the pivot column indices in
/// increasing order.
std::vector<int> rref(RatMat& m);

/// Unique solution of m x = b for square m, or nullopt when m is singular.
std::optional<RatVec> solve_square(RatMat m, RatVec b);

/// Throws RankDeficientError when m is singular.
RatMat inverse(const RatMat& m);

/// Dimension of the affine hull of a point set (-1 for the empty set).
int affine_dim(const std::vector<RatVec>& pts);

}  // namespace orbitvol

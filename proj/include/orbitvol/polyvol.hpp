#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orbitvol/ratmat.hpp"

namespace orbitvol {

/// The fiber { s in R^n_{>=0} : A s = xi } after kernel parameterization
/// s = s0 + N t. Inequalities are s_i = c_i + g_i . t >= 0 in the free
/// coordinates t (dimension a = n - d); `jacobian` = |det [R N]| with R a
/// right section (A R = I) makes exact_volume the pushforward density of
/// Lebesgue measure under s -> A s.
struct FiberPolytope {
  int ambient_dim = 0;              // n, number of s-variables
  int target_dim = 0;               // d, rows of A
  int free_dim = 0;                 // a = n - d
  std::vector<RatVec> ineq_g;       // n rows, each of length a
  RatVec ineq_c;                    // n offsets
  Rat jacobian;                     // |det [R N]| > 0
};

struct ExactVolume {
  Rat value;
  bool degenerate = false;  // feasible region of affine dimension < a
};

struct VolumeEstimate {
  double value = 0;
  double std_error = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
};

/// Largest supported number of s-variables (= inequalities); beyond this the
/// brute-force vertex enumeration is no longer sensible and construction
/// throws ConstraintCapError.
inline constexpr int kMaxFiberConstraints = 24;

/// Builds the fiber polytope, or nullopt when A s = xi, s >= 0 is infeasible
/// (exact-rational LP). Throws RankDeficientError when A is not of full row
/// rank and UnboundedError when the columns of A do not lie in an open
/// half-space (which would make fibers unbounded).
std::optional<FiberPolytope> fiber_polytope(const RatMat& A, const RatVec& xi);

/// Base vertex selector for the triangulation; exposed so tests can compare
/// two different decompositions of the same polytope.
enum class BaseVertexRule { LexMin, LexMax };

/// jacobian x (Lebesgue volume of the inequality region in t-coordinates),
/// by exact vertex enumeration and recursive triangulation. For a = 0 the
/// value is jacobian when the unique point is feasible, else 0. A feasible
/// region of affine dimension < a yields value 0 with `degenerate` set.
ExactVolume exact_volume(const FiberPolytope& p,
                         BaseVertexRule rule = BaseVertexRule::LexMin);

/// All vertices of the inequality region, deduplicated, in lexicographic
/// order (brute-force over a-subsets of constraints).
std::vector<RatVec> enumerate_vertices(const FiberPolytope& p);

/// Hit-or-miss estimate over the vertex bounding box; deterministic for a
/// fixed seed. Requires a >= 1 and a feasible, bounded polytope.
VolumeEstimate monte_carlo_volume(const FiberPolytope& p, long long samples,
                                  std::uint64_t seed);

}  // namespace orbitvol

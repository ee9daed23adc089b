#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitvol/dhfun.hpp"
#include "orbitvol/weylgroup.hpp"

namespace orbitvol {

/// N coadjoint orbits of the same group, given by their weights in
/// simple-root coordinates. N >= 3.
struct OrbitTuple {
  RootSystem rs;
  std::vector<Weight> xis;

  int count() const { return static_cast<int>(xis.size()); }
};

OrbitTuple make_orbit_tuple(RootSystem rs, std::vector<Weight> xis);

struct VolumeResult {
  Rat value;                          // raw signed sum, kappa = 1 convention
  std::string method;                 // "naive", "factored", ...
  long long terms_evaluated = 0;
  int degree = 0;                     // a = (N-2) r - d
  std::vector<std::string> warnings;  // wall hits, irregular inputs
};

inline constexpr long long kDefaultTermCap = 100'000'000;

/// mu(w . xi) = sum_j w_j xi_j.
Weight moment_image(const std::vector<WeylElement>& ws, const std::vector<Weight>& xis);

/// The volume of the N-fold reduced product as the full signed sum over
/// W^N of sign(w) H_{(N-2) beta}(mu(w . xi)). Exact; irregular weights give
/// an exactly cancelling sum (value 0) plus a warning rather than an error.
VolumeResult signed_sum_volume(const OrbitTuple& orbit, long long term_cap = kDefaultTermCap);

/// Algebraically identical evaluation over W^{N-1} tuples: the inner sum
/// over the first Weyl factor is collapsed into
///   g(zeta) = sum_w sign(w)^N H_{(N-2) beta}(w zeta),
/// evaluated at zeta = xi_1 + sum_{j>=2} w_j' xi_j. (The sign of the first
/// factor appears N times after the coset substitution, so the inner sum is
/// the signed one for odd N and the unsigned one for even N.)
VolumeResult factored_signed_sum_volume(const OrbitTuple& orbit,
                                        long long term_cap = kDefaultTermCap);

/// Volume of the torus-reduced single orbit: sum_w sign(w) H_beta(w eta)
/// with multiplicity 1. Wall inputs give exactly 0.
Rat torus_reduced_orbit_volume(const RootSystem& rs, const Weight& eta);

struct AssumptionReport {
  std::vector<bool> regular;       // per weight: <xi_j, beta> != 0 for all roots
  bool all_regular = false;
  bool zero_in_hull_sum = false;   // necessary for a nonempty zero level set
  long long wall_moment_images = 0;
  bool wall_scan_complete = false;
  std::vector<std::string> notes;
};

/// Diagnostic checks of the genericity assumptions: exact regularity tests,
/// an exact-LP necessary condition for the zero level set to be nonempty
/// (0 in the sum of the convex hulls of the Weyl orbits), and a census of
/// moment images landing exactly on cone walls. Smoothness of the quotient
/// is reported as not checkable here.
AssumptionReport check_assumptions(const OrbitTuple& orbit);

struct CalibrationResult {
  std::optional<Rat> constant;  // empty: unknown for this (group, N)
  std::string provenance;
};

/// Constant relating the raw kappa = 1 signed sum to the geometric volume,
/// for the cases where an independent source exists:
///   A1, N = 3: -1/2 (the reduced space is a single point of volume 1);
///   A2, N = 3: ratio to the 6-partition formula at one comparison point.
/// Everything else is flagged unknown.
CalibrationResult calibration(const RootSystem& rs, int n_orbits);

}  // namespace orbitvol

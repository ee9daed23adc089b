#pragma once

#include "orbitvol/polyvol.hpp"
#include "orbitvol/rootsystem.hpp"

namespace orbitvol {

/// The Duistermaat-Heckman evaluation problem for a root system with each
/// positive root taken `multiplicity` times: the density of the pushforward
/// of Lebesgue measure on the positive orthant under
/// (s_i^(j)) -> sum s_i^(j) beta_i, a piecewise polynomial of degree
/// a = multiplicity * r - rank supported in the cone spanned by the
/// positive roots.
struct DHProblem {
  RootSystem rs;
  int multiplicity = 1;  // M; equals N - 2 in the reduced-product sums

  int num_vars() const { return multiplicity * rs.num_positive_roots(); }
  int degree() const { return num_vars() - rs.rank; }  // a
  /// d x (M r) matrix: the positive roots as columns, repeated M times.
  RatMat stacked_matrix() const;
};

/// Validates M >= 1 and a >= 0.
DHProblem make_dh_problem(const RootSystem& rs, int multiplicity);

enum class ConeLocation { Inside, Boundary, Outside };

struct DhValue {
  Rat value;
  bool wall = false;  // xi sits exactly on the boundary of the support cone
};

/// Exact density value. Results are memoized by (series, rank, M, xi); the
/// cache is behind a mutex, so concurrent evaluation is safe and always
/// yields identical values.
DhValue dh_density(const DHProblem& prob, const Weight& xi);

/// Exact-rational LP classification: Inside iff a strictly positive
/// coefficient vector exists.
ConeLocation in_cone(const DHProblem& prob, const Weight& xi);

}  // namespace orbitvol

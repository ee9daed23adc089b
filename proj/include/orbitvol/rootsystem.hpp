#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitvol/ratmat.hpp"

namespace orbitvol {

enum class Series { A, B, C, D, G };

/// Weights live in the simple-root basis of t*; all coordinates are exact
/// rationals. This fixed coordinate convention replaces the metric
/// identification t* ~ t, with any metric constant absorbed into the
/// volume normalization.
using Weight = RatVec;

/// Root datum for one of the supported (series, rank) pairs: Cartan matrix,
/// positive roots (integer coordinates in the simple-root basis, generated
/// by reflection closure) and fundamental weights (rows of the inverse
/// Cartan matrix).
struct RootSystem {
  Series series = Series::A;
  int rank = 0;
  std::vector<std::vector<long long>> cartan;  // d x d
  std::vector<Weight> simple_roots;            // unit coordinate vectors
  std::vector<Weight> positive_roots;          // sorted by (height, lex)
  std::vector<Weight> fundamental_weights;     // row i of cartan^-1
  RatMat inv_cartan_t;                         // cartan^-T: fundamental -> simple
  RatMat gram;                                 // (alpha_i, alpha_j), W-invariant form

  std::string name() const;  // "A2", "B3", ...
  int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }
};

/// Supported: A1..A4, B2, B3, C2, C3, D4, G2. Anything else throws
/// UnsupportedTypeError.
RootSystem build_root_system(Series series, int rank);

/// Parses "A2", "b3", ... case-insensitively.
RootSystem build_root_system(const std::string& name);

bool is_supported_type(Series series, int rank);

/// Change of basis: coordinates in the fundamental-weight basis to
/// simple-root coordinates (exact, via cartan^-T).
Weight fundamental_to_simple(const RootSystem& rs, const RatVec& fw_coords);
RatVec simple_to_fundamental(const RootSystem& rs, const Weight& w);

/// SU(3) weight conventions: xi = (l - m) w1 + m w2 in simple-root
/// coordinates equals ((2l - m)/3, (l + m)/3).
Weight su3_lm_to_simple(const Rat& l, const Rat& m);
std::pair<Rat, Rat> su3_simple_to_lm(const Weight& w);

/// Pairing <xi, beta> under the invariant form, in simple-root coordinates
/// on both sides. Zero exactly when xi lies on the wall of beta.
Rat root_pairing(const RootSystem& rs, const Weight& xi, const Weight& beta);

/// True when <xi, beta> != 0 for every positive root beta.
bool is_regular(const RootSystem& rs, const Weight& xi);

}  // namespace orbitvol

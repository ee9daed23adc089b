#pragma once

#include <array>
#include <string>
#include <vector>

#include "orbitvol/rational.hpp"

namespace orbitvol {

/// Weight data for three SU(3) orbits in (l, m) coordinates:
/// xi_i = (l_i - m_i) w1 + m_i w2. Regular means l_i > m_i > 0.
struct SU3Weights {
  std::array<Rat, 3> l;
  std::array<Rat, 3> m;

  Rat L() const { return l[0] + l[1] + l[2]; }
  Rat M() const { return m[0] + m[1] + m[2]; }
  bool regular() const;
};

/// The SU(3) single-orbit density in (l, m) coordinates:
/// max{min{2l/3 - m/3, l/3 + m/3}, 0}   (kappa = 1 convention).
Rat h_closed_form(const Rat& l, const Rat& m);

/// The six Weyl matrices in the (l, m) basis in their standard enumeration
/// v0..v5, and their signs (computed as determinants; the enumeration
/// alternates even and odd elements, so sign(v_i) = (-1)^i).
const std::array<std::array<long long, 4>, 6>& su3_weyl_matrices();
const std::array<int, 6>& su3_weyl_signs();

struct Su3Volume {
  Rat value;
  long long terms = 0;
  std::vector<std::string> warnings;
};

/// Closed-form triple signed sum over the 216 Weyl triples. Irregular input
/// yields 0 (cancellation) plus a warning.
Su3Volume jj_volume(const SU3Weights& w);

/// Ordered tuple of six disjoint subsets of {1,2,3} covering it, stored as a
/// block assignment per element.
struct SixPartition {
  std::array<int, 3> block_of;  // element e (0-based) -> block 0..5

  int block_size(int b) const {
    int n = 0;
    for (int e = 0; e < 3; ++e) n += block_of[e] == b ? 1 : 0;
    return n;
  }
  bool contains(int b, int e) const { return block_of[e] == b; }
};

/// All 216 six-partitions in lexicographic assignment order.
const std::vector<SixPartition>& six_partitions();

struct StVolume {
  Rat value;
  long long count_lower = 0;   // partitions in the "<" family
  long long count_upper = 0;   // partitions in the ">" family
  bool boundary_hit = false;   // some defining comparison held with equality
};

/// The 6-partition volume formula. Requires integral l, m with
/// l_i > m_i > 0 (RegularityViolationError) and 3 | (L + M)
/// (DivisibilityViolationError).
StVolume st_volume(const SU3Weights& w);

}  // namespace orbitvol

#include "orbitvol/su3.hpp"

#include "orbitvol/errors.hpp"

namespace orbitvol {

bool SU3Weights::regular() const {
  for (int i = 0; i < 3; ++i) {
    if (!(l[i] > m[i] && m[i] > 0)) return false;
  }
  return true;
}

Rat h_closed_form(const Rat& l, const Rat& m) {
  const Rat u = Rat(2, 3) * l - Rat(1, 3) * m;
  const Rat v = Rat(1, 3) * l + Rat(1, 3) * m;
  const Rat inner = u < v ? u : v;
  return inner > 0 ? inner : Rat(0);
}

const std::array<std::array<long long, 4>, 6>& su3_weyl_matrices() {
  // Row-major 2x2 matrices acting on (l, m); order v0..v5.
  static const std::array<std::array<long long, 4>, 6> mats = {{
      {{1, 0, 0, 1}},    // v0 = id
      {{0, 1, 1, 0}},    // v1 = (1 2)
      {{0, -1, 1, -1}},  // v2 = (1 2 3)
      {{-1, 0, -1, 1}},  // v3 = (1 3)
      {{-1, 1, -1, 0}},  // v4 = (1 3 2)
      {{1, -1, 0, -1}},  // v5 = (2 3)
  }};
  return mats;
}

const std::array<int, 6>& su3_weyl_signs() {
  static const std::array<int, 6> signs = [] {
    std::array<int, 6> s{};
    const auto& mats = su3_weyl_matrices();
    for (int i = 0; i < 6; ++i) {
      const long long d = mats[i][0] * mats[i][3] - mats[i][1] * mats[i][2];
      if (d != 1 && d != -1) throw Error("Internal", "su3 Weyl matrix determinant not +-1");
      s[i] = static_cast<int>(d);
      // The enumeration interleaves even and odd elements; the alternating
      // sign used in the triple sum agrees with the determinant.
      if (s[i] != (i % 2 == 0 ? 1 : -1)) {
        throw Error("Internal", "su3 Weyl enumeration does not alternate signs");
      }
    }
    return s;
  }();
  return signs;
}

Su3Volume jj_volume(const SU3Weights& w) {
  const auto& mats = su3_weyl_matrices();
  const auto& signs = su3_weyl_signs();
  Su3Volume out;
  out.value = 0;
  out.terms = 216;
  if (!w.regular()) {
    out.warnings.push_back("irregular weights (some l_i > m_i > 0 fails): sum cancels to 0");
  }
  auto apply = [&mats](int v, const Rat& l, const Rat& m, Rat& pl, Rat& pm) {
    pl = Rat(mats[v][0]) * l + Rat(mats[v][1]) * m;
    pm = Rat(mats[v][2]) * l + Rat(mats[v][3]) * m;
  };
  Rat l1, m1, l2, m2, l3, m3;
  for (int i = 0; i < 6; ++i) {
    apply(i, w.l[0], w.m[0], l1, m1);
    for (int j = 0; j < 6; ++j) {
      apply(j, w.l[1], w.m[1], l2, m2);
      const int sij = signs[i] * signs[j];
      for (int k = 0; k < 6; ++k) {
        apply(k, w.l[2], w.m[2], l3, m3);
        const Rat h = h_closed_form(l1 + l2 + l3, m1 + m2 + m3);
        if (h != 0) out.value += sij * signs[k] * h;
      }
    }
  }
  return out;
}

const std::vector<SixPartition>& six_partitions() {
  static const std::vector<SixPartition> all = [] {
    std::vector<SixPartition> ps;
    ps.reserve(216);
    for (int b0 = 0; b0 < 6; ++b0)
      for (int b1 = 0; b1 < 6; ++b1)
        for (int b2 = 0; b2 < 6; ++b2) ps.push_back(SixPartition{{b0, b1, b2}});
    return ps;
  }();
  return all;
}

StVolume st_volume(const SU3Weights& w) {
  for (int i = 0; i < 3; ++i) {
    if (denominator(w.l[i]) != 1 || denominator(w.m[i]) != 1) {
      throw RegularityViolationError("st_volume: weights must be integral");
    }
  }
  const Rat total = w.L() + w.M();
  if (numerator(total) % 3 != 0) {
    throw DivisibilityViolationError("st_volume: L + M = " + rat_to_string(total) +
                                     " is not divisible by 3");
  }
  for (int i = 0; i < 3; ++i) {
    if (!(w.l[i] > w.m[i] && w.m[i] > 0)) {
      throw RegularityViolationError("st_volume: requires l_i > m_i > 0");
    }
  }
  const Rat third = total / 3;

  StVolume out;
  out.value = 0;
  for (const SixPartition& p : six_partitions()) {
    auto lsum = [&](int b1, int b2) {
      Rat s = 0;
      for (int e = 0; e < 3; ++e)
        if (p.block_of[e] == b1 || p.block_of[e] == b2) s += w.l[e];
      return s;
    };
    auto msum = [&](int b1, int b2) {
      Rat s = 0;
      for (int e = 0; e < 3; ++e)
        if (p.block_of[e] == b1 || p.block_of[e] == b2) s += w.m[e];
      return s;
    };
    const Rat q1 = lsum(0, 1) + msum(3, 4);  // l_{I1,I2} + m_{I4,I5}
    const Rat q2 = lsum(2, 3) + msum(5, 0);  // l_{I3,I4} + m_{I6,I1}
    const Rat q3 = lsum(4, 5) + msum(1, 2);  // l_{I5,I6} + m_{I2,I3}
    if (q1 == third || q2 == third || q3 == third) out.boundary_hit = true;

    const bool in_lower = q1 < third && q2 < third;
    const bool in_upper = q2 > third && q3 > third;
    if (in_lower && in_upper) {
      throw Error("Internal", "st_volume: the two index families are not disjoint");
    }
    const int par = (p.block_size(0) + p.block_size(2) + p.block_size(4)) % 2 == 0 ? 1 : -1;
    if (in_lower) {
      out.value += Rat(-par, 6) * (third - q1);
      ++out.count_lower;
    } else if (in_upper) {
      out.value += Rat(-par, 6) * (q3 - third);
      ++out.count_upper;
    }
  }
  return out;
}

}  // namespace orbitvol

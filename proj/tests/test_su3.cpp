#include <doctest.h>

#include <random>
#include <set>

#include "orbitvol/errors.hpp"
#include "orbitvol/su3.hpp"

using namespace orbitvol;

namespace {

SU3Weights weights(long long l1, long long l2, long long l3, long long m1, long long m2,
                   long long m3) {
  return SU3Weights{{Rat(l1), Rat(l2), Rat(l3)}, {Rat(m1), Rat(m2), Rat(m3)}};
}

}  // namespace

TEST_CASE("single-orbit closed form") {
  CHECK(h_closed_form(2, 1) == 1);
  CHECK(h_closed_form(0, 0) == 0);
  CHECK(h_closed_form(1, 2) == 0);
  CHECK(h_closed_form(Rat(9, 2), Rat(3, 2)) == Rat(2));  // min{5/2, 2}
}

TEST_CASE("the (l,m)-basis matrices alternate in sign") {
  const auto& signs = su3_weyl_signs();
  for (int i = 0; i < 6; ++i) CHECK(signs[i] == (i % 2 == 0 ? 1 : -1));
}

TEST_CASE("closed-form triple sums: frozen oracle values") {
  // Values frozen from an independent enumeration of the formulas.
  CHECK(jj_volume(weights(2, 2, 2, 1, 1, 1)).value == Rat(-6));
  CHECK(jj_volume(weights(3, 3, 3, 1, 1, 1)).value == Rat(-6));
  CHECK(jj_volume(weights(4, 3, 2, 2, 1, 1)).value == Rat(-2));
  CHECK(jj_volume(weights(5, 4, 3, 2, 2, 1)).value == Rat(-4));
  CHECK(jj_volume(SU3Weights{{Rat(5, 2), Rat(2), Rat(2)}, {Rat(1), Rat(1), Rat(1)}}).value ==
        Rat(-4));
  CHECK(jj_volume(SU3Weights{{Rat(7, 3), Rat(13, 6), Rat(2)},
                             {Rat(1), Rat(5, 6), Rat(1)}}).value == Rat(-13, 3));
}

TEST_CASE("wall-degenerate input cancels to zero with a warning") {
  const Su3Volume v = jj_volume(weights(2, 2, 2, 2, 1, 1));  // l1 = m1
  CHECK(v.value == 0);
  CHECK_FALSE(v.warnings.empty());
}

TEST_CASE("triple sum is symmetric in the orbit pairs") {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 25; ++t) {
    SU3Weights w;
    for (int i = 0; i < 3; ++i) {
      const long long m = 1 + static_cast<long long>(rng() % 8);
      w.m[i] = Rat(m, 2);
      w.l[i] = Rat(m + 1 + static_cast<long long>(rng() % 8), 2);
    }
    const Rat base = jj_volume(w).value;
    SU3Weights p1{{w.l[1], w.l[2], w.l[0]}, {w.m[1], w.m[2], w.m[0]}};
    SU3Weights p2{{w.l[1], w.l[0], w.l[2]}, {w.m[1], w.m[0], w.m[2]}};
    CHECK(jj_volume(p1).value == base);
    CHECK(jj_volume(p2).value == base);
  }
}

TEST_CASE("six partitions enumerate all 216 assignments") {
  const auto& ps = six_partitions();
  CHECK(ps.size() == 216);
  // First in lexicographic order: every element in the first block.
  CHECK(ps.front().block_of == std::array<int, 3>{0, 0, 0});
  CHECK(ps.back().block_of == std::array<int, 3>{5, 5, 5});
  std::set<std::array<int, 3>> distinct;
  for (const SixPartition& p : ps) {
    distinct.insert(p.block_of);
    int total = 0;
    for (int b = 0; b < 6; ++b) total += p.block_size(b);
    CHECK(total == 3);  // disjoint blocks covering {1,2,3}
  }
  CHECK(distinct.size() == 216);
  // ({1},{2},-,-,{3},-) appears.
  CHECK(distinct.count({0, 1, 4}) == 1);
}

TEST_CASE("six-partition formula: frozen oracle values") {
  const StVolume a = st_volume(weights(2, 2, 2, 1, 1, 1));
  CHECK(a.value == 1);
  CHECK(a.count_lower == 12);
  CHECK(a.count_upper == 12);
  CHECK(a.boundary_hit);  // the symmetric point touches many equalities

  const StVolume b = st_volume(weights(3, 3, 3, 1, 1, 1));
  CHECK(b.value == 1);
  CHECK(b.count_lower == 20);
  CHECK(b.count_upper == 12);

  const StVolume c = st_volume(weights(7, 7, 7, 1, 4, 4));
  CHECK_FALSE(c.boundary_hit);
  CHECK(c.value / jj_volume(weights(7, 7, 7, 1, 4, 4)).value == Rat(-1, 6));
}

TEST_CASE("six-partition formula preconditions") {
  CHECK_THROWS_AS(st_volume(weights(2, 2, 1, 1, 1, 1)), DivisibilityViolationError);
  CHECK_THROWS_AS(st_volume(weights(3, 2, 2, 3, 1, 1)), RegularityViolationError);  // l1 = m1
  CHECK_THROWS_AS(st_volume(weights(4, 3, 2, 0, 2, 1)), RegularityViolationError);  // m1 = 0
  CHECK_THROWS_AS(
      st_volume(SU3Weights{{Rat(5, 2), Rat(2), Rat(2)}, {Rat(1), Rat(1), Rat(1)}}),
      RegularityViolationError);  // non-integral
}

TEST_CASE("ratio of the two formulas is one constant") {
  std::mt19937_64 rng(777);
  std::set<Rat> ratios;
  int retained = 0;
  int attempts = 0;
  while (retained < 25 && attempts < 5000) {
    ++attempts;
    SU3Weights w;
    for (int i = 0; i < 3; ++i) {
      const long long m = 1 + static_cast<long long>(rng() % 12);
      w.m[i] = m;
      w.l[i] = m + 1 + static_cast<long long>(rng() % (20 - m));
    }
    if (numerator(w.L() + w.M()) % 3 != 0) continue;
    const StVolume st = st_volume(w);
    if (st.boundary_hit) continue;
    const Rat jj = jj_volume(w).value;
    if (jj == 0) {
      CHECK(st.value == 0);
      continue;
    }
    ratios.insert(st.value / jj);
    ++retained;
  }
  REQUIRE(retained >= 25);
  CHECK(ratios == std::set<Rat>{Rat(-1, 6)});
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "orbitvol/dhfun.hpp"
#include "orbitvol/errors.hpp"
#include "orbitvol/polyvol.hpp"
#include "orbitvol/rootsystem.hpp"

using namespace orbitvol;

namespace {

RatMat a2_m1_matrix() {
  // Positive roots (1,0), (0,1), (1,1) as columns.
  RatMat a(2, 3);
  a.at(0, 0) = 1; a.at(0, 1) = 0; a.at(0, 2) = 1;
  a.at(1, 0) = 0; a.at(1, 1) = 1; a.at(1, 2) = 1;
  return a;
}

FiberPolytope unit_cube(int dim) {
  FiberPolytope p;
  p.ambient_dim = 2 * dim;
  p.target_dim = 0;
  p.free_dim = dim;
  p.jacobian = 1;
  for (int i = 0; i < dim; ++i) {
    RatVec g(dim, Rat(0));
    g[i] = 1;
    p.ineq_g.push_back(g);
    p.ineq_c.push_back(Rat(0));
  }
  for (int i = 0; i < dim; ++i) {
    RatVec g(dim, Rat(0));
    g[i] = -1;
    p.ineq_g.push_back(g);
    p.ineq_c.push_back(Rat(1));
  }
  return p;
}

FiberPolytope unit_simplex(int dim) {
  FiberPolytope p;
  p.ambient_dim = dim + 1;
  p.target_dim = 0;
  p.free_dim = dim;
  p.jacobian = 1;
  for (int i = 0; i < dim; ++i) {
    RatVec g(dim, Rat(0));
    g[i] = 1;
    p.ineq_g.push_back(g);
    p.ineq_c.push_back(Rat(0));
  }
  p.ineq_g.push_back(RatVec(dim, Rat(-1)));
  p.ineq_c.push_back(Rat(1));
  return p;
}

}  // namespace

TEST_CASE("fiber polytope construction: the A2 segment") {
  const auto p = fiber_polytope(a2_m1_matrix(), {Rat(1), Rat(1)});
  REQUIRE(p.has_value());
  CHECK(p->free_dim == 1);
  CHECK(p->jacobian == 1);
  CHECK(exact_volume(*p).value == 1);
}

TEST_CASE("fiber polytope at the cone apex") {
  const auto p = fiber_polytope(a2_m1_matrix(), {Rat(0), Rat(0)});
  REQUIRE(p.has_value());  // single point s = 0
  const ExactVolume v = exact_volume(*p);
  CHECK(v.value == 0);
  CHECK(v.degenerate);
}

TEST_CASE("infeasible fiber") {
  CHECK_FALSE(fiber_polytope(a2_m1_matrix(), {Rat(-1), Rat(0)}).has_value());
}

TEST_CASE("construction errors") {
  RatMat deficient(2, 2);
  deficient.at(0, 0) = 1; deficient.at(0, 1) = 1;
  deficient.at(1, 0) = 1; deficient.at(1, 1) = 1;
  CHECK_THROWS_AS(fiber_polytope(deficient, {Rat(1), Rat(1)}), RankDeficientError);

  RatMat opposite(1, 2);
  opposite.at(0, 0) = 1; opposite.at(0, 1) = -1;
  CHECK_THROWS_AS(fiber_polytope(opposite, {Rat(0)}), UnboundedError);

  RatMat wide(1, 25);
  for (int j = 0; j < 25; ++j) wide.at(0, j) = 1;
  CHECK_THROWS_AS(fiber_polytope(wide, {Rat(1)}), ConstraintCapError);
}

TEST_CASE("reference volumes") {
  CHECK(exact_volume(unit_cube(2)).value == 1);
  CHECK(exact_volume(unit_cube(3)).value == 1);
  CHECK(exact_volume(unit_simplex(3)).value == Rat(1, 6));
  CHECK(exact_volume(unit_simplex(4)).value == Rat(1, 24));
}

TEST_CASE("two triangulations agree") {
  std::vector<FiberPolytope> ps = {unit_cube(3), unit_simplex(3), unit_simplex(4)};
  const RootSystem a2 = build_root_system(Series::A, 2);
  const DHProblem m2 = make_dh_problem(a2, 2);
  for (auto xi : {Weight{Rat(2), Rat(2)}, Weight{Rat(3), Rat(1)}, Weight{Rat(5, 2), Rat(4)}}) {
    auto p = fiber_polytope(m2.stacked_matrix(), xi);
    REQUIRE(p.has_value());
    ps.push_back(*p);
  }
  for (const FiberPolytope& p : ps) {
    CHECK(exact_volume(p, BaseVertexRule::LexMin).value ==
          exact_volume(p, BaseVertexRule::LexMax).value);
  }
}

TEST_CASE("volume is invariant under column permutation") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  const RatMat a = make_dh_problem(a2, 2).stacked_matrix();
  const std::vector<std::vector<int>> perms = {{5, 4, 3, 2, 1, 0}, {2, 0, 1, 4, 5, 3},
                                               {1, 3, 5, 0, 2, 4}};
  for (auto xi : {Weight{Rat(2), Rat(2)}, Weight{Rat(7, 2), Rat(1)}}) {
    const auto base = fiber_polytope(a, xi);
    REQUIRE(base.has_value());
    const Rat expect = exact_volume(*base).value;
    for (const auto& perm : perms) {
      RatMat shuffled(a.rows, a.cols);
      for (int j = 0; j < a.cols; ++j)
        for (int i = 0; i < a.rows; ++i) shuffled.at(i, j) = a.at(i, perm[j]);
      const auto p = fiber_polytope(shuffled, xi);
      REQUIRE(p.has_value());
      CHECK(exact_volume(*p).value == expect);
    }
  }
}

TEST_CASE("homogeneity: volume scales by t^a") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  const RatMat a = make_dh_problem(a2, 2).stacked_matrix();
  const Weight xi = {Rat(3), Rat(2)};
  const Rat base = exact_volume(*fiber_polytope(a, xi)).value;
  for (const Rat t : {Rat(2), Rat(1, 2), Rat(5, 3)}) {
    Weight scaled = xi;
    for (Rat& c : scaled) c *= t;
    Rat factor = 1;
    for (int k = 0; k < 4; ++k) factor *= t;  // a = 2*3 - 2
    CHECK(exact_volume(*fiber_polytope(a, scaled)).value == factor * base);
  }
}

TEST_CASE("monte carlo agrees with exact volumes") {
  const long long samples = 1'000'000;
  struct Case {
    FiberPolytope p;
    Rat exact;
  };
  std::vector<Case> cases = {{unit_cube(2), Rat(1)}, {unit_simplex(3), Rat(1, 6)}};
  const auto segment = fiber_polytope(a2_m1_matrix(), {Rat(1), Rat(1)});
  REQUIRE(segment.has_value());
  cases.push_back({*segment, Rat(1)});
  std::uint64_t seed = 7;
  for (const Case& c : cases) {
    const VolumeEstimate est = monte_carlo_volume(c.p, samples, seed++);
    CHECK(est.samples == samples);
    CHECK(std::abs(est.value - rat_to_double(c.exact)) <= 3.0 * est.std_error + 1e-12);
  }
}

TEST_CASE("monte carlo is deterministic for a fixed seed") {
  // A triangle fills only half of its bounding box, so the hit process is
  // nontrivial.
  const FiberPolytope p = unit_simplex(2);
  const VolumeEstimate a = monte_carlo_volume(p, 10000, 42);
  const VolumeEstimate b = monte_carlo_volume(p, 10000, 42);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  const VolumeEstimate c = monte_carlo_volume(p, 10000, 43);
  CHECK(a.value != c.value);  // different seed, different stream
}

TEST_CASE("monte carlo preconditions") {
  const RootSystem a1 = build_root_system(Series::A, 1);
  const auto point = fiber_polytope(make_dh_problem(a1, 1).stacked_matrix(), {Rat(1)});
  REQUIRE(point.has_value());
  CHECK(point->free_dim == 0);
  CHECK_THROWS_AS(monte_carlo_volume(*point, 100, 1), ValidationError);
  CHECK_THROWS_AS(monte_carlo_volume(unit_cube(2), 0, 1), ValidationError);
}

#include "orbitvol/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "orbitvol/dhfun.hpp"
#include "orbitvol/mcreduce.hpp"
#include "orbitvol/polyvol.hpp"
#include "orbitvol/reducedvol.hpp"
#include "orbitvol/su3.hpp"
#include "orbitvol/weylgroup.hpp"

namespace orbitvol {

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long long uniform(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// Random regular SU(3) weights: quarter-integer entries in [1, 20] with
// l_i > m_i > 0.
SU3Weights random_su3_rational(Rng& rng) {
  SU3Weights w;
  for (int i = 0; i < 3; ++i) {
    const long long m4 = rng.uniform(4, 76);
    const long long l4 = rng.uniform(m4 + 1, 80);
    w.m[i] = Rat(m4, 4);
    w.l[i] = Rat(l4, 4);
  }
  return w;
}

SU3Weights random_su3_integral(Rng& rng) {
  SU3Weights w;
  for (int i = 0; i < 3; ++i) {
    const long long m = rng.uniform(1, 19);
    w.m[i] = m;
    w.l[i] = rng.uniform(m + 1, 20);
  }
  return w;
}

std::vector<Weight> su3_to_simple(const SU3Weights& w) {
  std::vector<Weight> xis;
  for (int i = 0; i < 3; ++i) xis.push_back(su3_lm_to_simple(w.l[i], w.m[i]));
  return xis;
}

Weight random_regular_weight(Rng& rng, const RootSystem& rs) {
  while (true) {
    Weight xi(rs.rank);
    for (int i = 0; i < rs.rank; ++i) xi[i] = Rat(rng.uniform(1, 12), 2);
    if (is_regular(rs, xi)) return xi;
  }
}

CheckResult su3_triple_equivalence(Rng& rng) {
  CheckResult r{"1", "su3 triple-product equivalence (signed sum == closed form)", true, ""};
  const RootSystem a2 = build_root_system(Series::A, 2);
  const int draws = 100;
  for (int t = 0; t < draws; ++t) {
    const SU3Weights w = random_su3_rational(rng);
    const VolumeResult engine = signed_sum_volume(make_orbit_tuple(a2, su3_to_simple(w)));
    const Su3Volume closed = jj_volume(w);
    if (engine.value != closed.value) {
      r.pass = false;
      r.detail = "mismatch at l=(" + rat_to_string(w.l[0]) + "," + rat_to_string(w.l[1]) + "," +
                 rat_to_string(w.l[2]) + "), m=(" + rat_to_string(w.m[0]) + "," +
                 rat_to_string(w.m[1]) + "," + rat_to_string(w.m[2]) + ")";
      return r;
    }
  }
  r.detail = std::to_string(draws) + " random regular rational inputs, exact equality";
  return r;
}

CheckResult st_jj_constancy(Rng& rng) {
  CheckResult r{"2", "6-partition formula vs closed form: constant ratio", true, ""};
  std::set<Rat> ratios;
  int retained = 0, excluded_boundary = 0, excluded_zero = 0, attempts = 0;
  while (retained < 50 && attempts < 10000) {
    ++attempts;
    const SU3Weights w = random_su3_integral(rng);
    if (numerator(w.L() + w.M()) % 3 != 0) continue;
    const StVolume st = st_volume(w);
    if (st.boundary_hit) {
      ++excluded_boundary;
      continue;
    }
    const Su3Volume closed = jj_volume(w);
    if (closed.value == 0) {
      ++excluded_zero;
      if (st.value != 0) {
        r.pass = false;
        r.detail = "formulas disagree on a zero-volume input";
        return r;
      }
      continue;
    }
    ratios.insert(st.value / closed.value);
    ++retained;
  }
  if (retained < 50 || ratios.size() != 1) {
    r.pass = false;
    std::ostringstream os;
    os << "retained " << retained << " inputs, " << ratios.size() << " distinct ratios";
    r.detail = os.str();
    return r;
  }
  r.detail = "ratio " + rat_to_string(*ratios.begin()) + " on " + std::to_string(retained) +
             " inputs (" + std::to_string(excluded_boundary) + " boundary-hit, " +
             std::to_string(excluded_zero) + " zero-volume excluded)";
  return r;
}

CheckResult naive_equals_factored(Rng& rng) {
  CheckResult r{"3", "naive sum == factored sum", true, ""};
  const RootSystem a1 = build_root_system(Series::A, 1);
  long long grid_points = 0;
  // A1, N = 3, 4, 5: exhaustive rational grids.
  const std::vector<Rat> g3 = {Rat(1, 2), Rat(1), Rat(3, 2), Rat(2), Rat(5, 2)};
  const std::vector<Rat> g4 = {Rat(1, 2), Rat(1), Rat(2)};
  const std::vector<Rat> g5 = {Rat(1), Rat(3, 2)};
  auto check_a1 = [&](const std::vector<Rat>& grid, int n) {
    std::vector<int> idx(n, 0);
    while (true) {
      std::vector<Weight> xis;
      for (int j = 0; j < n; ++j) xis.push_back(Weight{grid[idx[j]]});
      const OrbitTuple orbit = make_orbit_tuple(a1, std::move(xis));
      if (signed_sum_volume(orbit).value != factored_signed_sum_volume(orbit).value) return false;
      ++grid_points;
      int pos = n - 1;
      while (pos >= 0 && ++idx[pos] == static_cast<int>(grid.size())) idx[pos--] = 0;
      if (pos < 0) return true;
    }
  };
  if (!check_a1(g3, 3) || !check_a1(g4, 4) || !check_a1(g5, 5)) {
    r.pass = false;
    r.detail = "A1 grid mismatch";
    return r;
  }
  const RootSystem a2 = build_root_system(Series::A, 2);
  for (int n : {3, 4}) {
    for (int t = 0; t < 50; ++t) {
      std::vector<Weight> xis;
      for (int j = 0; j < n; ++j) xis.push_back(random_regular_weight(rng, a2));
      const OrbitTuple orbit = make_orbit_tuple(a2, std::move(xis));
      if (signed_sum_volume(orbit).value != factored_signed_sum_volume(orbit).value) {
        r.pass = false;
        r.detail = "A2 N=" + std::to_string(n) + " mismatch";
        return r;
      }
    }
  }
  r.detail = std::to_string(grid_points) + " A1 grid points (N=3,4,5) and 50+50 A2 draws (N=3,4)";
  return r;
}

CheckResult a1_ground_truth() {
  CheckResult r{"4", "A1 ground truth: calibrated formula == triangle indicator", true, ""};
  const RootSystem a1 = build_root_system(Series::A, 1);
  const VolumeResult at_unit =
      signed_sum_volume(make_orbit_tuple(a1, {Weight{Rat(1)}, Weight{Rat(1)}, Weight{Rat(1)}}));
  if (at_unit.value != Rat(-2)) {
    r.pass = false;
    r.detail = "raw value at (1,1,1) is " + rat_to_string(at_unit.value) + ", expected -2";
    return r;
  }
  // 8^3 grid in (0, 4]; the chosen values cannot produce degenerate triangles.
  std::vector<Rat> grid;
  for (int k = 0; k < 8; ++k) grid.push_back(Rat(2 + 3 * k, 6));
  long long checked = 0;
  for (const Rat& c1 : grid)
    for (const Rat& c2 : grid)
      for (const Rat& c3 : grid) {
        const Su2CheckReport rep = su2_check_against_formula({c1, c2, c3});
        if (rep.points.boundary) continue;
        if (!rep.consistent) {
          r.pass = false;
          r.detail = "mismatch at (" + rat_to_string(c1) + "," + rat_to_string(c2) + "," +
                     rat_to_string(c3) + ")";
          return r;
        }
        ++checked;
      }
  if (checked < 500) {
    r.pass = false;
    r.detail = "only " + std::to_string(checked) + " non-degenerate grid points";
    return r;
  }
  r.detail = std::to_string(checked) + " non-degenerate triples; raw(1,1,1) = -2";
  return r;
}

CheckResult dh_closed_form() {
  CheckResult r{"5", "DH density (A2, M=1) == closed form", true, ""};
  const DHProblem prob = make_dh_problem(build_root_system(Series::A, 2), 1);
  long long checked = 0;
  for (int a = -12; a < 20; ++a) {
    for (int b = -12; b < 20; ++b) {
      const Rat l(a, 3), m(b, 3);
      const DhValue dh = dh_density(prob, su3_lm_to_simple(l, m));
      if (dh.value != h_closed_form(l, m)) {
        r.pass = false;
        r.detail = "mismatch at (l,m)=(" + rat_to_string(l) + "," + rat_to_string(m) + ")";
        return r;
      }
      ++checked;
    }
  }
  r.detail = std::to_string(checked) + " (l,m) pairs incl. boundary and exterior, exact";
  return r;
}

CheckResult mc_volume_agreement(long long samples) {
  CheckResult r{"6", "exact volume vs Monte Carlo (3 sigma)", true, ""};
  struct Case {
    FiberPolytope p;
    std::string label;
  };
  std::vector<Case> cases;

  const RootSystem a2 = build_root_system(Series::A, 2);
  const RootSystem a1 = build_root_system(Series::A, 1);
  auto add_fiber = [&cases](const DHProblem& prob, const Weight& xi, const std::string& label) {
    auto fp = fiber_polytope(prob.stacked_matrix(), xi);
    if (fp) cases.push_back({*fp, label});
  };
  const DHProblem a2m1 = make_dh_problem(a2, 1);
  for (auto [l, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 3}, {5, 2}}) {
    add_fiber(a2m1, su3_lm_to_simple(l, m), "A2 M=1");
  }
  const DHProblem a2m2 = make_dh_problem(a2, 2);
  for (auto [x, y] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 1}}) {
    add_fiber(a2m2, Weight{Rat(x), Rat(y)}, "A2 M=2");
  }
  // A1 M=1 has a = 0 (point fibers); the hit-or-miss estimator needs a >= 1,
  // so the A1 family contributes M = 2 and M = 3.
  const DHProblem a1m2 = make_dh_problem(a1, 2);
  add_fiber(a1m2, Weight{Rat(2)}, "A1 M=2");
  add_fiber(a1m2, Weight{Rat(7, 2)}, "A1 M=2");
  const DHProblem a1m3 = make_dh_problem(a1, 3);
  add_fiber(a1m3, Weight{Rat(2)}, "A1 M=3");
  add_fiber(a1m3, Weight{Rat(3)}, "A1 M=3");

  // Reference polytopes with known volumes: unit square (1), unit 3-simplex (1/6).
  FiberPolytope square;
  square.ambient_dim = 4;
  square.target_dim = 0;
  square.free_dim = 2;
  square.ineq_g = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}};
  square.ineq_c = {Rat(0), Rat(0), Rat(1), Rat(1)};
  square.jacobian = 1;
  FiberPolytope simplex3;
  simplex3.ambient_dim = 4;
  simplex3.target_dim = 0;
  simplex3.free_dim = 3;
  simplex3.ineq_g = {{Rat(1), Rat(0), Rat(0)},
                     {Rat(0), Rat(1), Rat(0)},
                     {Rat(0), Rat(0), Rat(1)},
                     {Rat(-1), Rat(-1), Rat(-1)}};
  simplex3.ineq_c = {Rat(0), Rat(0), Rat(0), Rat(1)};
  simplex3.jacobian = 1;
  if (exact_volume(square).value != Rat(1) || exact_volume(simplex3).value != Rat(1, 6)) {
    r.pass = false;
    r.detail = "reference polytope volumes wrong";
    return r;
  }
  cases.push_back({square, "unit square"});
  cases.push_back({simplex3, "unit 3-simplex"});

  if (cases.size() < 13) {
    r.pass = false;
    r.detail = "only " + std::to_string(cases.size()) + " polytopes constructed";
    return r;
  }
  std::uint64_t seed = 4242;
  for (const Case& c : cases) {
    const Rat exact = exact_volume(c.p).value;
    const VolumeEstimate est = monte_carlo_volume(c.p, samples, seed++);
    const double diff = std::abs(est.value - rat_to_double(exact));
    if (diff > 3.0 * est.std_error) {
      std::ostringstream os;
      os << c.label << ": exact " << rat_to_string(exact) << " vs estimate " << est.value
         << " +- " << est.std_error;
      r.pass = false;
      r.detail = os.str();
      return r;
    }
  }
  r.detail = std::to_string(cases.size()) + " polytopes at " + std::to_string(samples) +
             " samples (A1 M=1 has a=0, excluded by the estimator's precondition)";
  return r;
}

CheckResult invariant_suite(Rng& rng) {
  CheckResult r{"7", "invariants: anti-equivariance, permutation, homogeneity, wall vanishing",
                true, ""};
  const std::vector<Rat> scales = {Rat(1, 2), Rat(2, 3), Rat(3, 2), Rat(5, 3)};
  for (const std::string name : {"A1", "A2", "B2"}) {
    const RootSystem rs = build_root_system(name);
    const WeylGroup& wg = weyl_group_of(rs);
    for (int t = 0; t < 20; ++t) {
      std::vector<Weight> xis;
      for (int j = 0; j < 3; ++j) xis.push_back(random_regular_weight(rng, rs));
      const OrbitTuple orbit = make_orbit_tuple(rs, xis);
      const VolumeResult base = factored_signed_sum_volume(orbit);

      // Anti-equivariance under xi_j -> w xi_j.
      const int j = static_cast<int>(rng.uniform(0, 2));
      const WeylElement& w = wg.elements[rng.uniform(0, wg.order() - 1)];
      std::vector<Weight> twisted = xis;
      twisted[j] = act(w, twisted[j]);
      if (factored_signed_sum_volume(make_orbit_tuple(rs, twisted)).value !=
          w.sgn * base.value) {
        r.pass = false;
        r.detail = name + ": anti-equivariance failed";
        return r;
      }
      // Permutation invariance.
      std::vector<Weight> permuted = {xis[1], xis[2], xis[0]};
      if (factored_signed_sum_volume(make_orbit_tuple(rs, permuted)).value != base.value) {
        r.pass = false;
        r.detail = name + ": permutation invariance failed";
        return r;
      }
      // Homogeneity of degree a.
      const Rat s = scales[t % scales.size()];
      std::vector<Weight> scaled = xis;
      for (Weight& xi : scaled)
        for (Rat& c : xi) c *= s;
      Rat factor = 1;
      for (int k = 0; k < base.degree; ++k) factor *= s;
      if (factored_signed_sum_volume(make_orbit_tuple(rs, scaled)).value !=
          factor * base.value) {
        r.pass = false;
        r.detail = name + ": homogeneity failed";
        return r;
      }
      // Wall vanishing: a reflection-fixed weight kills the sum.
      std::vector<Weight> walled = xis;
      if (rs.rank == 1) {
        walled[0] = Weight{Rat(0)};
      } else {
        RatVec fw(rs.rank, Rat(0));
        fw[0] = Rat(rng.uniform(1, 6));
        walled[0] = fundamental_to_simple(rs, fw);  // fixed by the last simple reflection
      }
      const VolumeResult wall_res = factored_signed_sum_volume(make_orbit_tuple(rs, walled));
      if (wall_res.value != 0 || wall_res.warnings.empty()) {
        r.pass = false;
        r.detail = name + ": wall vanishing failed";
        return r;
      }
    }
  }
  r.detail = "20 random instances per group in {A1, A2, B2}, all exact";
  return r;
}

CheckResult weyl_group_checks(bool corrupt) {
  CheckResult r{"8", "Weyl group orders and sign homomorphism", true, ""};
  const std::map<std::string, int> expected = {
      {"A1", 2}, {"A2", 6}, {"A3", 24}, {"B2", 8}, {"G2", 12}};
  for (const auto& [name, order] : expected) {
    const RootSystem rs = build_root_system(name);
    WeylGroup wg = generate_weyl_group(rs);
    if (wg.order() != order) {
      r.pass = false;
      r.detail = name + ": order " + std::to_string(wg.order()) + ", expected " +
                 std::to_string(order);
      return r;
    }
    if (corrupt && name == "A2") wg.elements[1].sgn = -wg.elements[1].sgn;
    if (wg.order() > 24) continue;
    // Exhaustive sign-homomorphism check via determinants of products.
    for (const WeylElement& w1 : wg.elements) {
      for (const WeylElement& w2 : wg.elements) {
        std::vector<long long> prod(static_cast<std::size_t>(rs.rank) * rs.rank, 0);
        for (int i = 0; i < rs.rank; ++i)
          for (int k = 0; k < rs.rank; ++k)
            for (int jj = 0; jj < rs.rank; ++jj)
              prod[static_cast<std::size_t>(i) * rs.rank + jj] += w1.at(i, k) * w2.at(k, jj);
        RatMat pm(rs.rank, rs.rank);
        for (int i = 0; i < rs.rank; ++i)
          for (int jj = 0; jj < rs.rank; ++jj)
            pm.at(i, jj) = prod[static_cast<std::size_t>(i) * rs.rank + jj];
        if (det(std::move(pm)) != w1.sgn * w2.sgn) {
          r.pass = false;
          r.detail = name + ": sign homomorphism violated";
          return r;
        }
      }
    }
  }
  r.detail = "orders A1=2, A2=6, A3=24, B2=8, G2=12; homomorphism exhaustive for |W| <= 24";
  return r;
}

CheckResult normalization_ledger() {
  CheckResult r{"9", "normalization convention and calibration ledger", true, ""};
  // The absolute geometric normalization is out of claim; what is pinned
  // instead: the kappa = 1 pushforward convention and the calibration table.
  const RootSystem a2 = build_root_system(Series::A, 2);
  const DhValue h = dh_density(make_dh_problem(a2, 1), su3_lm_to_simple(Rat(2), Rat(1)));
  if (h.value != 1) {
    r.pass = false;
    r.detail = "kappa convention broken: H(xi(2,1)) != 1";
    return r;
  }
  const CalibrationResult a1c = calibration(build_root_system(Series::A, 1), 3);
  const CalibrationResult a2c = calibration(a2, 3);
  const CalibrationResult b2c = calibration(build_root_system(Series::B, 2), 3);
  if (!a1c.constant || *a1c.constant != Rat(-1, 2) || !a2c.constant || b2c.constant) {
    r.pass = false;
    r.detail = "calibration table inconsistent";
    return r;
  }
  r.detail = "raw values are reported under the kappa=1 convention; calibration: A1,N=3 -> " +
             rat_to_string(*a1c.constant) + ", A2,N=3 -> " + rat_to_string(*a2c.constant) +
             ", others unknown";
  return r;
}

}  // namespace

std::vector<CheckResult> run_acceptance_suite(const SelfTestOptions& opt) {
  std::vector<CheckResult> out;
  {
    Rng rng(opt.seed);
    out.push_back(su3_triple_equivalence(rng));
  }
  {
    Rng rng(opt.seed + 1);
    out.push_back(st_jj_constancy(rng));
  }
  {
    Rng rng(opt.seed + 2);
    out.push_back(naive_equals_factored(rng));
  }
  out.push_back(a1_ground_truth());
  out.push_back(dh_closed_form());
  out.push_back(mc_volume_agreement(opt.mc_samples));
  {
    Rng rng(opt.seed + 3);
    out.push_back(invariant_suite(rng));
  }
  out.push_back(weyl_group_checks(opt.corrupt_weyl_sign));
  out.push_back(normalization_ledger());
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& c) { return c.pass; });
}

}  // namespace orbitvol

#include "orbitvol/reducedvol.hpp"

#include <map>
#include <mutex>

#include "orbitvol/errors.hpp"
#include "orbitvol/ratlp.hpp"
#include "orbitvol/su3.hpp"

namespace orbitvol {

OrbitTuple make_orbit_tuple(RootSystem rs, std::vector<Weight> xis) {
  if (xis.size() < 3) throw ValidationError("an orbit tuple needs N >= 3 weights");
  for (const Weight& xi : xis) {
    if (static_cast<int>(xi.size()) != rs.rank) {
      throw DimensionMismatchError("orbit weight rank does not match the root system");
    }
  }
  return OrbitTuple{std::move(rs), std::move(xis)};
}

Weight moment_image(const std::vector<WeylElement>& ws, const std::vector<Weight>& xis) {
  if (ws.size() != xis.size() || ws.empty()) {
    throw DimensionMismatchError("moment_image: list lengths differ");
  }
  Weight total = act(ws[0], xis[0]);
  for (std::size_t j = 1; j < ws.size(); ++j) {
    const Weight img = act(ws[j], xis[j]);
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += img[i];
  }
  return total;
}

namespace {

long long checked_power(long long base, int exp, long long cap) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

std::vector<std::string> regularity_warnings(const OrbitTuple& orbit) {
  std::vector<std::string> warnings;
  for (int j = 0; j < orbit.count(); ++j) {
    if (!is_regular(orbit.rs, orbit.xis[j])) {
      warnings.push_back("weight " + std::to_string(j + 1) +
                         " lies on a reflection wall (IrregularWeight): the signed sum "
                         "cancels to 0");
    }
  }
  return warnings;
}

}  // namespace

VolumeResult signed_sum_volume(const OrbitTuple& orbit, long long term_cap) {
  const int n_orbits = orbit.count();
  const WeylGroup& wg = weyl_group_of(orbit.rs);
  const long long order = wg.order();
  const long long terms = checked_power(order, n_orbits, term_cap);
  if (terms > term_cap) {
    throw TermCapExceededError("naive sum needs |W|^N = " + std::to_string(order) + "^" +
                               std::to_string(n_orbits) + " > cap " + std::to_string(term_cap));
  }
  const DHProblem prob = make_dh_problem(orbit.rs, n_orbits - 2);

  VolumeResult res;
  res.method = "naive";
  res.degree = prob.degree();
  res.terms_evaluated = terms;
  res.warnings = regularity_warnings(orbit);
  res.value = 0;

  long long wall_hits = 0;
  std::vector<int> tuple(n_orbits, 0);  // odometer over W^N
  while (true) {
    int sgn = 1;
    Weight img(orbit.rs.rank, Rat(0));
    for (int j = 0; j < n_orbits; ++j) {
      const WeylElement& w = wg.elements[tuple[j]];
      sgn *= w.sgn;
      const Weight part = act(w, orbit.xis[j]);
      for (int i = 0; i < orbit.rs.rank; ++i) img[i] += part[i];
    }
    const DhValue h = dh_density(prob, img);
    if (h.wall) ++wall_hits;
    if (h.value != 0) res.value += sgn * h.value;

    int pos = n_orbits - 1;
    while (pos >= 0 && ++tuple[pos] == order) tuple[pos--] = 0;
    if (pos < 0) break;
  }
  if (wall_hits > 0) {
    res.warnings.push_back(std::to_string(wall_hits) +
                           " moment images fell exactly on cone walls (measure-zero terms)");
  }
  return res;
}

VolumeResult factored_signed_sum_volume(const OrbitTuple& orbit, long long term_cap) {
  const int n_orbits = orbit.count();
  const WeylGroup& wg = weyl_group_of(orbit.rs);
  const long long order = wg.order();
  const long long outer = checked_power(order, n_orbits - 1, term_cap);
  if (outer > term_cap) {
    throw TermCapExceededError("factored sum needs |W|^(N-1) = " + std::to_string(order) + "^" +
                               std::to_string(n_orbits - 1) + " > cap " +
                               std::to_string(term_cap));
  }
  const DHProblem prob = make_dh_problem(orbit.rs, n_orbits - 2);
  const bool inner_signed = n_orbits % 2 == 1;  // sign(w)^N

  VolumeResult res;
  res.method = "factored";
  res.degree = prob.degree();
  res.terms_evaluated = outer;
  res.warnings = regularity_warnings(orbit);
  res.value = 0;

  long long wall_hits = 0;
  std::map<Weight, Rat> g_cache;
  auto g = [&](const Weight& zeta) {
    auto it = g_cache.find(zeta);
    if (it != g_cache.end()) return it->second;
    Rat acc = 0;
    for (const WeylElement& w : wg.elements) {
      const DhValue h = dh_density(prob, act(w, zeta));
      if (h.wall) ++wall_hits;
      if (h.value != 0) acc += (inner_signed ? w.sgn : 1) * h.value;
    }
    g_cache.emplace(zeta, acc);
    return acc;
  };

  std::vector<int> tuple(n_orbits - 1, 0);  // odometer over (w_2', ..., w_N')
  while (true) {
    int sgn = 1;
    Weight zeta = orbit.xis[0];
    for (int j = 0; j < n_orbits - 1; ++j) {
      const WeylElement& w = wg.elements[tuple[j]];
      sgn *= w.sgn;
      const Weight part = act(w, orbit.xis[j + 1]);
      for (int i = 0; i < orbit.rs.rank; ++i) zeta[i] += part[i];
    }
    const Rat gv = g(zeta);
    if (gv != 0) res.value += sgn * gv;

    int pos = n_orbits - 2;
    while (pos >= 0 && ++tuple[pos] == order) tuple[pos--] = 0;
    if (pos < 0) break;
  }
  if (wall_hits > 0) {
    res.warnings.push_back(std::to_string(wall_hits) +
                           " moment images fell exactly on cone walls (measure-zero terms)");
  }
  return res;
}

Rat torus_reduced_orbit_volume(const RootSystem& rs, const Weight& eta) {
  const DHProblem prob = make_dh_problem(rs, 1);
  const WeylGroup& wg = weyl_group_of(rs);
  Rat acc = 0;
  for (const WeylElement& w : wg.elements) {
    const DhValue h = dh_density(prob, act(w, eta));
    if (h.value != 0) acc += w.sgn * h.value;
  }
  return acc;
}

AssumptionReport check_assumptions(const OrbitTuple& orbit) {
  AssumptionReport rep;
  rep.all_regular = true;
  for (const Weight& xi : orbit.xis) {
    const bool reg = is_regular(orbit.rs, xi);
    rep.regular.push_back(reg);
    rep.all_regular = rep.all_regular && reg;
  }
  if (!rep.all_regular) {
    rep.notes.push_back("some orbit is not generic (stabilizer larger than the maximal torus)");
  }

  // Necessary condition for the zero level set to be nonempty: for every j,
  // -xi_j lies in the Minkowski sum of the convex hulls of the other Weyl
  // orbits. (Summing hulls over all N orbits at once is weaker: it cannot
  // reject (5,1,1) for A1. For A1 this per-orbit test is exactly the polygon
  // inequality.) Variables are barycentric weights per orbit point.
  const WeylGroup& wg = weyl_group_of(orbit.rs);
  const int d = orbit.rs.rank;
  const int n_orbits = orbit.count();
  const int order = wg.order();
  rep.zero_in_hull_sum = true;
  for (int skip = 0; skip < n_orbits && rep.zero_in_hull_sum; ++skip) {
    RatMat E(d + n_orbits - 1, (n_orbits - 1) * order);
    RatVec f(d + n_orbits - 1, Rat(0));
    for (int i = 0; i < d; ++i) f[i] = -orbit.xis[skip][i];
    int col_block = 0;
    for (int j = 0; j < n_orbits; ++j) {
      if (j == skip) continue;
      for (int k = 0; k < order; ++k) {
        const Weight img = act(wg.elements[k], orbit.xis[j]);
        for (int i = 0; i < d; ++i) E.at(i, col_block * order + k) = img[i];
        E.at(d + col_block, col_block * order + k) = 1;
      }
      f[d + col_block] = 1;
      ++col_block;
    }
    rep.zero_in_hull_sum = lp_feasible(E, f);
  }
  if (!rep.zero_in_hull_sum) {
    rep.notes.push_back(
        "0 cannot lie in the sum of the orbits (hull membership fails): the zero level set is "
        "empty");
  }

  const long long scan_cap = 20000;
  const long long tuples = checked_power(order, n_orbits, scan_cap);
  if (tuples <= scan_cap) {
    const DHProblem prob = make_dh_problem(orbit.rs, n_orbits - 2);
    std::vector<int> tuple(n_orbits, 0);
    while (true) {
      Weight img(d, Rat(0));
      for (int j = 0; j < n_orbits; ++j) {
        const Weight part = act(wg.elements[tuple[j]], orbit.xis[j]);
        for (int i = 0; i < d; ++i) img[i] += part[i];
      }
      if (in_cone(prob, img) == ConeLocation::Boundary) ++rep.wall_moment_images;
      int pos = n_orbits - 1;
      while (pos >= 0 && ++tuple[pos] == order) tuple[pos--] = 0;
      if (pos < 0) break;
    }
    rep.wall_scan_complete = true;
  } else {
    rep.notes.push_back("wall census skipped: |W|^N exceeds the scan cap");
  }
  rep.notes.push_back("smoothness of the reduced space is not checkable here");
  return rep;
}

CalibrationResult calibration(const RootSystem& rs, int n_orbits) {
  if (rs.series == Series::A && rs.rank == 1 && n_orbits == 3) {
    return {Rat(-1, 2),
            "reduced space of a closing triangle is one point of volume 1; the raw sum at "
            "(1,1,1) is -2"};
  }
  if (rs.series == Series::A && rs.rank == 2 && n_orbits == 3) {
    static std::optional<Rat> cached;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (!cached) {
      // One comparison point against the 6-partition formula, chosen away
      // from all of its equality boundaries.
      SU3Weights w{{Rat(7), Rat(7), Rat(7)}, {Rat(1), Rat(4), Rat(4)}};
      const StVolume st = st_volume(w);
      std::vector<Weight> xis;
      for (int i = 0; i < 3; ++i) xis.push_back(su3_lm_to_simple(w.l[i], w.m[i]));
      const VolumeResult raw = signed_sum_volume(make_orbit_tuple(rs, std::move(xis)));
      if (raw.value == 0) throw Error("Internal", "calibration point has zero raw volume");
      cached = st.value / raw.value;
    }
    return {*cached, "ratio to the 6-partition formula value at l=(7,7,7), m=(1,4,4)"};
  }
  return {std::nullopt, "no independent volume source available for " + rs.name() + ", N=" +
                            std::to_string(n_orbits)};
}

}  // namespace orbitvol

#include "orbitvol/polyvol.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "orbitvol/errors.hpp"
#include "orbitvol/ratlp.hpp"

namespace orbitvol {

namespace {

// Next a-subset of {0..n-1} in lexicographic order; returns false after the
// last one.
bool next_subset(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool satisfies_all(const FiberPolytope& p, const RatVec& t) {
  for (int i = 0; i < p.ambient_dim; ++i) {
    Rat v = p.ineq_c[i];
    for (int j = 0; j < p.free_dim; ++j) v += p.ineq_g[i][j] * t[j];
    if (v < 0) return false;
  }
  return true;
}

// Columns of A must lie in an open half-space { x : y.x > 0 }; search for y
// with y.col_j >= 1 for all j (free y split into a difference of
// nonnegatives, surplus variables for the strict side).
bool columns_in_open_halfspace(const RatMat& A) {
  const int d = A.rows, n = A.cols;
  RatMat E(n, 2 * d + n);
  RatVec f(n, Rat(1));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < d; ++i) {
      E.at(j, i) = A.at(i, j);
      E.at(j, d + i) = -A.at(i, j);
    }
    E.at(j, 2 * d + j) = -1;
  }
  return lp_feasible(E, f);
}

struct Triangulator {
  const FiberPolytope& p;
  const std::vector<RatVec>& verts;
  std::vector<std::vector<int>> tight;  // per vertex: constraint indices held with equality
  BaseVertexRule rule;

  // dim k face given by the vertex indices in `face` (sorted); emits
  // k-simplices as index tuples via cones from the face's base vertex over
  // triangulated facets.
  void face_simplices(const std::vector<int>& face, int k,
                      std::vector<int>& apex_chain,
                      std::vector<std::vector<int>>& out) const {
    if (k == 1) {
      // Extreme points on a 1-face are exactly its two endpoints.
      if (face.size() != 2) throw Error("Internal", "1-face with != 2 vertices");
      std::vector<int> s = apex_chain;
      s.insert(s.end(), face.begin(), face.end());
      out.push_back(std::move(s));
      return;
    }
    const int base = pick_base(face);
    std::set<std::vector<int>> facet_sets;
    for (int c = 0; c < p.ambient_dim; ++c) {
      std::vector<int> sub;
      for (int v : face)
        if (std::binary_search(tight[v].begin(), tight[v].end(), c)) sub.push_back(v);
      if (sub.size() == face.size()) continue;  // tight on the whole face
      if (static_cast<int>(sub.size()) < k) continue;
      if (std::binary_search(sub.begin(), sub.end(), base)) continue;
      if (face_dim(sub) != k - 1) continue;
      facet_sets.insert(std::move(sub));
    }
    apex_chain.push_back(base);
    for (const auto& facet : facet_sets) face_simplices(facet, k - 1, apex_chain, out);
    apex_chain.pop_back();
  }

  int pick_base(const std::vector<int>& face) const {
    int best = face[0];
    for (int v : face) {
      const bool better = rule == BaseVertexRule::LexMin ? verts[v] < verts[best]
                                                         : verts[v] > verts[best];
      if (better) best = v;
    }
    return best;
  }

  int face_dim(const std::vector<int>& vs) const {
    std::vector<RatVec> pts;
    pts.reserve(vs.size());
    for (int v : vs) pts.push_back(verts[v]);
    return affine_dim(pts);
  }
};

Rat simplex_volume_numerator(const std::vector<RatVec>& verts,
                             const std::vector<int>& simplex, int a) {
  RatMat m(a, a);
  const RatVec& v0 = verts[simplex[0]];
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) m.at(i, j) = verts[simplex[i + 1]][j] - v0[j];
  Rat d = det(std::move(m));
  return d < 0 ? -d : d;
}

}  // namespace

std::optional<FiberPolytope> fiber_polytope(const RatMat& A, const RatVec& xi) {
  const int d = A.rows, n = A.cols;
  if (static_cast<int>(xi.size()) != d) {
    throw DimensionMismatchError("fiber_polytope: xi has wrong dimension");
  }
  if (n > kMaxFiberConstraints) {
    throw ConstraintCapError("fiber_polytope: " + std::to_string(n) + " s-variables exceed cap " +
                             std::to_string(kMaxFiberConstraints));
  }
  if (rank(A) != d) throw RankDeficientError("fiber_polytope: A is not of full row rank");
  if (!columns_in_open_halfspace(A)) {
    throw UnboundedError("fiber_polytope: columns of A do not lie in an open half-space");
  }
  if (!lp_feasible(A, xi)) return std::nullopt;

  // Deterministic kernel basis and right section from the RREF of A.
  RatMat r = A;
  const std::vector<int> piv = rref(r);
  std::vector<int> free_cols;
  {
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    for (int c = 0; c < n; ++c)
      if (!is_piv[c]) free_cols.push_back(c);
  }
  const int a = n - d;
  RatMat kernel(n, a);  // columns: one basis vector per free column
  for (int k = 0; k < a; ++k) {
    kernel.at(free_cols[k], k) = 1;
    for (int i = 0; i < d; ++i) kernel.at(piv[i], k) = -r.at(i, free_cols[k]);
  }
  RatMat sectionT(d, d);  // A restricted to pivot columns
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) sectionT.at(i, j) = A.at(i, piv[j]);
  const RatMat x = inverse(sectionT);  // solves A[:,piv] X = I
  RatMat section(n, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) section.at(piv[j], i) = x.at(j, i);

  FiberPolytope p;
  p.ambient_dim = n;
  p.target_dim = d;
  p.free_dim = a;
  const RatVec s0 = mat_vec(section, xi);
  p.ineq_c = s0;
  p.ineq_g.assign(n, RatVec(a, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < a; ++k) p.ineq_g[i][k] = kernel.at(i, k);

  RatMat rn(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) rn.at(i, j) = section.at(i, j);
    for (int k = 0; k < a; ++k) rn.at(i, d + k) = kernel.at(i, k);
  }
  Rat jac = det(std::move(rn));
  p.jacobian = jac < 0 ? -jac : jac;
  return p;
}

std::vector<RatVec> enumerate_vertices(const FiberPolytope& p) {
  const int a = p.free_dim, n = p.ambient_dim;
  std::set<RatVec> found;
  if (a == 0) return {};
  if (n < a) return {};
  std::vector<int> idx(a);
  for (int i = 0; i < a; ++i) idx[i] = i;
  do {
    RatMat m(a, a);
    RatVec b(a);
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < a; ++j) m.at(i, j) = p.ineq_g[idx[i]][j];
      b[i] = -p.ineq_c[idx[i]];
    }
    const auto t = solve_square(std::move(m), std::move(b));
    if (t && satisfies_all(p, *t)) found.insert(*t);
  } while (next_subset(idx, n));
  return {found.begin(), found.end()};
}

ExactVolume exact_volume(const FiberPolytope& p, BaseVertexRule rule) {
  if (p.free_dim == 0) {
    for (const Rat& c : p.ineq_c)
      if (c < 0) return {Rat(0), false};
    return {p.jacobian, false};
  }
  const std::vector<RatVec> verts = enumerate_vertices(p);
  if (verts.empty()) return {Rat(0), true};
  if (affine_dim(verts) < p.free_dim) return {Rat(0), true};

  Triangulator tri{p, verts, {}, rule};
  tri.tight.resize(verts.size());
  for (std::size_t v = 0; v < verts.size(); ++v) {
    for (int i = 0; i < p.ambient_dim; ++i) {
      Rat val = p.ineq_c[i];
      for (int j = 0; j < p.free_dim; ++j) val += p.ineq_g[i][j] * verts[v][j];
      if (val == 0) tri.tight[v].push_back(i);
    }
  }
  std::vector<int> all(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) all[i] = static_cast<int>(i);
  std::vector<std::vector<int>> simplices;
  std::vector<int> chain;
  tri.face_simplices(all, p.free_dim, chain, simplices);

  Rat vol = 0;
  for (const auto& s : simplices) vol += simplex_volume_numerator(verts, s, p.free_dim);
  Rat fact = 1;
  for (int i = 2; i <= p.free_dim; ++i) fact *= i;
  return {p.jacobian * vol / fact, false};
}

VolumeEstimate monte_carlo_volume(const FiberPolytope& p, long long samples,
                                  std::uint64_t seed) {
  if (p.free_dim < 1) throw ValidationError("monte_carlo_volume: requires a >= 1");
  if (samples <= 0) throw ValidationError("monte_carlo_volume: samples must be positive");
  const std::vector<RatVec> verts = enumerate_vertices(p);
  if (verts.empty()) return {0.0, 0.0, samples, seed};

  const int a = p.free_dim;
  std::vector<double> lo(a), hi(a);
  for (int j = 0; j < a; ++j) {
    Rat mn = verts[0][j], mx = verts[0][j];
    for (const auto& v : verts) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    lo[j] = rat_to_double(mn);
    hi[j] = rat_to_double(mx);
  }
  double boxvol = 1.0;
  for (int j = 0; j < a; ++j) boxvol *= hi[j] - lo[j];
  const double jac = rat_to_double(p.jacobian);
  if (boxvol == 0.0) return {0.0, 0.0, samples, seed};

  // Double-precision copies of the constraints for the sampling loop.
  std::vector<std::vector<double>> g(p.ambient_dim, std::vector<double>(a));
  std::vector<double> c(p.ambient_dim);
  for (int i = 0; i < p.ambient_dim; ++i) {
    c[i] = rat_to_double(p.ineq_c[i]);
    for (int j = 0; j < a; ++j) g[i][j] = rat_to_double(p.ineq_g[i][j]);
  }

  std::mt19937_64 rng(seed);
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<double> t(a);
  long long hits = 0;
  for (long long s = 0; s < samples; ++s) {
    for (int j = 0; j < a; ++j) t[j] = lo[j] + unit() * (hi[j] - lo[j]);
    bool ok = true;
    for (int i = 0; i < p.ambient_dim && ok; ++i) {
      double v = c[i];
      for (int j = 0; j < a; ++j) v += g[i][j] * t[j];
      ok = v >= 0.0;
    }
    if (ok) ++hits;
  }
  const double frac = static_cast<double>(hits) / static_cast<double>(samples);
  VolumeEstimate est;
  est.value = frac * boxvol * jac;
  est.std_error = boxvol * jac * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
  est.samples = samples;
  est.seed = seed;
  return est;
}

}  // namespace orbitvol

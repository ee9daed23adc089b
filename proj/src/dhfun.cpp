#include "orbitvol/dhfun.hpp"

#include <map>
#include <mutex>
#include <string>

#include "orbitvol/errors.hpp"
#include "orbitvol/ratlp.hpp"

namespace orbitvol {

RatMat DHProblem::stacked_matrix() const {
  const int d = rs.rank;
  const int r = rs.num_positive_roots();
  RatMat A(d, multiplicity * r);
  for (int block = 0; block < multiplicity; ++block) {
    for (int k = 0; k < r; ++k) {
      for (int i = 0; i < d; ++i) A.at(i, block * r + k) = rs.positive_roots[k][i];
    }
  }
  return A;
}

DHProblem make_dh_problem(const RootSystem& rs, int multiplicity) {
  if (multiplicity < 1) throw ValidationError("multiplicity must be >= 1");
  DHProblem p{rs, multiplicity};
  if (p.degree() < 0) {
    throw ValidationError("multiplicity " + std::to_string(multiplicity) + " gives a < 0 for " +
                          rs.name());
  }
  return p;
}

namespace {

std::string cache_key(const DHProblem& prob, const Weight& xi) {
  std::string k = prob.rs.name();
  k += ':';
  k += std::to_string(prob.multiplicity);
  k += ':';
  k += vec_to_string(xi);
  return k;
}

std::map<std::string, DhValue>& dh_cache() {
  static std::map<std::string, DhValue> cache;
  return cache;
}

std::mutex& dh_cache_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

DhValue dh_density(const DHProblem& prob, const Weight& xi) {
  if (static_cast<int>(xi.size()) != prob.rs.rank) {
    throw DimensionMismatchError("dh_density: weight rank mismatch");
  }
  const std::string key = cache_key(prob, xi);
  {
    std::lock_guard<std::mutex> lock(dh_cache_mutex());
    auto it = dh_cache().find(key);
    if (it != dh_cache().end()) return it->second;
  }

  DhValue result{Rat(0), false};
  const auto fp = fiber_polytope(prob.stacked_matrix(), xi);
  if (fp) {
    if (prob.degree() == 0) {
      // 0-dimensional fiber: indicator of the closed cone; points with a
      // vanishing coordinate sit on the cone boundary.
      result.value = fp->jacobian;
      for (const Rat& c : fp->ineq_c) {
        if (c == 0) {
          result.wall = true;
          break;
        }
      }
    } else {
      const ExactVolume ev = exact_volume(*fp);
      if (ev.value == 0) {
        result.wall = true;  // feasible with zero measure <=> boundary of the cone
      } else {
        result.value = ev.value;
      }
    }
  }

  std::lock_guard<std::mutex> lock(dh_cache_mutex());
  dh_cache().emplace(key, result);
  return result;
}

ConeLocation in_cone(const DHProblem& prob, const Weight& xi) {
  if (static_cast<int>(xi.size()) != prob.rs.rank) {
    throw DimensionMismatchError("in_cone: weight rank mismatch");
  }
  const RatMat A = prob.stacked_matrix();
  if (!lp_feasible(A, xi)) return ConeLocation::Outside;

  // maximize delta subject to  A u + (A 1) delta = xi, delta + sigma = 1,
  // u, delta, sigma >= 0.  Strictly positive optimum <=> interior point.
  const int d = A.rows, n = A.cols;
  RatMat E(d + 1, n + 2);
  RatVec f(d + 1), c(n + 2, Rat(0));
  for (int i = 0; i < d; ++i) {
    Rat rowsum = 0;
    for (int j = 0; j < n; ++j) {
      E.at(i, j) = A.at(i, j);
      rowsum += A.at(i, j);
    }
    E.at(i, n) = rowsum;
    f[i] = xi[i];
  }
  E.at(d, n) = 1;
  E.at(d, n + 1) = 1;
  f[d] = 1;
  c[n] = 1;
  const LpResult res = lp_solve_max(E, f, c);
  if (res.status != LpStatus::Optimal) {
    throw Error("Internal", "in_cone: bounded LP did not reach an optimum");
  }
  return res.objective > 0 ? ConeLocation::Inside : ConeLocation::Boundary;
}

}  // namespace orbitvol

#include "orbitvol/weylgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "orbitvol/errors.hpp"

namespace orbitvol {

bool WeylElement::is_identity() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

int WeylGroup::identity_index() const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].is_identity()) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<long long> mat_mul_ll(const std::vector<long long>& a,
                                  const std::vector<long long>& b, int d) {
  std::vector<long long> c(static_cast<std::size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const long long v = a[static_cast<std::size_t>(i) * d + k];
      if (v == 0) continue;
      for (int j = 0; j < d; ++j)
        c[static_cast<std::size_t>(i) * d + j] += v * b[static_cast<std::size_t>(k) * d + j];
    }
  return c;
}

int det_sign(const std::vector<long long>& m, int d) {
  RatMat r(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r.at(i, j) = m[static_cast<std::size_t>(i) * d + j];
  const Rat dv = det(std::move(r));
  if (dv == 1) return 1;
  if (dv == -1) return -1;
  throw Error("Internal", "Weyl matrix determinant is not +-1");
}

}  // namespace

WeylElement simple_reflection(const RootSystem& rs, int j) {
  const int d = rs.rank;
  WeylElement w;
  w.dim = d;
  w.m.assign(static_cast<std::size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i) w.m[static_cast<std::size_t>(i) * d + i] = 1;
  for (int k = 0; k < d; ++k) w.m[static_cast<std::size_t>(j) * d + k] -= rs.cartan[k][j];
  w.sgn = -1;
  return w;
}

WeylGroup generate_weyl_group(const RootSystem& rs, std::size_t cap) {
  const int d = rs.rank;
  std::vector<std::vector<long long>> gens;
  for (int j = 0; j < d; ++j) gens.push_back(simple_reflection(rs, j).m);

  std::set<std::vector<long long>> seen;
  std::vector<long long> id(static_cast<std::size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i) id[static_cast<std::size_t>(i) * d + i] = 1;
  seen.insert(id);
  std::vector<std::vector<long long>> frontier = {id};
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        auto h = mat_mul_ll(s, g, d);
        if (seen.insert(h).second) {
          if (seen.size() > cap) {
            throw OrderCapExceededError("Weyl group order exceeds cap " + std::to_string(cap));
          }
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }

  WeylGroup wg;
  for (const auto& m : seen) {  // std::set iterates in lex order already
    WeylElement e;
    e.dim = d;
    e.m = m;
    e.sgn = det_sign(m, d);
    wg.elements.push_back(std::move(e));
  }
  return wg;
}

const WeylGroup& weyl_group_of(const RootSystem& rs) {
  static std::map<std::string, WeylGroup> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rs.name());
  if (it == cache.end()) it = cache.emplace(rs.name(), generate_weyl_group(rs)).first;
  return it->second;
}

Weight act(const WeylElement& w, const Weight& xi) {
  if (static_cast<int>(xi.size()) != w.dim) {
    throw DimensionMismatchError("act: weight rank does not match Weyl matrix");
  }
  Weight y(w.dim, Rat(0));
  for (int i = 0; i < w.dim; ++i) {
    Rat acc = 0;
    for (int j = 0; j < w.dim; ++j) {
      const long long v = w.at(i, j);
      if (v != 0) acc += Rat(v) * xi[j];
    }
    y[i] = acc;
  }
  return y;
}

}  // namespace orbitvol

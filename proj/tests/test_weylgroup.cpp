#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "orbitvol/errors.hpp"
#include "orbitvol/ratmat.hpp"
#include "orbitvol/su3.hpp"
#include "orbitvol/weylgroup.hpp"

using namespace orbitvol;

namespace {

std::vector<long long> mul(const WeylElement& a, const WeylElement& b) {
  const int d = a.dim;
  std::vector<long long> c(static_cast<std::size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) c[i * d + j] += a.at(i, k) * b.at(k, j);
  return c;
}

}  // namespace

TEST_CASE("Weyl group orders") {
  const std::map<std::string, int> expected = {{"A1", 2}, {"A2", 6}, {"A3", 24},
                                               {"A4", 120}, {"B2", 8}, {"B3", 48},
                                               {"C2", 8}, {"G2", 12}, {"D4", 192}};
  for (const auto& [name, order] : expected) {
    CAPTURE(name);
    CHECK(generate_weyl_group(build_root_system(name)).order() == order);
  }
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(generate_weyl_group(build_root_system("A2"), 4), OrderCapExceededError);
  CHECK_THROWS_AS(generate_weyl_group(build_root_system("D4"), 100), OrderCapExceededError);
}

TEST_CASE("action on weights") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  const WeylGroup wg = generate_weyl_group(a2);
  const int id = wg.identity_index();
  REQUIRE(id >= 0);
  CHECK(act(wg.elements[id], Weight{Rat(3, 2), Rat(-1)}) == Weight{Rat(3, 2), Rat(-1)});

  const WeylElement s1 = simple_reflection(a2, 0);
  CHECK(s1.sgn == -1);
  CHECK(act(s1, Weight{Rat(1), Rat(0)}) == Weight{Rat(-1), Rat(0)});
  // s1 (x1, x2) = (x2 - x1, x2)
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const Rat x1(static_cast<long long>(rng() % 19) - 9, 2);
    const Rat x2(static_cast<long long>(rng() % 19) - 9, 3);
    CHECK(act(s1, Weight{x1, x2}) == Weight{x2 - x1, x2});
  }
  CHECK_THROWS_AS(act(s1, Weight{Rat(1)}), DimensionMismatchError);
}

TEST_CASE("group axioms and sign homomorphism") {
  for (const std::string name : {"A1", "A2", "B2", "G2", "A3"}) {
    const RootSystem rs = build_root_system(name);
    const WeylGroup wg = generate_weyl_group(rs);
    CAPTURE(name);

    std::set<std::vector<long long>> table;
    for (const WeylElement& w : wg.elements) table.insert(w.m);
    CHECK(table.size() == static_cast<std::size_t>(wg.order()));

    bool has_identity = false;
    for (const WeylElement& w : wg.elements) has_identity = has_identity || w.is_identity();
    CHECK(has_identity);

    for (const WeylElement& w1 : wg.elements) {
      bool has_inverse = false;
      for (const WeylElement& w2 : wg.elements) {
        const auto prod = mul(w1, w2);
        CHECK(table.count(prod) == 1);  // closure
        bool is_id = true;
        for (int i = 0; i < rs.rank && is_id; ++i)
          for (int j = 0; j < rs.rank && is_id; ++j)
            is_id = prod[i * rs.rank + j] == (i == j ? 1 : 0);
        has_inverse = has_inverse || is_id;
      }
      CHECK(has_inverse);
    }

    if (wg.order() <= 24) {
      for (const WeylElement& w1 : wg.elements) {
        for (const WeylElement& w2 : wg.elements) {
          const auto prod = mul(w1, w2);
          RatMat pm(rs.rank, rs.rank);
          for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j) pm.at(i, j) = prod[i * rs.rank + j];
          CHECK(det(std::move(pm)) == w1.sgn * w2.sgn);
        }
      }
    }
  }
}

TEST_CASE("elements permute the root set") {
  for (const std::string name : {"A2", "B2", "G2"}) {
    const RootSystem rs = build_root_system(name);
    std::set<Weight> roots;
    for (const Weight& b : rs.positive_roots) {
      roots.insert(b);
      Weight neg(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) neg[i] = -b[i];
      roots.insert(neg);
    }
    for (const WeylElement& w : generate_weyl_group(rs).elements) {
      for (const Weight& b : roots) CHECK(roots.count(act(w, b)) == 1);
    }
  }
}

TEST_CASE("A2 group matches the (l,m)-basis matrices") {
  // Base change from (l, m) coordinates to simple-root coordinates:
  // columns are Omega1 and Omega2 - Omega1.
  RatMat T(2, 2);
  T.at(0, 0) = Rat(2, 3); T.at(0, 1) = Rat(-1, 3);
  T.at(1, 0) = Rat(1, 3); T.at(1, 1) = Rat(1, 3);
  const RatMat Tinv = inverse(T);

  const WeylGroup wg = generate_weyl_group(build_root_system(Series::A, 2));
  std::set<std::pair<std::vector<Rat>, int>> via_conjugation;
  for (const WeylElement& w : wg.elements) {
    RatMat wm(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) wm.at(i, j) = w.at(i, j);
    const RatMat lm = mat_mul(Tinv, mat_mul(wm, T));
    via_conjugation.insert({lm.a, w.sgn});
  }

  std::set<std::pair<std::vector<Rat>, int>> reference;
  const auto& mats = su3_weyl_matrices();
  const auto& signs = su3_weyl_signs();
  for (int i = 0; i < 6; ++i) {
    reference.insert({{Rat(mats[i][0]), Rat(mats[i][1]), Rat(mats[i][2]), Rat(mats[i][3])},
                      signs[i]});
  }
  CHECK(via_conjugation == reference);
}

TEST_CASE("v2 is an even element") {
  const auto& mats = su3_weyl_matrices();
  CHECK(mats[2] == std::array<long long, 4>{0, -1, 1, -1});
  CHECK(su3_weyl_signs()[2] == 1);
}

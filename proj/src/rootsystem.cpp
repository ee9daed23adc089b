#include "orbitvol/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "orbitvol/errors.hpp"

namespace orbitvol {

namespace {

const std::vector<std::pair<Series, int>> kSupported = {
    {Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::A, 4},
    {Series::B, 2}, {Series::B, 3}, {Series::C, 2}, {Series::C, 3},
    {Series::D, 4}, {Series::G, 2},
};

char series_letter(Series s) {
  switch (s) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
    case Series::G: return 'G';
  }
  return '?';
}

std::vector<std::vector<long long>> cartan_matrix(Series s, int n) {
  std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  switch (s) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // last simple root short
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;  // last simple root long
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Series::G:
      c[0][1] = -1;
      c[1][0] = -3;
      break;
  }
  return c;
}

// Length-squared halves making (alpha_i, alpha_j) = cartan[i][j] * d[j]
// symmetric.
RatVec symmetrizer(Series s, int n) {
  RatVec d(n, Rat(1));
  switch (s) {
    case Series::A:
    case Series::D:
      break;
    case Series::B:
      d[n - 1] = Rat(1, 2);
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) d[i] = Rat(1, 2);
      break;
    case Series::G:
      d[1] = 3;
      break;
  }
  return d;
}

// Simple reflection s_j acting on simple-root coordinates:
// (s_j x)_j = x_j - sum_k cartan[k][j] x_k, other coordinates unchanged.
std::vector<long long> reflect(const std::vector<std::vector<long long>>& cartan,
                               int j, const std::vector<long long>& x) {
  std::vector<long long> y = x;
  long long pairing = 0;
  for (std::size_t k = 0; k < x.size(); ++k) pairing += cartan[k][j] * x[k];
  y[j] -= pairing;
  return y;
}

std::vector<std::vector<long long>> positive_roots_by_closure(
    const std::vector<std::vector<long long>>& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::set<std::vector<long long>> roots;
  std::vector<std::vector<long long>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& r : frontier) {
      for (int j = 0; j < n; ++j) {
        std::vector<long long> img = reflect(cartan, j, r);
        if (std::any_of(img.begin(), img.end(), [](long long v) { return v < 0; })) continue;
        if (roots.insert(img).second) next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<long long>> out(roots.begin(), roots.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    long long ha = 0, hb = 0;
    for (long long v : a) ha += v;
    for (long long v : b) hb += v;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

}  // namespace

std::string RootSystem::name() const {
  return std::string(1, series_letter(series)) + std::to_string(rank);
}

bool is_supported_type(Series series, int rank) {
  return std::find(kSupported.begin(), kSupported.end(),
                   std::make_pair(series, rank)) != kSupported.end();
}

RootSystem build_root_system(Series series, int rank) {
  if (!is_supported_type(series, rank)) {
    throw UnsupportedTypeError("unsupported root system " +
                               std::string(1, series_letter(series)) +
                               std::to_string(rank));
  }
  RootSystem rs;
  rs.series = series;
  rs.rank = rank;
  rs.cartan = cartan_matrix(series, rank);

  for (int i = 0; i < rank; ++i) {
    Weight e(rank, Rat(0));
    e[i] = 1;
    rs.simple_roots.push_back(std::move(e));
  }
  for (const auto& r : positive_roots_by_closure(rs.cartan)) {
    Weight w(rank);
    for (int j = 0; j < rank; ++j) w[j] = r[j];
    rs.positive_roots.push_back(std::move(w));
  }

  RatMat c(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) c.at(i, j) = rs.cartan[i][j];
  const RatMat cinv = inverse(c);
  for (int i = 0; i < rank; ++i) {
    Weight w(rank);
    for (int j = 0; j < rank; ++j) w[j] = cinv.at(i, j);
    rs.fundamental_weights.push_back(std::move(w));
  }
  rs.inv_cartan_t = transpose(cinv);

  const RatVec d = symmetrizer(series, rank);
  rs.gram = RatMat(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.gram.at(i, j) = Rat(rs.cartan[i][j]) * d[j];
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (rs.gram.at(i, j) != rs.gram.at(j, i))
        throw Error("Internal", "gram matrix not symmetric for " + rs.name());

  return rs;
}

RootSystem build_root_system(const std::string& name) {
  std::string t;
  for (char ch : name)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.size() < 2) throw UnsupportedTypeError("cannot parse group name '" + name + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
  Series s;
  switch (letter) {
    case 'A': s = Series::A; break;
    case 'B': s = Series::B; break;
    case 'C': s = Series::C; break;
    case 'D': s = Series::D; break;
    case 'G': s = Series::G; break;
    default: throw UnsupportedTypeError("unknown series in '" + name + "'");
  }
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
      throw UnsupportedTypeError("cannot parse group name '" + name + "'");
    }
  }
  return build_root_system(s, std::stoi(t.substr(1)));
}

Weight fundamental_to_simple(const RootSystem& rs, const RatVec& fw_coords) {
  if (static_cast<int>(fw_coords.size()) != rs.rank) {
    throw DimensionMismatchError("fundamental_to_simple: expected " +
                                 std::to_string(rs.rank) + " coordinates");
  }
  return mat_vec(rs.inv_cartan_t, fw_coords);
}

RatVec simple_to_fundamental(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.size()) != rs.rank) {
    throw DimensionMismatchError("simple_to_fundamental: expected " +
                                 std::to_string(rs.rank) + " coordinates");
  }
  // Inverse of cartan^-T is cartan^T.
  RatVec fw(rs.rank, Rat(0));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) fw[i] += Rat(rs.cartan[j][i]) * w[j];
  return fw;
}

Weight su3_lm_to_simple(const Rat& l, const Rat& m) {
  return {(2 * l - m) / 3, (l + m) / 3};
}

std::pair<Rat, Rat> su3_simple_to_lm(const Weight& w) {
  if (w.size() != 2) throw DimensionMismatchError("su3_simple_to_lm: rank-2 weight expected");
  const Rat lm = 2 * w[0] - w[1];  // l - m
  const Rat m = 2 * w[1] - w[0];
  return {lm + m, m};
}

Rat root_pairing(const RootSystem& rs, const Weight& xi, const Weight& beta) {
  if (static_cast<int>(xi.size()) != rs.rank || static_cast<int>(beta.size()) != rs.rank) {
    throw DimensionMismatchError("root_pairing: rank mismatch");
  }
  Rat acc = 0;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) acc += xi[i] * rs.gram.at(i, j) * beta[j];
  return acc;
}

bool is_regular(const RootSystem& rs, const Weight& xi) {
  for (const Weight& beta : rs.positive_roots) {
    if (root_pairing(rs, xi, beta) == 0) return false;
  }
  return true;
}

}  // namespace orbitvol

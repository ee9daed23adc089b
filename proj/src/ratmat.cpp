#include "orbitvol/ratmat.hpp"

#include "orbitvol/errors.hpp"

namespace orbitvol {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatVec mat_vec(const RatMat& m, const RatVec& x) {
  if (static_cast<int>(x.size()) != m.cols) {
    throw DimensionMismatchError("mat_vec: size mismatch");
  }
  RatVec y(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    Rat acc = 0;
    for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

RatMat mat_mul(const RatMat& lhs, const RatMat& rhs) {
  if (lhs.cols != rhs.rows) throw DimensionMismatchError("mat_mul: size mismatch");
  RatMat out(lhs.rows, rhs.cols);
  for (int i = 0; i < lhs.rows; ++i) {
    for (int k = 0; k < lhs.cols; ++k) {
      const Rat& v = lhs.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rhs.cols; ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  }
  return out;
}

RatMat transpose(const RatMat& m) {
  RatMat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

Rat det(RatMat m) {
  if (m.rows != m.cols) throw DimensionMismatchError("det: matrix not square");
  const int n = m.rows;
  Rat result = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      result = -result;
    }
    const Rat pivot = m.at(col, col);
    result *= pivot;
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col) == 0) continue;
      const Rat factor = m.at(r, col) / pivot;
      for (int j = col; j < n; ++j) m.at(r, j) -= factor * m.at(col, j);
    }
  }
  return result;
}

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    }
    const Rat pivot = m.at(row, col);
    for (int j = 0; j < m.cols; ++j) m.at(row, j) /= pivot;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const Rat factor = m.at(r, col);
      for (int j = 0; j < m.cols; ++j) m.at(r, j) -= factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

std::optional<RatVec> solve_square(RatMat m, RatVec b) {
  if (m.rows != m.cols || static_cast<int>(b.size()) != m.rows) {
    throw DimensionMismatchError("solve_square: size mismatch");
  }
  const int n = m.rows;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      std::swap(b[piv], b[col]);
    }
    const Rat pivot = m.at(col, col);
    for (int r = 0; r < n; ++r) {
      if (r == col || m.at(r, col) == 0) continue;
      const Rat factor = m.at(r, col) / pivot;
      for (int j = col; j < n; ++j) m.at(r, j) -= factor * m.at(col, j);
      b[r] -= factor * b[col];
    }
  }
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / m.at(i, i);
  return x;
}

RatMat inverse(const RatMat& m) {
  if (m.rows != m.cols) throw DimensionMismatchError("inverse: matrix not square");
  const int n = m.rows;
  RatMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) != n || piv.back() >= n) {
    throw RankDeficientError("inverse: singular matrix");
  }
  RatMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

int affine_dim(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  if (pts.size() == 1) return 0;
  const int d = static_cast<int>(pts[0].size());
  RatMat diffs(static_cast<int>(pts.size()) - 1, d);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (int j = 0; j < d; ++j) diffs.at(static_cast<int>(i) - 1, j) = pts[i][j] - pts[0][j];
  return rank(std::move(diffs));
}

}  // namespace orbitvol

#pragma once

#include <cstddef>
#include <vector>

#include "orbitvol/rootsystem.hpp"

namespace orbitvol {

/// One Weyl group element as its integer matrix acting on simple-root
/// coordinates (row-major, dim x dim), together with its sign
/// (= determinant, always +-1).
struct WeylElement {
  int dim = 0;
  std::vector<long long> m;
  int sgn = 1;

  long long at(int i, int j) const { return m[static_cast<std::size_t>(i) * dim + j]; }
  bool is_identity() const;
};

struct WeylGroup {
  std::vector<WeylElement> elements;  // canonical order: lex on matrix entries
  int order() const { return static_cast<int>(elements.size()); }
  /// Index of the identity element in `elements`.
  int identity_index() const;
};

/// Breadth-first closure over the simple reflections. Every reachable
/// element appears exactly once; elements are sorted lexicographically by
/// matrix entries so output is stable. Throws OrderCapExceededError when the
/// group would exceed `cap`.
WeylGroup generate_weyl_group(const RootSystem& rs, std::size_t cap = 1152);

/// Cached per (series, rank); safe for concurrent use.
const WeylGroup& weyl_group_of(const RootSystem& rs);

Weight act(const WeylElement& w, const Weight& xi);

inline int sign(const WeylElement& w) { return w.sgn; }

/// The simple reflection s_j as an integer matrix on simple-root coordinates.
WeylElement simple_reflection(const RootSystem& rs, int j);

}  // namespace orbitvol

#pragma once

#include <string>
#include <vector>

#include "hopfcoh/cyclotomic.hpp"

namespace hopfcoh {

/// Generalized Cartan matrix with the quantum-group row convention
/// a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i), so the simple reflection
/// acts by s_i(alpha_j) = alpha_j - a_ij alpha_i.
struct CartanMatrix {
  std::vector<std::vector<int>> a;

  int rank() const { return static_cast<int>(a.size()); }
  int operator()(int i, int j) const { return a[i][j]; }

  /// Checks a_ii = 2, a_ij <= 0 off-diagonal, and a_ij = 0 iff a_ji = 0.
  void check_well_formed() const;
};

struct NotFiniteType : std::runtime_error {
  explicit NotFiniteType(const std::string& what) : std::runtime_error(what) {}
};

struct DynkinComponent {
  std::string label;          // "A2", "G2", ...
  std::vector<int> vertices;  // 0-based, ascending
};

/// Connected components with finite-type labels; throws NotFiniteType naming
/// the offending component otherwise.
std::vector<DynkinComponent> classify(const CartanMatrix& m);

struct Root {
  std::vector<int> coords;  // coefficients over the simple roots

  bool operator==(const Root& o) const { return coords == o.coords; }
  bool operator<(const Root& o) const { return coords < o.coords; }
};

int height(const Root& r);

Root simple_root(int theta, int i);
Root reflect(const CartanMatrix& m, int i, const Root& r);

/// A reduced word for w0 as 0-based simple reflection indices, produced by
/// the greedy least-index descent, components processed in vertex order.
std::vector<int> longest_word(const CartanMatrix& m);

/// beta_j = s_{i_1}...s_{i_{j-1}}(alpha_{i_j}) for the word above: the
/// positive roots in convex order, concatenated per component.
std::vector<Root> positive_roots(const CartanMatrix& m);

/// Symmetrizer d_i (positive rationals, least positive integers per
/// component) with d_i a_ij = d_j a_ji; exists for every finite-type matrix.
std::vector<Rational> symmetrizer(const CartanMatrix& m);

}  // namespace hopfcoh

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfcoh/algebra.hpp"

namespace hopfcoh {

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(const std::string& what, unsigned long long required)
      : std::runtime_error(what), required_entries(required) {}
  unsigned long long required_entries;
};

/// Basis of the augmentation ideal A+ of a truncated presentation:
/// the nonunit monomials x^a g, followed by g - 1 for g != 1.
class AugmentedBasis {
 public:
  explicit AugmentedBasis(AlgebraPresentation p);

  const AlgebraPresentation& algebra() const { return p_; }
  int size() const { return static_cast<int>(elems_.size()); }

  bool is_group_minus_one(int idx) const { return idx >= first_group_; }
  /// Monomial part and group part of a monomial-type element.
  const PBWKey& key(int idx) const { return keys_[static_cast<size_t>(idx)]; }
  const PBWElement& element(int idx) const { return elems_[static_cast<size_t>(idx)]; }
  std::string describe(int idx) const;
  /// Height-weighted N-degree of the monomial part ((g-1) has degree 0).
  long internal_degree(int idx) const;

  struct Expansion {
    CycNum unit;
    std::vector<std::pair<int, CycNum>> terms;
  };
  /// Product of two basis elements over {1} + A+ basis; memoized.
  const Expansion& product(int i, int j) const;
  Expansion expand(const PBWElement& e) const;

 private:
  AlgebraPresentation p_;
  std::vector<PBWElement> elems_;
  std::vector<PBWKey> keys_;  // valid for monomial-type entries
  int first_group_ = 0;
  std::map<PBWKey, int> index_;
  std::map<std::vector<long>, int> group_index_;
  mutable std::map<std::pair<int, int>, Expansion> cache_;
};

/// Scalar-valued function on tuples of A+ basis indices, extended
/// multilinearly; backed by an evaluator so large-arity cocycles stay lazy.
class Cochain {
 public:
  Cochain(int arity, std::function<CycNum(const std::vector<int>&)> eval)
      : arity_(arity), eval_(std::move(eval)) {}

  int arity() const { return arity_; }
  CycNum operator()(const std::vector<int>& tuple) const { return eval_(tuple); }

  static Cochain from_values(int arity, std::map<std::vector<int>, CycNum> values);

 private:
  int arity_;
  std::function<CycNum(const std::vector<int>&)> eval_;
};

/// delta_{n+1}(f) = sum_{i=0}^{n-1} (-1)^{i+1} f o (1^i x m x 1^{n-i-1}),
/// with the unit component of each product discarded.
Cochain bar_differential(const AugmentedBasis& A, const Cochain& f);

struct CocycleReport {
  bool pass = true;
  long long checked = 0;
  bool exhaustive = true;
  std::vector<std::string> violations;  // first few offending tuples
};

CocycleReport check_cocycle(const AugmentedBasis& A, const Cochain& f, bool exhaustive,
                            long long samples = 10000, unsigned long seed = 0);

struct ExtOptions {
  unsigned long long budget = 5000000;  // max stored matrix entries
  bool probabilistic = false;           // rank mod a random prime p = 1 (mod L)
};

struct ExtResult {
  unsigned long dim = 0;
  bool probabilistic = false;
  unsigned long prime = 0;  // the modulus when probabilistic
};

/// dim Ext^n_A(k, k) via the reduced bar complex and exact (or mod-p) sparse
/// Gaussian elimination with Markowitz-style pivoting.
ExtResult ext_dim(const AugmentedBasis& A, int n, const ExtOptions& opt = {});

/// Exact solvability of delta h = target on the slice of tuples with the
/// given total internal degree (graded flavors only). target has arity n+1;
/// the unknown h runs over arity-n tuples of the same degree.
bool is_coboundary_graded(const AugmentedBasis& A, const Cochain& target, long internal_degree);

/// Sparse exact rank over the cyclotomics (exposed for reuse in tests).
unsigned long sparse_rank(std::vector<std::vector<std::pair<int, CycNum>>> rows);

}  // namespace hopfcoh

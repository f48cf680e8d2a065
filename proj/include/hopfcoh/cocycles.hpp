#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hopfcoh/bar_ext.hpp"
#include "hopfcoh/cohomology.hpp"

namespace hopfcoh {

/// Chain-level distinguished cocycles on a truncated presentation, computed
/// through the section into its untruncated lift (PBW monomials map to PBW
/// monomials with the same exponents). Group parts of inputs are handled by
/// the twist rule f(r1 g1 (x) r2 g2 (x) ...) = f(r1 (x) g1.r2 (x) ...), and
/// any tensor factor of the form g - 1 evaluates to 0.
class CocycleBuilder {
 public:
  /// `truncated` indexes the bar-complex basis; `lift` must present the same
  /// generators without power truncation.
  CocycleBuilder(const AugmentedBasis& truncated, AlgebraPresentation lift);

  /// Arity-2 cocycle: the coefficient of x_gen^{N_gen} in the lifted product.
  Cochain xi_alpha(int gen) const;
  /// Arity-1 indicator of the single PBW monomial x_gen.
  Cochain eta_alpha(int gen) const;
  /// Arity-2M cocycle: paired coefficients of x_gen^{N_gen} in consecutive
  /// lifted products (M = M_alpha, any multiple of the character order).
  Cochain f_alpha(int gen, unsigned long M) const;

 private:
  CycNum pair_coeff(int gen, const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
  CycNum evaluate_paired(int gen, unsigned long M, const std::vector<int>& tuple) const;

  const AugmentedBasis* A_;
  std::shared_ptr<AlgebraPresentation> lift_;
  using MemoKey = std::tuple<int, std::vector<unsigned>, std::vector<unsigned>>;
  std::shared_ptr<std::map<MemoKey, CycNum>> memo_;
  unsigned long ntrunc_gen(int gen) const;
};

/// Elements of the reduced-bar-side resolution S (x) (S+)^{(x) m}.
struct BarKey {
  PBWKey a0;
  std::vector<PBWKey> slots;

  bool operator<(const BarKey& o) const {
    if (!(a0 == o.a0)) return a0 < o.a0;
    return slots < o.slots;
  }
  bool operator==(const BarKey& o) const { return a0 == o.a0 && slots == o.slots; }
};

class BarElement {
 public:
  const std::map<BarKey, CycNum>& terms() const { return terms_; }
  void add(const BarKey& k, const CycNum& c);
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const BarElement& o) const;

 private:
  std::map<BarKey, CycNum> terms_;
};

struct ComparisonReport {
  bool squares_commute = false;
  bool pullbacks_match = false;
  long checks = 0;
  std::string detail;
};

/// Comparison maps between the explicit resolution and the reduced bar
/// resolution of a qci:
///   F1(Phi(...1_i...)) = 1 (x) x_i
///   F2(Phi(...2_i...)) = sum_a x_i^a (x) x_i (x) x_i^{N_i-a-1}
///   F2(Phi(...1_i...1_j...)) = 1 (x) x_i (x) x_j - q_ij (x) x_j (x) x_i,
/// verified to commute with the differentials, with the pullbacks of
/// xi_{beta_i} / eta_{beta_i} matching the duals of Phi(...2_i...) /
/// Phi(...1_i...).
ComparisonReport comparison_maps(const CohomologyRing& H);

}  // namespace hopfcoh

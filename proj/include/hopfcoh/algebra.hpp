#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hopfcoh/cyclotomic.hpp"
#include "hopfcoh/datum.hpp"

namespace hopfcoh {

enum class Flavor { Qci, QciSmash, NicholsA2, NicholsA2Untruncated, UqSl2 };

/// Normal-form PBW monomial: ordered generator exponents, then an optional
/// group element on the right (x^a * g).
struct PBWKey {
  std::vector<unsigned> exps;
  std::vector<long> grp;

  bool operator==(const PBWKey& o) const { return exps == o.exps && grp == o.grp; }
  bool operator<(const PBWKey& o) const {
    if (exps != o.exps) return exps < o.exps;
    return grp < o.grp;
  }
};

class PBWElement {
 public:
  PBWElement() = default;

  const std::map<PBWKey, CycNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const PBWKey& k, const CycNum& c);

  PBWElement operator+(const PBWElement& o) const;
  PBWElement operator-(const PBWElement& o) const;
  PBWElement operator-() const;
  PBWElement scaled(const CycNum& c) const;
  bool operator==(const PBWElement& o) const;
  bool operator!=(const PBWElement& o) const { return !(*this == o); }

 private:
  std::map<PBWKey, CycNum> terms_;
};

/// A presented algebra with a fixed PBW generator order and a terminating
/// q-straightening system. Immutable; all operations are pure.
class AlgebraPresentation {
 public:
  /// Quantum complete intersection on ordered generators with
  /// x_i x_j = q_ij x_j x_i (i < j) and x_i^{N_i} = 0. N_i = 0 leaves the
  /// generator untruncated (the polynomial lift U(D,0)).
  static AlgebraPresentation qci(std::vector<unsigned long> trunc,
                                 std::vector<std::vector<CycNum>> q_upper,
                                 std::vector<int> heights = {},
                                 std::vector<std::string> names = {});

  /// S # kGamma for a qci S: the group acts diagonally through gen_chars.
  static AlgebraPresentation qci_smash(std::vector<unsigned long> trunc,
                                       std::vector<std::vector<CycNum>> q_upper,
                                       FiniteAbelianGroup group,
                                       std::vector<Character> gen_chars,
                                       std::vector<int> heights = {},
                                       std::vector<std::string> names = {});

  /// Rank-2 A2 Nichols algebra with PBW generators x1 < x12 < x2 and
  /// x2 x1 = q x1 x2 - q x12,  x12 x1 = q^{-1} x1 x12,  x2 x12 = q^{-1} x12 x2,
  /// truncated at ell (all three root vectors) unless untruncated.
  static AlgebraPresentation nichols_a2(unsigned long ell, long q_power, bool truncated);

  /// u_q(sl2)-flavor algebra on F < E with group <K | K^ell>, q = zeta_ell^k:
  /// KEK^{-1} = q^2 E, KFK^{-1} = q^{-2} F, EF - FE = lambda (K^{-1} - K),
  /// E^ell = F^ell = 0 when truncated. The PBW basis is F^a K^b E^c.
  static AlgebraPresentation uq_sl2(unsigned long ell, long q_power, const CycNum& lambda,
                                    bool truncated);

  Flavor flavor() const { return flavor_; }
  int ngens() const { return ngens_; }
  bool truncated() const;
  unsigned long trunc(int i) const { return trunc_[i]; }
  const CycNum& q(int i, int j) const { return q_[i][j]; }
  /// The internal smash factor kGamma (keys carry its exponents).
  const std::optional<FiniteAbelianGroup>& group() const { return group_; }
  /// The group acting diagonally on the generators: the smash factor when
  /// present, else the Yetter-Drinfeld grading group of the flavor.
  const FiniteAbelianGroup* action_group() const {
    if (group_) return &*group_;
    if (action_group_) return &*action_group_;
    return nullptr;
  }
  const Character& gen_char(int i) const { return gen_char_[i]; }
  int gen_height(int i) const { return heights_[i]; }
  const std::string& gen_name(int i) const { return names_[i]; }
  const CycNum& linking() const { return lambda_; }

  /// lcm of the cyclotomic orders of all structure scalars (q entries, group
  /// character values, linking scalar); every product coefficient lies in
  /// Q(zeta_L) for this L.
  unsigned long scalar_order() const;

  PBWElement one() const;
  PBWElement gen(int i) const;
  PBWElement group_element(const GroupElement& g) const;
  PBWElement monomial(const std::vector<unsigned>& exps) const;

  CycNum monomial_char_value(const std::vector<unsigned>& exps, const GroupElement& g) const;

  PBWElement multiply(const PBWElement& a, const PBWElement& b) const;
  /// Diagonal Gamma-action: x^a g |-> prod chi_i(h)^{a_i} x^a g.
  PBWElement group_act(const GroupElement& h, const PBWElement& e) const;
  /// [x, y]_c = x y - (g.y) x; y must be Gamma-homogeneous.
  PBWElement braided_commutator(const PBWElement& x, const PBWElement& y,
                                const GroupElement& g) const;
  CycNum augmentation(const PBWElement& e) const;

  /// Scalar total-order value of the De Concini-Kac filtration:
  ///   deg(x^a) = (prod_i N_i) * (sum_i a_i Ht(beta_i))
  ///            + N_1 ... N_{r-1} a_r + ... + N_1 a_2 + a_1.
  /// The leading part is the weighted total degree (heights summed, not
  /// multiplied: a product would vanish on any monomial missing a factor
  /// and could not order a filtration); the tail breaks ties
  /// lexicographically from the right. Strictly monotone with respect to
  /// filtration_tuple on truncated bases.
  mpz_class filtration_degree(const std::vector<unsigned>& exps) const;
  /// Tuple degree d(x^a) = (sum a_i Ht(beta_i), a_r, ..., a_1).
  std::vector<long> filtration_tuple(const std::vector<unsigned>& exps) const;

  mpz_class dimension() const;  // throws std::domain_error when untruncated

  /// Drops the lower-order straightening tails: nichols_a2 -> type A1^3 qci;
  /// a qci is its own associated graded.
  AlgebraPresentation assoc_graded() const;

  /// A generator index (>= 0) or a group element (gen = -1).
  struct Symbol {
    int gen = -1;
    GroupElement grp;
  };
  PBWElement normal_form(const std::vector<Symbol>& word, std::mt19937_64* rng = nullptr) const;

  /// Enumerates the monomial basis (exponent part only); truncated flavors.
  std::vector<std::vector<unsigned>> monomial_basis() const;

 private:
  AlgebraPresentation() = default;
  void check_element(const PBWElement& e) const;
  void straighten(std::vector<int> word, std::vector<long> grp, CycNum coeff, PBWElement& out,
                  std::mt19937_64* rng) const;

  struct RuleTerm {
    std::vector<int> fragment;
    long grp_delta = 0;  // power of the distinguished cyclic generator (uq_sl2)
    CycNum coeff;
  };
  std::vector<RuleTerm> swap_rule(int hi, int lo) const;

  Flavor flavor_ = Flavor::Qci;
  int ngens_ = 0;
  std::vector<std::string> names_;
  std::vector<unsigned long> trunc_;
  std::vector<unsigned long> deg_ref_;  // reference N_i for the scalar degree
  std::vector<int> heights_;
  std::vector<std::vector<CycNum>> q_;
  std::optional<FiniteAbelianGroup> group_;
  std::optional<FiniteAbelianGroup> action_group_;
  std::vector<Character> gen_char_;
  CycNum lambda_;
};

std::string to_string(const AlgebraPresentation& p, const PBWElement& e);

}  // namespace hopfcoh

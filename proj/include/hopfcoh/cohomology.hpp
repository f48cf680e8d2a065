#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfcoh/algebra.hpp"
#include "hopfcoh/datum.hpp"
#include "hopfcoh/resolution.hpp"

namespace hopfcoh {

/// One PBW root-vector generator of the associated graded algebra Gr R
/// (type A1 x ... x A1 over the positive roots in convex order).
struct GrGenerator {
  Root root;
  std::string label;  // e.g. "a1+a2"
  GroupElement g;
  Character chi;
  unsigned long N;  // order of chi_alpha(g_alpha)
  unsigned long M;  // order of chi_alpha in the dual group
  int height;
};

/// Everything the cohomology of Gr R # kGamma depends on.
struct GrData {
  FiniteAbelianGroup group;
  std::vector<GrGenerator> gens;
  std::vector<std::vector<CycNum>> q;  // q[i][j] = chi_j(g_i) for i < j, inverses below
  unsigned long order = 1;             // working cyclotomic order
  std::vector<std::vector<long>> qexp;  // q[i][j] = zeta_order^qexp[i][j]

  int rank() const { return static_cast<int>(gens.size()); }
};

GrData gr_data(const CartanDatum& d);

/// Plain S = Gr R as a qci presentation (heights from the roots).
AlgebraPresentation s_presentation(const GrData& gr);
/// The untruncated q-polynomial lift of S (the section target for cocycles).
AlgebraPresentation s_presentation_untruncated(const GrData& gr);
/// S # kGamma.
AlgebraPresentation smash_presentation(const GrData& gr);
/// S # kGamma without the power truncations (lift for smash cocycles).
AlgebraPresentation smash_presentation_untruncated(const GrData& gr);

/// GrData for a bare qci (no meaningful group action): trivial group, all
/// characters trivial, M_i = 1. Gives the relation checks a home for raw
/// q-matrices. Every q entry must be a power of zeta_order.
GrData gr_raw(std::vector<unsigned long> trunc, const std::vector<std::vector<CycNum>>& q_upper,
              unsigned long order, std::vector<int> heights = {});

/// Basis monomial xi^b eta^c; degree = sum(2 b_i + c_i).
struct CohMonomial {
  std::vector<unsigned> b;
  std::vector<unsigned char> c;

  int degree() const;
  bool operator==(const CohMonomial& o) const { return b == o.b && c == o.c; }
  bool operator<(const CohMonomial& o) const {
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
  std::string str(const GrData& gr) const;
};

/// Cohomology class in the xi^b eta^c basis.
class CohClass {
 public:
  CohClass() = default;

  const std::map<CohMonomial, CycNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const CohMonomial& m, const CycNum& c);
  CohClass operator+(const CohClass& o) const;
  CohClass operator-(const CohClass& o) const;
  CohClass scaled(const CycNum& s) const;
  bool operator==(const CohClass& o) const;
  bool operator!=(const CohClass& o) const { return !(*this == o); }
  static CohClass monomial(const CohMonomial& m);

 private:
  std::map<CohMonomial, CycNum> terms_;
};

struct FingenWitness {
  std::vector<std::pair<int, unsigned long>> algebra_generators;  // (i, M_i): xi_i^{M_i}
  std::vector<CohMonomial> module_generators;
  int span_degree_cap = 0;
  bool span_verified = false;
  std::string detail;
};

/// H*(S, k) per the resolution: chain maps xi_i (degree -2) and eta_i
/// (degree -1), products by composition, the Gamma-action, and the
/// invariant-theory queries.
class CohomologyRing {
 public:
  /// Verifies on construction that xi_i and eta_i commute with d up to
  /// verify_degree; throws std::logic_error on failure.
  explicit CohomologyRing(GrData gr, int verify_degree = 4);

  const GrData& data() const { return gr_; }
  const AlgebraPresentation& algebra() const { return S_; }
  const Resolution& resolution() const { return res_; }

  ResElement apply_xi(int i, const ResElement& e) const;
  ResElement apply_eta(int i, const ResElement& e) const;
  /// The composed chain map of a basis monomial (rightmost factor first).
  ResElement apply_monomial(const CohMonomial& m, const ResElement& e) const;

  static unsigned long dim_H(int theta, int n);
  unsigned long dim_H(int n) const { return dim_H(gr_.rank(), n); }

  std::vector<CohMonomial> basis(int degree) const;

  /// Honest product: compose the representing chain maps, then read the
  /// class off the dual basis (eta_i^2 = xi_i at N_i = 2 falls out here).
  CohClass product(const CohClass& u, const CohClass& v) const;

  CohClass gamma_on_class(const GroupElement& g, const CohClass& u) const;

  bool is_invariant(const CohMonomial& m) const;
  std::vector<CohMonomial> invariant_basis(int degree_max) const;

  /// Exact decision: minimal-degree invariant monomial with odd eta-weight,
  /// or nullopt. Solves the character congruences over the full period box.
  std::optional<CohMonomial> odd_invariant_witness() const;

  FingenWitness fingen_witness() const;

  std::vector<unsigned long> hilbert_series(int degree_max, bool invariant) const;

  /// Scalar of the single basis monomial hit by the product of two basis
  /// monomials, with its target; nullopt when the product vanishes.
  std::optional<std::pair<CohMonomial, CycNum>> monomial_product(const CohMonomial& u,
                                                                 const CohMonomial& v) const;

  CohClass monomial_class(int xi_index, int eta_index) const;  // -1 to omit either

 private:
  CycNum normalizer(const CohMonomial& m) const;
  Character monomial_character(const CohMonomial& m) const;

  GrData gr_;
  AlgebraPresentation S_;
  Resolution res_;
};

/// The three relation families as exact chain-map identities on every
/// generator up to degree_cap, plus eta_i^2 by honest composition (xi_i when
/// N_i = 2, zero otherwise).
bool verify_ring_relations(const CohomologyRing& H, int degree_cap, std::string* detail);

}  // namespace hopfcoh

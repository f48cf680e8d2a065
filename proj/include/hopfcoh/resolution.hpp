#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfcoh/algebra.hpp"

namespace hopfcoh {

/// sigma(N, a) = 1 for odd a, N - 1 for even a;  tau(N, a) = sum_{j<=a} sigma(N, j).
unsigned long res_sigma(unsigned long N, unsigned long a);
unsigned long res_tau(unsigned long N, unsigned long a);

/// Free generator Phi(a_1, ..., a_theta) of the resolution, in homological
/// degree sum a_i.
using ResGenerator = std::vector<unsigned>;

class ResElement {
 public:
  ResElement() = default;

  const std::map<ResGenerator, PBWElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const ResGenerator& g, const PBWElement& coeff);

  ResElement operator+(const ResElement& o) const;
  ResElement operator-(const ResElement& o) const;
  ResElement scaled(const CycNum& c) const;
  bool operator==(const ResElement& o) const;
  bool operator!=(const ResElement& o) const { return !(*this == o); }

 private:
  std::map<ResGenerator, PBWElement> terms_;
};

struct ExactnessReport {
  bool pass = true;
  std::string detail;            // first counterexample when failing
  long d_squared_checks = 0;
  long homotopy_checks = 0;
  long degree_zero_checks = 0;
};

/// The free resolution K. of k over a quantum complete intersection:
/// K_n = (+) S Phi(a), |a| = n, with d = d_1 + ... + d_theta and the
/// contracting homotopy s (k-linear on monomial basis elements).
class Resolution {
 public:
  /// S must be a truncated qci or qci_smash presentation.
  explicit Resolution(AlgebraPresentation S);

  const AlgebraPresentation& algebra() const { return S_; }
  int theta() const { return S_.ngens(); }

  ResElement generator(const ResGenerator& a) const;
  ResElement differential(const ResElement& e) const;
  ResElement homotopy(const ResElement& e) const;
  /// g . Phi(a) = prod_l chi_l(g)^{tau_l(a_l)} Phi(a), chi-action on coefficients.
  ResElement gamma_action(const GroupElement& g, const ResElement& e) const;

  /// All Phi(a) with |a| = n.
  std::vector<ResGenerator> generators_of_degree(int n) const;

  /// d^2 = 0 and sd + ds = id on every S-basis multiple of every generator
  /// up to degree n_max, plus ker(eps) = im(d) at K_0 on the monomial basis.
  ExactnessReport verify_exactness(int n_max) const;

 private:
  AlgebraPresentation S_;
};

}  // namespace hopfcoh

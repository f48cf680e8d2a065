#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopfcoh {

using Rational = mpq_class;

/// Exact element of the cyclotomic field Q(zeta_L).
///
/// A value is a residue modulo the L-th cyclotomic polynomial Phi_L; the
/// coefficient vector always has length phi(L), so equality at a fixed order
/// is plain coefficient comparison. Values with different declared orders are
/// lifted to the lcm order before arithmetic or comparison. Instances are
/// immutable after construction.
class CycNum {
 public:
  CycNum() : order_(1), coeffs_(1, Rational(0)) {}

  static CycNum zero(unsigned long order = 1);
  static CycNum one(unsigned long order = 1);
  static CycNum from_rational(const Rational& r, unsigned long order = 1);
  /// zeta_L^k, reduced; the result has multiplicative order L / gcd(L, k).
  static CycNum root_of_unity(unsigned long order, long power);

  unsigned long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;

  /// Re-express in Q(zeta_M) for a multiple M of the current order.
  CycNum lifted(unsigned long new_order) const;

  CycNum operator-() const;
  CycNum inverse() const;  // throws std::domain_error on zero
  CycNum pow(long e) const;

  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
  CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

  bool operator==(const CycNum& b) const;
  bool operator!=(const CycNum& b) const { return !(*this == b); }

  /// Smallest n >= 1 with a^n = 1, or nullopt when a is not a root of unity.
  /// Throws std::domain_error on zero.
  std::optional<unsigned long> mult_order() const;

  /// Canonical serialization in the zeta grammar, without spaces,
  /// e.g. "1/3+2/3*zeta(3)". Parsed back by parse_scalar().
  std::string str() const;

 private:
  CycNum(unsigned long order, std::vector<Rational> reduced)
      : order_(order), coeffs_(std::move(reduced)) {}
  static CycNum make_reduced(unsigned long order, std::vector<Rational> poly);

  unsigned long order_;
  std::vector<Rational> coeffs_;
};

unsigned long euler_phi(unsigned long n);

/// Phi_L as a monic integer polynomial (coefficient of x^i at index i).
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned long order);

}  // namespace hopfcoh

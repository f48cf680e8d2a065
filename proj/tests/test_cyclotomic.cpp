#include <doctest.h>

#include <random>

#include "hopfcoh/cyclotomic.hpp"
#include "hopfcoh/scalar_io.hpp"

using namespace hopfcoh;

namespace {

// Independent inverse oracle: solve a * u = 1 in Q[x]/Phi_L by plain
// Gaussian elimination on the multiplication matrix.
CycNum inverse_by_linear_solve(const CycNum& a) {
  unsigned long L = a.order();
  size_t n = euler_phi(L);
  // column j: coefficients of a * x^j reduced mod Phi_L
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
  for (size_t j = 0; j < n; ++j) {
    CycNum col = a * CycNum::root_of_unity(L, static_cast<long>(j));
    for (size_t i = 0; i < n; ++i) m[i][j] = col.coeffs()[i];
  }
  m[0][n] = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    REQUIRE(piv < n);
    std::swap(m[k], m[piv]);
    for (size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  CycNum u = CycNum::zero(L);
  for (size_t j = 0; j < n; ++j)
    u += CycNum::from_rational(m[j][n] / m[j][j], 1) *
         CycNum::root_of_unity(L, static_cast<long>(j));
  return u;
}

CycNum random_cyc(std::mt19937_64& rng, unsigned long L) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  CycNum v = CycNum::zero(L);
  for (unsigned long k = 0; k < euler_phi(L); ++k)
    v += CycNum::from_rational(Rational(num(rng), den(rng))) *
         CycNum::root_of_unity(L, static_cast<long>(k));
  return v;
}

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("roots of unity") {
    CHECK(CycNum::root_of_unity(1, 0).is_one());
    CHECK(CycNum::root_of_unity(2, 1) == CycNum::from_rational(Rational(-1)));
    CHECK(CycNum::root_of_unity(3, 1) + CycNum::root_of_unity(3, 2) ==
          CycNum::from_rational(Rational(-1)));
    // zeta_L^k has multiplicative order L/gcd(L,k)
    CHECK(CycNum::root_of_unity(12, 8).mult_order().value() == 3);
  }

  TEST_CASE("field arithmetic") {
    CycNum i = CycNum::root_of_unity(4, 1);
    CHECK(i * i == CycNum::from_rational(Rational(-1)));
    CycNum z6 = CycNum::root_of_unity(6, 1);
    CHECK(CycNum::one() / z6 == z6.pow(5));
    CycNum a = CycNum::root_of_unity(5, 1) + CycNum::one(5);
    CHECK(a * a.inverse() == CycNum::one());
    CHECK(a.inverse() == inverse_by_linear_solve(a));
    CHECK_THROWS_AS(CycNum::zero(3).inverse(), std::domain_error);
  }

  TEST_CASE("mult_order") {
    CHECK(CycNum::root_of_unity(6, 3).mult_order().value() == 2);
    CHECK(CycNum::one().mult_order().value() == 1);
    CHECK(!CycNum::from_rational(Rational(2)).mult_order().has_value());
    CHECK_THROWS_AS(CycNum::zero().mult_order(), std::domain_error);
    CHECK(CycNum::from_rational(Rational(-1)).mult_order().value() == 2);
  }

  TEST_CASE("root_of_unity(L,k)^L = 1 up to L = 24") {
    for (unsigned long L = 1; L <= 24; ++L)
      for (unsigned long k = 1; k <= L; ++k)
        CHECK(CycNum::root_of_unity(L, static_cast<long>(k)).pow(static_cast<long>(L)).is_one());
  }

  TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(7);
    for (unsigned long L : {1ul, 4ul, 6ul, 5ul, 12ul}) {
      for (int trial = 0; trial < 20; ++trial) {
        CycNum a = random_cyc(rng, L), b = random_cyc(rng, L), c = random_cyc(rng, L);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == CycNum::one());
      }
    }
  }

  TEST_CASE("arithmetic commutes with order lifting") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
      CycNum a = random_cyc(rng, 6), b = random_cyc(rng, 6);
      CHECK((a * b).lifted(24) == a.lifted(24) * b.lifted(12));
      CHECK((a + b).lifted(18) == a.lifted(18) + b);
      CHECK((a - b).lifted(30) == a.lifted(30) - b.lifted(30));
    }
  }

  TEST_CASE("mixed-order comparison is well-defined") {
    CHECK(CycNum::root_of_unity(6, 2) == CycNum::root_of_unity(3, 1));
    CHECK(CycNum::root_of_unity(4, 2) == CycNum::from_rational(Rational(-1), 1));
    CHECK(CycNum::root_of_unity(5, 1) != CycNum::root_of_unity(7, 1));
  }

  TEST_CASE("zeta grammar round trip") {
    std::mt19937_64 rng(13);
    for (unsigned long L : {1ul, 3ul, 8ul, 12ul}) {
      for (int trial = 0; trial < 15; ++trial) {
        CycNum a = random_cyc(rng, L);
        CHECK(parse_scalar(a.str()) == a);
      }
    }
    CycNum expect = CycNum::from_rational(Rational(3)) * CycNum::root_of_unity(12, 5) -
                    CycNum::from_rational(Rational(1, 2));
    CHECK(parse_scalar("3*zeta(12)^5 - 1/2") == expect);
    CHECK(parse_scalar("3*zeta(12)^5-1/2") == expect);  // records form, no spaces
  }
}

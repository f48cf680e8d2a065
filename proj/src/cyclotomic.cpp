#include "hopfcoh/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfcoh {

namespace {

using Poly = std::vector<Rational>;  // coefficient of x^i at index i

void strip(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  strip(r);
  return r;
}

// a -= q*b for polynomial q; returns remainder in a (b need not be monic).
Poly divmod(Poly a, const Poly& b, Poly* quotient = nullptr) {
  strip(a);
  if (quotient) quotient->assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    if (quotient) (*quotient)[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    strip(a);
  }
  if (quotient) strip(*quotient);
  return a;
}

Poly phi_as_rational(unsigned long order) {
  const auto& z = cyclotomic_polynomial(order);
  Poly p(z.size());
  for (size_t i = 0; i < z.size(); ++i) p[i] = Rational(z[i]);
  return p;
}

std::vector<unsigned long> prime_factors(unsigned long n) {
  std::vector<unsigned long> ps;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

unsigned long euler_phi(unsigned long n) {
  unsigned long r = n;
  for (unsigned long p : prime_factors(n)) r -= r / p;
  return r;
}

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned long order) {
  static std::map<unsigned long, std::vector<mpz_class>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d, by exact division over Q.
  std::function<Poly(unsigned long)> build = [&](unsigned long n) -> Poly {
    auto ct = cache.find(n);
    if (ct != cache.end()) {
      Poly p(ct->second.size());
      for (size_t i = 0; i < p.size(); ++i) p[i] = Rational(ct->second[i]);
      return p;
    }
    Poly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned long d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      Poly phid = build(d);
      Poly q;
      Poly rem = divmod(num, phid, &q);
      if (!rem.empty()) throw std::logic_error("cyclotomic_polynomial: nonzero remainder");
      num = q;
    }
    std::vector<mpz_class> zcoeffs(num.size());
    for (size_t i = 0; i < num.size(); ++i) {
      if (num[i].get_den() != 1)
        throw std::logic_error("cyclotomic_polynomial: non-integer coefficient");
      zcoeffs[i] = num[i].get_num();
    }
    cache[n] = std::move(zcoeffs);
    return num;
  };
  build(order);
  return cache.at(order);
}

CycNum CycNum::make_reduced(unsigned long order, Poly poly) {
  if (order == 0) throw std::domain_error("CycNum: order must be positive");
  Poly rem = divmod(std::move(poly), phi_as_rational(order));
  rem.resize(euler_phi(order), Rational(0));
  return CycNum(order, std::move(rem));
}

CycNum CycNum::zero(unsigned long order) {
  return CycNum(order, Poly(euler_phi(order), Rational(0)));
}

CycNum CycNum::one(unsigned long order) { return from_rational(Rational(1), order); }

CycNum CycNum::from_rational(const Rational& r, unsigned long order) {
  Poly p(euler_phi(order), Rational(0));
  p[0] = r;
  p[0].canonicalize();  // two-integer mpq constructors do not canonicalize
  return CycNum(order, std::move(p));
}

CycNum CycNum::root_of_unity(unsigned long order, long power) {
  if (order == 0) throw std::domain_error("root_of_unity: order must be positive");
  long k = power % static_cast<long>(order);
  if (k < 0) k += static_cast<long>(order);
  Poly p(static_cast<size_t>(k) + 1, Rational(0));
  p[static_cast<size_t>(k)] = 1;
  return make_reduced(order, std::move(p));
}

bool CycNum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycNum::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CycNum::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycNum: not a rational value");
  return coeffs_[0];
}

CycNum CycNum::lifted(unsigned long new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0)
    throw std::domain_error("CycNum::lifted: target order not a multiple");
  unsigned long m = new_order / order_;
  Poly p(coeffs_.size() * m, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) p[i * m] = coeffs_[i];
  return make_reduced(new_order, std::move(p));
}

CycNum CycNum::operator-() const {
  Poly p = coeffs_;
  for (auto& c : p) c = -c;
  return CycNum(order_, std::move(p));
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  unsigned long L = std::lcm(a.order_, b.order_);
  CycNum x = a.lifted(L), y = b.lifted(L);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b) {
  unsigned long L = std::lcm(a.order_, b.order_);
  CycNum x = a.lifted(L), y = b.lifted(L);
  Poly px(x.coeffs_.begin(), x.coeffs_.end());
  Poly py(y.coeffs_.begin(), y.coeffs_.end());
  return CycNum::make_reduced(L, mul(px, py));
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycNum: division by zero");
  // Extended Euclid for (a, Phi_L) in Q[x]; Phi_L is irreducible so the gcd
  // is a nonzero constant g with u*a + v*Phi = g, and a^{-1} = u/g.
  Poly r0 = phi_as_rational(order_);
  Poly r1(coeffs_.begin(), coeffs_.end());
  strip(r1);
  Poly u0 = {}, u1 = {Rational(1)};  // coefficients of `a` in r0, r1
  while (true) {
    if (r1.size() == 1) {
      Poly inv = u1;
      for (auto& c : inv) c /= r1[0];
      return make_reduced(order_, std::move(inv));
    }
    Poly q;
    Poly r2 = divmod(r0, r1, &q);
    if (r2.empty()) throw std::logic_error("CycNum::inverse: gcd not constant");
    Poly u2 = u0;
    Poly qu = mul(q, u1);
    u2.resize(std::max(u2.size(), qu.size()), Rational(0));
    for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    strip(u2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum base = *this;
  CycNum acc = CycNum::one(order_);
  unsigned long n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool CycNum::operator==(const CycNum& b) const {
  unsigned long L = std::lcm(order_, b.order_);
  return lifted(L).coeffs_ == b.lifted(L).coeffs_;
}

std::optional<unsigned long> CycNum::mult_order() const {
  if (is_zero()) throw std::domain_error("CycNum::mult_order: zero input");
  // Roots of unity in Q(zeta_L) form the group generated by -1 and zeta_L.
  unsigned long m = std::lcm(2ul, order_);
  if (!pow(static_cast<long>(m)).is_one()) return std::nullopt;
  unsigned long n = m;
  for (unsigned long p : prime_factors(m)) {
    while (n % p == 0 && pow(static_cast<long>(n / p)).is_one()) n /= p;
  }
  return n;
}

std::string CycNum::str() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? "-" : "+");
    }
    bool unit_coeff = (abs_c == 1);
    if (i == 0 || !unit_coeff) out << abs_c.get_str();
    if (i > 0) {
      if (!unit_coeff) out << "*";
      out << "zeta(" << order_ << ")";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace hopfcoh

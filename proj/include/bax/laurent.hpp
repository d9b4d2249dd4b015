#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace bax {

// Laurent polynomial in the formal variable v, exact rational coefficients.
// The whole library works over this ring; q is shorthand for v^2.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  LaurentScalar(long c);
  LaurentScalar(const mpq_class& c);

  static LaurentScalar monomial(const mpq_class& c, int k);
  // v^k
  static LaurentScalar vpow(int k) { return monomial(1, k); }
  // q^k = v^{2k}
  static LaurentScalar qpow(int k) { return monomial(1, 2 * k); }

  bool is_zero() const { return coef_.empty(); }
  bool operator==(const LaurentScalar& o) const { return coef_ == o.coef_; }
  bool operator!=(const LaurentScalar& o) const { return !(*this == o); }

  LaurentScalar operator-() const;
  LaurentScalar operator+(const LaurentScalar& o) const;
  LaurentScalar operator-(const LaurentScalar& o) const;
  LaurentScalar operator*(const LaurentScalar& o) const;
  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar& operator*=(const LaurentScalar& o);

  mpq_class coeff(int k) const;
  // lowest / highest exponent with nonzero coefficient; zero scalar -> 0
  int lo() const;
  int hi() const;

  // v -> val (val nonzero); exact
  mpq_class eval(const mpq_class& val) const;
  // v -> v^{-1}
  LaurentScalar bar() const;

  const std::map<int, mpq_class>& terms() const { return coef_; }

  // canonical text form, e.g. "1 - 2*v^-2 + v^4"
  std::string str() const;

 private:
  std::map<int, mpq_class> coef_;  // exponent -> coefficient, no zero entries
  void put(int k, const mpq_class& c);
};

LaurentScalar operator*(const mpq_class& c, const LaurentScalar& s);

// Fraction field element num/den over ℚ[v,v^{-1}], kept reduced enough for
// exact equality tests.  Used as the scalar field of windowed linear solves.
class RationalLaurent {
 public:
  RationalLaurent() : num_(), den_(1) {}
  RationalLaurent(const LaurentScalar& n) : num_(n), den_(1) {}
  RationalLaurent(const LaurentScalar& n, const LaurentScalar& d);

  static RationalLaurent zero() { return RationalLaurent(); }
  static RationalLaurent one() { return RationalLaurent(LaurentScalar(1)); }

  bool is_zero() const { return num_.is_zero(); }
  const LaurentScalar& num() const { return num_; }
  const LaurentScalar& den() const { return den_; }

  RationalLaurent operator+(const RationalLaurent& o) const;
  RationalLaurent operator-(const RationalLaurent& o) const;
  RationalLaurent operator*(const RationalLaurent& o) const;
  RationalLaurent operator/(const RationalLaurent& o) const;
  RationalLaurent operator-() const;
  bool operator==(const RationalLaurent& o) const;
  bool operator!=(const RationalLaurent& o) const { return !(*this == o); }

  // true iff the reduced denominator is a unit (monomial)
  bool is_polynomial() const;
  // requires is_polynomial()
  LaurentScalar as_polynomial() const;

  std::string str() const;

 private:
  LaurentScalar num_, den_;
  void reduce();
};

// gcd of two Laurent polynomials (monic, as an ordinary polynomial after
// shifting out the lowest power of v); gcd(0,0) = 0
LaurentScalar laurent_gcd(const LaurentScalar& a, const LaurentScalar& b);

}  // namespace bax

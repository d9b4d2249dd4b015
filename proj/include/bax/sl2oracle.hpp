#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bax/laurent.hpp"

namespace bax {

// Quadratic extension value a + b*sqrt(q).
struct QuadExt {
  mpq_class a, b;

  QuadExt() : a(0), b(0) {}
  QuadExt(const mpq_class& ra) : a(ra), b(0) {}
  QuadExt(const mpq_class& ra, const mpq_class& rb) : a(ra), b(rb) {}

  bool operator==(const QuadExt& o) const { return a == o.a && b == o.b; }
  bool operator!=(const QuadExt& o) const { return !(*this == o); }
};

QuadExt quad_add(const QuadExt& x, const QuadExt& y);
QuadExt quad_sub(const QuadExt& x, const QuadExt& y);
QuadExt quad_mul(const QuadExt& x, const QuadExt& y, long q);

// v -> sqrt(q): even powers of v land in the rational part, odd powers in
// the sqrt(q) part
QuadExt quad_specialize(const LaurentScalar& c, long q);

// Finite model of the rank-one plane over the p-adic field: each coordinate
// lives in pi^{-M} O / pi^M O, encoded as an integer n in [0, p^{2M})
// standing for n / p^M.  The additive character is trivial on O and has
// conductor exponent one.
class FiniteModel {
 public:
  FiniteModel(long p, int M);

  long p() const { return p_; }
  int level() const { return M_; }
  long ring_size() const { return pow_[2 * M_]; }  // p^{2M}
  long ppow(int k) const;                          // p^k, 0 <= k <= 4M
  mpq_class qfrac(int k) const;                    // p^k for any integer k

  // valuation of the encoded element; zero maps to M (the top of the window)
  int val_of(long n) const;

 private:
  long p_;
  int M_;
  std::vector<long> pow_;
};

// Function on the plane supported on pairs with both valuations >= s and
// constant on cosets of (pi^t O)^2.  vals is indexed by the two coordinate
// residues in [0, p^{t-s}).
struct FiniteFunction {
  int s = 0, t = 0;
  std::vector<std::vector<mpq_class>> vals;
};

FiniteFunction ff_zero(const FiniteModel& fm, int s, int t);
mpq_class ff_value(const FiniteModel& fm, const FiniteFunction& f, long n1, long n2);
FiniteFunction ff_refine(const FiniteModel& fm, const FiniteFunction& f, int s, int t);
FiniteFunction ff_add(const FiniteModel& fm, const FiniteFunction& f,
                      const FiniteFunction& g);
FiniteFunction ff_sub(const FiniteModel& fm, const FiniteFunction& f,
                      const FiniteFunction& g);
FiniteFunction ff_scale(const FiniteFunction& f, const mpq_class& c);
bool ff_equal(const FiniteModel& fm, const FiniteFunction& f, const FiniteFunction& g);
// first point where the two functions differ
std::optional<std::pair<long, long>> ff_locate_diff(const FiniteModel& fm,
                                                    const FiniteFunction& f,
                                                    const FiniteFunction& g);

// q^n times the indicator of the shell where the smaller valuation equals n;
// defined for |n| < M-1
FiniteFunction sample_delta(const FiniteModel& fm, int n);
// q^n times the indicator of both valuations >= n; defined for |n| < M-1
FiniteFunction sample_c(const FiniteModel& fm, int n);
// indicator of val(x1) >= a, val(x2) >= b
FiniteFunction rect_indicator(const FiniteModel& fm, int a, int b);

// Symplectic Fourier transform, normalized so the unit lattice function is
// fixed.  Exact: the character sums are accumulated per root of unity and
// reduced through the prime-power cyclotomic relation; a value that fails to
// be rational is an error.  Functions whose support margin dips below
// -ceil(M/2) are rejected rather than wrapped.
FiniteFunction fourier(const FiniteModel& fm, const FiniteFunction& f);

// pairing q^{-2M} * sum over the plane of f*g
mpq_class ff_inner(const FiniteModel& fm, const FiniteFunction& f,
                   const FiniteFunction& g);

// average over the shells of the lattice-stabilizer orbits
FiniteFunction k_average(const FiniteModel& fm, const FiniteFunction& f);

// Orbit partition of the nonzero points of the plane under the integral
// upper-triangular-mod-pi subgroup of determinant one, computed by breadth
// first search from generators.
struct OrbitData {
  std::vector<int> orbit_of;       // indexed by n1 * ring_size + n2; -1 for origin
  int count = 0;                   // number of orbits
  std::vector<long> reps;          // one representative point per orbit id
  std::vector<int> with_torus_of;  // same partition refined by the unit scalings
  int with_torus_count = 0;
};

OrbitData iwahori_orbits(const FiniteModel& fm);

// analytic label: (2, val(x2)) when val(x1) >= val(x2), else (1, val(x1))
std::pair<int, int> orbit_label(const FiniteModel& fm, long n1, long n2);

// indicator of the labeled orbit; type 1 needs |m| <= M-2, type 2 |m| <= M-1
FiniteFunction orbit_indicator(const FiniteModel& fm, int type, int m);

// sum of coefficients times the corresponding power of a root of unity of
// order p^m, reduced to a rational; throws when the value is irrational
mpq_class cyclotomic_to_rational(std::vector<mpq_class> acc, long p, int m);

}  // namespace bax

#pragma once

#include "bax/laurent.hpp"
#include "bax/rootdata.hpp"

#include <map>
#include <optional>

namespace bax {

// Finite linear combination sum_gamma c_gamma(v) H[gamma] over the coweight
// lattice, with H[a]*H[b] = H[a+b].  This is the shift algebra acting on the
// basis functions indexed by lattice points.
class TorusFunction {
 public:
  TorusFunction() = default;

  static TorusFunction h(const IVec& gamma);
  static TorusFunction scalar(const LaurentScalar& c, int rank);
  static TorusFunction term(const LaurentScalar& c, const IVec& gamma);

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  LaurentScalar coeff(const IVec& gamma) const;
  const std::map<IVec, LaurentScalar>& terms() const { return terms_; }

  TorusFunction operator+(const TorusFunction& o) const;
  TorusFunction operator-(const TorusFunction& o) const;
  TorusFunction operator*(const TorusFunction& o) const;
  TorusFunction operator-() const;
  bool operator==(const TorusFunction& o) const;
  bool operator!=(const TorusFunction& o) const { return !(*this == o); }

  TorusFunction scaled(const LaurentScalar& c) const;

  void add_term(const IVec& gamma, const LaurentScalar& c);

  // substitute v -> value in every coefficient
  std::map<IVec, mpq_class> specialize(const mpq_class& v_value) const;

  std::string str() const;

 private:
  std::map<IVec, LaurentScalar> terms_;
};

// plain lattice action: H[gamma] -> H[w gamma]
TorusFunction weyl_image(const RootDatum& rd, int w, const TorusFunction& f);

// twisted action: H[gamma] -> v^{2(rho(gamma) - rho(w gamma))} H[w gamma];
// this is the conjugation under which the intertwiners transform shift
// operators (rank one: s.H[a_vee] = q^2 H[-a_vee])
TorusFunction dotted_action(const RootDatum& rd, int w, const TorusFunction& f);

// product over positive coroots tau of (v^2 - H[tau])
TorusFunction dv_element(const RootDatum& rd);

// exact division f / g in the shift algebra; needs g's leading coefficient
// (under the (height, lex) term order) to be a single monomial in v.
// Returns nothing when f is not divisible or the division does not
// terminate within the step bound.
std::optional<TorusFunction> try_divide(const TorusFunction& f, const TorusFunction& g);

// Formal fraction of two TorusFunctions; equality by cross-multiplication.
class RationalTorusFunction {
 public:
  RationalTorusFunction() : num_(), den_(unit_den()) {}
  explicit RationalTorusFunction(const TorusFunction& n) : num_(n), den_(unit_den()) {}
  RationalTorusFunction(const TorusFunction& n, const TorusFunction& d);

  const TorusFunction& num() const { return num_; }
  const TorusFunction& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalTorusFunction operator+(const RationalTorusFunction& o) const;
  RationalTorusFunction operator-(const RationalTorusFunction& o) const;
  RationalTorusFunction operator*(const RationalTorusFunction& o) const;
  RationalTorusFunction operator/(const RationalTorusFunction& o) const;
  RationalTorusFunction operator-() const;
  bool operator==(const RationalTorusFunction& o) const;
  bool operator!=(const RationalTorusFunction& o) const { return !(*this == o); }

  // collapse the fraction when the denominator divides the numerator
  void normalize_display();

  std::string str() const;

 private:
  TorusFunction num_, den_;
  static TorusFunction unit_den();
};

}  // namespace bax

#pragma once

#include <map>
#include <string>
#include <vector>

#include "bax/laurent.hpp"
#include "bax/rootdata.hpp"

namespace bax {

// Element (gamma, w): x -> w(x) + gamma of the affine Weyl group, with
// gamma in the coroot lattice.
struct AffineWeylElement {
  IVec gamma;
  int w = 0;

  bool operator==(const AffineWeylElement& o) const {
    return w == o.w && gamma == o.gamma;
  }
  bool operator!=(const AffineWeylElement& o) const { return !(*this == o); }
  bool operator<(const AffineWeylElement& o) const {
    return gamma != o.gamma ? gamma < o.gamma : w < o.w;
  }
};

AffineWeylElement affine_identity(const RootDatum& rd);
AffineWeylElement affine_mul(const RootDatum& rd, const AffineWeylElement& a,
                             const AffineWeylElement& b);
AffineWeylElement affine_inverse(const RootDatum& rd, const AffineWeylElement& a);
AffineWeylElement affine_translation(const RootDatum& rd, const IVec& gamma);
QVec affine_apply(const RootDatum& rd, const AffineWeylElement& a, const QVec& x);

// Generators are numbered 0..rank: index 0 is the reflection in the wall
// <x, theta> = 1, index i >= 1 is the finite simple reflection s_{i-1}.
AffineWeylElement affine_generator(const RootDatum& rd, int s);

// length of t_gamma w: sum over positive roots beta of |<gamma, beta>| when
// w^{-1} beta stays positive and |<gamma, beta> - 1| when it does not
long affine_length(const RootDatum& rd, const AffineWeylElement& a);

// shortlex-greedy reduced word (generator indices, product left to right)
std::vector<int> reduced_word(const RootDatum& rd, const AffineWeylElement& a);
std::vector<std::vector<int>> all_reduced_words(const RootDatum& rd,
                                                const AffineWeylElement& a);

// order of the product of two generators; 0 when the product has infinite
// order (checked up to a fixed cap)
int braid_order(const RootDatum& rd, int s, int t);

// all elements of length <= cap, sorted by (length, discovery)
std::vector<AffineWeylElement> affine_ball(const RootDatum& rd, long cap);

class HeckeElement {
 public:
  HeckeElement() = default;

  static HeckeElement unit(const RootDatum& rd);
  static HeckeElement basis(const AffineWeylElement& a);

  bool is_zero() const { return terms_.empty(); }
  const std::map<AffineWeylElement, LaurentScalar>& terms() const { return terms_; }
  LaurentScalar coeff(const AffineWeylElement& a) const;
  void add_term(const AffineWeylElement& a, const LaurentScalar& c);

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement scaled(const LaurentScalar& c) const;
  bool operator==(const HeckeElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }

  std::string str(const RootDatum& rd) const;

 private:
  std::map<AffineWeylElement, LaurentScalar> terms_;
};

// T_s * h and T_s^{-1} * h; T_s^{-1} = T_s - (v - v^{-1})
HeckeElement t_mul_gen(const RootDatum& rd, int s, const HeckeElement& h);
HeckeElement t_mul_gen_inverse(const RootDatum& rd, int s, const HeckeElement& h);

// T_{s_{i1}} ... T_{s_{ik}} for word = (i1 .. ik)
HeckeElement t_word(const RootDatum& rd, const std::vector<int>& word);

// inverse of the basis element T_a
HeckeElement t_basis_inverse(const RootDatum& rd, const AffineWeylElement& a);

// general product
HeckeElement hecke_mul(const RootDatum& rd, const HeckeElement& a, const HeckeElement& b);

// linear involution sending T_a to (-1)^{length(a)} (T_{a^{-1}})^{-1}
HeckeElement bullet(const RootDatum& rd, const HeckeElement& h);

// specialization of every coefficient at v = value (group algebra at v = 1)
std::map<AffineWeylElement, mpq_class> hecke_specialize(const HeckeElement& h,
                                                        const mpq_class& value);

}  // namespace bax

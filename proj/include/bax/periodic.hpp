#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bax/hecke.hpp"
#include "bax/laurent.hpp"
#include "bax/rootdata.hpp"

namespace bax {

namespace testing {
// fault injection for the negative control: flips the sign of the
// length-lowering correction term in the wall-crossing action
extern bool taction_sign_flip;
}  // namespace testing

// Alcove A = g(base), carried in two mutually validating forms: the affine
// element g and the coordinate vector k_beta = floor(<g(x0), beta>) over the
// positive roots.  The coordinates determine the alcove, so they alone drive
// comparisons.
struct Alcove {
  AffineWeylElement g;
  IVec kco;

  bool operator==(const Alcove& o) const { return kco == o.kco; }
  bool operator!=(const Alcove& o) const { return kco != o.kco; }
  bool operator<(const Alcove& o) const { return kco < o.kco; }
};

Alcove base_alcove(const RootDatum& rd);
Alcove alcove_of(const RootDatum& rd, const AffineWeylElement& g);

// geometric action u . A (left composition)
Alcove alcove_act_left(const RootDatum& rd, const AffineWeylElement& u, const Alcove& a);
// wall-crossing action A . u (right composition)
Alcove alcove_act_right(const RootDatum& rd, const Alcove& a, const AffineWeylElement& u);

// crossing of the wall of A colored by generator s (right action by s)
Alcove alcove_cross(const RootDatum& rd, const Alcove& a, int s);

// signed number of hyperplanes between the base alcove and A
long alcove_d(const Alcove& a);
// unsigned count; agrees with the length of g
long alcove_radius(const Alcove& a);

// branch selector for the wall-crossing Hecke action: true when the single
// coordinate changed by crossing the s-colored wall goes down
bool alcove_descent(const RootDatum& rd, const Alcove& a, int s);

class PeriodicElement {
 public:
  PeriodicElement() = default;

  static PeriodicElement basis(const Alcove& a);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Alcove, LaurentScalar>& terms() const { return terms_; }
  LaurentScalar coeff(const Alcove& a) const;
  void add_term(const Alcove& a, const LaurentScalar& c);

  PeriodicElement operator+(const PeriodicElement& o) const;
  PeriodicElement operator-(const PeriodicElement& o) const;
  PeriodicElement scaled(const LaurentScalar& c) const;
  bool operator==(const PeriodicElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const PeriodicElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::map<Alcove, LaurentScalar> terms_;
};

// wall-crossing Hecke action of the generator T_s
PeriodicElement t_act(const RootDatum& rd, int s, const PeriodicElement& m);
// generators applied in word order; the base alcove's leading image is the
// alcove of the word's product
PeriodicElement t_act_word(const RootDatum& rd, const std::vector<int>& word,
                           const PeriodicElement& m);
PeriodicElement gamma_translate(const RootDatum& rd, const IVec& gamma,
                                const PeriodicElement& m);
PeriodicElement hecke_act(const RootDatum& rd, const HeckeElement& h,
                          const PeriodicElement& m);

// agreement on all alcoves of radius <= radius_cap, ignoring coefficient
// terms below v^{v_floor}
bool periodic_window_equal(const PeriodicElement& a, const PeriodicElement& b,
                           long radius_cap, long v_floor);

// Reflection-ray operator for the i-th finite simple root (0-based), defined
// on finitely supported elements.  The result is certified on alcoves of
// radius <= radius_cap modulo coefficient terms below v^{v_floor}; terms
// beyond the certified window are pruned.
PeriodicElement theta_alpha(const RootDatum& rd, int i, const PeriodicElement& m,
                            long radius_cap, long v_floor);

// Ray image of an element whose true image is finite (e.g. anything in the
// image of the negated coroot product prod_tau (v^2 - t_{-tau}), which the
// operator carries to a product annihilating its own ray tails).  Truncates,
// strips uncertified low-order coefficient dust, and
// verifies that the support sits well inside the truncation radius, retrying
// deeper once; returns nothing when the support fails to stabilize or a
// coefficient reaches the certification floor.
std::optional<PeriodicElement> theta_finite(const RootDatum& rd, int i,
                                            const PeriodicElement& m, long v_floor);

// support-cone witness: an apex gamma0 with every supporting alcove inside
// gamma0 + dominant cone, and its verifier
IVec periodic_apex(const RootDatum& rd, const PeriodicElement& m);
bool periodic_in_cone(const RootDatum& rd, const PeriodicElement& m, const IVec& apex);

// Rank-one level aggregation: each alcove contributes to the level floor(d/2)
// with weight (-v)^d q^{-level} times the orbit-averaging fraction
// 1/(1+q^{-1}) for even d and q^{-1}/(1+q^{-1}) for odd d.  bar_first
// replaces every module coefficient by its image under v -> v^{-1} before
// aggregating.
std::map<long, RationalLaurent> aggregate_levels(const RootDatum& rd,
                                                 const PeriodicElement& m,
                                                 bool bar_first);

}  // namespace bax

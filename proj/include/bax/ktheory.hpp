#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bax/periodic.hpp"
#include "bax/rootdata.hpp"
#include "bax/torus.hpp"

namespace bax {

// Fixed-point model of the equivariant K-group of the dual flag variety: a
// class is its tuple of localized restrictions, one RationalTorusFunction per
// Weyl-group fixed point, indexed in rd.weyl order.  Monomial exponents live
// on the doubled lattice (the vector stored for e^gamma is 2*gamma) so that
// half-sums of coroots stay integral.
using KClass = std::vector<RationalTorusFunction>;

// 2*gamma, the doubled-lattice encoding of e^gamma
IVec doubled(const IVec& gamma);

// scaled lattice vector k*gamma
IVec ivec_scale(const IVec& gamma, int k);

// monomial e^{w(2 rho_vee)} times the product over positive coroots tau of
// (1 - e^{w(tau)}): the localized weight of the twisted skyscraper at w
TorusFunction euler_class(const RootDatum& rd, int w);

KClass kzero(const RootDatum& rd);
// restrictions all equal to one
KClass unit_class(const RootDatum& rd);
// line class: restriction at w is the monomial with doubled exponent
// w(lambda_doubled)
KClass line_class(const RootDatum& rd, const IVec& lambda_doubled);
// twisted skyscraper at the fixed point w: euler_class(rd, w) there, zero
// elsewhere
KClass kappa(const RootDatum& rd, int w);

KClass k_add(const KClass& a, const KClass& b);
KClass k_sub(const KClass& a, const KClass& b);
KClass k_scale(const RootDatum& rd, const KClass& a, const LaurentScalar& c);
bool k_equal(const KClass& a, const KClass& b);
std::string kclass_str(const RootDatum& rd, const KClass& f);

// exact polynomial content of a formal fraction, when the denominator divides
std::optional<TorusFunction> rtf_polynomial(const RationalTorusFunction& f);

// sum over w of restriction(w) divided by the tangent-weight product over
// positive coroots tau of (1 - e^{w(tau)}); the character prefactor of the
// twisted skyscraper stays in the numerator, so kappa(w) pushes to it
RationalTorusFunction push_to_point(const RootDatum& rd, const KClass& f);
// same, asserting that every localization denominator cancels
TorusFunction push_to_point_poly(const RootDatum& rd, const KClass& f);

// For every fixed point w and positive root beta, the difference of
// restrictions at w and w*s_beta must be divisible by 1 - e^{w(beta_vee)}.
// Requires polynomial restrictions; fills *why on failure.
bool gkm_check(const RootDatum& rd, const KClass& f, std::string* why = nullptr);

// character twist: every restriction is multiplied by the same monomial
// e^gamma (gamma in plain coroot coordinates)
KClass gamma_act(const RootDatum& rd, const IVec& gamma, const KClass& f);

// geometric action: component at u moves to w*u and w is applied to all
// monomial exponents
KClass geometric_weyl_act(const RootDatum& rd, int w, const KClass& f);

// Fiberwise push-pull along the i-th minimal projection, combined literally
// from pull(push(F)) - pull(push(F twisted by the fiber cotangent line)) - F.
// Collapses to the plain component swap; kept as the documented raw form.
KClass t1_push_pull_raw(const RootDatum& rd, int i, const KClass& f);

// v=1 intertwiner: restriction at w picks up the Euler-class ratio
// -e^{3 w(alpha_i_vee)} times the restriction at w*s_i
KClass t1_alpha(const RootDatum& rd, int i, const KClass& f);

// v-deformed fiberwise operator, with u_w the monomial of w(alpha_i_vee):
//   (dl F)|_w = (v - v^{-1})/(1 - u_w^{-1}) * F|_w
//             + u_w^3 (v u_w - v^{-1})/(1 - u_w) * F|_{w s_i}
// Satisfies (dl - v)(dl + v^{-1}) = 0 and specializes at v = 1 to t1_alpha.
KClass dl_action(const RootDatum& rd, int i, const KClass& f);

// letters applied left to right: dl_word({i,j}, F) = dl_j(dl_i(F))
KClass dl_word(const RootDatum& rd, const std::vector<int>& word, const KClass& f);

// product over positive coroots tau of (v^2 - e^tau), on the doubled lattice
TorusFunction dv_uniform(const RootDatum& rd);
// multiply every restriction by dv_uniform
KClass dv_mult(const RootDatum& rd, const KClass& f);

// Comparison map from the periodic module: the base alcove goes to kappa(e),
// wall crossings to dl_action, translations to character twists.  Alcove
// basis elements are resolved through the unitriangular transport expansion.
struct ZetaContext {
  const RootDatum& rd;
  std::map<IVec, KClass> memo;  // keyed by alcove coordinates

  explicit ZetaContext(const RootDatum& r) : rd(r) {}
};

KClass zeta_alcove(ZetaContext& zc, const Alcove& a);
KClass zeta(ZetaContext& zc, const PeriodicElement& m);

// Exact expansion of a class in the zeta images of the window alcoves, by
// linear algebra over v-Laurent scalars with denominator-cleared monomial
// matching.  unique is set when the window system has full column rank.
struct ZetaSolve {
  std::map<IVec, RationalLaurent> coeffs;  // alcove coordinates -> coefficient
  bool unique = false;
};
std::optional<ZetaSolve> zeta_window_solve(ZetaContext& zc, const KClass& target,
                                           const std::vector<Alcove>& window);

// Certified comparison of the reflection-ray operator with the conjugated
// geometric reflection.  The input is multiplied by the reflected coroot
// product, which the ray operator carries to the plain coroot product dv;
// that factor truncates the infinite tails exactly, so both sides can be
// evaluated on the given test alcoves and compared as exact K-classes.
struct PhiZetaReport {
  bool pass = false;
  long certified_radius = 0;
  std::string detail;
};
PhiZetaReport check_phizeta(const RootDatum& rd, int i, const std::vector<Alcove>& tests,
                            long depth);

}  // namespace bax

#pragma once

#include <map>
#include <string>
#include <vector>

#include "bax/cone.hpp"
#include "bax/laurent.hpp"
#include "bax/rootdata.hpp"
#include "bax/torus.hpp"

namespace bax {

// One factor (1 - u*H[tau])^{-1} with tau a nonzero direction in the
// positive octant and u a single monomial in v.
struct GeomFactor {
  LaurentScalar u;
  IVec tau;
};

// Element of the completed shift-algebra module written as a fraction
//   num * prod_k (1 - u_k H[tau_k])^{-1}
// applied to the unit basis vector.  num is a polynomial in the normalized
// shifts, so the coefficient of H[gamma] in a fully expanded element is the
// coefficient on the basis vector indexed by gamma.
struct SphericalElement {
  int rank = 0;
  TorusFunction num;
  std::vector<GeomFactor> den;
};

// q-weighted count of multiset decompositions of gamma into positive
// coroots, each part contributing one factor of q^{-1}.
LaurentScalar kostant_q(const RootDatum& rd, const IVec& gamma);
std::map<IVec, LaurentScalar> kostant_table(const RootDatum& rd, long cap);

SphericalElement delta_elem(const RootDatum& rd, const IVec& gamma);
SphericalElement c_elem(const RootDatum& rd, const IVec& mu);
SphericalElement c_zero(const RootDatum& rd);

SphericalElement add(const RootDatum& rd, const SphericalElement& f,
                     const SphericalElement& g);
SphericalElement scale(const SphericalElement& f, const LaurentScalar& c);

// Normalized shift sends the basis vector at mu to the one at mu+gamma; the
// bare shift is the same composed with the factor q^{-rho(gamma)}.
SphericalElement apply_shift(const RootDatum& rd, const SphericalElement& f,
                             const IVec& gamma, bool normalized);

// Cancel denominator factors that divide the numerator exactly.
SphericalElement reduce(const RootDatum& rd, const SphericalElement& f);

// Intertwiner for the i-th simple reflection and its extension along a word.
SphericalElement phi_simple(const RootDatum& rd, const SphericalElement& f, int i);
SphericalElement phi_word(const RootDatum& rd, const SphericalElement& f,
                          const std::vector<int>& word);

// Expansion into basis coefficients, certified to the given height.
ConeSeries expand(const RootDatum& rd, const SphericalElement& f, long depth);

// Exact equality of fractions by cross-multiplication.
bool equal_exact(const SphericalElement& f, const SphericalElement& g);

// An apex gamma0 with support(f) contained in gamma0 + (positive octant).
IVec support_apex(const SphericalElement& f);

// Multiply by prod over positive coroots tau of (1 - q^{-1} H[tau]); sends
// the spherical unit to the basis vector at the origin.
SphericalElement lp_apply(const RootDatum& rd, const SphericalElement& f);

// Coefficients expressing the basis vector at mu in the spherical family:
// sum over subsets S of the positive coroots of (-1)^{|S|} q^{-|S|} at
// index mu + sigma(S).
std::map<IVec, LaurentScalar> delta_in_c(const RootDatum& rd, const IVec& mu);

// Basis coefficients of the spherical family element at mu, certified to
// the given height.
ConeSeries c_in_delta(const RootDatum& rd, const IVec& mu, long depth);

// Volume of the unit orbit: (1 - q^{-2})^rank.
LaurentScalar vol_x0(const RootDatum& rd);

// Pairing of an expanded element against a finitely supported one; the
// coefficient at nu is vol_x0 * sum_mu f_{mu+nu} g_mu.
ConeSeries pairing(const RootDatum& rd, const ConeSeries& f, const TorusFunction& g);

// prod over positive coroots tau of (1 - q^{rho(tau)-1} chi(tau))^{-1} at a
// numeric q, with chi extended multiplicatively from its values on the
// simple coroots.
mpq_class local_l_factor(const RootDatum& rd, const std::vector<mpq_class>& chi_simple,
                         const mpq_class& q);

std::string spherical_str(const SphericalElement& f);

}  // namespace bax

#pragma once

#include "bax/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace bax {

enum class CartanType { A1, A2, B2, C2, G2, A3 };

CartanType parse_cartan(const std::string& name);
std::string cartan_name(CartanType t);

using IVec = std::vector<int>;
using IMat = std::vector<IVec>;  // row-major, acts on column vectors

struct WeylElement {
  std::vector<int> word;  // shortlex-minimal reduced word
  IMat mat;               // action on coroot coordinates
  IMat rmat;              // action on root coordinates
  int inv = 0;            // index of the inverse element
  int length() const { return static_cast<int>(word.size()); }
};

// Pinned presentation: pairing[i][j] = value of simple root i on simple
// coroot j.  Simple reflections act by
//   on coroot coords:  c -> c - (sum_j pairing[i][j] c_j) e_i
//   on root coords:    b -> b - (sum_j b_j pairing[j][i]) e_i
// and (alpha_i, alpha_j) = dsym[j] * pairing[i][j].
struct RootDatum {
  CartanType type;
  int rank = 0;
  IMat pairing;
  IVec dsym;

  IMat positive_roots;    // root coords, sorted by (height, lex)
  IMat positive_coroots;  // positive_coroots[k] is the coroot of positive_roots[k]
  IVec refl_of_pos;       // Weyl index of the reflection in positive root k

  std::vector<WeylElement> weyl;  // ordered by (length, lex word); [0] = id
  std::vector<std::vector<int>> mult;  // mult[a][b] = index of w_a w_b
  int w0 = 0;                          // longest element

  IVec theta_root;    // highest root
  IVec theta_coroot;  // its coroot
  int coxeter_h = 0;  // height(theta) + 1

  IVec two_rho_vee;  // sum of positive coroots
  QVec rho_vee;      // half of two_rho_vee
  QVec x0;           // rho_vee / coxeter_h, interior point of the base alcove

  int npos() const { return static_cast<int>(positive_roots.size()); }
  int order() const { return static_cast<int>(weyl.size()); }
};

RootDatum build_root_datum(CartanType t);

// value of root beta on coroot gamma (both in simple coordinates)
long pair_root_coroot(const RootDatum& rd, const IVec& beta, const IVec& gamma);
// value of root beta at a rational point x of the coroot space
mpq_class pair_point_root(const RootDatum& rd, const QVec& x, const IVec& beta);

// half the sum over positive roots of their value on gamma; equals the
// coordinate sum, which is what this returns
long rho_pair(const IVec& gamma);

int root_height(const IVec& b);

IVec weyl_coroot(const RootDatum& rd, int w, const IVec& c);
IVec weyl_root(const RootDatum& rd, int w, const IVec& b);
QVec weyl_point(const RootDatum& rd, int w, const QVec& x);

// index of the simple reflection s_i in rd.weyl
int simple_reflection(const RootDatum& rd, int i);

// minimal-length representatives of the cosets w W_I, sorted by index
std::vector<int> minimal_coset_reps(const RootDatum& rd, const std::vector<int>& I);

// elements of the parabolic subgroup W_I
std::vector<int> parabolic_elements(const RootDatum& rd, const std::vector<int>& I);

// Augmented cellular chain complex of the W-permutohedron (orbit polytope of
// rho_vee).  boundary[0] is the augmentation; boundary[d] maps d-chains to
// (d-1)-chains.  counts[0] = 1 stands for the empty face.
struct ChainComplex {
  std::vector<int> counts;
  std::vector<QMat> boundary;
  bool d2_zero = false;
  bool exact = false;
};

ChainComplex permutohedron_complex(const RootDatum& rd);

}  // namespace bax

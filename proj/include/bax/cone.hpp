#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bax/laurent.hpp"
#include "bax/torus.hpp"

namespace bax {

// Truncated series supported on finitely many translates of the positive
// octant of the coroot lattice.  Coefficients at lattice points of height
// (coordinate sum) <= depth are exact; nothing is claimed beyond that.
// depth == EXACT means every stored coefficient is exact and all others
// vanish, i.e. the series is a finite sum known completely.
class ConeSeries {
 public:
  static constexpr long EXACT = long(1) << 40;

  ConeSeries() : rank_(0), depth_(EXACT) {}
  ConeSeries(int rank, long depth) : rank_(rank), depth_(depth) {}

  // Finite sum, known exactly.
  static ConeSeries finite(int rank, const std::map<IVec, LaurentScalar>& entries);
  static ConeSeries finite(int rank, const TorusFunction& f);

  // (1 - u*H[gamma])^{-1} expanded to the given depth.  Requires gamma in the
  // positive octant and nonzero unless u vanishes, in which case the result
  // is the constant 1.
  static ConeSeries geometric_inverse(int rank, const LaurentScalar& u,
                                      const IVec& gamma, long depth);

  int rank() const { return rank_; }
  long depth() const { return depth_; }
  bool is_exact() const { return depth_ >= EXACT; }
  const std::map<IVec, LaurentScalar>& entries() const { return entries_; }
  const std::vector<IVec>& apexes() const { return apexes_; }

  // Least height over the support promise; every nonzero coefficient lives at
  // a point of height >= this.
  long min_height() const;

  void add_entry(const IVec& gamma, const LaurentScalar& c);
  void add_apex(const IVec& apex);

  // Coefficient at gamma.  Throws if gamma lies beyond the certified depth.
  LaurentScalar coeff(const IVec& gamma) const;

  ConeSeries truncated(long new_depth) const;
  ConeSeries operator+(const ConeSeries& o) const;
  ConeSeries operator-(const ConeSeries& o) const;
  ConeSeries scaled(const LaurentScalar& c) const;

  // Convolution product.  The certified depth of the result is
  // min(depth_f + min_height_g, depth_g + min_height_f), saturating at EXACT.
  ConeSeries operator*(const ConeSeries& o) const;

  // Sum of all coefficients of height <= cap.  Requires cap <= depth.
  LaurentScalar graded_sum(long cap) const;

  std::string str() const;

 private:
  void prune_apexes();
  void trim();

  int rank_;
  long depth_;
  std::map<IVec, LaurentScalar> entries_;
  std::vector<IVec> apexes_;
};

// Exact agreement of all coefficients of height <= cap; requires both
// operands certified at least that deep.
bool window_equal(const ConeSeries& a, const ConeSeries& b, long cap);

long cone_height(const IVec& gamma);

}  // namespace bax

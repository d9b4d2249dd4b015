#include "bax/cone.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bax {

namespace {

long sat_add(long a, long b) {
  if (a >= ConeSeries::EXACT && b >= 0) return ConeSeries::EXACT;
  if (b >= ConeSeries::EXACT && a >= 0) return ConeSeries::EXACT;
  long s = a + b;
  return s >= ConeSeries::EXACT ? ConeSeries::EXACT : s;
}

bool octant_leq(const IVec& a, const IVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

long cone_height(const IVec& gamma) {
  long h = 0;
  for (int x : gamma) h += x;
  return h;
}

ConeSeries ConeSeries::finite(int rank, const std::map<IVec, LaurentScalar>& entries) {
  ConeSeries r(rank, EXACT);
  for (const auto& [g, c] : entries) r.add_entry(g, c);
  for (const auto& [g, c] : entries)
    if (!c.is_zero()) r.add_apex(g);
  if (r.apexes_.empty()) r.add_apex(IVec(rank, 0));
  return r;
}

ConeSeries ConeSeries::finite(int rank, const TorusFunction& f) {
  std::map<IVec, LaurentScalar> m;
  for (const auto& [g, c] : f.terms()) {
    IVec k = g;
    k.resize(rank, 0);
    m[k] = c;
  }
  return finite(rank, m);
}

ConeSeries ConeSeries::geometric_inverse(int rank, const LaurentScalar& u,
                                         const IVec& gamma, long depth) {
  ConeSeries r(rank, depth);
  r.add_apex(IVec(rank, 0));
  r.add_entry(IVec(rank, 0), LaurentScalar(1));
  if (u.is_zero()) {
    r.depth_ = EXACT;
    return r;
  }
  if ((int)gamma.size() != rank)
    throw std::invalid_argument("geometric_inverse: rank mismatch");
  long step = cone_height(gamma);
  bool positive = step > 0;
  for (int x : gamma)
    if (x < 0) positive = false;
  if (!positive)
    throw std::domain_error(
        "geometric_inverse: direction must be a nonzero vector in the positive octant");
  LaurentScalar pw(1);
  IVec at(rank, 0);
  for (long n = 1; n * step <= depth; ++n) {
    pw = pw * u;
    for (int i = 0; i < rank; ++i) at[i] += gamma[i];
    r.add_entry(at, pw);
  }
  return r;
}

long ConeSeries::min_height() const {
  if (apexes_.empty()) return 0;
  long m = cone_height(apexes_[0]);
  for (const IVec& a : apexes_) m = std::min(m, cone_height(a));
  return m;
}

void ConeSeries::add_entry(const IVec& gamma, const LaurentScalar& c) {
  if ((int)gamma.size() != rank_)
    throw std::invalid_argument("cone entry rank mismatch");
  if (cone_height(gamma) > depth_) return;
  auto it = entries_.find(gamma);
  if (it == entries_.end()) {
    if (!c.is_zero()) entries_.emplace(gamma, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) entries_.erase(it);
}

void ConeSeries::add_apex(const IVec& apex) {
  for (const IVec& a : apexes_)
    if (a == apex) return;
  apexes_.push_back(apex);
  prune_apexes();
}

void ConeSeries::prune_apexes() {
  std::vector<IVec> keep;
  for (const IVec& a : apexes_) {
    bool dominated = false;
    for (const IVec& b : apexes_)
      if (b != a && octant_leq(b, a)) dominated = true;
    if (!dominated) keep.push_back(a);
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  apexes_ = keep;
}

void ConeSeries::trim() {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (cone_height(it->first) > depth_ || it->second.is_zero())
      it = entries_.erase(it);
    else
      ++it;
  }
}

LaurentScalar ConeSeries::coeff(const IVec& gamma) const {
  if (cone_height(gamma) > depth_)
    throw std::domain_error("coefficient requested beyond certified depth");
  auto it = entries_.find(gamma);
  return it == entries_.end() ? LaurentScalar() : it->second;
}

ConeSeries ConeSeries::truncated(long new_depth) const {
  ConeSeries r = *this;
  r.depth_ = std::min(depth_, new_depth);
  r.trim();
  return r;
}

ConeSeries ConeSeries::operator+(const ConeSeries& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("cone rank mismatch");
  ConeSeries r(rank_, std::min(depth_, o.depth_));
  r.apexes_ = apexes_;
  for (const IVec& a : o.apexes_) r.add_apex(a);
  for (const auto& [g, c] : entries_) r.add_entry(g, c);
  for (const auto& [g, c] : o.entries_) r.add_entry(g, c);
  return r;
}

ConeSeries ConeSeries::operator-(const ConeSeries& o) const {
  return *this + o.scaled(LaurentScalar(-1));
}

ConeSeries ConeSeries::scaled(const LaurentScalar& c) const {
  ConeSeries r(rank_, depth_);
  r.apexes_ = apexes_;
  if (c.is_zero()) {
    r.depth_ = EXACT;
    r.apexes_ = {IVec(rank_, 0)};
    return r;
  }
  for (const auto& [g, x] : entries_) r.add_entry(g, x * c);
  return r;
}

ConeSeries ConeSeries::operator*(const ConeSeries& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("cone rank mismatch");
  long d = std::min(sat_add(depth_, o.min_height()), sat_add(o.depth_, min_height()));
  ConeSeries r(rank_, d);
  for (const IVec& a : apexes_)
    for (const IVec& b : o.apexes_) {
      IVec s(rank_);
      for (int i = 0; i < rank_; ++i) s[i] = a[i] + b[i];
      r.add_apex(s);
    }
  for (const auto& [ga, ca] : entries_) {
    long ha = cone_height(ga);
    for (const auto& [gb, cb] : o.entries_) {
      if (ha + cone_height(gb) > d) continue;
      IVec s(rank_);
      for (int i = 0; i < rank_; ++i) s[i] = ga[i] + gb[i];
      r.add_entry(s, ca * cb);
    }
  }
  return r;
}

LaurentScalar ConeSeries::graded_sum(long cap) const {
  if (cap > depth_)
    throw std::domain_error("graded_sum cap exceeds certified depth");
  LaurentScalar s;
  for (const auto& [g, c] : entries_)
    if (cone_height(g) <= cap) s += c;
  return s;
}

std::string ConeSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : entries_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*D[";
    for (size_t i = 0; i < g.size(); ++i) {
      if (i) os << ",";
      os << g[i];
    }
    os << "]";
  }
  if (first) os << "0";
  os << " ; depth ";
  if (is_exact())
    os << "exact";
  else
    os << depth_;
  return os.str();
}

bool window_equal(const ConeSeries& a, const ConeSeries& b, long cap) {
  if (a.rank() != b.rank()) return false;
  if (cap > a.depth() || cap > b.depth())
    throw std::domain_error("window_equal cap exceeds certified depth");
  for (const auto& [g, c] : a.entries())
    if (cone_height(g) <= cap && !(b.coeff(g) == c)) return false;
  for (const auto& [g, c] : b.entries())
    if (cone_height(g) <= cap && !(a.coeff(g) == c)) return false;
  return true;
}

}  // namespace bax

#include "bax/torus.hpp"

#include <algorithm>
#include <sstream>

namespace bax {

namespace {

IVec padv(const IVec& v, size_t n) {
  IVec r = v;
  r.resize(n, 0);
  return r;
}

size_t key_rank(const TorusFunction& f) {
  return f.terms().empty() ? 0 : f.terms().begin()->first.size();
}

TorusFunction rekey(const TorusFunction& f, size_t n) {
  if (key_rank(f) == n) return f;
  TorusFunction r;
  for (const auto& [g, c] : f.terms()) r.add_term(padv(g, n), c);
  return r;
}

long lat_height(const IVec& g) {
  long s = 0;
  for (int x : g) s += x;
  return s;
}

// leading term under the (height, lex) group order
std::pair<IVec, LaurentScalar> lead_term(const TorusFunction& f) {
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it) {
    long hb = lat_height(best->first), hi = lat_height(it->first);
    if (hi > hb || (hi == hb && it->first > best->first)) best = it;
  }
  return *best;
}

}  // namespace

TorusFunction TorusFunction::h(const IVec& gamma) {
  TorusFunction f;
  f.add_term(gamma, LaurentScalar(1));
  return f;
}

TorusFunction TorusFunction::scalar(const LaurentScalar& c, int rank) {
  TorusFunction f;
  f.add_term(IVec(rank, 0), c);
  return f;
}

TorusFunction TorusFunction::term(const LaurentScalar& c, const IVec& gamma) {
  TorusFunction f;
  f.add_term(gamma, c);
  return f;
}

LaurentScalar TorusFunction::coeff(const IVec& gamma) const {
  auto it = terms_.find(gamma);
  return it == terms_.end() ? LaurentScalar() : it->second;
}

void TorusFunction::add_term(const IVec& gamma, const LaurentScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(gamma, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

// equality must see through rank padding, same as the arithmetic does
bool TorusFunction::operator==(const TorusFunction& o) const {
  size_t n = std::max(key_rank(*this), key_rank(o));
  return rekey(*this, n).terms_ == rekey(o, n).terms_;
}

TorusFunction TorusFunction::operator+(const TorusFunction& o) const {
  size_t n = std::max(key_rank(*this), key_rank(o));
  TorusFunction r = rekey(*this, n);
  for (const auto& [g, c] : o.terms_) r.add_term(padv(g, n), c);
  return r;
}

TorusFunction TorusFunction::operator-(const TorusFunction& o) const {
  return *this + (-o);
}

TorusFunction TorusFunction::operator-() const {
  TorusFunction r;
  for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
  return r;
}

TorusFunction TorusFunction::operator*(const TorusFunction& o) const {
  size_t n = std::max(key_rank(*this), key_rank(o));
  TorusFunction a = rekey(*this, n), b = rekey(o, n), r;
  for (const auto& [g1, c1] : a.terms_)
    for (const auto& [g2, c2] : b.terms_) {
      IVec g(n);
      for (size_t i = 0; i < n; ++i) g[i] = g1[i] + g2[i];
      r.add_term(g, c1 * c2);
    }
  return r;
}

TorusFunction TorusFunction::scaled(const LaurentScalar& c) const {
  TorusFunction r;
  for (const auto& [g, x] : terms_) r.add_term(g, x * c);
  return r;
}

std::map<IVec, mpq_class> TorusFunction::specialize(const mpq_class& v_value) const {
  std::map<IVec, mpq_class> r;
  for (const auto& [g, c] : terms_) {
    mpq_class val = c.eval(v_value);
    if (val != 0) r[g] = val;
  }
  return r;
}

std::string TorusFunction::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*H[";
    for (size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
    os << "]";
    first = false;
  }
  return os.str();
}

TorusFunction weyl_image(const RootDatum& rd, int w, const TorusFunction& f0) {
  TorusFunction f = rekey(f0, rd.rank);
  TorusFunction r;
  for (const auto& [g, c] : f.terms()) r.add_term(weyl_coroot(rd, w, g), c);
  return r;
}

TorusFunction dotted_action(const RootDatum& rd, int w, const TorusFunction& f0) {
  TorusFunction f = rekey(f0, rd.rank);
  TorusFunction r;
  for (const auto& [g, c] : f.terms()) {
    IVec wg = weyl_coroot(rd, w, g);
    long twist = 2 * (rho_pair(g) - rho_pair(wg));
    r.add_term(wg, c * LaurentScalar::vpow(static_cast<int>(twist)));
  }
  return r;
}

TorusFunction dv_element(const RootDatum& rd) {
  TorusFunction r = TorusFunction::scalar(LaurentScalar(1), rd.rank);
  for (const IVec& tau : rd.positive_coroots) {
    TorusFunction f = TorusFunction::scalar(LaurentScalar::vpow(2), rd.rank) -
                      TorusFunction::term(LaurentScalar(1), tau);
    r = r * f;
  }
  return r;
}

std::optional<TorusFunction> try_divide(const TorusFunction& f0, const TorusFunction& g0) {
  if (g0.is_zero()) return std::nullopt;
  if (f0.is_zero()) return TorusFunction();
  size_t n = std::max(key_rank(f0), key_rank(g0));
  TorusFunction f = rekey(f0, n), g = rekey(g0, n);
  auto [gl, gc] = lead_term(g);
  if (gc.terms().size() != 1) return std::nullopt;
  int gk = gc.terms().begin()->first;
  mpq_class ga = gc.terms().begin()->second;
  LaurentScalar gc_inv = LaurentScalar::monomial(1 / ga, -gk);

  long min_f = lat_height(f.terms().begin()->first), min_g = lat_height(gl);
  for (const auto& [k, c] : f.terms()) min_f = std::min(min_f, lat_height(k));
  for (const auto& [k, c] : g.terms()) min_g = std::min(min_g, lat_height(k));
  // trailing terms multiply without cancellation, so every genuine quotient
  // term has height at least min_f - min_g
  const long floor_h = min_f - min_g;

  TorusFunction r = f, q;
  int steps = 0;
  while (!r.is_zero()) {
    if (++steps > 50000) return std::nullopt;
    auto [rl, rc] = lead_term(r);
    IVec tg(rl.size());
    for (size_t i = 0; i < rl.size(); ++i) tg[i] = rl[i] - gl[i];
    if (lat_height(tg) < floor_h) return std::nullopt;
    TorusFunction t = TorusFunction::term(rc * gc_inv, tg);
    q = q + t;
    r = r - t * g;
  }
  return q;
}

TorusFunction RationalTorusFunction::unit_den() {
  TorusFunction f;
  f.add_term(IVec{}, LaurentScalar(1));
  return f;
}

RationalTorusFunction::RationalTorusFunction(const TorusFunction& n, const TorusFunction& d)
    : num_(n), den_(d) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
}

RationalTorusFunction RationalTorusFunction::operator+(const RationalTorusFunction& o) const {
  return RationalTorusFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalTorusFunction RationalTorusFunction::operator-(const RationalTorusFunction& o) const {
  return RationalTorusFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalTorusFunction RationalTorusFunction::operator*(const RationalTorusFunction& o) const {
  return RationalTorusFunction(num_ * o.num_, den_ * o.den_);
}

RationalTorusFunction RationalTorusFunction::operator/(const RationalTorusFunction& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return RationalTorusFunction(num_ * o.den_, den_ * o.num_);
}

RationalTorusFunction RationalTorusFunction::operator-() const {
  RationalTorusFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

bool RationalTorusFunction::operator==(const RationalTorusFunction& o) const {
  return (num_ * o.den_) == (o.num_ * den_);
}

void RationalTorusFunction::normalize_display() {
  if (num_.is_zero()) {
    den_ = unit_den();
    return;
  }
  if (auto q = try_divide(num_, den_)) {
    num_ = *q;
    den_ = unit_den();
  }
}

std::string RationalTorusFunction::str() const {
  if (den_ == unit_den()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace bax

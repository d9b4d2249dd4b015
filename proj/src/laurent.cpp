#include "bax/laurent.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bax {

namespace {

mpq_class mpq_pow(const mpq_class& b, int k) {
  if (k == 0) return 1;
  mpq_class base = b;
  int n = k;
  if (k < 0) {
    if (b == 0) throw std::domain_error("0^negative");
    base = 1 / b;
    n = -k;
  }
  mpq_class r = 1;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

// dense view: coefficient vector c[0..deg] plus the power of v split off
struct Dense {
  int off = 0;
  std::vector<mpq_class> c;
  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

Dense to_dense(const LaurentScalar& s) {
  Dense d;
  if (s.is_zero()) return d;
  d.off = s.lo();
  d.c.assign(s.hi() - s.lo() + 1, mpq_class(0));
  for (const auto& [k, v] : s.terms()) d.c[k - d.off] = v;
  return d;
}

LaurentScalar from_dense(const Dense& d) {
  LaurentScalar r;
  for (int i = 0; i < static_cast<int>(d.c.size()); ++i)
    if (d.c[i] != 0) r += LaurentScalar::monomial(d.c[i], d.off + i);
  return r;
}

// in-place a := a mod b (as plain polynomials, offsets ignored); b nonzero
void dense_mod(Dense& a, const Dense& b) {
  assert(!b.zero());
  while (!a.zero() && a.deg() >= b.deg()) {
    mpq_class f = a.c.back() / b.c.back();
    int shift = a.deg() - b.deg();
    for (int i = 0; i <= b.deg(); ++i) a.c[shift + i] -= f * b.c[i];
    a.trim();
  }
}

Dense dense_divide_exact(const Dense& a, const Dense& b) {
  assert(!b.zero());
  Dense q;
  q.off = a.off - b.off;
  if (a.zero()) return q;
  Dense r = a;
  q.c.assign(a.deg() - b.deg() + 1, mpq_class(0));
  while (!r.zero() && r.deg() >= b.deg()) {
    mpq_class f = r.c.back() / b.c.back();
    int shift = r.deg() - b.deg();
    q.c[shift] = f;
    for (int i = 0; i <= b.deg(); ++i) r.c[shift + i] -= f * b.c[i];
    r.trim();
  }
  if (!r.zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

}  // namespace

LaurentScalar::LaurentScalar(long c) { put(0, mpq_class(c)); }
LaurentScalar::LaurentScalar(const mpq_class& c) { put(0, c); }

LaurentScalar LaurentScalar::monomial(const mpq_class& c, int k) {
  LaurentScalar s;
  s.put(k, c);
  return s;
}

void LaurentScalar::put(int k, const mpq_class& c) {
  if (c == 0) return;
  auto [it, fresh] = coef_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coef_.erase(it);
  }
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r;
  for (const auto& [k, c] : coef_) r.coef_.emplace(k, -c);
  return r;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  for (const auto& [k, c] : o.coef_) put(k, c);
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
  for (const auto& [k, c] : o.coef_) put(k, -c);
  return *this;
}

LaurentScalar LaurentScalar::operator+(const LaurentScalar& o) const {
  LaurentScalar r = *this;
  r += o;
  return r;
}

LaurentScalar LaurentScalar::operator-(const LaurentScalar& o) const {
  LaurentScalar r = *this;
  r -= o;
  return r;
}

LaurentScalar LaurentScalar::operator*(const LaurentScalar& o) const {
  LaurentScalar r;
  for (const auto& [k1, c1] : coef_)
    for (const auto& [k2, c2] : o.coef_) r.put(k1 + k2, c1 * c2);
  return r;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) {
  *this = *this * o;
  return *this;
}

mpq_class LaurentScalar::coeff(int k) const {
  auto it = coef_.find(k);
  return it == coef_.end() ? mpq_class(0) : it->second;
}

int LaurentScalar::lo() const { return coef_.empty() ? 0 : coef_.begin()->first; }
int LaurentScalar::hi() const { return coef_.empty() ? 0 : coef_.rbegin()->first; }

mpq_class LaurentScalar::eval(const mpq_class& val) const {
  mpq_class r = 0;
  for (const auto& [k, c] : coef_) r += c * mpq_pow(val, k);
  return r;
}

LaurentScalar LaurentScalar::bar() const {
  LaurentScalar r;
  for (const auto& [k, c] : coef_) r.coef_.emplace(-k, c);
  return r;
}

std::string LaurentScalar::str() const {
  if (coef_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : coef_) {
    mpq_class a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool unit = (a == 1) && k != 0;
    if (!unit) os << a.get_str();
    if (k != 0) {
      if (!unit) os << "*";
      os << "v";
      if (k != 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

LaurentScalar operator*(const mpq_class& c, const LaurentScalar& s) {
  return LaurentScalar(c) * s;
}

LaurentScalar laurent_gcd(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.is_zero() && b.is_zero()) return LaurentScalar();
  Dense x = to_dense(a), y = to_dense(b);
  x.off = 0;
  y.off = 0;
  if (x.zero()) std::swap(x, y);
  while (!y.zero()) {
    dense_mod(x, y);
    std::swap(x, y);
  }
  // monic
  mpq_class lead = x.c.back();
  for (auto& c : x.c) c /= lead;
  return from_dense(x);
}

RationalLaurent::RationalLaurent(const LaurentScalar& n, const LaurentScalar& d)
    : num_(n), den_(d) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  reduce();
}

void RationalLaurent::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentScalar(1);
    return;
  }
  LaurentScalar g = laurent_gcd(num_, den_);
  if (!(g == LaurentScalar(1))) {
    num_ = from_dense(dense_divide_exact(to_dense(num_), to_dense(g)));
    den_ = from_dense(dense_divide_exact(to_dense(den_), to_dense(g)));
  }
  // unit-normalize: den gets constant term 1 at exponent 0
  int l = den_.lo();
  mpq_class c = den_.coeff(l);
  LaurentScalar u = LaurentScalar::monomial(1 / c, -l);
  num_ *= u;
  den_ *= u;
}

RationalLaurent RationalLaurent::operator+(const RationalLaurent& o) const {
  return RationalLaurent(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalLaurent RationalLaurent::operator-(const RationalLaurent& o) const {
  return RationalLaurent(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalLaurent RationalLaurent::operator*(const RationalLaurent& o) const {
  return RationalLaurent(num_ * o.num_, den_ * o.den_);
}

RationalLaurent RationalLaurent::operator/(const RationalLaurent& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return RationalLaurent(num_ * o.den_, den_ * o.num_);
}

RationalLaurent RationalLaurent::operator-() const {
  RationalLaurent r = *this;
  r.num_ = -r.num_;
  return r;
}

bool RationalLaurent::operator==(const RationalLaurent& o) const {
  return (num_ * o.den_) == (o.num_ * den_);
}

bool RationalLaurent::is_polynomial() const {
  return den_.terms().size() == 1;
}

LaurentScalar RationalLaurent::as_polynomial() const {
  if (!is_polynomial()) throw std::domain_error("denominator not a unit");
  const auto& [k, c] = *den_.terms().begin();
  return num_ * LaurentScalar::monomial(1 / c, -k);
}

std::string RationalLaurent::str() const {
  if (is_polynomial()) return as_polynomial().str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace bax

#include "bax/periodic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bax {

namespace testing {
bool taction_sign_flip = false;
}  // namespace testing

namespace {

int floor_div(const mpq_class& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  if (!q.fits_sint_p()) throw std::overflow_error("alcove coordinate overflow");
  return static_cast<int>(q.get_si());
}

LaurentScalar lowering_coeff() {
  LaurentScalar d = LaurentScalar::vpow(1) - LaurentScalar::vpow(-1);
  return testing::taction_sign_flip ? -d : d;
}

// index of the positive root equal to alpha_i
int simple_root_index(const RootDatum& rd, int i) {
  for (int k = 0; k < rd.npos(); ++k) {
    if (root_height(rd.positive_roots[k]) != 1) break;
    if (rd.positive_roots[k][i] == 1) return k;
  }
  throw std::logic_error("simple root not found");
}

}  // namespace

Alcove alcove_of(const RootDatum& rd, const AffineWeylElement& g) {
  Alcove a;
  a.g = g;
  QVec c = affine_apply(rd, g, rd.x0);
  a.kco.resize(rd.npos());
  for (int k = 0; k < rd.npos(); ++k)
    a.kco[k] = floor_div(pair_point_root(rd, c, rd.positive_roots[k]));
  return a;
}

Alcove base_alcove(const RootDatum& rd) { return alcove_of(rd, affine_identity(rd)); }

Alcove alcove_act_left(const RootDatum& rd, const AffineWeylElement& u, const Alcove& a) {
  return alcove_of(rd, affine_mul(rd, u, a.g));
}

Alcove alcove_act_right(const RootDatum& rd, const Alcove& a, const AffineWeylElement& u) {
  return alcove_of(rd, affine_mul(rd, a.g, u));
}

Alcove alcove_cross(const RootDatum& rd, const Alcove& a, int s) {
  return alcove_act_right(rd, a, affine_generator(rd, s));
}

long alcove_d(const Alcove& a) {
  long d = 0;
  for (int k : a.kco) d += k;
  return d;
}

long alcove_radius(const Alcove& a) {
  long r = 0;
  for (int k : a.kco) r += k < 0 ? -k : k;
  return r;
}

bool alcove_descent(const RootDatum& rd, const Alcove& a, int s) {
  Alcove as = alcove_cross(rd, a, s);
  int changed = -1;
  for (int k = 0; k < rd.npos(); ++k)
    if (a.kco[k] != as.kco[k]) {
      if (changed >= 0) throw std::logic_error("crossing changed two coordinates");
      changed = k;
    }
  if (changed < 0) throw std::logic_error("crossing changed no coordinate");
  return a.kco[changed] > as.kco[changed];
}

PeriodicElement PeriodicElement::basis(const Alcove& a) {
  PeriodicElement m;
  m.terms_.emplace(a, LaurentScalar(1));
  return m;
}

LaurentScalar PeriodicElement::coeff(const Alcove& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? LaurentScalar() : it->second;
}

void PeriodicElement::add_term(const Alcove& a, const LaurentScalar& c) {
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(a, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PeriodicElement PeriodicElement::operator+(const PeriodicElement& o) const {
  PeriodicElement r = *this;
  for (const auto& [a, c] : o.terms_) r.add_term(a, c);
  return r;
}

PeriodicElement PeriodicElement::operator-(const PeriodicElement& o) const {
  PeriodicElement r = *this;
  for (const auto& [a, c] : o.terms_) r.add_term(a, -c);
  return r;
}

PeriodicElement PeriodicElement::scaled(const LaurentScalar& c) const {
  PeriodicElement r;
  if (c.is_zero()) return r;
  for (const auto& [a, x] : terms_) r.terms_.emplace(a, x * c);
  return r;
}

std::string PeriodicElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*A[";
    for (size_t k = 0; k < a.kco.size(); ++k) {
      if (k) os << ",";
      os << a.kco[k];
    }
    os << "]";
  }
  if (first) os << "0";
  return os.str();
}

PeriodicElement t_act(const RootDatum& rd, int s, const PeriodicElement& m) {
  PeriodicElement r;
  for (const auto& [a, c] : m.terms()) {
    Alcove as = alcove_cross(rd, a, s);
    r.add_term(as, c);
    if (alcove_descent(rd, a, s)) r.add_term(a, lowering_coeff() * c);
  }
  return r;
}

PeriodicElement t_act_word(const RootDatum& rd, const std::vector<int>& word,
                           const PeriodicElement& m) {
  PeriodicElement r = m;
  for (int s : word) r = t_act(rd, s, r);
  return r;
}

PeriodicElement gamma_translate(const RootDatum& rd, const IVec& gamma,
                                const PeriodicElement& m) {
  AffineWeylElement t = affine_translation(rd, gamma);
  PeriodicElement r;
  for (const auto& [a, c] : m.terms()) r.add_term(alcove_act_left(rd, t, a), c);
  return r;
}

PeriodicElement hecke_act(const RootDatum& rd, const HeckeElement& h,
                          const PeriodicElement& m) {
  PeriodicElement out;
  for (const auto& [x, c] : h.terms()) {
    std::vector<int> word = reduced_word(rd, x);
    std::reverse(word.begin(), word.end());
    out = out + t_act_word(rd, word, m).scaled(c);
  }
  return out;
}

bool periodic_window_equal(const PeriodicElement& a, const PeriodicElement& b,
                           long radius_cap, long v_floor) {
  auto check = [&](const PeriodicElement& x, const PeriodicElement& y) {
    for (const auto& [al, c] : x.terms()) {
      if (alcove_radius(al) > radius_cap) continue;
      LaurentScalar diff = c - y.coeff(al);
      for (const auto& [k, q] : diff.terms())
        if (k >= v_floor && q != 0) return false;
    }
    return true;
  };
  return check(a, b) && check(b, a);
}

namespace {

// base series: v^{-1} B_0 + sum_{p>=1} (-1)^{p+1} (v^{-p+1} - v^{-p-1}) B_p,
// where B_0 is the geometric reflection of the base alcove in the wall of
// alpha_i through the origin and B_{p} rises from B_{p-1} through the next
// wall of the alpha_i family
PeriodicElement theta_base(const RootDatum& rd, int i, long ray_len) {
  int si = simple_reflection(rd, i);
  int ridx = simple_root_index(rd, i);
  IVec avee(rd.rank, 0);
  avee[i] = 1;
  Alcove cur = alcove_of(rd, AffineWeylElement{IVec(rd.rank, 0), si});
  PeriodicElement series = PeriodicElement::basis(cur).scaled(LaurentScalar::vpow(-1));
  for (long p = 1; p <= ray_len; ++p) {
    int n = cur.kco[ridx] + 1;
    IVec shift(rd.rank);
    for (int k = 0; k < rd.rank; ++k) shift[k] = n * avee[k];
    cur = alcove_act_left(rd, AffineWeylElement{shift, si}, cur);
    LaurentScalar c = LaurentScalar::vpow(-p + 1) - LaurentScalar::vpow(-p - 1);
    if (p % 2 == 0) c = -c;
    series.add_term(cur, c);
  }
  return series;
}

PeriodicElement prune_radius(const PeriodicElement& m, long cap) {
  PeriodicElement r;
  for (const auto& [a, c] : m.terms())
    if (alcove_radius(a) <= cap) r.add_term(a, c);
  return r;
}

struct ThetaContext {
  const RootDatum& rd;
  int i;
  long prune;
  PeriodicElement base;
  std::map<IVec, PeriodicElement> memo;
};

PeriodicElement theta_single(ThetaContext& ctx, const Alcove& a) {
  auto it = ctx.memo.find(a.kco);
  if (it != ctx.memo.end()) return it->second;
  const RootDatum& rd = ctx.rd;
  std::vector<int> word = reduced_word(rd, a.g);
  PeriodicElement res;
  if (word.empty()) {
    res = prune_radius(ctx.base, ctx.prune);
  } else {
    PeriodicElement x = t_act_word(rd, word, PeriodicElement::basis(base_alcove(rd)));
    if (!(x.coeff(a) == LaurentScalar(1)))
      throw std::logic_error("transport expansion is not unitriangular");
    res = prune_radius(t_act_word(rd, word, ctx.base), ctx.prune);
    for (const auto& [b, c] : x.terms()) {
      if (b == a) continue;
      if (alcove_radius(b) >= alcove_radius(a))
        throw std::logic_error("transport correction is not lower");
      res = res - theta_single(ctx, b).scaled(c);
    }
    res = prune_radius(res, ctx.prune);
  }
  ctx.memo.emplace(a.kco, res);
  return res;
}

}  // namespace

PeriodicElement theta_alpha(const RootDatum& rd, int i, const PeriodicElement& m,
                            long radius_cap, long v_floor) {
  if (i < 0 || i >= rd.rank) throw std::invalid_argument("bad simple index");
  if (m.is_zero()) return m;
  long rmax = 0;
  for (const auto& [a, c] : m.terms()) {
    (void)c;
    rmax = std::max(rmax, alcove_radius(a));
  }
  long slack = (rmax + 1) * (rmax + 2) / 2 + (v_floor < 0 ? -v_floor : 0);
  long prune = radius_cap + rmax + 2;
  long ray = 2 * (prune + rmax + 2) + slack + 8;
  ThetaContext ctx{rd, i, prune, theta_base(rd, i, ray), {}};
  PeriodicElement out;
  for (const auto& [a, c] : m.terms()) out = out + theta_single(ctx, a).scaled(c);
  return prune_radius(out, radius_cap);
}

std::optional<PeriodicElement> theta_finite(const RootDatum& rd, int i,
                                            const PeriodicElement& m, long v_floor) {
  long rmd = 0;
  for (const auto& [b, c] : m.terms()) rmd = std::max(rmd, alcove_radius(b));
  long cap = rmd + 8;
  const long edrop = v_floor + 8;
  for (int attempt = 0; attempt < 2; ++attempt, cap += 6) {
    PeriodicElement th = theta_alpha(rd, i, m, cap, v_floor);
    PeriodicElement fin;
    long rsup = 0;
    bool floor_hit = false;
    for (const auto& [b, c] : th.terms()) {
      LaurentScalar kept;
      for (const auto& [e, q] : c.terms()) {
        if (e >= edrop)
          kept += LaurentScalar::monomial(q, e);
        else if (e >= v_floor)
          floor_hit = true;  // a certified term this low means the floor lies
      }
      if (!kept.is_zero()) {
        fin.add_term(b, kept);
        rsup = std::max(rsup, alcove_radius(b));
      }
    }
    if (floor_hit) return std::nullopt;
    if (rsup + 3 <= cap) return fin;
  }
  return std::nullopt;
}

IVec periodic_apex(const RootDatum& rd, const PeriodicElement& m) {
  long worst = 0;
  for (const auto& [a, c] : m.terms()) {
    (void)c;
    for (int k : a.kco) worst = std::min(worst, (long)k);
  }
  long K = (-worst + 1) / 2;
  IVec apex(rd.rank);
  for (int j = 0; j < rd.rank; ++j) apex[j] = static_cast<int>(-K * rd.two_rho_vee[j]);
  return apex;
}

bool periodic_in_cone(const RootDatum& rd, const PeriodicElement& m, const IVec& apex) {
  for (const auto& [a, c] : m.terms()) {
    (void)c;
    for (int k = 0; k < rd.npos(); ++k)
      if (a.kco[k] < pair_root_coroot(rd, rd.positive_roots[k], apex)) return false;
  }
  return true;
}

std::map<long, RationalLaurent> aggregate_levels(const RootDatum& rd,
                                                 const PeriodicElement& m,
                                                 bool bar_first) {
  if (rd.rank != 1)
    throw std::invalid_argument("level aggregation is a rank-one construction");
  LaurentScalar one(1);
  LaurentScalar den = one + LaurentScalar::qpow(-1);
  std::map<long, RationalLaurent> out;
  for (const auto& [a, c] : m.terms()) {
    long d = alcove_d(a);
    long level = d >= 0 ? d / 2 : -((-d + 1) / 2);
    bool odd = ((d % 2) + 2) % 2 == 1;
    LaurentScalar cc = bar_first ? c.bar() : c;
    LaurentScalar w = LaurentScalar::vpow(d);
    if (d % 2) w = -w;
    w = w * LaurentScalar::qpow(-level);
    LaurentScalar num = cc * w * (odd ? LaurentScalar::qpow(-1) : one);
    auto it = out.find(level);
    RationalLaurent contrib(num, den);
    if (it == out.end())
      out.emplace(level, contrib);
    else
      it->second = it->second + contrib;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace bax

#include "bax/hecke.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace bax {

namespace {

bool root_nonneg(const IVec& b) {
  for (int x : b)
    if (x < 0) return false;
  return true;
}

}  // namespace

AffineWeylElement affine_identity(const RootDatum& rd) {
  return {IVec(rd.rank, 0), 0};
}

AffineWeylElement affine_mul(const RootDatum& rd, const AffineWeylElement& a,
                             const AffineWeylElement& b) {
  IVec g = weyl_coroot(rd, a.w, b.gamma);
  for (int i = 0; i < rd.rank; ++i) g[i] += a.gamma[i];
  return {g, rd.mult[a.w][b.w]};
}

AffineWeylElement affine_inverse(const RootDatum& rd, const AffineWeylElement& a) {
  int wi = rd.weyl[a.w].inv;
  IVec g = weyl_coroot(rd, wi, a.gamma);
  for (int& x : g) x = -x;
  return {g, wi};
}

AffineWeylElement affine_translation(const RootDatum& rd, const IVec& gamma) {
  (void)rd;
  return {gamma, 0};
}

QVec affine_apply(const RootDatum& rd, const AffineWeylElement& a, const QVec& x) {
  QVec y = weyl_point(rd, a.w, x);
  for (int i = 0; i < rd.rank; ++i) y[i] += a.gamma[i];
  return y;
}

AffineWeylElement affine_generator(const RootDatum& rd, int s) {
  if (s < 0 || s > rd.rank) throw std::invalid_argument("bad affine generator index");
  if (s > 0) return {IVec(rd.rank, 0), simple_reflection(rd, s - 1)};
  int theta_idx = rd.npos() - 1;
  return {rd.theta_coroot, rd.refl_of_pos[theta_idx]};
}

long affine_length(const RootDatum& rd, const AffineWeylElement& a) {
  long len = 0;
  int wi = rd.weyl[a.w].inv;
  for (const IVec& beta : rd.positive_roots) {
    long pr = pair_root_coroot(rd, beta, a.gamma);
    if (root_nonneg(weyl_root(rd, wi, beta)))
      len += pr < 0 ? -pr : pr;
    else
      len += pr - 1 < 0 ? 1 - pr : pr - 1;
  }
  return len;
}

std::vector<int> reduced_word(const RootDatum& rd, const AffineWeylElement& a) {
  std::vector<int> collected;
  AffineWeylElement cur = a;
  AffineWeylElement id = affine_identity(rd);
  long len = affine_length(rd, cur);
  while (cur != id) {
    bool moved = false;
    for (int s = 0; s <= rd.rank; ++s) {
      AffineWeylElement nxt = affine_mul(rd, cur, affine_generator(rd, s));
      long nl = affine_length(rd, nxt);
      if (nl < len) {
        collected.push_back(s);
        cur = nxt;
        len = nl;
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("element without a descent");
  }
  std::reverse(collected.begin(), collected.end());
  return collected;
}

std::vector<std::vector<int>> all_reduced_words(const RootDatum& rd,
                                                const AffineWeylElement& a) {
  if (a == affine_identity(rd)) return {{}};
  std::vector<std::vector<int>> out;
  long len = affine_length(rd, a);
  for (int s = 0; s <= rd.rank; ++s) {
    AffineWeylElement nxt = affine_mul(rd, a, affine_generator(rd, s));
    if (affine_length(rd, nxt) < len)
      for (auto w : all_reduced_words(rd, nxt)) {
        w.push_back(s);
        out.push_back(std::move(w));
      }
  }
  return out;
}

int braid_order(const RootDatum& rd, int s, int t) {
  AffineWeylElement p = affine_mul(rd, affine_generator(rd, s), affine_generator(rd, t));
  AffineWeylElement cur = affine_identity(rd);
  for (int k = 1; k <= 12; ++k) {
    cur = affine_mul(rd, cur, p);
    if (cur == affine_identity(rd)) return k;
  }
  return 0;
}

std::vector<AffineWeylElement> affine_ball(const RootDatum& rd, long cap) {
  std::map<AffineWeylElement, long> seen;
  std::deque<AffineWeylElement> queue;
  AffineWeylElement id = affine_identity(rd);
  seen[id] = 0;
  queue.push_back(id);
  while (!queue.empty()) {
    AffineWeylElement cur = queue.front();
    queue.pop_front();
    long len = seen[cur];
    if (len == cap) continue;
    for (int s = 0; s <= rd.rank; ++s) {
      AffineWeylElement nxt = affine_mul(rd, cur, affine_generator(rd, s));
      if (seen.count(nxt)) continue;
      long nl = affine_length(rd, nxt);
      if (nl > cap) continue;
      seen[nxt] = nl;
      queue.push_back(nxt);
    }
  }
  std::vector<AffineWeylElement> out;
  for (const auto& [a, l] : seen) {
    (void)l;
    out.push_back(a);
  }
  std::sort(out.begin(), out.end(),
            [&](const AffineWeylElement& a, const AffineWeylElement& b) {
              long la = seen[a], lb = seen[b];
              if (la != lb) return la < lb;
              return a < b;
            });
  return out;
}

HeckeElement HeckeElement::unit(const RootDatum& rd) {
  return basis(affine_identity(rd));
}

HeckeElement HeckeElement::basis(const AffineWeylElement& a) {
  HeckeElement h;
  h.terms_.emplace(a, LaurentScalar(1));
  return h;
}

LaurentScalar HeckeElement::coeff(const AffineWeylElement& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? LaurentScalar() : it->second;
}

void HeckeElement::add_term(const AffineWeylElement& a, const LaurentScalar& c) {
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(a, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  HeckeElement r = *this;
  for (const auto& [a, c] : o.terms_) r.add_term(a, c);
  return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  HeckeElement r = *this;
  for (const auto& [a, c] : o.terms_) r.add_term(a, -c);
  return r;
}

HeckeElement HeckeElement::scaled(const LaurentScalar& c) const {
  HeckeElement r;
  if (c.is_zero()) return r;
  for (const auto& [a, x] : terms_) r.terms_.emplace(a, x * c);
  return r;
}

std::string HeckeElement::str(const RootDatum& rd) const {
  (void)rd;
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*T[";
    for (size_t i = 0; i < a.gamma.size(); ++i) {
      if (i) os << ",";
      os << a.gamma[i];
    }
    os << ";" << a.w << "]";
  }
  if (first) os << "0";
  return os.str();
}

HeckeElement t_mul_gen(const RootDatum& rd, int s, const HeckeElement& h) {
  AffineWeylElement gs = affine_generator(rd, s);
  LaurentScalar vdiff = LaurentScalar::vpow(1) - LaurentScalar::vpow(-1);
  HeckeElement r;
  for (const auto& [a, c] : h.terms()) {
    AffineWeylElement sa = affine_mul(rd, gs, a);
    r.add_term(sa, c);
    if (affine_length(rd, sa) < affine_length(rd, a)) r.add_term(a, vdiff * c);
  }
  return r;
}

HeckeElement t_mul_gen_inverse(const RootDatum& rd, int s, const HeckeElement& h) {
  LaurentScalar vdiff = LaurentScalar::vpow(1) - LaurentScalar::vpow(-1);
  return t_mul_gen(rd, s, h) - h.scaled(vdiff);
}

HeckeElement t_word(const RootDatum& rd, const std::vector<int>& word) {
  HeckeElement h = HeckeElement::unit(rd);
  for (auto it = word.rbegin(); it != word.rend(); ++it) h = t_mul_gen(rd, *it, h);
  return h;
}

HeckeElement t_basis_inverse(const RootDatum& rd, const AffineWeylElement& a) {
  std::vector<int> word = reduced_word(rd, a);
  HeckeElement h = HeckeElement::unit(rd);
  for (int s : word) h = t_mul_gen_inverse(rd, s, h);
  return h;
}

HeckeElement hecke_mul(const RootDatum& rd, const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out;
  for (const auto& [x, c] : a.terms()) {
    std::vector<int> word = reduced_word(rd, x);
    HeckeElement part = b;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      part = t_mul_gen(rd, *it, part);
    part = part.scaled(c);
    out = out + part;
  }
  return out;
}

HeckeElement bullet(const RootDatum& rd, const HeckeElement& h) {
  HeckeElement out;
  for (const auto& [a, c] : h.terms()) {
    HeckeElement inv = t_basis_inverse(rd, affine_inverse(rd, a));
    LaurentScalar sc = c;
    if (affine_length(rd, a) % 2) sc = -sc;
    out = out + inv.scaled(sc);
  }
  return out;
}

std::map<AffineWeylElement, mpq_class> hecke_specialize(const HeckeElement& h,
                                                        const mpq_class& value) {
  std::map<AffineWeylElement, mpq_class> out;
  for (const auto& [a, c] : h.terms()) {
    mpq_class x = c.eval(value);
    if (x != 0) out[a] = x;
  }
  return out;
}

}  // namespace bax

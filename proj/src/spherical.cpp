#include "bax/spherical.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace bax {

namespace {

// inverse of a single-term scalar c*v^k
LaurentScalar monomial_inverse(const LaurentScalar& u) {
  auto ts = u.terms();
  if (ts.size() != 1)
    throw std::logic_error("geometric coefficient is not a monomial");
  const auto& [k, c] = *ts.begin();
  return LaurentScalar::monomial(mpq_class(1) / c, -k);
}

TorusFunction factor_poly(int rank, const GeomFactor& f) {
  return TorusFunction::scalar(LaurentScalar(1), rank) -
         TorusFunction::term(f.u, f.tau);
}

void check_direction(const IVec& tau) {
  bool nonzero = false;
  for (int x : tau) {
    if (x < 0) throw std::logic_error("geometric direction leaves the positive octant");
    if (x > 0) nonzero = true;
  }
  if (!nonzero) throw std::logic_error("geometric direction is zero");
}

std::vector<IVec> octant_points(int rank, long cap) {
  std::vector<IVec> pts;
  IVec cur(rank, 0);
  std::function<void(int, long)> rec = [&](int i, long left) {
    if (i == rank) {
      pts.push_back(cur);
      return;
    }
    for (long x = 0; x <= left; ++x) {
      cur[i] = static_cast<int>(x);
      rec(i + 1, left - x);
    }
    cur[i] = 0;
  };
  rec(0, cap);
  std::sort(pts.begin(), pts.end(), [](const IVec& a, const IVec& b) {
    long ha = cone_height(a), hb = cone_height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return pts;
}

}  // namespace

std::map<IVec, LaurentScalar> kostant_table(const RootDatum& rd, long cap) {
  std::map<IVec, LaurentScalar> t;
  if (cap < 0) return t;
  std::vector<IVec> pts = octant_points(rd.rank, cap);
  t[IVec(rd.rank, 0)] = LaurentScalar(1);
  for (const IVec& tau : rd.positive_coroots) {
    for (const IVec& g : pts) {
      IVec prev(rd.rank);
      bool ok = true;
      for (int i = 0; i < rd.rank; ++i) {
        prev[i] = g[i] - tau[i];
        if (prev[i] < 0) ok = false;
      }
      if (!ok) continue;
      auto it = t.find(prev);
      if (it == t.end()) continue;
      t[g] += LaurentScalar::qpow(-1) * it->second;
    }
  }
  return t;
}

LaurentScalar kostant_q(const RootDatum& rd, const IVec& gamma) {
  for (int x : gamma)
    if (x < 0) return LaurentScalar();
  auto t = kostant_table(rd, rho_pair(gamma));
  auto it = t.find(gamma);
  return it == t.end() ? LaurentScalar() : it->second;
}

SphericalElement delta_elem(const RootDatum& rd, const IVec& gamma) {
  SphericalElement f;
  f.rank = rd.rank;
  f.num = TorusFunction::h(gamma);
  return f;
}

SphericalElement c_elem(const RootDatum& rd, const IVec& mu) {
  SphericalElement f;
  f.rank = rd.rank;
  f.num = TorusFunction::h(mu);
  for (const IVec& tau : rd.positive_coroots)
    f.den.push_back({LaurentScalar::qpow(-1), tau});
  return f;
}

SphericalElement c_zero(const RootDatum& rd) { return c_elem(rd, IVec(rd.rank, 0)); }

SphericalElement add(const RootDatum& rd, const SphericalElement& f,
                     const SphericalElement& g) {
  SphericalElement r;
  r.rank = f.rank;
  TorusFunction fn = f.num;
  for (const GeomFactor& d : g.den) fn = fn * factor_poly(f.rank, d);
  TorusFunction gn = g.num;
  for (const GeomFactor& d : f.den) gn = gn * factor_poly(f.rank, d);
  r.num = fn + gn;
  r.den = f.den;
  r.den.insert(r.den.end(), g.den.begin(), g.den.end());
  return reduce(rd, r);
}

SphericalElement scale(const SphericalElement& f, const LaurentScalar& c) {
  SphericalElement r = f;
  r.num = r.num.scaled(c);
  if (r.num.is_zero()) r.den.clear();
  return r;
}

SphericalElement apply_shift(const RootDatum& rd, const SphericalElement& f,
                             const IVec& gamma, bool normalized) {
  (void)rd;
  SphericalElement r = f;
  LaurentScalar c = normalized
                        ? LaurentScalar(1)
                        : LaurentScalar::qpow(-rho_pair(gamma));
  r.num = r.num * TorusFunction::term(c, gamma);
  return r;
}

SphericalElement reduce(const RootDatum& rd, const SphericalElement& f) {
  (void)rd;
  SphericalElement r = f;
  if (r.num.is_zero()) {
    r.den.clear();
    return r;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t k = 0; k < r.den.size(); ++k) {
      TorusFunction p = factor_poly(r.rank, r.den[k]);
      if (auto q = try_divide(r.num, p)) {
        r.num = *q;
        r.den.erase(r.den.begin() + k);
        progress = true;
        break;
      }
    }
  }
  return r;
}

SphericalElement phi_simple(const RootDatum& rd, const SphericalElement& f, int i) {
  if (i < 0 || i >= rd.rank) throw std::invalid_argument("bad simple index");
  int si = simple_reflection(rd, i);
  SphericalElement r;
  r.rank = f.rank;
  r.num = weyl_image(rd, si, f.num);
  for (const GeomFactor& d : f.den) {
    IVec t = weyl_coroot(rd, si, d.tau);
    bool nonneg = true, nonpos = true;
    for (int x : t) {
      if (x < 0) nonneg = false;
      if (x > 0) nonpos = false;
    }
    if (nonneg) {
      r.den.push_back({d.u, t});
    } else if (nonpos) {
      // (1 - u H[-sigma])^{-1} = (-u^{-1} H[sigma]) (1 - u^{-1} H[sigma])^{-1}
      IVec sigma(t.size());
      for (size_t j = 0; j < t.size(); ++j) sigma[j] = -t[j];
      LaurentScalar uinv = monomial_inverse(d.u);
      r.num = r.num * TorusFunction::term(-uinv, sigma);
      r.den.push_back({uinv, sigma});
    } else {
      throw std::logic_error("reflected direction has mixed signs");
    }
  }
  // image of the unit: multiply by (1 - q^{-1} H[-alpha_i_vee]) over
  // (1 - q^{-1} H[alpha_i_vee])
  IVec av(rd.rank, 0), nav(rd.rank, 0);
  av[i] = 1;
  nav[i] = -1;
  r.num = r.num * (TorusFunction::scalar(LaurentScalar(1), rd.rank) -
                   TorusFunction::term(LaurentScalar::qpow(-1), nav));
  r.den.push_back({LaurentScalar::qpow(-1), av});
  return reduce(rd, r);
}

SphericalElement phi_word(const RootDatum& rd, const SphericalElement& f,
                          const std::vector<int>& word) {
  SphericalElement r = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = phi_simple(rd, r, *it);
  return r;
}

ConeSeries expand(const RootDatum& rd, const SphericalElement& f, long depth) {
  (void)rd;
  if (f.num.is_zero()) return ConeSeries(f.rank, ConeSeries::EXACT);
  ConeSeries cur = ConeSeries::finite(f.rank, f.num);
  long m = cur.min_height();
  for (const GeomFactor& d : f.den) {
    check_direction(d.tau);
    cur = cur * ConeSeries::geometric_inverse(f.rank, d.u, d.tau, depth - m);
  }
  return cur.truncated(depth);
}

bool equal_exact(const SphericalElement& f, const SphericalElement& g) {
  TorusFunction fn = f.num;
  for (const GeomFactor& d : g.den) fn = fn * factor_poly(f.rank, d);
  TorusFunction gn = g.num;
  for (const GeomFactor& d : f.den) gn = gn * factor_poly(f.rank, d);
  return fn == gn;
}

IVec support_apex(const SphericalElement& f) {
  if (f.num.is_zero()) return IVec(f.rank, 0);
  IVec apex;
  bool first = true;
  for (const auto& [g, c] : f.num.terms()) {
    IVec k = g;
    k.resize(f.rank, 0);
    if (first) {
      apex = k;
      first = false;
    } else {
      for (int i = 0; i < f.rank; ++i) apex[i] = std::min(apex[i], k[i]);
    }
  }
  return apex;
}

SphericalElement lp_apply(const RootDatum& rd, const SphericalElement& f) {
  SphericalElement r = f;
  for (const IVec& tau : rd.positive_coroots)
    r.num = r.num * (TorusFunction::scalar(LaurentScalar(1), rd.rank) -
                     TorusFunction::term(LaurentScalar::qpow(-1), tau));
  return reduce(rd, r);
}

std::map<IVec, LaurentScalar> delta_in_c(const RootDatum& rd, const IVec& mu) {
  std::map<IVec, LaurentScalar> out;
  int n = rd.npos();
  for (int mask = 0; mask < (1 << n); ++mask) {
    IVec idx = mu;
    int bits = 0;
    for (int k = 0; k < n; ++k)
      if (mask & (1 << k)) {
        ++bits;
        for (int i = 0; i < rd.rank; ++i) idx[i] += rd.positive_coroots[k][i];
      }
    LaurentScalar c = LaurentScalar::qpow(-bits);
    if (bits % 2) c = -c;
    auto it = out.find(idx);
    if (it == out.end())
      out.emplace(idx, c);
    else {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

ConeSeries c_in_delta(const RootDatum& rd, const IVec& mu, long depth) {
  ConeSeries r(rd.rank, depth);
  r.add_apex(mu);
  long cap = depth - rho_pair(mu);
  auto t = kostant_table(rd, cap);
  for (const auto& [g, c] : t) {
    IVec idx = mu;
    for (int i = 0; i < rd.rank; ++i) idx[i] += g[i];
    r.add_entry(idx, c);
  }
  return r;
}

LaurentScalar vol_x0(const RootDatum& rd) {
  LaurentScalar one(1);
  LaurentScalar f = one - LaurentScalar::qpow(-2);
  LaurentScalar r(1);
  for (int i = 0; i < rd.rank; ++i) r = r * f;
  return r;
}

ConeSeries pairing(const RootDatum& rd, const ConeSeries& f, const TorusFunction& g) {
  if (g.is_zero()) return ConeSeries(rd.rank, ConeSeries::EXACT);
  long gmax = 0;
  bool first = true;
  for (const auto& [mu, c] : g.terms()) {
    IVec k = mu;
    k.resize(rd.rank, 0);
    long h = cone_height(k);
    gmax = first ? h : std::max(gmax, h);
    first = false;
  }
  long d = f.is_exact() ? ConeSeries::EXACT : f.depth() - gmax;
  ConeSeries r(rd.rank, d);
  LaurentScalar vol = vol_x0(rd);
  for (const IVec& a : f.apexes())
    for (const auto& [mu, c] : g.terms()) {
      (void)c;
      IVec k = mu;
      k.resize(rd.rank, 0);
      IVec nu(rd.rank);
      for (int i = 0; i < rd.rank; ++i) nu[i] = a[i] - k[i];
      r.add_apex(nu);
    }
  for (const auto& [ga, ca] : f.entries())
    for (const auto& [mu, cg] : g.terms()) {
      IVec k = mu;
      k.resize(rd.rank, 0);
      IVec nu(rd.rank);
      for (int i = 0; i < rd.rank; ++i) nu[i] = ga[i] - k[i];
      r.add_entry(nu, ca * cg * vol);
    }
  return r;
}

mpq_class local_l_factor(const RootDatum& rd, const std::vector<mpq_class>& chi_simple,
                         const mpq_class& q) {
  if ((int)chi_simple.size() != rd.rank)
    throw std::invalid_argument("character needs one value per simple coroot");
  auto qpow = [&](long e) {
    mpq_class r(1);
    for (long k = 0; k < e; ++k) r *= q;
    return r;
  };
  mpq_class out(1);
  for (const IVec& tau : rd.positive_coroots) {
    mpq_class chi(1);
    for (int i = 0; i < rd.rank; ++i)
      for (int k = 0; k < tau[i]; ++k) chi *= chi_simple[i];
    mpq_class den = 1 - qpow(rho_pair(tau) - 1) * chi;
    if (den == 0) throw std::domain_error("local factor has a pole");
    out /= den;
  }
  return out;
}

std::string spherical_str(const SphericalElement& f) {
  std::ostringstream os;
  os << "(" << f.num.str() << ")";
  for (const GeomFactor& d : f.den) {
    os << " * (1 - (" << d.u.str() << ")*H[";
    for (size_t i = 0; i < d.tau.size(); ++i) {
      if (i) os << ",";
      os << d.tau[i];
    }
    os << "])^-1";
  }
  return os.str();
}

}  // namespace bax

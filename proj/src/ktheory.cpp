#include "bax/ktheory.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "bax/linalg.hpp"

namespace bax {

IVec doubled(const IVec& gamma) {
  IVec r = gamma;
  for (int& x : r) x *= 2;
  return r;
}

IVec ivec_scale(const IVec& gamma, int k) {
  IVec r = gamma;
  for (int& x : r) x *= k;
  return r;
}

static TorusFunction tf_one(int rank) {
  return TorusFunction::scalar(LaurentScalar(1), rank);
}

static std::string weyl_label(const RootDatum& rd, int w) {
  const auto& word = rd.weyl[w].word;
  if (word.empty()) return "e";
  std::string s;
  for (size_t j = 0; j < word.size(); ++j) {
    if (j) s += ".";
    s += "s" + std::to_string(word[j] + 1);
  }
  return s;
}

static std::string kco_label(const Alcove& a) {
  std::string s = "[";
  for (size_t j = 0; j < a.kco.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(a.kco[j]);
  }
  return s + "]";
}

TorusFunction euler_class(const RootDatum& rd, int w) {
  TorusFunction e = TorusFunction::h(doubled(weyl_coroot(rd, w, rd.two_rho_vee)));
  for (const IVec& tau : rd.positive_coroots)
    e = e * (tf_one(rd.rank) - TorusFunction::h(doubled(weyl_coroot(rd, w, tau))));
  return e;
}

KClass kzero(const RootDatum& rd) { return KClass(rd.weyl.size()); }

KClass unit_class(const RootDatum& rd) {
  return KClass(rd.weyl.size(), RationalTorusFunction(tf_one(rd.rank)));
}

KClass line_class(const RootDatum& rd, const IVec& lambda_doubled) {
  KClass f = kzero(rd);
  for (size_t w = 0; w < f.size(); ++w)
    f[w] = RationalTorusFunction(
        TorusFunction::h(weyl_coroot(rd, static_cast<int>(w), lambda_doubled)));
  return f;
}

KClass kappa(const RootDatum& rd, int w) {
  KClass f = kzero(rd);
  f[w] = RationalTorusFunction(euler_class(rd, w));
  return f;
}

KClass k_add(const KClass& a, const KClass& b) {
  if (a.size() != b.size()) throw std::invalid_argument("component count mismatch");
  KClass r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

KClass k_sub(const KClass& a, const KClass& b) {
  if (a.size() != b.size()) throw std::invalid_argument("component count mismatch");
  KClass r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

KClass k_scale(const RootDatum& rd, const KClass& a, const LaurentScalar& c) {
  RationalTorusFunction m(TorusFunction::scalar(c, rd.rank));
  KClass r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * m;
  return r;
}

static KClass k_scale_rat(const RootDatum& rd, const KClass& a, const RationalLaurent& c) {
  RationalTorusFunction m(TorusFunction::scalar(c.num(), rd.rank),
                          TorusFunction::scalar(c.den(), rd.rank));
  KClass r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * m;
  return r;
}

bool k_equal(const KClass& a, const KClass& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

std::string kclass_str(const RootDatum& rd, const KClass& f) {
  std::ostringstream os;
  for (size_t w = 0; w < f.size(); ++w) {
    RationalTorusFunction g = f[w];
    g.normalize_display();
    os << weyl_label(rd, static_cast<int>(w)) << ": " << g.str() << "\n";
  }
  return os.str();
}

std::optional<TorusFunction> rtf_polynomial(const RationalTorusFunction& f) {
  if (f.num().is_zero()) return TorusFunction();
  auto q = try_divide(f.num(), f.den());
  if (!q) return std::nullopt;
  if (!(*q * f.den() == f.num())) return std::nullopt;
  return q;
}

RationalTorusFunction push_to_point(const RootDatum& rd, const KClass& f) {
  RationalTorusFunction s;
  for (size_t w = 0; w < f.size(); ++w) {
    TorusFunction den = tf_one(rd.rank);
    for (const IVec& tau : rd.positive_coroots)
      den = den * (tf_one(rd.rank) -
                   TorusFunction::h(doubled(weyl_coroot(rd, static_cast<int>(w), tau))));
    s = s + f[w] / RationalTorusFunction(den);
  }
  return s;
}

TorusFunction push_to_point_poly(const RootDatum& rd, const KClass& f) {
  auto p = rtf_polynomial(push_to_point(rd, f));
  if (!p) throw std::logic_error("push-to-point has an uncancelled denominator");
  return *p;
}

bool gkm_check(const RootDatum& rd, const KClass& f, std::string* why) {
  std::vector<TorusFunction> poly(f.size());
  for (size_t w = 0; w < f.size(); ++w) {
    auto p = rtf_polynomial(f[w]);
    if (!p) {
      if (why)
        *why = "restriction at " + weyl_label(rd, static_cast<int>(w)) + " is not polynomial";
      return false;
    }
    poly[w] = *p;
  }
  for (size_t w = 0; w < f.size(); ++w) {
    for (int k = 0; k < rd.npos(); ++k) {
      int w2 = rd.mult[w][rd.refl_of_pos[k]];
      if (static_cast<int>(w) > w2) continue;
      TorusFunction diff = poly[w] - poly[w2];
      if (diff.is_zero()) continue;
      TorusFunction edge =
          tf_one(rd.rank) -
          TorusFunction::h(doubled(weyl_coroot(rd, static_cast<int>(w), rd.positive_coroots[k])));
      if (!try_divide(diff, edge)) {
        if (why)
          *why = "difference across the edge (" + weyl_label(rd, static_cast<int>(w)) + ", " +
                 weyl_label(rd, w2) + ") is not divisible by the edge weight";
        return false;
      }
    }
  }
  return true;
}

KClass gamma_act(const RootDatum&, const IVec& gamma, const KClass& f) {
  RationalTorusFunction m(TorusFunction::h(doubled(gamma)));
  KClass r(f.size());
  for (size_t w = 0; w < f.size(); ++w) r[w] = f[w] * m;
  return r;
}

KClass geometric_weyl_act(const RootDatum& rd, int w, const KClass& f) {
  KClass r(f.size());
  for (size_t x = 0; x < f.size(); ++x)
    r[rd.mult[w][x]] = RationalTorusFunction(weyl_image(rd, w, f[x].num()),
                                             weyl_image(rd, w, f[x].den()));
  return r;
}

KClass t1_push_pull_raw(const RootDatum& rd, int i, const KClass& f) {
  int s = simple_reflection(rd, i);
  IVec ei(rd.rank, 0);
  ei[i] = 1;
  RationalTorusFunction one(tf_one(rd.rank));
  KClass r(f.size());
  for (size_t w = 0; w < f.size(); ++w) {
    int ws = rd.mult[w][s];
    IVec chi = doubled(weyl_coroot(rd, static_cast<int>(w), ei));
    RationalTorusFunction u(TorusFunction::h(chi));
    RationalTorusFunction uinv(TorusFunction::h(ivec_scale(chi, -1)));
    RationalTorusFunction dm = one - uinv, dp = one - u;
    RationalTorusFunction pp = f[w] / dm + f[ws] / dp;
    // the fiberwise cotangent twist carries e^{-chi} at this point and
    // e^{+chi} at the opposite one
    RationalTorusFunction ppt = (f[w] * uinv) / dm + (f[ws] * u) / dp;
    r[w] = pp - ppt - f[w];
  }
  return r;
}

KClass t1_alpha(const RootDatum& rd, int i, const KClass& f) {
  int s = simple_reflection(rd, i);
  IVec ei(rd.rank, 0);
  ei[i] = 1;
  KClass r(f.size());
  for (size_t w = 0; w < f.size(); ++w) {
    int ws = rd.mult[w][s];
    TorusFunction c =
        TorusFunction::h(ivec_scale(doubled(weyl_coroot(rd, static_cast<int>(w), ei)), 3));
    r[w] = -(f[ws] * RationalTorusFunction(c));
  }
  return r;
}

KClass dl_action(const RootDatum& rd, int i, const KClass& f) {
  int s = simple_reflection(rd, i);
  IVec ei(rd.rank, 0);
  ei[i] = 1;
  RationalTorusFunction one(tf_one(rd.rank));
  RationalTorusFunction vv(TorusFunction::scalar(LaurentScalar::vpow(1), rd.rank));
  RationalTorusFunction vvi(TorusFunction::scalar(LaurentScalar::vpow(-1), rd.rank));
  KClass r(f.size());
  for (size_t w = 0; w < f.size(); ++w) {
    int ws = rd.mult[w][s];
    IVec uvec = doubled(weyl_coroot(rd, static_cast<int>(w), ei));
    RationalTorusFunction u(TorusFunction::h(uvec));
    RationalTorusFunction uinv(TorusFunction::h(ivec_scale(uvec, -1)));
    RationalTorusFunction u3(TorusFunction::h(ivec_scale(uvec, 3)));
    RationalTorusFunction a = (vv - vvi) / (one - uinv);
    RationalTorusFunction b = (u3 * (vv * u - vvi)) / (one - u);
    r[w] = a * f[w] + b * f[ws];
  }
  return r;
}

KClass dl_word(const RootDatum& rd, const std::vector<int>& word, const KClass& f) {
  KClass r = f;
  for (int i : word) r = dl_action(rd, i, r);
  return r;
}

TorusFunction dv_uniform(const RootDatum& rd) {
  TorusFunction p = tf_one(rd.rank);
  for (const IVec& tau : rd.positive_coroots)
    p = p * (TorusFunction::scalar(LaurentScalar::qpow(1), rd.rank) -
             TorusFunction::h(doubled(tau)));
  return p;
}

KClass dv_mult(const RootDatum& rd, const KClass& f) {
  RationalTorusFunction m(dv_uniform(rd));
  KClass r(f.size());
  for (size_t w = 0; w < f.size(); ++w) r[w] = f[w] * m;
  return r;
}

KClass zeta_alcove(ZetaContext& zc, const Alcove& a) {
  auto it = zc.memo.find(a.kco);
  if (it != zc.memo.end()) return it->second;
  const RootDatum& rd = zc.rd;
  const IVec& gamma = a.g.gamma;
  int w = a.g.w;
  const std::vector<int>& word = rd.weyl[w].word;

  // module-side transport: the finite wall crossings reach the w-chamber
  // alcove with leading coefficient 1, then the lattice part translates
  std::vector<int> aff;
  aff.reserve(word.size());
  for (int j : word) aff.push_back(j + 1);
  PeriodicElement x = t_act_word(rd, aff, PeriodicElement::basis(base_alcove(rd)));
  x = gamma_translate(rd, gamma, x);
  if (x.coeff(a) != LaurentScalar(1))
    throw std::logic_error("transport leading coefficient is not 1");

  // the same letters on the fixed-point side
  KClass img = kappa(rd, 0);
  for (int j : word) img = dl_action(rd, j, img);
  img = gamma_act(rd, gamma, img);

  KClass res = img;
  for (const auto& [b, c] : x.terms()) {
    if (b == a) continue;
    if (b.g.gamma != gamma || rd.weyl[b.g.w].length() >= rd.weyl[w].length())
      throw std::logic_error("transport produced a non-subordinate correction term");
    res = k_sub(res, k_scale(rd, zeta_alcove(zc, b), c));
  }
  zc.memo.emplace(a.kco, res);
  return res;
}

KClass zeta(ZetaContext& zc, const PeriodicElement& m) {
  KClass r = kzero(zc.rd);
  for (const auto& [a, c] : m.terms()) r = k_add(r, k_scale(zc.rd, zeta_alcove(zc, a), c));
  return r;
}

static size_t field_rank(std::vector<std::vector<RationalLaurent>> m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (size_t k = 0; k < rows; ++k) {
      if (k == r || m[k][c].is_zero()) continue;
      RationalLaurent f = m[k][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[k][j] = m[k][j] - f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::optional<ZetaSolve> zeta_window_solve(ZetaContext& zc, const KClass& target,
                                           const std::vector<Alcove>& window) {
  const RootDatum& rd = zc.rd;
  size_t n = window.size();
  std::vector<KClass> basis(n);
  for (size_t b = 0; b < n; ++b) basis[b] = zeta_alcove(zc, window[b]);

  // one equation per fixed point and monomial, after clearing every
  // denominator in that component
  std::map<std::pair<int, IVec>, size_t> rowidx;
  std::vector<std::vector<RationalLaurent>> mat;
  std::vector<RationalLaurent> rhs;
  auto row_of = [&](int w, const IVec& g0) -> size_t {
    IVec g = g0;
    g.resize(rd.rank, 0);  // scalar terms may carry short exponent keys
    auto key = std::make_pair(w, g);
    auto f = rowidx.find(key);
    if (f != rowidx.end()) return f->second;
    size_t id = mat.size();
    rowidx.emplace(key, id);
    mat.emplace_back(n, RationalLaurent());
    rhs.emplace_back();
    return id;
  };

  for (size_t w = 0; w < target.size(); ++w) {
    TorusFunction dall = target[w].den();
    for (size_t b = 0; b < n; ++b) dall = dall * basis[b][w].den();
    // numerators against the common denominator
    std::vector<TorusFunction> nb(n);
    for (size_t b = 0; b < n; ++b) {
      TorusFunction t = basis[b][w].num() * target[w].den();
      for (size_t b2 = 0; b2 < n; ++b2)
        if (b2 != b) t = t * basis[b2][w].den();
      nb[b] = t;
    }
    TorusFunction nz = target[w].num();
    for (size_t b = 0; b < n; ++b) nz = nz * basis[b][w].den();

    for (size_t b = 0; b < n; ++b)
      for (const auto& [g, c] : nb[b].terms()) mat[row_of(static_cast<int>(w), g)][b] = c;
    for (const auto& [g, c] : nz.terms()) rhs[row_of(static_cast<int>(w), g)] = c;
  }

  auto sol = field_solve<RationalLaurent>(mat, rhs);
  if (!sol) return std::nullopt;

  // exact reconstruction against the target
  KClass rec = kzero(rd);
  for (size_t b = 0; b < n; ++b) rec = k_add(rec, k_scale_rat(rd, basis[b], (*sol)[b]));
  if (!k_equal(rec, target)) return std::nullopt;

  ZetaSolve out;
  for (size_t b = 0; b < n; ++b) out.coeffs[window[b].kco] = (*sol)[b];
  out.unique = (field_rank(mat) == n);
  return out;
}

PhiZetaReport check_phizeta(const RootDatum& rd, int i, const std::vector<Alcove>& tests,
                            long depth) {
  PhiZetaReport rep;
  std::ostringstream log;
  ZetaContext zc(rd);
  int s = simple_reflection(rd, i);
  const long vfloor = -40;
  const long edrop = vfloor + 8;
  bool all = true;
  long mincap = std::numeric_limits<long>::max();

  for (const Alcove& A : tests) {
    // multiply the basis element by the reflected coroot product; the ray
    // operator carries it to the plain coroot product, whose (q - t_alpha)
    // factor annihilates the infinite geometric tails
    PeriodicElement md = PeriodicElement::basis(A);
    for (const IVec& tau : rd.positive_coroots)
      md = md.scaled(LaurentScalar::qpow(1)) -
           gamma_translate(rd, weyl_coroot(rd, s, tau), md);
    long rmd = 0;
    for (const auto& [b, c] : md.terms()) rmd = std::max(rmd, alcove_radius(b));

    long cap = rmd + depth + 4;
    bool ok = false;
    std::string note;
    for (int attempt = 0; attempt < 2 && !ok; ++attempt, cap += 6) {
      PeriodicElement th = theta_alpha(rd, i, md, cap, vfloor);
      // strip uncertified low-order dust; certified terms near the floor are
      // real and would mean the floor is too shallow
      PeriodicElement fin;
      bool floor_hit = false;
      long rsup = 0;
      for (const auto& [b, c] : th.terms()) {
        LaurentScalar kept;
        for (const auto& [e, q] : c.terms()) {
          if (e >= edrop)
            kept += LaurentScalar::monomial(q, e);
          else if (e >= vfloor)
            floor_hit = true;
        }
        if (!kept.is_zero()) {
          fin.add_term(b, kept);
          rsup = std::max(rsup, alcove_radius(b));
        }
      }
      if (floor_hit) {
        note = "coefficient reached the certification floor";
        break;
      }
      if (rsup + 3 > cap) {
        note = "support reached the truncation radius";
        continue;  // retry once with a larger cap
      }

      KClass za = zeta_alcove(zc, A);
      KClass rhs = dv_mult(rd, geometric_weyl_act(rd, s, za));
      KClass lhs = zeta(zc, fin);
      ok = k_equal(lhs, rhs);
      if (!ok) {
        note = "the two sides differ";
        break;
      }

      if (rd.rank == 1) {
        // independent route: expand the reflected class in the zeta images
        // over a window and compare coefficient by coefficient
        std::vector<Alcove> window;
        for (const auto& g : affine_ball(rd, rsup + 1)) window.push_back(alcove_of(rd, g));
        auto sol = zeta_window_solve(zc, rhs, window);
        if (!sol || !sol->unique) {
          ok = false;
          note = "window expansion failed or is not unique";
          break;
        }
        // coefficient match, including zero coefficients off the support
        for (size_t b = 0; b < window.size(); ++b) {
          RationalLaurent got = sol->coeffs[window[b].kco];
          RationalLaurent want(fin.coeff(window[b]));
          if (!(got == want)) {
            ok = false;
            note = "window expansion disagrees with the ray operator";
            break;
          }
        }
        if (!ok) break;
      }

      mincap = std::min(mincap, cap);
      log << "alcove " << kco_label(A) << ": ok (support radius " << rsup << ", truncation "
          << cap << ")\n";
    }
    if (!ok) {
      all = false;
      log << "alcove " << kco_label(A) << ": FAIL (" << note << ")\n";
    }
  }

  rep.pass = all;
  rep.certified_radius = tests.empty() || mincap == std::numeric_limits<long>::max() ? 0 : mincap;
  rep.detail = log.str();
  return rep;
}

}  // namespace bax

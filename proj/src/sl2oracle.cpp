#include "bax/sl2oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>

namespace bax {

QuadExt quad_add(const QuadExt& x, const QuadExt& y) {
  return QuadExt(x.a + y.a, x.b + y.b);
}

QuadExt quad_sub(const QuadExt& x, const QuadExt& y) {
  return QuadExt(x.a - y.a, x.b - y.b);
}

QuadExt quad_mul(const QuadExt& x, const QuadExt& y, long q) {
  return QuadExt(x.a * y.a + x.b * y.b * q, x.a * y.b + x.b * y.a);
}

QuadExt quad_specialize(const LaurentScalar& c, long q) {
  QuadExt out;
  for (const auto& [k, co] : c.terms()) {
    // v^k at v = sqrt(q): exponent k splits into q^{k/2} or q^{(k-1)/2} sqrt(q)
    int half = (k >= 0) ? k / 2 : -((-k + 1) / 2);
    bool odd = ((k % 2) + 2) % 2 == 1;
    mpq_class pw;
    if (half >= 0) {
      mpz_class z;
      mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(q),
                    static_cast<unsigned long>(half));
      pw = mpq_class(z);
    } else {
      mpz_class z;
      mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(q),
                    static_cast<unsigned long>(-half));
      pw = mpq_class(1) / mpq_class(z);
    }
    if (odd)
      out.b += co * pw;
    else
      out.a += co * pw;
  }
  return out;
}

FiniteModel::FiniteModel(long p, int M) : p_(p), M_(M) {
  if (p < 2 || M < 1) throw std::invalid_argument("finite model needs p >= 2, M >= 1");
  pow_.resize(4 * M + 1);
  pow_[0] = 1;
  for (int k = 1; k <= 4 * M; ++k) pow_[k] = pow_[k - 1] * p;
}

long FiniteModel::ppow(int k) const {
  if (k < 0 || k > 4 * M_) throw std::out_of_range("prime power out of range");
  return pow_[k];
}

mpq_class FiniteModel::qfrac(int k) const {
  if (k >= 0) return mpq_class(ppow(k));
  return mpq_class(1) / mpq_class(ppow(-k));
}

int FiniteModel::val_of(long n) const {
  if (n == 0) return M_;
  int c = 0;
  while (n % p_ == 0) {
    n /= p_;
    ++c;
  }
  return c - M_;
}

FiniteFunction ff_zero(const FiniteModel& fm, int s, int t) {
  if (s > t || s < -fm.level() || t > fm.level())
    throw std::invalid_argument("block structure outside the model window");
  FiniteFunction f;
  f.s = s;
  f.t = t;
  long side = fm.ppow(t - s);
  f.vals.assign(side, std::vector<mpq_class>(side, mpq_class(0)));
  return f;
}

mpq_class ff_value(const FiniteModel& fm, const FiniteFunction& f, long n1, long n2) {
  long unit = fm.ppow(fm.level() + f.s);
  if (n1 % unit != 0 || n2 % unit != 0) return 0;
  long side = fm.ppow(f.t - f.s);
  long a = (n1 / unit) % side;
  long b = (n2 / unit) % side;
  return f.vals[a][b];
}

FiniteFunction ff_refine(const FiniteModel& fm, const FiniteFunction& f, int s, int t) {
  if (s > f.s || t < f.t) throw std::invalid_argument("refinement must extend the grid");
  if (s == f.s && t == f.t) return f;
  FiniteFunction g = ff_zero(fm, s, t);
  long side = fm.ppow(t - s);
  long unit = fm.ppow(fm.level() + s);
  for (long a = 0; a < side; ++a)
    for (long b = 0; b < side; ++b) g.vals[a][b] = ff_value(fm, f, unit * a, unit * b);
  return g;
}

FiniteFunction ff_add(const FiniteModel& fm, const FiniteFunction& f,
                      const FiniteFunction& g) {
  int s = std::min(f.s, g.s), t = std::max(f.t, g.t);
  FiniteFunction a = ff_refine(fm, f, s, t);
  FiniteFunction b = ff_refine(fm, g, s, t);
  long side = fm.ppow(t - s);
  for (long i = 0; i < side; ++i)
    for (long j = 0; j < side; ++j) a.vals[i][j] += b.vals[i][j];
  return a;
}

FiniteFunction ff_sub(const FiniteModel& fm, const FiniteFunction& f,
                      const FiniteFunction& g) {
  return ff_add(fm, f, ff_scale(g, mpq_class(-1)));
}

FiniteFunction ff_scale(const FiniteFunction& f, const mpq_class& c) {
  FiniteFunction g = f;
  for (auto& row : g.vals)
    for (auto& x : row) x *= c;
  return g;
}

bool ff_equal(const FiniteModel& fm, const FiniteFunction& f, const FiniteFunction& g) {
  return !ff_locate_diff(fm, f, g).has_value();
}

std::optional<std::pair<long, long>> ff_locate_diff(const FiniteModel& fm,
                                                    const FiniteFunction& f,
                                                    const FiniteFunction& g) {
  int s = std::min(f.s, g.s), t = std::max(f.t, g.t);
  FiniteFunction a = ff_refine(fm, f, s, t);
  FiniteFunction b = ff_refine(fm, g, s, t);
  long side = fm.ppow(t - s);
  long unit = fm.ppow(fm.level() + s);
  for (long i = 0; i < side; ++i)
    for (long j = 0; j < side; ++j)
      if (a.vals[i][j] != b.vals[i][j]) return std::make_pair(unit * i, unit * j);
  return std::nullopt;
}

FiniteFunction sample_delta(const FiniteModel& fm, int n) {
  if (std::abs(n) >= fm.level() - 1)
    throw std::invalid_argument("sample outside the faithful window");
  FiniteFunction f = ff_zero(fm, n, n + 1);
  mpq_class v = fm.qfrac(n);
  long side = fm.ppow(1);
  for (long a = 0; a < side; ++a)
    for (long b = 0; b < side; ++b)
      if (a != 0 || b != 0) f.vals[a][b] = v;
  return f;
}

FiniteFunction sample_c(const FiniteModel& fm, int n) {
  if (std::abs(n) >= fm.level() - 1)
    throw std::invalid_argument("sample outside the faithful window");
  FiniteFunction f = ff_zero(fm, n, n);
  f.vals[0][0] = fm.qfrac(n);
  return f;
}

FiniteFunction rect_indicator(const FiniteModel& fm, int a, int b) {
  int s = std::min(a, b), t = std::max(a, b);
  FiniteFunction f = ff_zero(fm, s, t);
  long side = fm.ppow(t - s);
  auto vp = [&](long r) {
    if (r == 0) return t - s;
    int c = 0;
    while (r % fm.p() == 0) {
      r /= fm.p();
      ++c;
    }
    return c;
  };
  for (long r1 = 0; r1 < side; ++r1)
    for (long r2 = 0; r2 < side; ++r2) {
      bool ok1 = s + vp(r1) >= a;
      bool ok2 = s + vp(r2) >= b;
      if (ok1 && ok2) f.vals[r1][r2] = 1;
    }
  return f;
}

mpq_class cyclotomic_to_rational(std::vector<mpq_class> acc, long p, int m) {
  if (m == 0) {
    if (acc.size() != 1) throw std::logic_error("bad accumulator size");
    return acc[0];
  }
  long pm = 1;
  for (int i = 0; i < m; ++i) pm *= p;
  if (static_cast<long>(acc.size()) != pm) throw std::logic_error("bad accumulator size");
  long pm1 = pm / p;
  long phi = (p - 1) * pm1;
  // zeta^{phi + r} = -sum_{j < p-1} zeta^{r + j*pm1}
  for (long e = phi; e < pm; ++e) {
    if (acc[e] == 0) continue;
    long r = e - phi;
    for (long j = 0; j + 1 < p; ++j) acc[r + j * pm1] -= acc[e];
    acc[e] = 0;
  }
  for (long e = 1; e < phi; ++e)
    if (acc[e] != 0)
      throw std::domain_error("character sum is irrational");
  return acc[0];
}

FiniteFunction fourier(const FiniteModel& fm, const FiniteFunction& f) {
  int M = fm.level();
  if (f.s < -((M + 1) / 2))
    throw std::domain_error("support margin too small for a faithful transform");
  int lev = f.t - f.s;
  long side = fm.ppow(lev);
  long unit_in = fm.ppow(M + f.s);
  long unit_out = fm.ppow(M - f.t);
  long T = fm.ring_size();
  long divisor = fm.ppow(2 * M - lev);
  FiniteFunction g = ff_zero(fm, -f.t, -f.s);
  for (long a2 = 0; a2 < side; ++a2) {
    for (long b2 = 0; b2 < side; ++b2) {
      long m1 = unit_out * a2, m2 = unit_out * b2;
      std::vector<mpq_class> acc(side, mpq_class(0));
      for (long a1 = 0; a1 < side; ++a1) {
        for (long b1 = 0; b1 < side; ++b1) {
          const mpq_class& c = f.vals[a1][b1];
          if (c == 0) continue;
          long n1 = unit_in * a1, n2 = unit_in * b1;
          long E = ((n1 % T) * (m2 % T) - (n2 % T) * (m1 % T)) % T;
          E = ((E % T) + T) % T;
          if (E % divisor != 0) throw std::logic_error("character exponent misaligned");
          acc[E / divisor] += c;
        }
      }
      mpq_class r = cyclotomic_to_rational(std::move(acc), fm.p(), lev);
      g.vals[a2][b2] = fm.qfrac(-2 * f.t) * r;
    }
  }
  return g;
}

mpq_class ff_inner(const FiniteModel& fm, const FiniteFunction& f,
                   const FiniteFunction& g) {
  int s = std::min(f.s, g.s), t = std::max(f.t, g.t);
  FiniteFunction a = ff_refine(fm, f, s, t);
  FiniteFunction b = ff_refine(fm, g, s, t);
  long side = fm.ppow(t - s);
  mpq_class sum = 0;
  for (long i = 0; i < side; ++i)
    for (long j = 0; j < side; ++j) sum += a.vals[i][j] * b.vals[i][j];
  return sum * fm.qfrac(-2 * t);
}

FiniteFunction k_average(const FiniteModel& fm, const FiniteFunction& f) {
  int s = f.s, t = f.t, lev = t - s;
  if (lev == 0) return f;
  long side = fm.ppow(lev);
  auto vp = [&](long r) {
    if (r == 0) return lev;
    int c = 0;
    while (r % fm.p() == 0) {
      r /= fm.p();
      ++c;
    }
    return c;
  };
  // block -> shell, then exact average over each shell
  std::vector<mpq_class> shellsum(lev, mpq_class(0));
  mpq_class blockmass = fm.qfrac(2 * (fm.level() - t));
  for (long a = 0; a < side; ++a)
    for (long b = 0; b < side; ++b) {
      if (a == 0 && b == 0) continue;
      int sh = std::min(vp(a), vp(b));
      shellsum[sh] += f.vals[a][b] * blockmass;
    }
  std::vector<mpq_class> avg(lev);
  for (int n = 0; n < lev; ++n) {
    mpq_class szn = fm.qfrac(2 * (fm.level() - (s + n))) -
                    fm.qfrac(2 * (fm.level() - (s + n) - 1));
    avg[n] = shellsum[n] / szn;
  }
  FiniteFunction g = ff_zero(fm, s, t);
  for (long a = 0; a < side; ++a)
    for (long b = 0; b < side; ++b) {
      if (a == 0 && b == 0)
        g.vals[a][b] = f.vals[a][b];
      else
        g.vals[a][b] = avg[std::min(vp(a), vp(b))];
    }
  return g;
}

namespace {

long unit_inverse(long u, long T) {
  mpz_class a(u), m(T), inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::logic_error("noninvertible scaling");
  return inv.get_si();
}

long unit_order(long u, long T) {
  long x = u % T, n = 1;
  while (x != 1) {
    x = (x * u) % T;
    ++n;
  }
  return n;
}

}  // namespace

std::pair<int, int> orbit_label(const FiniteModel& fm, long n1, long n2) {
  int v1 = fm.val_of(n1), v2 = fm.val_of(n2);
  if (v1 >= v2) return {2, v2};
  return {1, v1};
}

FiniteFunction orbit_indicator(const FiniteModel& fm, int type, int m) {
  if (type != 1 && type != 2) throw std::invalid_argument("orbit type is 1 or 2");
  if (m < -fm.level() || m + 1 > fm.level())
    throw std::invalid_argument("orbit level outside the model window");
  FiniteFunction f = ff_zero(fm, m, m + 1);
  long side = fm.ppow(1);
  for (long a = 0; a < side; ++a)
    for (long b = 0; b < side; ++b) {
      if (type == 2 && b != 0) f.vals[a][b] = 1;
      if (type == 1 && a != 0 && b == 0) f.vals[a][b] = 1;
    }
  return f;
}

OrbitData iwahori_orbits(const FiniteModel& fm) {
  long T = fm.ring_size();
  long p = fm.p();

  std::vector<std::array<long, 4>> mats;  // row-major 2x2, acting on columns
  auto push_with_inverse = [&](long a, long b, long c, long d) {
    mats.push_back({a, b, c, d});
    // determinant one: inverse is the adjugate
    mats.push_back({d, ((T - b) % T), ((T - c) % T), a});
  };
  push_with_inverse(1, 1, 0, 1);
  push_with_inverse(1, 0, p % T, 1);

  std::vector<long> units;
  if (p == 2) {
    units.push_back(T - 1);
    if (T > 4) units.push_back(5 % T);
  } else {
    // smallest generator of the cyclic unit group
    long phi = T - T / p;
    for (long g = 2; g < T; ++g) {
      if (g % p == 0) continue;
      if (unit_order(g, T) == phi) {
        units.push_back(g);
        break;
      }
    }
    if (units.empty()) throw std::logic_error("no unit generator found");
  }
  for (long u : units) push_with_inverse(u, 0, 0, unit_inverse(u, T));

  auto bfs = [&](const std::vector<std::array<long, 4>>& gens, OrbitData& od,
                 std::vector<int>& ids, int& count, bool record_reps) {
    ids.assign(T * T, -1);
    count = 0;
    std::vector<long> stack;
    for (long start = 0; start < T * T; ++start) {
      if (start == 0) continue;  // origin
      if (ids[start] != -1) continue;
      int id = count++;
      if (record_reps) od.reps.push_back(start);
      ids[start] = id;
      stack.assign(1, start);
      while (!stack.empty()) {
        long pt = stack.back();
        stack.pop_back();
        long n1 = pt / T, n2 = pt % T;
        for (const auto& m : gens) {
          long x1 = (m[0] * n1 + m[1] * n2) % T;
          long x2 = (m[2] * n1 + m[3] * n2) % T;
          long np = x1 * T + x2;
          if (ids[np] == -1) {
            ids[np] = id;
            stack.push_back(np);
          }
        }
      }
    }
  };

  OrbitData od;
  bfs(mats, od, od.orbit_of, od.count, true);

  // refine by the diagonal unit scalings and recompute
  std::vector<std::array<long, 4>> with_scal = mats;
  for (long u : units) {
    with_scal.push_back({u, 0, 0, u});
    long ui = unit_inverse(u, T);
    with_scal.push_back({ui, 0, 0, ui});
  }
  bfs(with_scal, od, od.with_torus_of, od.with_torus_count, false);
  return od;
}

}  // namespace bax

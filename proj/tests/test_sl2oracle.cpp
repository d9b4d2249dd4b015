#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <map>

#include "bax/cone.hpp"
#include "bax/periodic.hpp"
#include "bax/rootdata.hpp"
#include "bax/sl2oracle.hpp"
#include "bax/spherical.hpp"

using bax::Alcove;
using bax::build_root_datum;
using bax::CartanType;
using bax::FiniteFunction;
using bax::FiniteModel;
using bax::IVec;
using bax::LaurentScalar;
using bax::PeriodicElement;
using bax::RationalLaurent;
using bax::RootDatum;

namespace {

// the alcove (j, j+1) on the line, reached from the base by wall crossings
Alcove line_alcove(const RootDatum& rd, long j) {
  Alcove a = bax::base_alcove(rd);
  int up = 0, down = 1;  // lower wall of the base alcove has the finite type
  for (long k = 0; k < j; ++k) a = bax::alcove_cross(rd, a, (k % 2 == 0) ? up : down);
  for (long k = 0; k > j; --k) a = bax::alcove_cross(rd, a, (k % 2 == 0) ? down : up);
  return a;
}

// a function with values in Q(sqrt p): ra + rb*sqrt(p) pointwise
struct QuadFF {
  FiniteFunction ra, rb;
};

// (-sqrt(p))^d times the labeled orbit indicator, the finite-level shadow of
// the alcove basis vector; odd distances land in the irrational component
QuadFF lift_alcove(const FiniteModel& fm, long d) {
  long m = (d >= 0) ? d / 2 : (d - 1) / 2;  // floor(d/2)
  int type = (d % 2 == 0) ? 2 : 1;
  FiniteFunction ind = bax::orbit_indicator(fm, type, static_cast<int>(m));
  QuadFF out{bax::ff_zero(fm, ind.s, ind.t), bax::ff_zero(fm, ind.s, ind.t)};
  if (d % 2 == 0)
    out.ra = bax::ff_scale(ind, fm.qfrac(static_cast<int>(d / 2)));
  else
    out.rb = bax::ff_scale(ind, -fm.qfrac(static_cast<int>((d - 1) / 2)));
  return out;
}

bool shells_agree(const FiniteModel& fm, const FiniteFunction& f, const FiniteFunction& g) {
  FiniteFunction diff = bax::ff_sub(fm, f, g);
  const int M = fm.level();
  long step = fm.ppow(M + diff.s), side = fm.ppow(diff.t - diff.s);
  for (long a = 0; a < side; ++a)
    for (long b = 0; b < side; ++b) {
      long n1 = a * step, n2 = b * step;
      int shell = std::min(fm.val_of(n1), fm.val_of(n2));
      if (shell < -(M - 2) || shell > M - 2) continue;
      if (bax::ff_value(fm, diff, n1, n2) != 0) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("transform fixes the unit lattice and the spherical vector") {
  for (long p : {2L, 3L}) {
    FiniteModel fm(p, 3);
    CHECK(bax::ff_equal(fm, bax::fourier(fm, bax::rect_indicator(fm, 0, 0)),
                        bax::rect_indicator(fm, 0, 0)));
    CHECK(bax::ff_equal(fm, bax::fourier(fm, bax::sample_c(fm, 0)), bax::sample_c(fm, 0)));
  }
}

TEST_CASE("transform reflects the spherical family") {
  for (long p : {2L, 3L}) {
    FiniteModel fm(p, 3);
    for (int n = -1; n <= 1; ++n)
      CHECK(bax::ff_equal(fm, bax::fourier(fm, bax::sample_c(fm, n)), bax::sample_c(fm, -n)));
  }
}

TEST_CASE("transform of the basis vector at the origin") {
  for (long p : {2L, 3L}) {
    FiniteModel fm(p, 3);
    FiniteFunction rhs =
        bax::ff_sub(fm, bax::ff_scale(bax::sample_c(fm, 0), mpq_class(1) - fm.qfrac(-2)),
                    bax::ff_scale(bax::sample_delta(fm, -1), fm.qfrac(-1)));
    CHECK(bax::ff_equal(fm, bax::fourier(fm, bax::sample_delta(fm, 0)), rhs));
  }
}

TEST_CASE("transform of basis vectors matches the formal intertwiner") {
  RootDatum rd = build_root_datum(CartanType::A1);
  for (long p : {2L, 3L}) {
    FiniteModel fm(p, 3);
    for (int n = -1; n <= 1; ++n) {
      bax::ConeSeries formal =
          bax::expand(rd, bax::phi_simple(rd, bax::delta_elem(rd, IVec{n}), 0), 3);
      FiniteFunction got = bax::fourier(fm, bax::sample_delta(fm, n));
      FiniteFunction want = bax::ff_zero(fm, got.s, got.t);
      for (int k = -1; k <= 1; ++k) {
        bax::QuadExt v = bax::quad_specialize(formal.coeff(IVec{k}), p);
        CHECK(v.b == 0);  // only even powers of the deformation variable
        if (v.a != 0) want = bax::ff_add(fm, want, bax::ff_scale(bax::sample_delta(fm, k), v.a));
      }
      CHECK(shells_agree(fm, got, want));
    }
  }
}

TEST_CASE("family members difference to basis vectors") {
  FiniteModel fm(3, 3);
  for (int n = -1; n <= 0; ++n) {
    FiniteFunction lhs = bax::ff_sub(fm, bax::sample_c(fm, n),
                                     bax::ff_scale(bax::sample_c(fm, n + 1), fm.qfrac(-1)));
    CHECK(bax::ff_equal(fm, lhs, bax::sample_delta(fm, n)));
  }
}

TEST_CASE("self-pairings survive the transform") {
  FiniteModel fm(3, 3);
  std::vector<FiniteFunction> samples = {bax::sample_delta(fm, 0), bax::sample_c(fm, 0),
                                         bax::rect_indicator(fm, 0, 1),
                                         bax::orbit_indicator(fm, 1, 0)};
  for (const auto& f : samples) {
    FiniteFunction g = bax::fourier(fm, f);
    CHECK(bax::ff_inner(fm, g, g) == bax::ff_inner(fm, f, f));
  }
  // frozen normalization: the unit-shell self-pairing is the shell volume
  CHECK(bax::ff_inner(fm, bax::sample_delta(fm, 0), bax::sample_delta(fm, 0)) ==
        mpq_class(8, 9));
}

TEST_CASE("rectangle indicators transform by the reflection rule") {
  for (long p : {2L, 3L}) {
    FiniteModel fm(p, 3);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {-1, 1}, {1, 1}}) {
      FiniteFunction lhs = bax::fourier(fm, bax::rect_indicator(fm, a, b));
      FiniteFunction rhs =
          bax::ff_scale(bax::rect_indicator(fm, -b, -a), fm.qfrac(-(a + b)));
      CHECK(bax::ff_equal(fm, lhs, rhs));
    }
  }
}

TEST_CASE("orbit indicators transform by the two-term rectangle identities") {
  FiniteModel fm(3, 3);
  mpq_class q(3);
  // type 2 at level 0
  FiniteFunction lhs2 = bax::fourier(fm, bax::orbit_indicator(fm, 2, 0));
  FiniteFunction rhs2 = bax::ff_sub(
      fm, bax::ff_scale(bax::rect_indicator(fm, 0, 0), 1 - 1 / q),
      bax::ff_scale(bax::orbit_indicator(fm, 1, -1), 1 / q));
  CHECK(bax::ff_equal(fm, lhs2, rhs2));
  // type 1 at level 0
  FiniteFunction lhs1 = bax::fourier(fm, bax::orbit_indicator(fm, 1, 0));
  FiniteFunction rhs1 = bax::ff_sub(
      fm, bax::ff_scale(bax::rect_indicator(fm, -1, 0), 1 / q - 1 / (q * q)),
      bax::ff_scale(bax::orbit_indicator(fm, 2, -1), 1 / (q * q)));
  CHECK(bax::ff_equal(fm, lhs1, rhs1));
}

TEST_CASE("interior shells split into exactly two orbits") {
  for (long p : {2L, 3L}) {
    FiniteModel fm(p, 3);
    bax::OrbitData od = bax::iwahori_orbits(fm);
    CHECK(od.with_torus_count == od.count);  // unit scalings refine nothing
    std::map<std::pair<int, int>, int> census;
    for (long r : od.reps) {
      long n1 = r / fm.ring_size(), n2 = r % fm.ring_size();
      census[bax::orbit_label(fm, n1, n2)] += 1;
    }
    for (int m = -1; m <= 1; ++m) {
      CHECK(census[{1, m}] == 1);
      CHECK(census[{2, m}] == 1);
    }
  }
}

TEST_CASE("analytic labels read the valuations") {
  FiniteModel fm(3, 3);
  long pm = fm.ppow(3);  // the element of valuation zero
  CHECK(bax::orbit_label(fm, pm, 0) == std::pair<int, int>{1, 0});
  CHECK(bax::orbit_label(fm, 0, pm) == std::pair<int, int>{2, 0});
  CHECK(bax::orbit_label(fm, pm, pm) == std::pair<int, int>{2, 0});
  CHECK(bax::orbit_label(fm, fm.ppow(2), pm) == std::pair<int, int>{1, -1});
}

TEST_CASE("averaging projects onto shells with the recorded constants") {
  FiniteModel fm(3, 3);
  mpq_class q(3);
  for (int m = -1; m <= 1; ++m) {
    FiniteFunction shell =
        bax::ff_add(fm, bax::orbit_indicator(fm, 2, m), bax::orbit_indicator(fm, 1, m));
    FiniteFunction a2 = bax::k_average(fm, bax::orbit_indicator(fm, 2, m));
    FiniteFunction a1 = bax::k_average(fm, bax::orbit_indicator(fm, 1, m));
    CHECK(bax::ff_equal(fm, a2, bax::ff_scale(shell, q / (q + 1))));
    CHECK(bax::ff_equal(fm, a1, bax::ff_scale(shell, 1 / (q + 1))));
    CHECK(bax::ff_equal(fm, bax::k_average(fm, a2), a2));  // idempotent
  }
}

TEST_CASE("alcove distance is the signed wall count on the line") {
  RootDatum rd = build_root_datum(CartanType::A1);
  for (long j = -3; j <= 3; ++j) CHECK(bax::alcove_d(line_alcove(rd, j)) == j);
}

namespace {

// aggregate(theta(m)) against the formal intertwiner applied to aggregate(m)
bool formal_bridge_intertwines(const RootDatum& rd, const Alcove& a, bool bar_first) {
  PeriodicElement m = PeriodicElement::basis(a);
  PeriodicElement th = bax::theta_alpha(rd, 0, m, 16, -40);
  auto lhs = bax::aggregate_levels(rd, th, bar_first);
  auto base = bax::aggregate_levels(rd, m, bar_first);
  std::map<long, RationalLaurent> rhs;
  for (const auto& [lv, c] : base) {
    bax::ConeSeries s = bax::expand(
        rd, bax::phi_simple(rd, bax::delta_elem(rd, IVec{static_cast<int>(lv)}), 0),
        9 + std::abs(lv));
    for (int k = -7; k <= 7; ++k) {
      LaurentScalar ck = s.coeff(IVec{k});
      if (!ck.is_zero()) rhs[k] = rhs[k] + c * RationalLaurent(ck);
    }
  }
  for (long k = -6; k <= 6; ++k) {
    RationalLaurent l = lhs.count(k) ? lhs.at(k) : RationalLaurent();
    RationalLaurent r = rhs.count(k) ? rhs.at(k) : RationalLaurent();
    if (!(l == r)) return false;
  }
  return true;
}

// the ray series applied to an alcove vector against the oracle transform of
// its lift, coefficients specialized into Q(sqrt p)
bool oracle_bridge_intertwines(const FiniteModel& fm, const RootDatum& rd, long j,
                               bool bar_first) {
  const int M = fm.level();
  QuadFF in = lift_alcove(fm, j);
  QuadFF lhs{bax::fourier(fm, in.ra), bax::fourier(fm, in.rb)};
  PeriodicElement th = bax::theta_alpha(rd, 0, PeriodicElement::basis(line_alcove(rd, j)), 14, -40);
  QuadFF rhs{bax::ff_zero(fm, -(M - 1), M - 1), bax::ff_zero(fm, -(M - 1), M - 1)};
  for (const auto& [b, c] : th.terms()) {
    long d = bax::alcove_d(b);
    long lvl = (d >= 0) ? d / 2 : (d - 1) / 2;
    if (lvl < -(M - 2) || lvl > M - 2) continue;  // below the model's resolution
    LaurentScalar coeff = bar_first ? c.bar() : c;
    bax::QuadExt e = bax::quad_specialize(coeff, fm.p());
    QuadFF lift = lift_alcove(fm, d);
    if (e.a != 0) {
      rhs.ra = bax::ff_add(fm, rhs.ra, bax::ff_scale(lift.ra, e.a));
      rhs.rb = bax::ff_add(fm, rhs.rb, bax::ff_scale(lift.rb, e.a));
    }
    if (e.b != 0) {
      rhs.ra = bax::ff_add(fm, rhs.ra, bax::ff_scale(lift.rb, e.b * fm.p()));
      rhs.rb = bax::ff_add(fm, rhs.rb, bax::ff_scale(lift.ra, e.b));
    }
  }
  return shells_agree(fm, lhs.ra, rhs.ra) && shells_agree(fm, lhs.rb, rhs.rb);
}

}  // namespace

TEST_CASE("ray aggregation intertwines with the formal transform at one specialization") {
  RootDatum rd = build_root_datum(CartanType::A1);
  for (long j : {0L, -1L, 1L}) {
    Alcove a = line_alcove(rd, j);
    CHECK(formal_bridge_intertwines(rd, a, false));   // module v = q^(1/2)
    CHECK(!formal_bridge_intertwines(rd, a, true));   // module v = q^(-1/2) fails
  }
}

TEST_CASE("ray aggregation intertwines with the finite transform at one specialization") {
  RootDatum rd = build_root_datum(CartanType::A1);
  for (long p : {2L, 3L}) {
    FiniteModel fm(p, 3);
    for (long j : {0L, -1L}) {
      CHECK(oracle_bridge_intertwines(fm, rd, j, false));
      CHECK(!oracle_bridge_intertwines(fm, rd, j, true));
    }
  }
}

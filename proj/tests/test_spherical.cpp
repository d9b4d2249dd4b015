#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bax/cone.hpp"
#include "bax/rootdata.hpp"
#include "bax/spherical.hpp"

using bax::build_root_datum;
using bax::CartanType;
using bax::ConeSeries;
using bax::IVec;
using bax::LaurentScalar;
using bax::RootDatum;
using bax::SphericalElement;

TEST_CASE("partition counts in rank one are pure powers") {
  RootDatum rd = build_root_datum(CartanType::A1);
  for (int n = 0; n <= 3; ++n)
    CHECK(bax::kostant_q(rd, IVec{n}) == LaurentScalar::qpow(-n));
  CHECK(bax::kostant_q(rd, IVec{-1}) == LaurentScalar(0));
  auto table = bax::kostant_table(rd, 3);
  CHECK(table.size() == 4);
  CHECK(table.at(IVec{0}) == LaurentScalar(1));
}

TEST_CASE("rank two partition counts see both orderings") {
  RootDatum rd = build_root_datum(CartanType::A2);
  // alpha1 + alpha2 decomposes as the two simples or the one long coroot
  CHECK(bax::kostant_q(rd, IVec{1, 1}) ==
        LaurentScalar::qpow(-1) + LaurentScalar::qpow(-2));
  CHECK(bax::kostant_q(rd, IVec{1, 0}) == LaurentScalar::qpow(-1));
  CHECK(bax::kostant_q(rd, IVec{0, 0}) == LaurentScalar(1));
  CHECK(bax::kostant_q(rd, IVec{2, 1}) ==
        LaurentScalar::qpow(-2) + LaurentScalar::qpow(-3));
}

TEST_CASE("partition table matches the geometric cone product") {
  for (auto type : {CartanType::A1, CartanType::A2, CartanType::B2}) {
    RootDatum rd = build_root_datum(type);
    const long depth = 5;
    ConeSeries prod =
        ConeSeries::finite(rd.rank, bax::TorusFunction::term(LaurentScalar(1), IVec(rd.rank, 0)));
    for (const IVec& tau : rd.positive_coroots)
      prod = prod * ConeSeries::geometric_inverse(rd.rank, LaurentScalar::qpow(-1), tau, depth);
    ConeSeries table(rd.rank, depth);
    for (const auto& [g, c] : bax::kostant_table(rd, depth)) table.add_entry(g, c);
    table.add_apex(IVec(rd.rank, 0));
    CHECK(bax::window_equal(prod, table, depth));
  }
}

TEST_CASE("spherical family in rank one is the geometric tail") {
  RootDatum rd = build_root_datum(CartanType::A1);
  ConeSeries s = bax::c_in_delta(rd, IVec{0}, 6);
  for (int n = 0; n <= 6; ++n) CHECK(s.coeff(IVec{n}) == LaurentScalar::qpow(-n));
  ConeSeries e = bax::expand(rd, bax::c_zero(rd), 6);
  CHECK(bax::window_equal(s, e, 6));
}

TEST_CASE("basis vector expands as a signed subset sum") {
  RootDatum rd = build_root_datum(CartanType::A1);
  auto m = bax::delta_in_c(rd, IVec{0});
  CHECK(m.size() == 2);
  CHECK(m.at(IVec{0}) == LaurentScalar(1));
  CHECK(m.at(IVec{1}) == -LaurentScalar::qpow(-1));

  RootDatum a2 = build_root_datum(CartanType::A2);
  auto m2 = bax::delta_in_c(a2, IVec{0, 0});
  // subsets of the three positive coroots land on 7 distinct index points;
  // the long coroot alone and the pair of simples share (1,1)
  CHECK(m2.size() == 7);
  CHECK(m2.at(IVec{0, 0}) == LaurentScalar(1));
  CHECK(m2.at(IVec{1, 1}) == LaurentScalar::qpow(-2) - LaurentScalar::qpow(-1));
  CHECK(m2.at(IVec{2, 2}) == -LaurentScalar::qpow(-3));  // all three
  CHECK(m2.at(IVec{2, 1}) == LaurentScalar::qpow(-2));
}

TEST_CASE("the two expansions are mutually inverse") {
  for (auto type : {CartanType::A1, CartanType::A2, CartanType::B2}) {
    RootDatum rd = build_root_datum(type);
    const long depth = 4;
    for (const IVec& mu : {IVec(rd.rank, 0)}) {
      SphericalElement acc = bax::scale(bax::c_zero(rd), LaurentScalar(0));
      for (const auto& [nu, c] : bax::delta_in_c(rd, mu))
        acc = bax::add(rd, acc, bax::scale(bax::c_elem(rd, nu), c));
      ConeSeries got = bax::expand(rd, acc, depth);
      ConeSeries want =
          ConeSeries::finite(rd.rank, bax::TorusFunction::term(LaurentScalar(1), mu));
      CHECK(bax::window_equal(got, want, depth));
    }
  }
}

TEST_CASE("coroot product collapses the spherical unit exactly") {
  for (auto type : {CartanType::A1, CartanType::A2, CartanType::B2, CartanType::G2}) {
    RootDatum rd = build_root_datum(type);
    SphericalElement f = bax::lp_apply(rd, bax::c_zero(rd));
    CHECK(bax::equal_exact(f, bax::delta_elem(rd, IVec(rd.rank, 0))));
  }
}

TEST_CASE("inversion carries the positive exponent") {
  // negative control: the inverse-sign normalization must fail
  RootDatum rd = build_root_datum(CartanType::A2);
  SphericalElement f = bax::c_zero(rd);
  for (const IVec& tau : rd.positive_coroots)
    f = bax::add(rd, bax::scale(f, LaurentScalar::qpow(1)),
                 bax::scale(bax::apply_shift(rd, f, tau, true), LaurentScalar(-1)));
  SphericalElement right =
      bax::scale(bax::delta_elem(rd, IVec{0, 0}), LaurentScalar::qpow(rd.npos()));
  SphericalElement wrong =
      bax::scale(bax::delta_elem(rd, IVec{0, 0}), LaurentScalar::qpow(-rd.npos()));
  CHECK(bax::equal_exact(f, right));
  CHECK(!bax::equal_exact(f, wrong));
}

TEST_CASE("intertwiner fixes the unit and reflects the family") {
  for (auto type : {CartanType::A1, CartanType::A2, CartanType::B2}) {
    RootDatum rd = build_root_datum(type);
    for (int i = 0; i < rd.rank; ++i) {
      CHECK(bax::equal_exact(bax::phi_simple(rd, bax::c_zero(rd), i), bax::c_zero(rd)));
      IVec mu(rd.rank, 0);
      mu[0] = 1;
      IVec smu = bax::weyl_coroot(rd, bax::simple_reflection(rd, i), mu);
      CHECK(bax::equal_exact(bax::phi_simple(rd, bax::c_elem(rd, mu), i), bax::c_elem(rd, smu)));
    }
  }
}

TEST_CASE("intertwiner image of the basis vector at the origin") {
  RootDatum rd = build_root_datum(CartanType::A1);
  ConeSeries s = bax::expand(rd, bax::phi_simple(rd, bax::delta_elem(rd, IVec{0}), 0), 5);
  LaurentScalar one(1);
  LaurentScalar c0 = one - LaurentScalar::qpow(-2);
  CHECK(s.coeff(IVec{-1}) == -LaurentScalar::qpow(-1));
  CHECK(s.coeff(IVec{0}) == c0);
  for (int n = 1; n <= 5; ++n) CHECK(s.coeff(IVec{n}) == c0 * LaurentScalar::qpow(-n));
}

TEST_CASE("intertwiners conjugate normalized shifts") {
  RootDatum rd = build_root_datum(CartanType::B2);
  for (int i = 0; i < rd.rank; ++i)
    for (const IVec& g : {IVec{1, 0}, IVec{0, 1}, IVec{1, 1}}) {
      IVec sg = bax::weyl_coroot(rd, bax::simple_reflection(rd, i), g);
      for (const SphericalElement& f : {bax::c_zero(rd), bax::delta_elem(rd, IVec{0, 0})}) {
        SphericalElement lhs = bax::phi_simple(rd, bax::apply_shift(rd, f, g, true), i);
        SphericalElement rhs = bax::apply_shift(rd, bax::phi_simple(rd, f, i), sg, true);
        CHECK(bax::equal_exact(lhs, rhs));
      }
    }
}

TEST_CASE("longest-word intertwiner in rank two") {
  RootDatum rd = build_root_datum(CartanType::A2);
  IVec mu{1, 0};
  IVec w0mu = bax::weyl_coroot(rd, rd.w0, mu);
  CHECK(w0mu == IVec{0, -1});
  CHECK(bax::equal_exact(bax::phi_word(rd, bax::c_elem(rd, mu), rd.weyl[rd.w0].word),
                         bax::c_elem(rd, w0mu)));
}

TEST_CASE("intertwiner words only depend on the element") {
  RootDatum rd = build_root_datum(CartanType::A2);
  SphericalElement f = bax::delta_elem(rd, IVec{0, 0});
  SphericalElement a = bax::phi_word(rd, f, {0, 1, 0});
  SphericalElement b = bax::phi_word(rd, f, {1, 0, 1});
  CHECK(bax::equal_exact(a, b));
}

TEST_CASE("pairing with the unit orbit scales by the volume") {
  RootDatum rd = build_root_datum(CartanType::A2);
  CHECK(bax::vol_x0(rd) ==
        (LaurentScalar(1) - LaurentScalar::qpow(-2)) * (LaurentScalar(1) - LaurentScalar::qpow(-2)));
  bax::TorusFunction unit = bax::TorusFunction::term(LaurentScalar(1), IVec{0, 0});
  ConeSeries f = bax::expand(rd, bax::c_zero(rd), 4);
  ConeSeries p = bax::pairing(rd, f, unit);
  CHECK(bax::window_equal(p, f.scaled(bax::vol_x0(rd)), 4));
}

TEST_CASE("pairing shifts against finite support") {
  RootDatum rd = build_root_datum(CartanType::A1);
  bax::TorusFunction g = bax::TorusFunction::term(LaurentScalar(1), IVec{1});
  ConeSeries f = ConeSeries::finite(1, bax::TorusFunction::term(LaurentScalar::vpow(3), IVec{2}));
  ConeSeries p = bax::pairing(rd, f, g);
  // coefficient at nu = 1 picks up f at mu+nu = 2
  CHECK(p.coeff(IVec{1}) == LaurentScalar::vpow(3) * bax::vol_x0(rd));
  CHECK(p.coeff(IVec{2}) == LaurentScalar(0));
}

TEST_CASE("support apex bounds the support") {
  RootDatum rd = build_root_datum(CartanType::A2);
  SphericalElement f = bax::phi_simple(rd, bax::delta_elem(rd, IVec{0, 0}), 0);
  IVec apex = bax::support_apex(f);
  ConeSeries s = bax::expand(rd, f, 3);
  for (const auto& [g, c] : s.entries()) {
    if (c.is_zero()) continue;
    for (int j = 0; j < rd.rank; ++j) CHECK(g[j] >= apex[j]);
  }
}

TEST_CASE("local factors multiply out at numeric q") {
  RootDatum a1 = build_root_datum(CartanType::A1);
  CHECK(bax::local_l_factor(a1, {mpq_class(1, 2)}, mpq_class(4)) == mpq_class(2));
  RootDatum a2 = build_root_datum(CartanType::A2);
  CHECK(bax::local_l_factor(a2, {mpq_class(1, 3), mpq_class(1, 3)}, mpq_class(4)) ==
        mpq_class(81, 20));
}

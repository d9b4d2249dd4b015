#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "bax/rootdata.hpp"

using bax::build_root_datum;
using bax::CartanType;
using bax::IVec;
using bax::RootDatum;

namespace {
const std::vector<std::string> kAllGroups = {"A1", "A2", "B2", "C2", "G2", "A3"};
}

TEST_CASE("pinned presentation matrices") {
  RootDatum a1 = build_root_datum(CartanType::A1);
  CHECK(a1.pairing == std::vector<IVec>{{2}});
  CHECK(a1.dsym == IVec{1});

  RootDatum a2 = build_root_datum(CartanType::A2);
  CHECK(a2.pairing == std::vector<IVec>{{2, -1}, {-1, 2}});
  CHECK(a2.dsym == IVec{1, 1});

  RootDatum b2 = build_root_datum(CartanType::B2);
  CHECK(b2.pairing == std::vector<IVec>{{2, -2}, {-1, 2}});
  CHECK(b2.dsym == IVec{2, 1});

  RootDatum c2 = build_root_datum(CartanType::C2);
  CHECK(c2.pairing == std::vector<IVec>{{2, -1}, {-2, 2}});
  CHECK(c2.dsym == IVec{1, 2});

  RootDatum g2 = build_root_datum(CartanType::G2);
  CHECK(g2.pairing == std::vector<IVec>{{2, -1}, {-3, 2}});
  CHECK(g2.dsym == IVec{1, 3});

  RootDatum a3 = build_root_datum(CartanType::A3);
  CHECK(a3.pairing == std::vector<IVec>{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  CHECK(a3.dsym == IVec{1, 1, 1});
}

TEST_CASE("group orders and positive root counts") {
  const std::vector<int> orders = {2, 6, 8, 8, 12, 24};
  const std::vector<int> npos = {1, 3, 4, 4, 6, 6};
  for (size_t k = 0; k < kAllGroups.size(); ++k) {
    RootDatum rd = build_root_datum(bax::parse_cartan(kAllGroups[k]));
    CHECK(rd.order() == orders[k]);
    CHECK(rd.npos() == npos[k]);
    CHECK(static_cast<int>(rd.positive_coroots.size()) == npos[k]);
    // longest element has length = number of positive roots
    CHECK(rd.weyl[rd.w0].length() == npos[k]);
  }
}

TEST_CASE("highest root data") {
  CHECK(build_root_datum(CartanType::A1).theta_coroot == IVec{1});
  CHECK(build_root_datum(CartanType::A2).theta_coroot == IVec{1, 1});
  CHECK(build_root_datum(CartanType::B2).theta_coroot == IVec{1, 1});
  CHECK(build_root_datum(CartanType::C2).theta_coroot == IVec{1, 1});
  CHECK(build_root_datum(CartanType::G2).theta_coroot == IVec{1, 2});
  CHECK(build_root_datum(CartanType::A3).theta_coroot == IVec{1, 1, 1});
  for (const auto& g : kAllGroups) {
    RootDatum rd = build_root_datum(bax::parse_cartan(g));
    // theta is the unique root of maximal height
    for (const IVec& b : rd.positive_roots)
      CHECK(bax::root_height(b) <= bax::root_height(rd.theta_root));
    CHECK(rd.coxeter_h == bax::root_height(rd.theta_root) + 1);
  }
}

TEST_CASE("multiplication table is a group") {
  for (const auto& g : kAllGroups) {
    RootDatum rd = build_root_datum(bax::parse_cartan(g));
    const int n = rd.order();
    for (int a = 0; a < n; ++a) {
      CHECK(rd.mult[0][a] == a);
      CHECK(rd.mult[a][0] == a);
      CHECK(rd.mult[a][rd.weyl[a].inv] == 0);
    }
    // associativity spot check on the generators
    for (int i = 0; i < rd.rank; ++i)
      for (int a = 0; a < n; ++a) {
        int s = bax::simple_reflection(rd, i);
        CHECK(rd.mult[rd.mult[a][s]][s] == a);
      }
  }
}

TEST_CASE("matrices realize the words") {
  for (const auto& g : kAllGroups) {
    RootDatum rd = build_root_datum(bax::parse_cartan(g));
    for (int w = 0; w < rd.order(); ++w) {
      // fold the reduced word through the simple-reflection action
      for (int j = 0; j < rd.rank; ++j) {
        IVec e(rd.rank, 0);
        e[j] = 1;
        IVec folded = e;
        const auto& word = rd.weyl[w].word;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
          long pair = 0;
          for (int k = 0; k < rd.rank; ++k) pair += rd.pairing[*it][k] * folded[k];
          folded[*it] -= static_cast<int>(pair);
        }
        CHECK(bax::weyl_coroot(rd, w, e) == folded);
      }
    }
  }
}

TEST_CASE("reflections preserve the root pairing") {
  for (const auto& g : kAllGroups) {
    RootDatum rd = build_root_datum(bax::parse_cartan(g));
    for (int w = 0; w < rd.order(); ++w)
      for (const IVec& b : rd.positive_roots)
        for (const IVec& c : rd.positive_coroots)
          CHECK(bax::pair_root_coroot(rd, bax::weyl_root(rd, w, b), bax::weyl_coroot(rd, w, c)) ==
                bax::pair_root_coroot(rd, b, c));
  }
}

TEST_CASE("positive roots close under simple reflections") {
  for (const auto& g : kAllGroups) {
    RootDatum rd = build_root_datum(bax::parse_cartan(g));
    std::set<IVec> pos(rd.positive_roots.begin(), rd.positive_roots.end());
    for (int i = 0; i < rd.rank; ++i) {
      int s = bax::simple_reflection(rd, i);
      IVec alpha(rd.rank, 0);
      alpha[i] = 1;
      for (const IVec& b : rd.positive_roots) {
        IVec sb = bax::weyl_root(rd, s, b);
        if (b == alpha) {
          IVec neg = b;
          for (auto& x : neg) x = -x;
          CHECK(sb == neg);  // the simple root is the only one sent negative
        } else {
          CHECK(pos.count(sb) == 1);
        }
      }
    }
  }
}

TEST_CASE("coordinate sum computes the half-sum pairing") {
  for (const auto& g : kAllGroups) {
    RootDatum rd = build_root_datum(bax::parse_cartan(g));
    for (const IVec& tau : rd.positive_coroots) {
      long total = 0;
      for (const IVec& b : rd.positive_roots) total += bax::pair_root_coroot(rd, b, tau);
      CHECK(2 * bax::rho_pair(tau) == total);
    }
    long s = 0;
    for (int x : rd.two_rho_vee) s += x;
    CHECK(bax::rho_pair(rd.two_rho_vee) == s);
  }
}

TEST_CASE("base point lies strictly inside the fundamental alcove") {
  for (const auto& g : kAllGroups) {
    RootDatum rd = build_root_datum(bax::parse_cartan(g));
    for (int i = 0; i < rd.rank; ++i) {
      IVec alpha(rd.rank, 0);
      alpha[i] = 1;
      CHECK(bax::pair_point_root(rd, rd.x0, alpha) == mpq_class(1, rd.coxeter_h));
    }
    CHECK(bax::pair_point_root(rd, rd.x0, rd.theta_root) ==
          mpq_class(rd.coxeter_h - 1, rd.coxeter_h));
  }
}

TEST_CASE("coset representatives tile the group") {
  for (const auto& g : kAllGroups) {
    RootDatum rd = build_root_datum(bax::parse_cartan(g));
    for (int i = 0; i < rd.rank; ++i) {
      std::vector<int> I = {i};
      auto reps = bax::minimal_coset_reps(rd, I);
      auto par = bax::parabolic_elements(rd, I);
      CHECK(par.size() == 2);
      CHECK(reps.size() * par.size() == static_cast<size_t>(rd.order()));
      std::set<int> seen;
      for (int r : reps)
        for (int p : par) seen.insert(rd.mult[r][p]);
      CHECK(seen.size() == static_cast<size_t>(rd.order()));
    }
    auto all = bax::parabolic_elements(rd, {});
    CHECK(all.size() == 1);
  }
}

TEST_CASE("permutohedron complex closes and is exact") {
  for (const auto& g : kAllGroups) {
    RootDatum rd = build_root_datum(bax::parse_cartan(g));
    bax::ChainComplex cc = bax::permutohedron_complex(rd);
    CHECK(cc.d2_zero);
    CHECK(cc.exact);
    CHECK(cc.counts[0] == 1);
    CHECK(cc.counts[1] == rd.order());
    long alt = 0;
    for (size_t d = 0; d < cc.counts.size(); ++d)
      alt += (d % 2 == 0 ? 1 : -1) * cc.counts[d];
    CHECK(alt == 0);
  }
}

TEST_CASE("labels parse both ways") {
  for (const auto& g : kAllGroups) CHECK(bax::cartan_name(bax::parse_cartan(g)) == g);
  CHECK_THROWS(bax::parse_cartan("E8"));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bax/laurent.hpp"
#include "bax/linalg.hpp"

using bax::QMat;
using bax::QVec;

TEST_CASE("rank of small rational matrices") {
  QMat m = {{1, 2}, {2, 4}};
  CHECK(bax::mat_rank(m) == 1);
  QMat id = {{1, 0}, {0, 1}};
  CHECK(bax::mat_rank(id) == 2);
  QMat z = {{0, 0}, {0, 0}};
  CHECK(bax::mat_rank(z) == 0);
  QMat tall = {{1, 0}, {0, 1}, {1, 1}};
  CHECK(bax::mat_rank(tall) == 2);
}

TEST_CASE("solving consistent and inconsistent systems") {
  QMat m = {{2, 1}, {1, -1}};
  QVec b = {mpq_class(3), mpq_class(0)};
  auto x = bax::mat_solve(m, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK(bax::mat_apply(m, *x) == b);

  QMat sing = {{1, 1}, {1, 1}};
  CHECK(!bax::mat_solve(sing, {mpq_class(0), mpq_class(1)}).has_value());
  // consistent underdetermined system: free variable pinned to zero
  auto y = bax::mat_solve(sing, {mpq_class(2), mpq_class(2)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] + (*y)[1] == 2);
}

TEST_CASE("fractional entries stay exact") {
  QMat m = {{mpq_class(1, 3), mpq_class(1, 7)}, {mpq_class(0), mpq_class(1, 2)}};
  QVec b = {mpq_class(1), mpq_class(1)};
  auto x = bax::mat_solve(m, b);
  REQUIRE(x.has_value());
  CHECK(bax::mat_apply(m, *x) == b);
  CHECK((*x)[1] == 2);
}

TEST_CASE("generic elimination over the Laurent fraction field") {
  using F = bax::RationalLaurent;
  bax::LaurentScalar v = bax::LaurentScalar::vpow(1);
  // [v 1; 0 v] x = [v^2+1, v] has the unique solution x = (v, 1)
  std::vector<std::vector<F>> m = {{F(v), F(bax::LaurentScalar(1))},
                                   {F(), F(v)}};
  std::vector<F> b = {F(v * v + bax::LaurentScalar(1)), F(v)};
  auto x = bax::field_solve(m, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == F(v));
  CHECK((*x)[1] == F(bax::LaurentScalar(1)));

  // inconsistent over the field
  std::vector<std::vector<F>> s = {{F(v)}, {F(v)}};
  CHECK(!bax::field_solve(s, {F(v), F(v * v)}).has_value());
}

#include <random>

#include "doctest.h"
#include "metice/weyl.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace metice;

namespace {

LaurentPoly zv(int vars, int k) { return LaurentPoly::variable(vars, k, CoeffMode::symbolic); }

TwoRowBoundary random_boundary(std::mt19937_64& rng, int max_width) {
  const int C = std::uniform_int_distribution<int>(2, max_width)(rng);
  const int k = std::uniform_int_distribution<int>(2, C)(rng);
  std::vector<int> cols(C);
  std::iota(cols.begin(), cols.end(), 0);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::vector<int> top(cols.begin(), cols.begin() + k);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::vector<int> bottom(cols.begin(), cols.begin() + (k - 2));
  return {C, ColumnSet::from_columns(top), ColumnSet::from_columns(bottom)};
}

}  // namespace

TEST_CASE("decomposition by charge class") {
  WeightRing ring = WeightRing::symbolic(2);
  LaurentPoly Z = partition(make_system(boundary_from_lambda(1, {0, 0}), Family::gamma, ring));
  DecomposedPartition parts = decompose(Z, 1, 2);
  CHECK(poly_equal(parts.at(1), Z));
  CHECK(parts.at(0).is_zero());
  DecomposedPartition one = decompose(Z, 1, 1);
  CHECK(one.size() == 1);
  CHECK(poly_equal(one.at(0), Z));
  CHECK_THROWS_AS(decompose(Z, 2, 2), std::out_of_range);
}

TEST_CASE("decomposition recombines") {
  for (int n : {1, 2, 3})
    for (const auto& sl : support::lambda_grid(2, 3)) {
      if (sl.r == 0) continue;
      LaurentPoly Z = partition(make_system(boundary_from_lambda(sl.r, sl.lambda), Family::gamma, WeightRing::symbolic(n)));
      for (int i = 1; i <= sl.r; ++i) {
        LaurentPoly sum(Z.vars());
        for (const auto& [j, part] : decompose(Z, i, n)) sum += part;
        CHECK(poly_equal(sum, Z));
      }
    }
}

TEST_CASE("P and Q share their denominator") {
  for (int n : {1, 2, 3}) {
    WeightRing ring = WeightRing::symbolic(n);
    LaurentPoly d0 = FactorPQ{n, 0, ring}.denominator(2, 1, 0);
    for (int j = 0; j < n; ++j) CHECK(poly_equal(FactorPQ{n, j, ring}.denominator(2, 1, 0), d0));
    LaurentPoly expected = LaurentPoly::monomial(2, {0, n}, ring.one()) - LaurentPoly::monomial(2, {n, 0}, ring.u());
    CHECK(poly_equal(d0, expected));
  }
}

TEST_CASE("hand-expanded rank one instance") {
  // Z = g(1)z₁ + z₂ at λ = (0, 0), n = 2, q = 5, i = 1, j = 1
  GaussTable t = build_table(2, 5);
  WeightRing ring = WeightRing::numeric(t);
  LaurentPoly Z = partition(make_system(boundary_from_lambda(1, {0, 0}), Family::gamma, ring));
  FunctionalEqReport rep = functional_eq_check(Z, 1, 1, ring);
  CHECK(rep.pass);
  const auto g = Coefficient::numeric(t.g(1)), u = Coefficient::numeric(0.2), one = Coefficient::numeric(1.0);
  LaurentPoly expected = LaurentPoly::monomial(2, {0, 3}, g) - LaurentPoly::monomial(2, {2, 1}, g * u) +
                         LaurentPoly::monomial(2, {1, 2}, one) - LaurentPoly::monomial(2, {3, 0}, u);
  CHECK(poly_equal(rep.lhs, expected, 1e-10));
  CHECK(poly_equal(rep.rhs, expected, 1e-10));

  // symbolically, after g(1)² = u
  FunctionalEqReport sym = functional_eq_check(make_system(boundary_from_lambda(1, {0, 0}), Family::gamma, WeightRing::symbolic(2)), 1, 1);
  CHECK(sym.pass);
  CHECK(to_string(sym.lhs) == "−u·z₁³ − u·g(1)·z₁²·z₂ + z₁·z₂² + g(1)·z₂³");
}

TEST_CASE("cover degree one reduces to the commutation identity") {
  for (const auto& sl : support::lambda_grid(2, 3)) {
    if (sl.r == 0) continue;
    SystemSpec spec = make_system(boundary_from_lambda(sl.r, sl.lambda), Family::gamma, WeightRing::symbolic(1));
    for (int i = 1; i <= sl.r; ++i) CHECK(functional_eq_check(spec, i, 0).pass);
  }
}

TEST_CASE("functional equations on the numeric grid") {
  for (auto [n, q] : support::field_grid({2, 3}))
    for (const auto& sl : support::lambda_grid(2, 3)) {
      if (sl.r == 0) continue;
      for (Family family : {Family::gamma, Family::delta}) {
        SystemSpec spec = make_system(boundary_from_lambda(sl.r, sl.lambda), family, WeightRing::numeric(build_table(n, q)));
        LaurentPoly Z = partition(spec);
        for (int i = 1; i <= sl.r; ++i)
          for (int j = 0; j < n; ++j) CHECK(functional_eq_check(Z, i, j, spec.ring).pass);
      }
    }
}

TEST_CASE("functional equations hold symbolically modulo the Gauss relations") {
  for (int n : {2, 3}) {
    SystemSpec spec = make_system(boundary_from_lambda(2, {3, 2, 0}), Family::gamma, WeightRing::symbolic(n));
    for (int i : {1, 2})
      for (int j = 0; j < n; ++j) CHECK(functional_eq_check(spec, i, j).pass);
  }
}

TEST_CASE("a wrong orientation fails") {
  WeightRing ring = WeightRing::numeric(build_table(3, 7));
  LaurentPoly Z = partition(make_system(boundary_from_lambda(2, {3, 2, 0}), Family::gamma, ring));
  LaurentPoly swapped = poly_permute_vars(Z, {0, 2, 1});
  int failures = 0;
  for (int j = 0; j < 3; ++j) failures += !functional_eq_check(swapped, 1, j, ring).pass;
  CHECK(failures > 0);
}

TEST_CASE("partial R-vertex data") {
  WeightRing ring = WeightRing::symbolic(3);
  PartialRVertexN R{3, ring};
  LaurentPoly x = zv(2, 1), y = zv(2, 0);  // x = z_{i+1}, y = z_i
  auto pow3 = [](const LaurentPoly& p) { return p * p * p; };
  LaurentPoly u = LaurentPoly::constant(2, ring.u());
  CHECK(poly_equal(R.all_plus(0, 0, 0, 0), pow3(y) - u * pow3(x)));
  CHECK(poly_equal(R.all_minus(0, 0), pow3(x) - u * pow3(y)));
  CHECK(R.all_minus(1, 0).is_zero());
  CHECK(poly_equal(R.all_plus(1, 0, 1, 0), FactorPQ{3, 1, ring}.p(2, 1, 0)));
  CHECK(poly_equal(R.all_plus(1, 0, 2, 0), FactorPQ{3, 1, ring}.q(2, 1, 0)));
  CHECK(R.all_plus(1, 0, 0, 0).is_zero());
}

TEST_CASE("functional equation through the R-vertex on two rows") {
  std::mt19937_64 rng(4);
  WeightRing ring = WeightRing::numeric(build_table(3, 7));
  for (int trial = 0; trial < 15; ++trial) {
    TwoRowBoundary b = random_boundary(rng, 6);
    for (int j = 0; j < 3; ++j) CHECK(fe_via_rvertex_two_row(b, j, ring).pass);
  }
  CHECK_THROWS(fe_via_rvertex_two_row(TwoRowBoundary::from_rows({2, 1, 0}, {1}), 0, WeightRing::numeric(build_table(2, 5))));
}

TEST_CASE("completion search runs") {
  CompletionSearchResult n1 = explore_rvertex_completions(WeightRing::numeric(build_table(1, 5)));
  CHECK(n1.candidates > 0);
  CHECK(n1.best_failures == 0);
  CompletionSearchResult n3 = explore_rvertex_completions(WeightRing::numeric(build_table(3, 7)));
  CHECK(n3.candidates > 0);
}

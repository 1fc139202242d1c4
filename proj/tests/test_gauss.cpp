#include "doctest.h"
#include "metice/gauss.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace metice;

TEST_CASE("least primitive roots") {
  CHECK(find_primitive_root(5) == 2);
  CHECK(find_primitive_root(7) == 3);
  CHECK(find_primitive_root(3) == 2);
  for (long q : {11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L})
    CHECK(find_primitive_root(q) == oracle::least_primitive_root(q));
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(15));
  CHECK_FALSE(is_prime(49));
}

TEST_CASE("table rejects bad fields") {
  CHECK_THROWS_AS(build_table(2, 7), std::invalid_argument);  // 4 ∤ 6
  CHECK_THROWS_AS(build_table(1, 9), std::invalid_argument);
  CHECK_THROWS_AS(build_table(0, 5), std::invalid_argument);
  CHECK_NOTHROW(build_table(3, 13));
}

TEST_CASE("values at small fields") {
  GaussTable t1 = build_table(1, 5);
  CHECK(t1.g(0).real() == doctest::Approx(-0.2).epsilon(1e-12));
  CHECK(t1.h(0).real() == doctest::Approx(0.8).epsilon(1e-12));
  GaussTable t2 = build_table(2, 5);
  CHECK(std::abs(t2.h(1)) < 1e-12);
  CHECK(support::close(t2.g(1) * t2.g(1), 0.2, 1e-12));
}

TEST_CASE("table matches direct summation") {
  for (auto [n, q] : support::field_grid({1, 2, 3, 6})) {
    GaussTable t = build_table(n, q);
    oracle::Gauss o(n, q);
    CHECK(t.root == oracle::least_primitive_root(q));
    for (int b = -n; b < 2 * n; ++b) {
      CHECK(support::close(t.g(b), o.G(b), 1e-12));
      CHECK(support::close(t.h(b), o.H(b), 1e-12));
    }
  }
}

TEST_CASE("Gauss sum identities") {
  for (auto [n, q] : support::field_grid({1, 2, 3, 6})) {
    GaussTable t = build_table(n, q);
    const double u = 1.0 / double(q);
    CHECK(support::close(t.g(0), -u, 1e-12));
    CHECK(support::close(t.h(0), 1 - u, 1e-12));
    for (int b = 1; b < n; ++b) {
      CHECK(std::abs(t.h(b)) < 1e-12);
      CHECK(std::norm(t.g(b)) == doctest::Approx(u).epsilon(1e-12));
      CHECK(support::close(t.g(b) * t.g(n - b), u, 1e-12));
    }
  }
}

TEST_CASE("evaluation of symbolic coefficients") {
  GaussTable t = build_table(3, 7);
  Coefficient c = symbol_g(1, 3) * symbol_g(2, 3) + symbol_h(0, 3);
  auto v = evaluate(c, t).numeric_value();
  CHECK(support::close(v, t.g(1) * t.g(2) + (1.0 - 1.0 / 7), 1e-12));
}

TEST_CASE("weight ring modes") {
  WeightRing s = WeightRing::symbolic(3);
  CHECK(s.mode() == CoeffMode::symbolic);
  CHECK(s.g(3) == -s.u());
  GaussWord w(3);
  w.add_g(1);
  w.add_h(0, 2);
  CHECK(s.evaluate(w) == symbol_g(1, 3) * symbol_h(0, 3) * symbol_h(0, 3));
  WeightRing num = WeightRing::numeric(build_table(3, 7));
  CHECK(support::close(num.evaluate(w).numeric_value(), evaluate(s.evaluate(w), *num.table()).numeric_value(), 1e-12));
  CHECK(num.embed(s.g(1)).mode() == CoeffMode::numeric);
}

#include <doctest.h>

#include "springer/numeric.hpp"
#include "springer/polynomial.hpp"
#include "springer/symmetric.hpp"

using springer::complete_homogeneous;
using springer::elementary_symmetric;
using springer::Polynomial;
using springer::TruncatedPowerSeries;
using springer::VariableSpace;

namespace {

const VariableSpace kSpace{4, 2, 0};

Polynomial xi(int i) { return Polynomial::variable(kSpace, kSpace.x_var(i)); }
Polynomial uj(int j) { return Polynomial::variable(kSpace, kSpace.u_var(j)); }

std::vector<Polynomial> xs(int count) {
  std::vector<Polynomial> v;
  for (int i = 1; i <= count; ++i) v.push_back(xi(i));
  return v;
}

}  // namespace

TEST_SUITE("symmetric") {

TEST_CASE("elementary symmetric closed forms") {
  auto a = xs(3);
  CHECK(elementary_symmetric(0, kSpace, a) ==
        Polynomial::constant(kSpace, 1));
  CHECK(elementary_symmetric(1, kSpace, a) == xi(1) + xi(2) + xi(3));
  CHECK(elementary_symmetric(2, kSpace, a) ==
        xi(1) * xi(2) + xi(1) * xi(3) + xi(2) * xi(3));
  CHECK(elementary_symmetric(3, kSpace, a) == xi(1) * xi(2) * xi(3));
  CHECK(elementary_symmetric(4, kSpace, a).is_zero());
  CHECK(elementary_symmetric(-1, kSpace, a).is_zero());
  CHECK(elementary_symmetric(0, kSpace, {}) ==
        Polynomial::constant(kSpace, 1));
  CHECK(elementary_symmetric(1, kSpace, {}).is_zero());
}

TEST_CASE("complete homogeneous closed forms") {
  std::vector<Polynomial> a = {xi(1), xi(2)};
  CHECK(complete_homogeneous(0, kSpace, a) == Polynomial::constant(kSpace, 1));
  CHECK(complete_homogeneous(1, kSpace, a) == xi(1) + xi(2));
  CHECK(complete_homogeneous(2, kSpace, a) ==
        xi(1) * xi(1) + xi(1) * xi(2) + xi(2) * xi(2));
  CHECK(complete_homogeneous(1, kSpace, {}).is_zero());
  CHECK(complete_homogeneous(0, kSpace, {}) ==
        Polynomial::constant(kSpace, 1));
}

TEST_CASE("repeated arguments raise multiplicity") {
  // h_2(u1, u1) = 3 u1^2
  std::vector<Polynomial> a = {uj(1), uj(1)};
  CHECK(complete_homogeneous(2, kSpace, a) == uj(1) * uj(1) * mpq_class(3));
  // e_2(u1, u1) = u1^2
  CHECK(elementary_symmetric(2, kSpace, a) == uj(1) * uj(1));
}

TEST_CASE("alternating e-h contraction vanishes for d >= 1") {
  // sum_{k} (-1)^k e_k(A) h_{d-k}(A) = 0 whenever d >= 1
  for (int nargs = 1; nargs <= 4; ++nargs) {
    auto a = xs(nargs);
    for (int d = 1; d <= 5; ++d) {
      Polynomial acc = Polynomial::zero(kSpace);
      for (int k = 0; k <= d; ++k) {
        Polynomial term =
            elementary_symmetric(k, kSpace, a) *
            complete_homogeneous(d - k, kSpace, a);
        acc += (k % 2 == 0) ? term : -term;
      }
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("h of an all-ones list counts multisets") {
  for (int m = 1; m <= 6; ++m) {
    std::vector<Polynomial> ones(m, Polynomial::constant(kSpace, 1));
    for (int k = 0; k <= 6; ++k) {
      Polynomial h = complete_homogeneous(k, kSpace, ones);
      REQUIRE(h.is_constant());
      mpq_class expect(springer::binomial(m + k - 1, k));
      CHECK(h.evaluate(std::vector<mpq_class>(kSpace.total(), 0)) == expect);
    }
  }
}

TEST_CASE("product of linear factors lists elementary symmetric coefficients") {
  auto a = xs(4);
  TruncatedPowerSeries prod = TruncatedPowerSeries::one(kSpace, 5);
  for (const Polynomial& ai : a)
    prod = prod * TruncatedPowerSeries::one_plus(ai, 5);
  for (int k = 0; k <= 5; ++k)
    CHECK(prod.coeff(k) == elementary_symmetric(k, kSpace, a));
}

TEST_CASE("series inverse is a two-sided inverse") {
  TruncatedPowerSeries s = TruncatedPowerSeries::one_plus(uj(1), 6) *
                           TruncatedPowerSeries::one_plus(xi(2), 6);
  TruncatedPowerSeries inv = s.inverse();
  TruncatedPowerSeries prod = s * inv;
  CHECK(prod == TruncatedPowerSeries::one(kSpace, 6));
}

TEST_CASE("series inverse needs an invertible constant term") {
  TruncatedPowerSeries s(kSpace, 3);
  s.set_coeff(1, uj(1));  // constant term zero
  CHECK_THROWS_AS(s.inverse(), std::invalid_argument);
  TruncatedPowerSeries t(kSpace, 3);
  t.set_coeff(0, uj(1));  // constant term not a rational constant
  CHECK_THROWS_AS(t.inverse(), std::invalid_argument);
}

TEST_CASE("inverted geometric series expands with signed h") {
  // 1 / prod(1 + b t): coefficient of t^m is (-1)^m h_m(B)
  std::vector<Polynomial> b = {uj(1), uj(2)};
  TruncatedPowerSeries prod = TruncatedPowerSeries::one(kSpace, 4);
  for (const Polynomial& bi : b)
    prod = prod * TruncatedPowerSeries::one_plus(bi, 4);
  TruncatedPowerSeries inv = prod.inverse();
  for (int m = 0; m <= 4; ++m) {
    Polynomial expect = complete_homogeneous(m, kSpace, b);
    if (m % 2 == 1) expect = -expect;
    CHECK(inv.coeff(m) == expect);
  }
}

TEST_CASE("series coefficient equals the alternating e-h sum") {
  std::vector<Polynomial> A = {xi(1), xi(2), xi(3)};
  std::vector<Polynomial> B = {uj(1), uj(1), uj(2)};
  for (int d = 0; d <= 4; ++d) {
    Polynomial direct = Polynomial::zero(kSpace);
    for (int k = 0; k <= d; ++k) {
      Polynomial term = elementary_symmetric(k, kSpace, A) *
                        complete_homogeneous(d - k, kSpace, B);
      direct += ((d - k) % 2 == 0) ? term : -term;
    }
    CHECK(springer::series_coefficient(A, B, d, kSpace) == direct);
  }
}

TEST_CASE("series coefficient with empty denominator truncates") {
  std::vector<Polynomial> A = {xi(1), xi(2)};
  CHECK(springer::series_coefficient(A, {}, 2, kSpace) ==
        elementary_symmetric(2, kSpace, A));
  CHECK(springer::series_coefficient(A, {}, 3, kSpace).is_zero());
}

}  // TEST_SUITE

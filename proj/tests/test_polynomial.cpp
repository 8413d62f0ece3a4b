#include <doctest.h>

#include "springer/numeric.hpp"
#include "springer/polynomial.hpp"

using springer::Monomial;
using springer::NameMap;
using springer::Polynomial;
using springer::Term;
using springer::VariableSpace;

namespace {

const VariableSpace kSpace{3, 2, 1};  // x1..x3, u1..u2, t1

Polynomial var(int v) { return Polynomial::variable(kSpace, v); }
Polynomial xi(int i) { return var(kSpace.x_var(i)); }
Polynomial uj(int j) { return var(kSpace.u_var(j)); }

/* Small deterministic polynomial soup for algebraic property checks. */
Polynomial random_poly(springer::SeededStream& rng) {
  Polynomial p = Polynomial::zero(kSpace);
  int terms = 1 + static_cast<int>(rng.below(4));
  for (int t = 0; t < terms; ++t) {
    Monomial m(kSpace.total());
    for (int v = 0; v < kSpace.total(); ++v)
      m.set_exp(v, static_cast<int>(rng.below(3)));
    long c = static_cast<long>(rng.below(9)) - 4;
    p += Polynomial::from_terms(kSpace, {{m, mpq_class(c)}});
  }
  return p;
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("variable space naming and lookup") {
  CHECK(kSpace.total() == 6);
  CHECK(kSpace.name(0) == "x1");
  CHECK(kSpace.name(2) == "x3");
  CHECK(kSpace.name(3) == "u1");
  CHECK(kSpace.name(5) == "t1");
  CHECK(kSpace.family(4) == 'u');
  CHECK(kSpace.family_index(4) == 2);
  CHECK(kSpace.find("x2") == 1);
  CHECK(kSpace.find("t1") == 5);
  CHECK_FALSE(kSpace.find("t2").has_value());
  CHECK_FALSE(kSpace.find("z1").has_value());
  CHECK(kSpace.x_var(1) == 0);
  CHECK(kSpace.u_var(2) == 4);
  CHECK(kSpace.t_var(1) == 5);
}

TEST_CASE("canonical text form") {
  // x1^2*u1 - 3*u1^2
  Polynomial p = xi(1) * xi(1) * uj(1) - uj(1) * uj(1) * mpq_class(3);
  CHECK(p.to_text() == "x1^2*u1 - 3*u1^2");
  CHECK(Polynomial::zero(kSpace).to_text() == "0");
  CHECK(Polynomial::constant(kSpace, mpq_class(-5, 2)).to_text() == "-5/2");
  CHECK((xi(1) - xi(2)).to_text() == "x1 - x2");
  CHECK((Polynomial::constant(kSpace, 1) - xi(3)).to_text() == "-x3 + 1");
}

TEST_CASE("display rename for the cohomology flavors") {
  NameMap names;
  names.x_as = 'y';
  Polynomial p = xi(2) * uj(1);
  CHECK(p.to_text(names) == "y2*u1");
}

TEST_CASE("canonical order is graded then reverse-lex") {
  Monomial a(2), b(2);
  a.set_exp(0, 2);              // x1^2
  b.set_exp(0, 1);
  b.set_exp(1, 1);              // x1*x2
  CHECK(springer::canonical_cmp(a, b) > 0);  // same degree: later variable smaller
  Monomial c(2);
  c.set_exp(1, 3);              // x2^3 has higher degree
  CHECK(springer::canonical_cmp(c, a) > 0);
  CHECK(springer::canonical_cmp(a, a) == 0);
}

TEST_CASE("terms are kept sorted descending with no zeros") {
  Polynomial p = xi(2) + xi(1) * xi(3) - xi(2);
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms()[0].coeff == 1);
  CHECK(p.to_text() == "x1*x3");
}

TEST_CASE("from_terms merges duplicates") {
  Monomial m(kSpace.total());
  m.set_exp(0, 1);
  Polynomial p = Polynomial::from_terms(
      kSpace, {{m, mpq_class(2)}, {m, mpq_class(-2)}});
  CHECK(p.is_zero());
}

TEST_CASE("ring axioms on seeded random polynomials") {
  springer::SeededStream rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * Polynomial::constant(kSpace, 1) == a);
    CHECK((a * Polynomial::zero(kSpace)).is_zero());
  }
}

TEST_CASE("pow matches repeated multiplication") {
  Polynomial p = xi(1) + uj(2);
  Polynomial q = Polynomial::constant(kSpace, 1);
  for (int k = 0; k <= 5; ++k) {
    CHECK(p.pow(k) == q);
    q *= p;
  }
  CHECK(p.pow(0) == Polynomial::constant(kSpace, 1));
}

TEST_CASE("mixed variable spaces are rejected") {
  VariableSpace other{2, 0, 0};
  Polynomial a = xi(1);
  Polynomial b = Polynomial::variable(other, 0);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("substitution maps variables through images") {
  VariableSpace target{0, 2, 0};
  Polynomial image_u1 = Polynomial::variable(target, target.u_var(1));
  // x1 -> u1 + 1, everything else constant 0
  Polynomial p = xi(1) * xi(1);
  Polynomial q = p.substituted(target, [&](int v) {
    if (v == kSpace.x_var(1))
      return image_u1 + Polynomial::constant(target, 1);
    return Polynomial::zero(target);
  });
  Polynomial expect = image_u1 * image_u1 +
                      image_u1 * mpq_class(2) +
                      Polynomial::constant(target, 1);
  CHECK(q == expect);
}

TEST_CASE("substitution keeps coefficients exact") {
  Polynomial p = xi(1) * mpq_class(3, 7) - uj(1) * mpq_class(1, 7);
  Polynomial q = p.substituted(kSpace, [&](int v) { return var(v); });
  CHECK(q == p);
}

TEST_CASE("evaluation at a rational point") {
  Polynomial p = xi(1) * xi(1) * uj(1) - uj(2) * mpq_class(3);
  std::vector<mpq_class> point(kSpace.total(), 0);
  point[kSpace.x_var(1)] = 2;
  point[kSpace.u_var(1)] = 3;
  point[kSpace.u_var(2)] = mpq_class(1, 3);
  CHECK(p.evaluate(point) == 11);
}

TEST_CASE("monomial arithmetic") {
  Monomial a(3), b(3);
  a.set_exp(0, 2);
  a.set_exp(1, 1);
  b.set_exp(1, 1);
  b.set_exp(2, 3);
  Monomial ab = a * b;
  CHECK(ab.degree() == 7);
  CHECK(ab.exp(1) == 2);
  CHECK(b.divides(ab));
  CHECK_FALSE(ab.divides(b));
  CHECK(b.divide_into(ab) == a);
  Monomial l = Monomial::lcm(a, b);
  CHECK(l.exp(0) == 2);
  CHECK(l.exp(1) == 1);
  CHECK(l.exp(2) == 3);
  Monomial c(3);
  c.set_exp(2, 1);
  CHECK(a.coprime(c));
  CHECK_FALSE(a.coprime(b));
}

TEST_CASE("monomial text form") {
  Monomial m(kSpace.total());
  m.set_exp(kSpace.x_var(1), 2);
  m.set_exp(kSpace.u_var(1), 1);
  CHECK(springer::monomial_to_text(kSpace, m) == "x1^2*u1");
  CHECK(springer::monomial_to_text(kSpace, Monomial(kSpace.total())) == "1");
}

}  // TEST_SUITE

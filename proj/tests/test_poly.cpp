#include <doctest.h>

#include <random>

#include "dbcell/poly.hpp"

using namespace dbcell;

namespace {
Poly X() { return Poly::variable(var("X")); }
Poly Y() { return Poly::variable(var("Y")); }
Poly Z() { return Poly::variable(var("Z")); }
Poly one() { return Poly(Rat(1)); }
}  // namespace

TEST_CASE("canonical form is construction-order independent") {
  Poly a = (X() + Y()) * (X() - Y());
  Poly b = X() * X() - Y() * Y();
  CHECK(a == b);
  CHECK((X() + one()) * (X() - one()) + one() == X() * X());
}

TEST_CASE("degrees") {
  Poly p = (X() + one()).pow(2) * Y();
  CHECK(p.degree(var("X")) == 2);
  CHECK(p.degree(var("Y")) == 1);
  CHECK(p.degree(var("Z")) == 0);
  CHECK(p.total_degree() == 3);
}

TEST_CASE("gcd basics") {
  Poly a = (X() + one()) * (X() - one());
  Poly b = (X() + one()) * (X() + one());
  CHECK(poly_gcd(a, b) == X() + one());
  CHECK(poly_gcd(a, Poly()) == a.primitive_normalized());
  CHECK(poly_gcd(X(), Y()).is_one());
}

TEST_CASE("multivariate gcd") {
  Poly g = X() * Y() + one();
  Poly a = g * (X() + Y());
  Poly b = g * (X() * X() + Y());
  CHECK(poly_gcd(a, b) == g);

  Poly g2 = (X() + Y() + Z()).pow(2);
  Poly p = g2 * (X() - Y());
  Poly q = g2 * (Y() + Z());
  Poly got = poly_gcd(p, q);
  CHECK(got == g2.primitive_normalized());
}

TEST_CASE("gcd of random products divides both") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto rand_poly = [&](int terms) {
    Poly p;
    for (int t = 0; t < terms; ++t) {
      int c = coeff(rng);
      if (c == 0) c = 1;
      p += Poly::monomial(Rat(c), {{var("X"), static_cast<int>(rng() % 3)},
                                   {var("Y"), static_cast<int>(rng() % 3)}});
    }
    return p;
  };
  for (int i = 0; i < 25; ++i) {
    Poly f = rand_poly(3), g = rand_poly(3), h = rand_poly(2);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    Poly d = poly_gcd(f * h, g * h);
    CHECK_NOTHROW(poly_divexact(f * h, d));
    CHECK_NOTHROW(poly_divexact(g * h, d));
    // h divides the gcd
    CHECK_NOTHROW(poly_divexact(d, poly_gcd(d, h.primitive_normalized())));
    Poly hp = h.primitive_normalized();
    CHECK(poly_gcd(d, hp) == hp);
  }
}

TEST_CASE("exact division errors on non-divisors") {
  CHECK_THROWS_AS(poly_divexact(X() * X() + one(), X() + one()), IntegrityError);
  CHECK_THROWS_AS(poly_divexact(X(), Poly()), DivisionByZero);
}

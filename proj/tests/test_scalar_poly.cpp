#include <random>

#include "doctest.h"

#include "gwa/poly.hpp"
#include "gwa/random.hpp"
#include "gwa/verify.hpp"

using namespace gwa;

namespace {
UniPoly z = UniPoly::z();
UniPoly sphere_p() { return z * (UniPoly(1) - z); }
}  // namespace

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-6/8").str() == "-3/4");
  CHECK(Rational::parse(" 5 ").str() == "5");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK(Rational(2).pow(-3) == Rational(1, 8));
  CHECK(binomial(6, 2) == Rational(15));
}

TEST_CASE("polynomial printing is ascending") {
  CHECK((UniPoly(1) - Rational(3) * z + z * z).str() == "1 - 3*z + z^2");
  CHECK(UniPoly().str() == "0");
  CHECK((z * Rational(1, 2)).str() == "1/2*z");
}

TEST_CASE("apply_auto examples") {
  AffineAuto s4(Rational(4), Rational(0));
  UniPoly quarter = z * Rational(1, 4);
  CHECK(s4.apply(-1, sphere_p()) == quarter * (UniPoly(1) - quarter));
  CHECK(s4.apply(0, sphere_p()) == sphere_p());
  AffineAuto s23(Rational(2), Rational(3));
  CHECK(s23.apply(2, z) == Rational(4) * z + UniPoly(9));
  AffineAuto translation(Rational(1), Rational(5));
  CHECK(translation.apply(3, z) == z + UniPoly(15));
}

TEST_CASE("apply_auto is a group action") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> j(-4, 4);
  AffineAuto s(Rational(3), Rational(1, 2));
  for (int t = 0; t < 50; ++t) {
    UniPoly f = random_poly(rng, 6);
    int a = j(rng), b = j(rng);
    CHECK(s.apply(a, s.apply(b, f)) == s.apply(a + b, f));
    CHECK(s.apply(a, f) == oracle::shift(f, s.q(), s.r(), a));
  }
}

TEST_CASE("s_n examples and recursion") {
  AffineAuto s(Rational(4), Rational(0));
  CHECK(s_n(sphere_p(), s, 0) == UniPoly(1));
  CHECK(s_n(sphere_p(), s, 1) == sphere_p());
  UniPoly quarter = z * Rational(1, 4);
  CHECK(s_n(sphere_p(), s, 2) == sphere_p() * quarter * (UniPoly(1) - quarter));
  AffineAuto t(Rational(3), Rational(1, 2));
  UniPoly p = z.pow(2) * (UniPoly(2) - z);
  for (int n = 0; n <= 6; ++n) CHECK(s_n(p, t, n + 1) == s_n(p, t, n) * t.apply(-n, p));
}

TEST_CASE("factor_zero_root and hat_decompose") {
  auto split = factor_zero_root(z.pow(2) * (UniPoly(1) - z));
  CHECK(split.k == 2);
  CHECK(split.tilde == UniPoly(1) - z);
  CHECK(factor_zero_root(UniPoly(1) - z).k == 0);
  auto cube = factor_zero_root(z.pow(3));
  CHECK(cube.k == 3);
  CHECK(cube.tilde == UniPoly(1));
  CHECK_THROWS_WITH(factor_zero_root(UniPoly()), doctest::Contains("undefined factorization"));

  CHECK(hat_decompose(UniPoly(1) - z) == UniPoly(1));
  CHECK(hat_decompose(UniPoly(Rational(7))).is_zero());
  CHECK(hat_decompose(UniPoly(1) - Rational(3) * z + z * z) == UniPoly(3) - z);

  std::mt19937 rng(8);
  for (int t = 0; t < 50; ++t) {
    UniPoly p = random_poly(rng, 8);
    if (p.is_zero()) continue;
    auto [k, tilde] = factor_zero_root(p);
    CHECK(z.pow(k) * tilde == p);
    CHECK(tilde.coeff(0) != Rational(0));
    CHECK(UniPoly(tilde.coeff(0)) - z * hat_decompose(tilde) == tilde);
  }
}

TEST_CASE("division and evaluation") {
  UniPoly p = z.pow(3) - UniPoly(1);
  auto [quot, rem] = p.divmod(z - UniPoly(1));
  CHECK(quot == z * z + z + UniPoly(1));
  CHECK(rem.is_zero());
  CHECK(p.eval(Rational(2)) == Rational(7));
  CHECK(p.eval(0.5) == doctest::Approx(-0.875));
  CHECK(p.compose_affine(Rational(2), Rational(1)) == oracle::substitute(p, Rational(2), Rational(1)));
}

TEST_CASE("pair polynomials") {
  PairPoly zp = PairPoly::monomial(1, 0), zm = PairPoly::monomial(0, 1);
  PairPoly prod = zp * zm;
  CHECK(prod == PairPoly::monomial(1, 1));
  CHECK(PairPoly::from_product(UniPoly(1) - z) == PairPoly(1) - prod);
  CHECK((PairPoly(1) - prod).as_product_poly() == UniPoly(1) - z);
  CHECK_FALSE(zp.as_product_poly().has_value());
  CHECK(prod.scale_vars(Rational(2), Rational(3)) == PairPoly::monomial(1, 1, Rational(6)));
  CHECK((zp * zp + zm).str() == "zm + zp^2");
}

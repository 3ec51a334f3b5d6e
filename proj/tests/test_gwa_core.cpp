#include <random>

#include "doctest.h"

#include "gwa/random.hpp"
#include "gwa/verify.hpp"
#include "gwa/weyl.hpp"

using namespace gwa;

namespace {
UniPoly z = UniPoly::z();
GwaAlgebra sphere4() { return GwaAlgebra(z * (UniPoly(1) - z), Rational(4), Rational(0)); }
GwaAlgebra shifted() { return GwaAlgebra(z.pow(2) * (UniPoly(1) - z) * (UniPoly(2) - z), Rational(3), Rational(1, 2)); }
}  // namespace

TEST_CASE("addition") {
  GwaAlgebra b = sphere4();
  GwaElem f = b.term(1, z), g = b.term(1, UniPoly(3));
  CHECK(f + g == b.term(1, z + UniPoly(3)));
  CHECK(f + b.zero() == f);
  GwaElem s = b.x() + b.y();
  CHECK(s.terms().size() == 2);
  CHECK(s.coeff(1) == UniPoly(1));
  CHECK(s.coeff(-1) == UniPoly(1));
  CHECK_THROWS(b.x() + shifted().x());
}

TEST_CASE("defining relations") {
  for (const GwaAlgebra& b : {sphere4(), shifted()}) {
    const UniPoly& p = b.p();
    CHECK(b.y() * b.x() == b.poly(p));
    CHECK(b.x() * b.y() == b.poly(p.compose_affine(b.q(), b.r())));
    UniPoly qz_r = z * b.q() + UniPoly(b.r());
    CHECK(b.x() * b.z() == b.poly(qz_r) * b.x());
    CHECK(b.z() * b.y() == b.y() * b.poly(qz_r));
    CHECK(b.one() * b.x() == b.x());
    CHECK(b.y() * b.one() == b.y());
  }
  GwaAlgebra b = sphere4();
  CHECK(b.x() * b.z() == b.poly(Rational(4) * z) * b.x());
  CHECK((b.x() * b.z()).coeff(1) == z);
}

TEST_CASE("normal form printing") {
  GwaAlgebra b = sphere4();
  CHECK((b.y() * b.x()).str() == "z - z^2");
  CHECK(b.term(2, UniPoly(1) - z).str() == "x^2*(1 - z)");
  CHECK((b.term(2, UniPoly(1) - z) + b.scalar(Rational(3, 2)) + b.term(-1, z * z)).str() ==
        "x^2*(1 - z) + (3/2) + y*(z^2)");
  CHECK(b.zero().str() == "0");
}

TEST_CASE("x^n y^n and y^n x^n") {
  for (const GwaAlgebra& b : {sphere4(), shifted()}) {
    for (int n = 1; n <= 4; ++n) {
      UniPoly sn = oracle::s_n(b.p(), b.q(), b.r(), n);
      CHECK(power(b.y(), n) * power(b.x(), n) == b.poly(sn));
      CHECK(power(b.x(), n) * power(b.y(), n) == b.poly(oracle::shift(sn, b.q(), b.r(), n)));
    }
  }
}

TEST_CASE("commutators") {
  GwaAlgebra b = sphere4();
  CHECK(commutator(b.z(), power(b.z(), 2)).is_zero());
  CHECK(commutator(b.x(), b.y()) == b.poly(b.p().compose_affine(Rational(4), Rational(0)) - b.p()));
  CHECK(commutator_basis(b, 0, 2, 1).is_zero());
  CHECK(commutator_basis(b, 1, 0, 0) == b.poly(b.p().compose_affine(Rational(4), Rational(0)) - b.p()));
  UniPoly s2 = oracle::s_n(b.p(), Rational(4), Rational(0), 2);
  CHECK(commutator_basis(b, 2, 1, 0) ==
        b.poly(oracle::shift(s2, Rational(4), Rational(0), 2) * (Rational(16) * z) - s2 * z));

  for (const GwaAlgebra& alg : {sphere4(), shifted()}) {
    for (int n = 0; n <= 3; ++n)
      for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
          GwaElem lhs = power(alg.x(), n) * power(alg.z(), k);
          GwaElem rhs = power(alg.z(), l) * power(alg.y(), n);
          CHECK(commutator_basis(alg, n, k, l) == commutator(lhs, rhs));
        }
  }
}

TEST_CASE("associativity and unit on random elements") {
  for (const GwaAlgebra& b : {sphere4(), shifted()}) {
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
      GwaElem a = random_gwa_elem(b, rng, 3, 3), c = random_gwa_elem(b, rng, 3, 3), d = random_gwa_elem(b, rng, 3, 3);
      CHECK((a * c) * d == a * (c * d));
      CHECK(a * b.one() == a);
      CHECK(b.one() * a == a);
      CHECK(a * (c + d) == a * c + a * d);
    }
  }
}

TEST_CASE("free reduction agrees with the engine on short words") {
  GwaAlgebra b = shifted();
  for (const char* word : {"xy", "yx", "xzy", "yyxx", "zxyzy", "xxzyy"}) {
    GwaElem prod = b.one();
    for (const char* c = word; *c; ++c) prod = prod * (*c == 'x' ? b.x() : *c == 'y' ? b.y() : b.z());
    CHECK_MESSAGE(oracle::to_left(prod) == oracle::free_reduce(b.p(), b.q(), b.r(), word), word);
  }
}

TEST_CASE("q = 1 is a plain skew ring") {
  GwaAlgebra b(z, Rational(1), Rational(1));
  CHECK(b.x() * b.y() - b.y() * b.x() == b.one());
}

#include <random>

#include "doctest.h"

#include "gwa/ambient.hpp"
#include "gwa/config.hpp"
#include "gwa/random.hpp"

using namespace gwa;

namespace {
UniPoly z = UniPoly::z();
AmbAlgebra sphere() { return AmbAlgebra(z * (UniPoly(1) - z), Rational(2), Rational(2)); }
AmbAlgebra lens2() { return AmbAlgebra(z.pow(2) * (UniPoly(1) - z), Rational(2), Rational(2)); }
}  // namespace

TEST_CASE("construction") {
  AmbAlgebra a = lens2();
  CHECK(a.k() == 2);
  CHECK(a.p_tilde() == UniPoly(1) - z);
  CHECK(a.p_hat() == UniPoly(1));
  CHECK(a.q() == Rational(4));
  CHECK(a.base() == GwaAlgebra(a.p(), Rational(4), Rational(0)));
  CHECK_THROWS_AS(AmbAlgebra(UniPoly(1) - z, Rational(2), Rational(2)), std::invalid_argument);
}

TEST_CASE("x+ x- relations") {
  for (const AmbAlgebra& a : {sphere(), lens2(), preset("kleinian-demo").ambient()}) {
    PairPoly zz = PairPoly::monomial(1, 1);
    CHECK(a.xp() * a.xm() == a.poly(PairPoly::from_product(a.p_tilde())));
    CHECK(a.xm() * a.xp() == a.poly(PairPoly::from_product(a.p_tilde().compose_affine(a.q(), Rational(0)))));
    CHECK(a.xp() * a.zp() * a.q_plus() == a.zp() * a.xp());
    CHECK(a.xp() * a.zm() * a.q_minus() == a.zm() * a.xp());
    CHECK(a.xm() * a.zp() == a.zp() * a.xm() * a.q_plus());
    CHECK(a.xm() * a.zm() == a.zm() * a.xm() * a.q_minus());
    CHECK(a.zp() * a.zm() == a.poly(zz));
  }
  AmbAlgebra s = sphere();
  CHECK(s.xm() * s.xp() + s.zm() * s.zp() * Rational(4) == s.one());
}

TEST_CASE("degrees") {
  AmbAlgebra s = sphere();
  auto split = degree_split(s.zp() * s.zm());
  CHECK(split.size() == 1);
  CHECK(split.at(0) == s.zp() * s.zm());
  CHECK(s.xm().degree() == -1);
  CHECK(s.xp().degree() == 1);
  CHECK((s.xm() * s.zp() * s.zp()).degree() == 1);
  CHECK_FALSE((s.xm() + s.zp()).degree().has_value());
  AmbElem mixed = s.xm() + s.zp() + s.one();
  auto parts = degree_split(mixed);
  CHECK(parts.size() == 3);
  CHECK(parts.at(-1) == s.xm());

  AmbAlgebra l = lens2();
  CHECK(l.xp().degree() == 2);
  CHECK(veronese_component(l, 1, l.xp()) == l.xp());
  CHECK(veronese_component(l, 1, l.zp()).is_zero());
  CHECK(veronese_component(l, 0, l.zp()).is_zero());
  AmbElem leg = amb_power(l.zm(), 2);
  CHECK(veronese_component(l, -1, leg) == leg);
}

TEST_CASE("grading is respected by products") {
  AmbAlgebra a = lens2();
  std::mt19937 rng(4);
  for (int t = 0; t < 40; ++t) {
    AmbElem x = random_amb_elem(a, rng, 2, 3), y = random_amb_elem(a, rng, 2, 3);
    auto sx = degree_split(x), sy = degree_split(y);
    std::map<int, AmbElem> expected;
    for (auto& [d1, e1] : sx)
      for (auto& [d2, e2] : sy) {
        auto [it, fresh] = expected.try_emplace(d1 + d2, e1 * e2);
        if (!fresh) it->second += e1 * e2;
      }
    auto got = degree_split(x * y);
    for (auto& [d, e] : expected) {
      if (e.is_zero()) continue;
      REQUIRE(got.count(d));
      CHECK(got.at(d) == e);
    }
  }
}

TEST_CASE("associativity") {
  for (const AmbAlgebra& a : {sphere(), lens2()}) {
    std::mt19937 rng(12);
    for (int t = 0; t < 100; ++t) {
      AmbElem u = random_amb_elem(a, rng, 2, 3), v = random_amb_elem(a, rng, 2, 3), w = random_amb_elem(a, rng, 2, 3);
      CHECK((u * v) * w == u * (v * w));
    }
  }
}

TEST_CASE("embedding of B(p;q,0)") {
  AmbAlgebra s = sphere();
  const GwaAlgebra& b = s.base();
  CHECK(embed_B(s, b.z()) == s.zp() * s.zm());
  CHECK(embed_B(s, b.one()) == s.one());
  CHECK(embed_B(s, b.y() * b.x()) == embed_B(s, b.y()) * embed_B(s, b.x()));
  CHECK(embed_B(s, b.y() * b.x()) == embed_B(s, b.poly(b.p())));
  CHECK(project_degree_zero(s, s.zp() * s.zm()) == b.z());
  CHECK(project_degree_zero(s, s.monomial(1, 2, 1)) == b.x() * b.z());
  CHECK_THROWS_AS(project_degree_zero(s, s.zp()), std::invalid_argument);
  GwaAlgebra other(s.p(), Rational(4), Rational(1));
  CHECK_THROWS(embed_B(s, other.x()));

  for (const AmbAlgebra& a : {sphere(), lens2(), preset("kleinian-demo").ambient()}) {
    const GwaAlgebra& base = a.base();
    GwaElem x = base.x(), y = base.y(), zz = base.z();
    AmbElem ex = embed_B(a, x), ey = embed_B(a, y), ez = embed_B(a, zz);
    CHECK(ey * ex == embed_B(a, base.poly(base.p())));
    CHECK(ex * ey == embed_B(a, base.poly(base.p().compose_affine(base.q(), Rational(0)))));
    CHECK(ex * ez == embed_B(a, base.poly(z * base.q())) * ex);
    std::mt19937 rng(21);
    for (int t = 0; t < 100; ++t) {
      GwaElem u = random_gwa_elem(base, rng, 3, 3), v = random_gwa_elem(base, rng, 3, 3);
      CHECK(embed_B(a, u * v) == embed_B(a, u) * embed_B(a, v));
      CHECK(project_degree_zero(a, embed_B(a, u)) == u);
      AmbElem h = random_homogeneous(a, rng, 0, 3);
      CHECK(embed_B(a, project_degree_zero(a, h)) == h);
    }
  }
}

TEST_CASE("printing") {
  AmbAlgebra s = sphere();
  CHECK(s.monomial(1, 2, 1).str() == "xm*(zp^2*zm)");
  CHECK(s.zero().str() == "0");
}

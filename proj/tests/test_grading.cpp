#include "doctest.h"

#include "gwa/config.hpp"
#include "gwa/connection.hpp"
#include "gwa/grading.hpp"

using namespace gwa;

namespace {
AmbAlgebra sphere() { return preset("sphere").ambient(); }
AmbAlgebra lens2() { return preset("lens(2,1,2)").ambient(); }

bool legs_in(const GradedView& v, const Witness& w, int g) {
  for (auto& t : w.terms)
    if (v.degree(t.a) != v.normalize(g) || v.degree(t.b) != v.normalize(-g)) return false;
  return true;
}
}  // namespace

TEST_CASE("exact solver") {
  ExactMatrix m(3, 3);
  m.set(0, 0, Rational(2));
  m.set(0, 1, Rational(1));
  m.set(1, 1, Rational(3));
  m.set(2, 0, Rational(2));
  m.set(2, 1, Rational(4));
  CHECK(m.rank() == 2);
  auto x = m.solve({Rational(3), Rational(3), Rational(6)});
  REQUIRE(x);
  CHECK(Rational(2) * (*x)[0] + (*x)[1] == Rational(3));
  CHECK(Rational(3) * (*x)[1] == Rational(3));
  CHECK_FALSE(m.solve({Rational(3), Rational(3), Rational(7)}).has_value());
}

TEST_CASE("views") {
  AmbAlgebra s = sphere();
  ViewPtr zv = ambient_view(s);
  CHECK(zv->modulus() == 0);
  CHECK(zv->degree(s.zp()) == 1);
  ViewPtr trivial = induced_quotient_view(zv, 1);
  CHECK(trivial->degree(s.zp()) == 0);
  CHECK(trivial->degree(s.xm() + s.zp()) == 0);
  ViewPtr same = veronese_view(zv, 1);
  for (int g : {-2, 0, 1, 3}) CHECK(same->enumerate_basis(g, 5) == zv->enumerate_basis(g, 5));

  AmbAlgebra l = lens2();
  ViewPtr v2 = veronese_view(ambient_view(l), 2);
  CHECK(v2->degree(l.xp()) == 1);
  CHECK_THROWS_AS(v2->split(l.zp()), std::invalid_argument);
  ViewPtr q2 = induced_quotient_view(ambient_view(l), 2);
  CHECK(q2->degree(l.zp() * l.zp() * l.zp()) == 1);
  CHECK(q2->normalize(-1) == 1);
}

TEST_CASE("witnesses on the sphere") {
  AmbAlgebra s = sphere();
  ViewPtr v = veronese_view(ambient_view(s), 1);
  auto w = witness_search(*v, 1, 2);
  REQUIRE(w);
  CHECK(w->check());
  CHECK(w->product_sum() == s.one());
  CHECK(legs_in(*v, *w, 1));
  for (auto& t : w->terms) {
    bool ok = t.a == s.zp() || t.a == s.xp();
    CHECK(ok);
  }
  auto unit = witness_search(*v, 0, 1);
  REQUIRE(unit);
  CHECK(unit->check());
  CHECK(witness_from_tensor(omega_n(s, -3)).check());
}

TEST_CASE("strong and non-strong gradings for k = 2") {
  AmbAlgebra l = lens2();
  ViewPtr zv = ambient_view(l);
  ViewPtr v2 = veronese_view(zv, 2);
  for (int g : {1, -1}) {
    auto w = witness_search(*v2, g, 4);
    REQUIRE(w);
    CHECK(w->check());
    CHECK(legs_in(*v2, *w, g));
  }
  CHECK_FALSE(witness_search(*zv, 1, 10).has_value());
  CHECK_FALSE(witness_search(*zv, -1, 10).has_value());
  CHECK_FALSE(witness_search(*induced_quotient_view(zv, 2), 1, 8).has_value());
  auto unit = witness_search(*zv, 0, 1);
  REQUIRE(unit);
  CHECK(unit->check());
}

TEST_CASE("monotone in the bound") {
  AmbAlgebra s = sphere();
  ViewPtr zv = ambient_view(s);
  for (int d = 1; d <= 6; ++d) {
    CAPTURE(d);
    CHECK(witness_search(*zv, 2, d).has_value() <= witness_search(*zv, 2, d + 1).has_value());
  }
  CHECK(witness_search(*zv, 2, 6).has_value());
}

TEST_CASE("composing witnesses along Z > 2Z") {
  for (auto name : {"sphere", "lens(2,1,2)"}) {
    AmbAlgebra a = preset(name).ambient();
    ViewPtr ver = veronese_view(ambient_view(a), a.k());
    ViewPtr qv = induced_quotient_view(ver, 2);
    std::map<int, Witness> quotient;
    for (int h = 0; h < 2; ++h) {
      auto w = witness_search(*qv, h, 4);
      REQUIRE(w);
      quotient.emplace(h, *w);
    }
    std::map<int, Witness> kernel;
    for (int c = -3; c <= 3; ++c)
      if (c != 0) kernel.emplace(c, witness_from_tensor(omega_n(a, -2 * c, 6)));
    for (int g : {1, 2, -1}) {
      Witness w = compose_witnesses(*ver, 2, quotient, kernel, g);
      CHECK(w.check());
      CHECK(legs_in(*ver, w, g));
    }
    Witness zero = compose_witnesses(*ver, 2, {}, {}, 0);
    REQUIRE(zero.terms.size() == 1);
    CHECK(zero.check());
    CHECK_THROWS_WITH(compose_witnesses(*ver, 2, quotient, {}, 1), doctest::Contains("K-degree"));
  }
}

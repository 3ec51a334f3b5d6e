#include <random>

#include "doctest.h"

#include "gwa/config.hpp"
#include "gwa/expr.hpp"
#include "gwa/random.hpp"

using namespace gwa;
using nlohmann::json;

namespace {
UniPoly z = UniPoly::z();
}

TEST_CASE("parser") {
  Expr yx = parse("y*x");
  CHECK(yx.kind == Expr::Kind::Product);
  CHECK(yx.args.size() == 2);
  Expr e = parse("x^2*(1 - 3/2*z)");
  REQUIRE(e.kind == Expr::Kind::Product);
  CHECK(e.args[0].kind == Expr::Kind::Power);
  CHECK(e.args[0].exponent == 2);
  CHECK(e.args[1].kind == Expr::Kind::Sum);
  CHECK(parse("  - z +  x  ").kind == Expr::Kind::Sum);
  CHECK_THROWS_AS(parse("x^-1"), ParseError);
  try {
    parse("x^-1");
  } catch (const ParseError& err) {
    CHECK(err.position() == 2);
  }
  CHECK_THROWS_AS(parse("w*x"), ParseError);
  CHECK_THROWS_AS(parse("(x"), ParseError);
  CHECK_THROWS_AS(parse("x y"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("1/0"), ParseError);
}

TEST_CASE("algebra detection and evaluation") {
  CHECK(detect_algebra(parse("3/4")) == AlgebraKind::Scalar);
  CHECK(detect_algebra(parse("x*z")) == AlgebraKind::Weyl);
  CHECK(detect_algebra(parse("xp*zm")) == AlgebraKind::Ambient);
  CHECK_THROWS_AS(detect_algebra(parse("x*xp")), std::invalid_argument);

  Config sphere = preset("sphere");
  GwaAlgebra b = sphere.weyl();
  CHECK(evaluate(parse("y*x"), b).str() == "z - z^2");
  CHECK(evaluate(parse("x^2*(1 - 3/2*z)"), b) == power(b.x(), 2) * b.poly(UniPoly(1) - z * Rational(3, 2)));
  CHECK(evaluate(parse("-(x - x)"), b).is_zero());
  AmbAlgebra a = sphere.ambient();
  CHECK(evaluate(parse("xm*xp + 4*zm*zp"), a) == a.one());
  CHECK_THROWS(evaluate(parse("xp"), b));
  CHECK_THROWS(evaluate(parse("x"), a));
}

TEST_CASE("print then parse is the identity") {
  for (auto name : {"sphere", "kleinian-demo"}) {
    Config c = preset(name);
    GwaAlgebra b = c.weyl();
    AmbAlgebra a = c.ambient();
    std::mt19937 rng(17);
    for (int t = 0; t < 50; ++t) {
      GwaElem e = random_gwa_elem(b, rng, 3, 4);
      CHECK_MESSAGE(evaluate(parse(e.str()), b) == e, e.str());
      AmbElem f = random_amb_elem(a, rng, 2, 3);
      CHECK_MESSAGE(evaluate(parse(f.str()), a) == f, f.str());
    }
  }
}

TEST_CASE("presets") {
  Config lens = preset("lens(1,1,2)");
  CHECK(lens.p == z * (UniPoly(1) - z));
  CHECK(lens.q_plus == Rational(2));
  CHECK(lens.q_minus == Rational(2));
  Config sphere = preset("sphere");
  CHECK(sphere.p == lens.p);
  CHECK(sphere.zetas == std::vector<Rational>{Rational(1)});
  CHECK(sphere.r.is_zero());
  Config kl = preset("kleinian-demo");
  CHECK(kl.p == z.pow(2) * (UniPoly(1) - z) * (UniPoly(2) - z));
  CHECK(kl.q_plus == Rational(3));
  CHECK(kl.q_minus == Rational(1));
  CHECK(kl.zetas.size() == 2);
  Config l2 = preset("lens(2,1,2)");
  CHECK(l2.ambient().k() == 2);
  Config l22 = preset("lens(1,2,2)");
  CHECK(l22.q() == Rational(16));
  CHECK(l22.p == z * (UniPoly(1) - z) * (UniPoly(1) - z * Rational(1, 4)));
  CHECK(l22.zetas == std::vector<Rational>{Rational(1), Rational(4)});
  CHECK_THROWS_AS(preset("torus"), std::invalid_argument);
  CHECK_THROWS_AS(preset("lens(0,1,2)"), std::invalid_argument);
}

TEST_CASE("json configs") {
  Config a = config_from_json(json::parse(R"({"p": {"coeffs": ["0", "1", "-1"]}, "q_plus": "2", "q_minus": "2", "zeta": "1"})"));
  CHECK(a.p == z * (UniPoly(1) - z));
  CHECK(a.zetas == std::vector<Rational>{Rational(1)});
  Config b = config_from_json(json::parse(R"({"p": {"roots": [["0", 2], ["1", 1], ["2", 1]], "scale": "2"},
                                               "q_plus": "3", "q_minus": "1", "r": "1/2", "zeta": ["1", "2"]})"));
  CHECK(b.p == z.pow(2) * (UniPoly(1) - z) * (UniPoly(2) - z));
  CHECK(b.r == Rational(1, 2));
  CHECK(b.zetas.size() == 2);
  CHECK(config_from_json(b.to_json()).p == b.p);
  CHECK_THROWS_WITH(config_from_json(json::parse(R"({"p": {"coeffs": ["0", "1"]}, "zeta": "3"})")),
                    doctest::Contains("not a root"));
  CHECK_THROWS(config_from_json(json::parse(R"({"p": {"coeffs": ["0"]}})")));
  CHECK_THROWS(config_from_json(json::parse(R"({"q_plus": "2"})")));
  CHECK_THROWS(config_from_json(json::parse(R"({"p": {"coeffs": [0.5]}})")));
  CHECK_THROWS(config_from_json(json::parse(R"({"p": {"coeffs": ["1", "1"]}, "q_plus": "0"})")));
  CHECK_THROWS((void)config_from_json(json::parse(R"({"p": {"coeffs": ["1", "1"]}})")).ambient());
}

#include <random>

#include "doctest.h"

#include "gwa/config.hpp"
#include "gwa/random.hpp"
#include "gwa/trace.hpp"
#include "gwa/verify.hpp"

using namespace gwa;

namespace {
UniPoly z = UniPoly::z();
UniPoly sphere_p() { return z * (UniPoly(1) - z); }
}  // namespace

TEST_CASE("admissibility") {
  CHECK(admissible_q(Rational(4)));
  CHECK(admissible_q(Rational(-1, 2)));
  CHECK_FALSE(admissible_q(Rational(1)));
  CHECK_FALSE(admissible_q(Rational(-1)));
  CHECK_FALSE(admissible_q(Rational(0)));
  CHECK_THROWS_AS(TraceFunctional(GwaAlgebra(sphere_p(), Rational(1), Rational(0)), Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(TraceFunctional(GwaAlgebra(sphere_p(), Rational(4), Rational(0)), Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(TraceFunctional(GwaAlgebra(UniPoly(1) - z, Rational(4), Rational(0)), Rational(1)),
                  std::invalid_argument);
}

TEST_CASE("t coefficients") {
  Rational q(3), r(1, 2);
  TraceFunctional tf(GwaAlgebra(sphere_p(), q, r), Rational(1));
  for (int n = 1; n <= 6; ++n) CHECK(tf.t_coeffs(n).back() == Rational(1));
  CHECK(tf.t_coeffs(2).front() == Rational(2) * r * q / (Rational(1) - q));
  TraceFunctional flat(GwaAlgebra(sphere_p(), Rational(4), Rational(0)), Rational(1));
  for (int n = 1; n <= 6; ++n) {
    auto t = flat.t_coeffs(n);
    for (int i = 0; i + 1 < n; ++i) CHECK(t[static_cast<std::size_t>(i)].is_zero());
  }
}

TEST_CASE("hat_tau against the linear-system oracle") {
  for (const Rational& r : {Rational(0), Rational(1, 2), Rational(-3)}) {
    for (const Rational& zeta : {Rational(1), Rational(2)}) {
      UniPoly p = z.pow(2) * (UniPoly(1) - z) * (UniPoly(2) - z);
      TraceFunctional tf(GwaAlgebra(p, Rational(3), r), zeta);
      auto expected = oracle::hat_tau_powers(Rational(3), r, zeta, 9);
      for (int m = 1; m <= 9; ++m) CHECK(tf.hat_tau(UniPoly::monomial(m)) == expected[static_cast<std::size_t>(m - 1)]);
      CHECK(tf.hat_tau(UniPoly(1)).is_zero());
    }
  }
  TraceFunctional tf(GwaAlgebra(sphere_p(), Rational(4), Rational(0)), Rational(1));
  for (int n = 1; n <= 5; ++n) CHECK(tf.hat_tau(UniPoly::monomial(n)) == Rational(1) / (Rational(1) - Rational(4).pow(n)));
}

TEST_CASE("shift identity") {
  for (const Rational& r : {Rational(0), Rational(1, 2)}) {
    TraceFunctional tf(GwaAlgebra(sphere_p(), Rational(4), r), Rational(1));
    std::mt19937 rng(31);
    for (int t = 0; t < 100; ++t) CHECK(shift_identity_holds(tf, random_poly(rng, 8)));
  }
}

TEST_CASE("tau on elements") {
  GwaAlgebra b(sphere_p(), Rational(4), Rational(0));
  TraceFunctional tf(b, Rational(1));
  CHECK(tf.tau(b.x() * power(b.z(), 3)).is_zero());
  CHECK(tf.tau(b.z()) == Rational(-1, 3));
  CHECK(tf.tau(b.one()).is_zero());
  CHECK(tf.tau(b.y() + b.z() * Rational(3)) == Rational(-1));
  CHECK_THROWS((void)tf.tau(GwaAlgebra(sphere_p(), Rational(2), Rational(0)).z()));
}

TEST_CASE("verify_trace") {
  GwaAlgebra b(sphere_p(), Rational(4), Rational(0));
  auto rep = verify_trace(TraceFunctional(b, Rational(1)), b, 3, 50);
  CHECK(rep.pass);
  CHECK(rep.commutators_checked == 64);
  CHECK(rep.pairs_checked == 50);
  UniPoly p = z.pow(2) * (UniPoly(1) - z) * (UniPoly(2) - z);
  GwaAlgebra k(p, Rational(3), Rational(0));
  CHECK(verify_trace(TraceFunctional(k, Rational(2)), k, 3, 50).pass);
  CHECK(verify_trace(TraceFunctional(k, Rational(0)), k, 3, 20).pass);
  GwaAlgebra shifted(p, Rational(3), Rational(1, 2));
  CHECK(verify_trace(TraceFunctional(shifted, Rational(1)), shifted, 3, 200).pass);
}

TEST_CASE("root identity for r = 0") {
  for (auto name : {"sphere", "lens(2,1,2)", "kleinian-demo", "lens(1,2,2)"}) {
    Config c = preset(name);
    AmbAlgebra a = c.ambient();
    for (auto& zeta : c.nonzero_zetas()) CHECK(zeta * a.p_hat().eval(zeta) == a.p_tilde().eval(Rational(0)));
  }
}

TEST_CASE("chern pairing") {
  AmbAlgebra s = preset("sphere").ambient();
  CHECK(chern_pairing(s, Rational(1), 1) == Rational(-1));
  CHECK(chern_pairing(s, Rational(1), 0).is_zero());
  AmbAlgebra l(z.pow(2) * (UniPoly(1) - z), Rational(2), Rational(2));
  CHECK(chern_pairing(l, Rational(1), 3) == Rational(-3));
  CHECK(chern_pairing(l, Rational(1), -3) == Rational(3));
  CHECK_THROWS_AS(chern_pairing(s, Rational(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(chern_pairing(s, Rational(3), 1), std::invalid_argument);
}

TEST_CASE("degenerate detection") {
  CHECK_FALSE(has_nonzero_root(z.pow(2)));
  CHECK_FALSE(has_nonzero_root(z * Rational(5)));
  CHECK(has_nonzero_root(sphere_p()));
  CHECK(has_nonzero_root(z * (z * z + UniPoly(1))));
}

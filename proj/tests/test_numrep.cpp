#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "doctest.h"

#include "gwa/numrep.hpp"

using namespace gwa;

namespace {
UniPoly z = UniPoly::z();
UniPoly sphere_p() { return z * (UniPoly(1) - z); }
}  // namespace

TEST_CASE("one-dimensional representations") {
  OneDimRep a = one_dim_rep(GwaAlgebra(sphere_p(), Rational(4), Rational(0)), 1);
  CHECK(a.z == 0.0);
  CHECK(a.x == 0.0);
  GwaAlgebra shifted((z - UniPoly(2)) * z, Rational(1, 2), Rational(1));
  for (int lambda : {1, -1}) {
    OneDimRep b = one_dim_rep(shifted, lambda);
    CHECK(b.z == doctest::Approx(2.0));
    CHECK(b.x == doctest::Approx(0.0));
  }
  GwaAlgebra positive(sphere_p(), Rational(1, 2), Rational(1, 4));
  OneDimRep c = one_dim_rep(positive, -1);
  CHECK(c.z == doctest::Approx(0.5));
  CHECK(c.x == doctest::Approx(-0.5));
  for (auto& [rel, v] : one_dim_residuals(positive, c)) CHECK_MESSAGE(v < 1e-12, rel);
  CHECK_THROWS_AS(one_dim_rep(GwaAlgebra(sphere_p(), Rational(1, 2), Rational(1)), 1), std::invalid_argument);
  CHECK_THROWS_AS(one_dim_rep(positive, 2), std::invalid_argument);
}

TEST_CASE("truncated representation") {
  GwaAlgebra b(sphere_p(), Rational(1, 4), Rational(0));
  TruncatedRep rep = truncated_rep(b, 1.0, 16);
  for (int k = 0; k < 16; ++k) CHECK(rep.z(k, k) == doctest::Approx(std::pow(0.25, k)));
  ResidualReport res = relation_residuals(b, rep);
  CHECK(res.max() < 1e-10);
  CHECK(res.first_index == 1);
  CHECK(res.last_index == 14);
  Eigen::MatrixXd yx = rep.y * rep.x;
  for (int k = 1; k <= 14; ++k) CHECK(std::abs(yx(k, k) - sphere_p().eval(std::pow(0.25, k))) < 1e-10);

  Eigen::VectorXd spectrum = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(rep.z).eigenvalues();
  std::vector<double> got(spectrum.data(), spectrum.data() + spectrum.size());
  std::sort(got.begin(), got.end());
  for (int k = 0; k < 16; ++k) CHECK(std::abs(got[static_cast<std::size_t>(15 - k)] - std::pow(0.25, k)) < 1e-12);
}

TEST_CASE("edge cases") {
  GwaAlgebra b(sphere_p(), Rational(1, 4), Rational(0));
  ResidualReport tiny = relation_residuals(b, truncated_rep(b, 1.0, 2));
  CHECK(tiny.first_index == 1);
  CHECK(tiny.last_index == 1);
  CHECK(tiny.max() < 1e-12);

  TruncatedRep broken = truncated_rep(b, 1.0, 8);
  broken.x(2, 3) += 1e-3;
  broken.y = broken.x.transpose();
  CHECK(relation_residuals(b, broken).max() > 1e-6);

  GwaAlgebra half(sphere_p(), Rational(1, 2), Rational(0));
  CHECK_THROWS_WITH(truncated_rep(half, 8.0, 4), doctest::Contains("k = 1"));
  CHECK_THROWS(truncated_rep(GwaAlgebra(sphere_p(), Rational(4), Rational(0)), 1.0, 4));
  CHECK_THROWS(truncated_rep(GwaAlgebra(sphere_p(), Rational(1, 4), Rational(1)), 1.0, 4));
  CHECK_THROWS(truncated_rep(b, 1.0, 1));
}

#pragma once

#include <Eigen/Dense>

#include <map>
#include <string>

#include "gwa/weyl.hpp"

namespace gwa {

/// Values of the generators in a real one-dimensional representation.
struct OneDimRep {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// z -> r/(1-q), x = y -> lambda sqrt(p(r/(1-q))), lambda = +/-1.
/// Throws std::invalid_argument for q = 1, |lambda| != 1 or a negative radicand.
OneDimRep one_dim_rep(const GwaAlgebra& alg, int lambda);

/// Relative residuals of xy = p(qz+r), yx = p(z), xz = (qz+r)x, yz = q^{-1}(z-r)y.
std::map<std::string, double> one_dim_residuals(const GwaAlgebra& alg, const OneDimRep& rep);

/// The first `dim` basis vectors of the representation
///   z e_k = q^k zeta e_k,   x e_k = sqrt(p(q^k zeta)) e_{k-1},   y = x^T.
struct TruncatedRep {
  int dim = 0;
  double zeta = 0.0;
  double q = 0.0;
  Eigen::MatrixXd x;
  Eigen::MatrixXd y;
  Eigen::MatrixXd z;
};

/// Needs r = 0, q in (0, 1) and p(q^k zeta) > 0 for 1 <= k <= dim; throws
/// std::invalid_argument naming the first k that fails.
TruncatedRep truncated_rep(const GwaAlgebra& alg, double zeta, int dim);

/// Max over basis vectors e_1 .. e_{max(1, dim-2)} of the residual norm of
/// each relation. xy = p(qz) is only taken up to e_{dim-2}: it is the one
/// relation the truncation breaks, at e_{dim-1}.
struct ResidualReport {
  double xy = 0.0;
  double yx = 0.0;
  double xz = 0.0;
  double yz = 0.0;
  int first_index = 1;
  int last_index = 0;
  /// p(q^k zeta) > 0 was only checked for k <= dim.
  int orbit_checked_up_to = 0;

  [[nodiscard]] double max() const;
};
ResidualReport relation_residuals(const GwaAlgebra& alg, const TruncatedRep& rep);

}  // namespace gwa

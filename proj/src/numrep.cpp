#include "gwa/numrep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gwa {

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

// f applied to a diagonal matrix.
Eigen::MatrixXd diag_apply(const UniPoly& f, const Eigen::MatrixXd& diag, double slope) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(diag.rows(), diag.cols());
  for (Eigen::Index i = 0; i < diag.rows(); ++i) out(i, i) = f.eval(slope * diag(i, i));
  return out;
}

}  // namespace

OneDimRep one_dim_rep(const GwaAlgebra& alg, int lambda) {
  if (lambda != 1 && lambda != -1) throw std::invalid_argument("lambda must be +1 or -1");
  if (alg.q().is_one()) throw std::invalid_argument("one-dimensional representation needs q != 1");
  Rational z0 = alg.r() / (Rational(1) - alg.q());
  Rational radicand = alg.p().eval(z0);
  if (radicand.sign() < 0) throw std::invalid_argument("p(r/(1-q)) = " + radicand.str() + " is negative");
  double x = lambda * std::sqrt(radicand.to_double());
  return {x, x, z0.to_double()};
}

std::map<std::string, double> one_dim_residuals(const GwaAlgebra& alg, const OneDimRep& rep) {
  double q = alg.q().to_double(), r = alg.r().to_double();
  const UniPoly& p = alg.p();
  return {
      {"xy", rel(rep.x * rep.y, p.eval(q * rep.z + r))},
      {"yx", rel(rep.y * rep.x, p.eval(rep.z))},
      {"xz", rel(rep.x * rep.z, (q * rep.z + r) * rep.x)},
      {"yz", rel(rep.y * rep.z, (rep.z - r) / q * rep.y)},
  };
}

TruncatedRep truncated_rep(const GwaAlgebra& alg, double zeta, int dim) {
  if (!alg.r().is_zero()) throw std::invalid_argument("truncated representation needs r = 0");
  double q = alg.q().to_double();
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("truncated representation needs q in (0, 1)");
  if (dim < 2) throw std::invalid_argument("truncation dimension must be at least 2");
  for (int k = 1; k <= dim; ++k) {
    double v = alg.p().eval(std::pow(q, k) * zeta);
    if (!(v > 0.0))
      throw std::invalid_argument("p(q^k zeta) = " + std::to_string(v) + " is not positive at k = " +
                                  std::to_string(k));
  }
  TruncatedRep rep{dim, zeta, q, Eigen::MatrixXd::Zero(dim, dim), {}, Eigen::MatrixXd::Zero(dim, dim)};
  for (int k = 0; k < dim; ++k) {
    rep.z(k, k) = std::pow(q, k) * zeta;
    if (k > 0) rep.x(k - 1, k) = std::sqrt(alg.p().eval(std::pow(q, k) * zeta));
  }
  rep.y = rep.x.transpose();
  return rep;
}

double ResidualReport::max() const { return std::max({xy, yx, xz, yz}); }

ResidualReport relation_residuals(const GwaAlgebra& alg, const TruncatedRep& rep) {
  const double q = alg.q().to_double();
  const auto& x = rep.x;
  const auto& y = rep.y;
  const auto& z = rep.z;
  Eigen::MatrixXd xy = x * y - diag_apply(alg.p(), z, q);
  Eigen::MatrixXd yx = y * x - diag_apply(alg.p(), z, 1.0);
  Eigen::MatrixXd xz = x * z - q * z * x;
  Eigen::MatrixXd yz = y * z - z * y / q;
  ResidualReport report;
  report.first_index = 1;
  report.last_index = std::max(1, rep.dim - 2);
  report.orbit_checked_up_to = rep.dim;
  for (int k = report.first_index; k <= report.last_index; ++k) {
    // y e_{dim-1} = 0 is the only place the truncation shows up
    if (k <= rep.dim - 2) report.xy = std::max(report.xy, xy.col(k).norm());
    report.yx = std::max(report.yx, yx.col(k).norm());
    report.xz = std::max(report.xz, xz.col(k).norm());
    report.yz = std::max(report.yz, yz.col(k).norm());
  }
  return report;
}

}  // namespace gwa

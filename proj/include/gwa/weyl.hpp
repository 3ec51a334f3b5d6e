#pragma once

#include <map>
#include <memory>
#include <string>

#include "gwa/poly.hpp"

namespace gwa {

class GwaElem;

/// The generalized Weyl algebra B(p; q, r) over Q[z]:
///   xy = p(qz + r),  yx = p(z),  xz = (qz + r)x,  yz = q^{-1}(z - r)y.
/// Cheap handle; copies share the same parameters.
class GwaAlgebra {
 public:
  GwaAlgebra(UniPoly p, Rational q, Rational r);

  [[nodiscard]] const UniPoly& p() const { return data_->p; }
  [[nodiscard]] const Rational& q() const { return data_->sigma.q(); }
  [[nodiscard]] const Rational& r() const { return data_->sigma.r(); }
  [[nodiscard]] const AffineAuto& sigma() const { return data_->sigma; }

  [[nodiscard]] GwaElem x() const;
  [[nodiscard]] GwaElem y() const;
  [[nodiscard]] GwaElem z() const;
  [[nodiscard]] GwaElem one() const;
  [[nodiscard]] GwaElem zero() const;
  [[nodiscard]] GwaElem scalar(const Rational& c) const;
  [[nodiscard]] GwaElem poly(const UniPoly& f) const;
  /// x^d f for d > 0, y^{-d} f for d < 0, f for d = 0.
  [[nodiscard]] GwaElem term(int d, const UniPoly& f) const;

  /// Same parameters (not necessarily the same handle).
  friend bool operator==(const GwaAlgebra& a, const GwaAlgebra& b);

 private:
  struct Data {
    UniPoly p;
    AffineAuto sigma;
  };
  std::shared_ptr<const Data> data_;
};

/// Element of B(p; q, r) in the normal form sum_d X^d f_d(z), with the
/// z-polynomial to the right of the x or y power.
class GwaElem {
 public:
  using Terms = std::map<int, UniPoly>;

  GwaElem(GwaAlgebra alg, Terms terms);

  [[nodiscard]] const GwaAlgebra& algebra() const { return alg_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] UniPoly coeff(int d) const;
  /// The z-polynomial if the element has no x or y terms.
  [[nodiscard]] bool is_polynomial() const { return terms_.empty() || (terms_.size() == 1 && terms_.count(0)); }

  GwaElem& operator+=(const GwaElem& o);
  GwaElem& operator-=(const GwaElem& o);
  GwaElem& operator*=(const Rational& c);
  friend GwaElem operator+(GwaElem a, const GwaElem& b) { return a += b; }
  friend GwaElem operator-(GwaElem a, const GwaElem& b) { return a -= b; }
  friend GwaElem operator*(GwaElem a, const Rational& c) { return a *= c; }
  friend GwaElem operator*(const GwaElem& a, const GwaElem& b);
  friend bool operator==(const GwaElem& a, const GwaElem& b);

  /// Terms by descending d, e.g. "x^2*(1 - z) + (3/2) + y*(z^2)".
  [[nodiscard]] std::string str() const;

 private:
  void check_same(const GwaElem& o) const;
  GwaAlgebra alg_;
  Terms terms_;
};

GwaElem add(const GwaElem& a, const GwaElem& b);
GwaElem mul(const GwaElem& a, const GwaElem& b);
GwaElem commutator(const GwaElem& a, const GwaElem& b);
GwaElem power(const GwaElem& a, int n);

/// Closed form of [x^n z^k, z^l y^n] computed from s_n and sigma alone,
/// without the multiplication engine:
///   sigma^n(s_n) (sigma^n(z))^{k+l} - s_n z^{k+l}.
GwaElem commutator_basis(const GwaAlgebra& alg, int n, int k, int l);

}  // namespace gwa

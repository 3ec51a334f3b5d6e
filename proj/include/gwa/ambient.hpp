#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>

#include "gwa/poly.hpp"
#include "gwa/weyl.hpp"

namespace gwa {

class AmbElem;

/// The Z-graded algebra A(p; q+, q-) over Q[z+, z-]:
///   z+z- = z-z+,  x+x- = pt(z+z-),  x-x+ = pt(q z+z-),
///   x+ z(+/-) = q(+/-)^{-1} z(+/-) x+,  x- z(+/-) = q(+/-) z(+/-) x-,
/// with p = z^k pt, q = q+ q-, deg z(+/-) = +/-1 and deg x(+/-) = +/-k.
///
/// It is a generalized Weyl algebra over Q[z+, z-] with
///   sigma(f)(z+, z-) = f(q+ z+, q- z-),  x- = "x",  x+ = "y",  P = pt(z+z-).
/// Element keys follow the same signed layout as GwaElem:
///   key m > 0  <->  x-^m f,   key m < 0  <->  x+^{-m} f,   key 0  <->  f.
class AmbAlgebra {
 public:
  /// Throws std::invalid_argument unless 0 is a root of p and q+, q- != 0.
  AmbAlgebra(UniPoly p, Rational q_plus, Rational q_minus);

  [[nodiscard]] const UniPoly& p() const { return data_->p; }
  [[nodiscard]] int k() const { return data_->k; }
  [[nodiscard]] const UniPoly& p_tilde() const { return data_->tilde; }
  [[nodiscard]] const UniPoly& p_hat() const { return data_->hat; }
  [[nodiscard]] const Rational& q_plus() const { return data_->q_plus; }
  [[nodiscard]] const Rational& q_minus() const { return data_->q_minus; }
  [[nodiscard]] const Rational& q() const { return data_->q; }
  /// B(p; q, 0), the degree-zero part of the k-th Veronese subalgebra.
  [[nodiscard]] const GwaAlgebra& base() const { return data_->base; }

  [[nodiscard]] AmbElem xp() const;
  [[nodiscard]] AmbElem xm() const;
  [[nodiscard]] AmbElem zp() const;
  [[nodiscard]] AmbElem zm() const;
  [[nodiscard]] AmbElem one() const;
  [[nodiscard]] AmbElem zero() const;
  [[nodiscard]] AmbElem scalar(const Rational& c) const;
  [[nodiscard]] AmbElem poly(const PairPoly& f) const;
  /// f(z+ z-).
  [[nodiscard]] AmbElem poly_in_z(const UniPoly& f) const;
  [[nodiscard]] AmbElem term(int m, const PairPoly& f) const;
  /// Single basis monomial c * x(-/+)^|m| zp^a zm^b.
  [[nodiscard]] AmbElem monomial(int m, int a, int b, const Rational& c = Rational(1)) const;

  /// Z-degree of the basis monomial (m; a, b): -m k + a - b.
  [[nodiscard]] int degree_of(int m, int a, int b) const { return -m * data_->k + a - b; }

  friend bool operator==(const AmbAlgebra& a, const AmbAlgebra& b);

 private:
  struct Data {
    UniPoly p;
    int k;
    UniPoly tilde;
    UniPoly hat;
    Rational q_plus;
    Rational q_minus;
    Rational q;
    GwaAlgebra base;
  };
  std::shared_ptr<const Data> data_;
};

/// Basis monomial x(-/+)^|m| zp^a zm^b.
struct MonoKey {
  int m = 0;
  int a = 0;
  int b = 0;
  friend auto operator<=>(const MonoKey&, const MonoKey&) = default;
  [[nodiscard]] std::string str() const;
};

class AmbElem {
 public:
  using Terms = std::map<int, PairPoly>;

  AmbElem(AmbAlgebra alg, Terms terms);

  [[nodiscard]] const AmbAlgebra& algebra() const { return alg_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] PairPoly coeff(int m) const;
  /// Expanded into scalar-weighted basis monomials.
  [[nodiscard]] std::map<MonoKey, Rational> monomials() const;
  /// Coefficient of the unit monomial.
  [[nodiscard]] Rational coefficient_of_one() const;
  /// The Z-degree if the element is homogeneous and non-zero.
  [[nodiscard]] std::optional<int> degree() const;

  AmbElem& operator+=(const AmbElem& o);
  AmbElem& operator-=(const AmbElem& o);
  AmbElem& operator*=(const Rational& c);
  friend AmbElem operator+(AmbElem a, const AmbElem& b) { return a += b; }
  friend AmbElem operator-(AmbElem a, const AmbElem& b) { return a -= b; }
  friend AmbElem operator*(AmbElem a, const Rational& c) { return a *= c; }
  friend AmbElem operator*(const AmbElem& a, const AmbElem& b);
  friend bool operator==(const AmbElem& a, const AmbElem& b);

  /// e.g. "xm*(zp^2*zm) + (1) + xp*(3*zm)".
  [[nodiscard]] std::string str() const;

 private:
  void check_same(const AmbElem& o) const;
  AmbAlgebra alg_;
  Terms terms_;
};

AmbElem amb_mul(const AmbElem& a, const AmbElem& b);
AmbElem amb_power(const AmbElem& a, int n);

/// Partition of the terms of e by Z-degree.
std::map<int, AmbElem> degree_split(const AmbElem& e);

/// Image of e in A(p; q+, q-) under x -> x- zp^k, y -> zm^k x+, z -> zp zm.
/// Throws std::invalid_argument unless e lives in B(p; q+ q-, 0).
AmbElem embed_B(const AmbAlgebra& alg, const GwaElem& e);

/// Inverse of embed_B on homogeneous degree-zero elements. Throws
/// std::invalid_argument for anything else.
GwaElem project_degree_zero(const AmbAlgebra& alg, const AmbElem& e);

/// The degree-n component of the k-th Veronese subalgebra (Z-degree n k).
AmbElem veronese_component(const AmbAlgebra& alg, int n, const AmbElem& e);

}  // namespace gwa

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gwa/ambient.hpp"
#include "gwa/connection.hpp"

namespace gwa {

/// Sparse rows x cols matrix over Q with an exact solver.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);

  /// Some x with M x = rhs (free variables set to 0), or nullopt when the
  /// system is inconsistent. Gaussian elimination over Q.
  [[nodiscard]] std::optional<std::vector<Rational>> solve(const std::vector<Rational>& rhs) const;
  [[nodiscard]] std::size_t rank() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::map<std::size_t, Rational>> data_;
};

/// A graded presentation of A(p; q+, q-) (or of something induced from it).
/// Degrees live in Z (modulus() == 0) or in Z/kZ (modulus() == k).
class GradedView {
 public:
  virtual ~GradedView() = default;

  [[nodiscard]] virtual int modulus() const = 0;
  [[nodiscard]] virtual std::string name() const = 0;
  /// Basis monomials of degree g whose exponent sum |m| + a + b is <= bound,
  /// in a fixed order.
  [[nodiscard]] virtual std::vector<AmbElem> enumerate_basis(int g, int bound) const = 0;
  /// Homogeneous components of e, keyed by (normalized) degree. Throws
  /// std::invalid_argument if e leaves the graded algebra of the view.
  [[nodiscard]] virtual std::map<int, AmbElem> split(const AmbElem& e) const = 0;
  /// Largest |Z-degree| of a basis monomial with exponent sum <= bound
  /// (only meaningful for Z-gradings).
  [[nodiscard]] virtual int degree_range(int bound) const = 0;
  [[nodiscard]] virtual const AmbAlgebra& algebra() const = 0;

  [[nodiscard]] AmbElem multiply(const AmbElem& a, const AmbElem& b) const { return a * b; }
  [[nodiscard]] Rational coefficient_of_one(const AmbElem& e) const { return e.coefficient_of_one(); }
  [[nodiscard]] std::optional<int> degree(const AmbElem& e) const;
  [[nodiscard]] int normalize(int g) const;
  [[nodiscard]] int inverse(int g) const { return normalize(-g); }
};

using ViewPtr = std::shared_ptr<const GradedView>;

/// Z-grading of A(p; q+, q-): deg zp = 1, deg zm = -1, deg x(+/-) = +/-k.
ViewPtr ambient_view(const AmbAlgebra& alg);
/// Grading induced along Z -> Z/kZ.
ViewPtr induced_quotient_view(const ViewPtr& base, int k);
/// Subalgebra of degrees divisible by k, regraded by degree / k.
ViewPtr veronese_view(const ViewPtr& base, int k);

struct WitnessTerm {
  AmbElem a;
  AmbElem b;
  Rational c;
};

/// sum_i c_i a_i b_i = 1.
struct Witness {
  std::vector<WitnessTerm> terms;

  [[nodiscard]] AmbElem product_sum() const;
  [[nodiscard]] bool check() const;
};

/// Looks for a witness with every a of degree g and every b of degree -g
/// among basis monomials with exponent sum <= bound. nullopt means "none
/// within this bound", which says nothing about larger bounds.
std::optional<Witness> witness_search(const GradedView& view, int g, int bound);

/// Pairs of a connection tensor as a witness (all coefficients 1).
Witness witness_from_tensor(const Tensor2& t);

/// Glue witnesses for an exact sequence 0 -> K -> G -> G/K -> 0 with
/// G = Z (graded by g_view), K = index * Z and G/K = Z/index Z into a
/// witness of G-degree g: for each (a_j, b_j, c_j) of the quotient witness
/// of class g mod index, with |a_j| = g + index * k_j, insert the K-witness
/// of K-degree -k_j:  (a_j a_ij, b_ij b_j, c_j c_ij).
/// `veronese` is keyed by K-degree. Throws std::invalid_argument naming the
/// missing degree if a needed witness is absent.
Witness compose_witnesses(const GradedView& g_view, int index, const std::map<int, Witness>& quotient,
                          const std::map<int, Witness>& veronese, int g);

}  // namespace gwa

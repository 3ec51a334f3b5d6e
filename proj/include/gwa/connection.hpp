#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwa/ambient.hpp"

namespace gwa {

/// Formal sum of pairs in A (x) A. The bidegree is recorded in units of the
/// k-th Veronese grading.
class Tensor2 {
 public:
  using Pair = std::pair<AmbElem, AmbElem>;
  using Canonical = std::map<std::pair<MonoKey, MonoKey>, Rational>;

  Tensor2(std::vector<Pair> pairs, std::pair<int, int> bidegree)
      : pairs_(std::move(pairs)), bidegree_(bidegree) {}

  [[nodiscard]] const std::vector<Pair>& pairs() const { return pairs_; }
  [[nodiscard]] std::size_t size() const { return pairs_.size(); }
  [[nodiscard]] std::pair<int, int> bidegree() const { return bidegree_; }

  /// Every leg expanded into basis monomials and identical pairs merged;
  /// two tensors are equal iff their canonical forms are.
  [[nodiscard]] Canonical canonical() const;
  /// True when every non-zero leg is homogeneous of the recorded bidegree.
  [[nodiscard]] bool legs_homogeneous() const;
  [[nodiscard]] std::string str() const;

 private:
  std::vector<Pair> pairs_;
  std::pair<int, int> bidegree_;
};

/// Square matrix over B(p; q, 0).
struct IdemMatrix {
  int n = 0;
  std::vector<std::vector<GwaElem>> entries;

  [[nodiscard]] std::size_t size() const { return entries.size(); }
  [[nodiscard]] IdemMatrix operator*(const IdemMatrix& o) const;
  friend bool operator==(const IdemMatrix& a, const IdemMatrix& b) { return a.entries == b.entries; }
};

/// |n| beyond this is rejected; omega(n) has 2^|n| pairs.
inline constexpr int kDefaultMaxLevel = 5;

Tensor2 omega(const AmbAlgebra& alg);
Tensor2 omega_bar(const AmbAlgebra& alg);
/// omega(n) = sum_i w'_i omega(n-1) w''_i (n > 0), with omega_bar for n < 0.
Tensor2 omega_n(const AmbAlgebra& alg, int n, int max_level = kDefaultMaxLevel);
/// omega(n) = sum_i omega(n-1)'_i w omega(n-1)''_i; same canonical tensor.
Tensor2 omega_n_alt(const AmbAlgebra& alg, int n, int max_level = kDefaultMaxLevel);
/// Sum of the leg products equals 1.
bool check_connection(const Tensor2& t);

/// E(n)_{ij} = omega''(n)_i omega'(n)_j, pulled back to B(p; q, 0).
IdemMatrix idempotent(const AmbAlgebra& alg, int n, int max_level = kDefaultMaxLevel);
/// e_n = Tr E(n) as a polynomial in z. Throws std::logic_error if the
/// trace carries x or y terms.
UniPoly trace_idempotent(const AmbAlgebra& alg, int n, int max_level = kDefaultMaxLevel);
/// e_n for n >= 1 from the closed e_1 and the polynomial recursion
/// e_{n+1} = ((c - hat^k z^k) e_n(z/q) - (c - q^k hat(qz)^k z^k) e_n) / c + e_n,
/// with c = pt(0)^k. Does not touch the algebra engine.
UniPoly e_n_recursive(const AmbAlgebra& alg, int n);

/// Row of B^N E(n) representing a in A_n: (sum_i a w'(n)_i E(n)_ij)_j.
/// Throws std::invalid_argument unless a is homogeneous of Veronese degree n.
std::vector<GwaElem> module_row(const AmbAlgebra& alg, int n, const AmbElem& a,
                                int max_level = kDefaultMaxLevel);
/// row * E as a row vector over B.
std::vector<GwaElem> row_times(const std::vector<GwaElem>& row, const IdemMatrix& e);

struct UnitPair {
  AmbElem unit;
  AmbElem inverse;
};
/// A unit of Veronese degree n with its inverse when pt is a non-zero
/// constant; nullopt otherwise (no claim that none exists).
std::optional<UnitPair> unit_in_degree(const AmbAlgebra& alg, int n);

}  // namespace gwa

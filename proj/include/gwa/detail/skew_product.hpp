#pragma once

// Multiplication engine shared by every degree-one generalized Weyl
// algebra in this library. An element is a finitely supported map
//   e -> f_e,   e in Z,
// standing for sum_e X^e f_e, where X^e = x^e for e > 0, y^{-e} for e < 0
// and X^0 = 1; the base-ring coefficient sits to the RIGHT of X^e.
//
// Rules, with sigma the base automorphism and P the element with yx = P:
//   x f = sigma(f) x,   y f = sigma^{-1}(f) y,   yx = P,   xy = sigma(P).
// Hence f X^e = X^e sigma^{-e}(f) for every signed e.

#include <map>
#include <utility>

namespace gwa::detail {

/// Shift(f, j) must return sigma^j(f).
template <class Poly, class Shift>
class SkewProduct {
 public:
  using Terms = std::map<int, Poly>;

  SkewProduct(const Poly& yx, Shift shift) : yx_(yx), shift_(std::move(shift)) {}

  /// X^a X^b = X^e h; returns (e, h).
  ///
  /// Opposite signs are reduced one xy or yx pair at a time:
  ///   x^a y^b = x^{a-1} sigma(P) y^{b-1} = x^{a-1} y^{b-1} sigma^{b}(P)
  ///   y^a x^b = y^{a-1} P x^{b-1}        = y^{a-1} x^{b-1} sigma^{1-b}(P)
  /// Each step lowers min(|a|, |b|) by one and the recursion stops once
  /// either exponent is zero, so it terminates after min(|a|, |b|) steps.
  std::pair<int, Poly> word(int a, int b) {
    if (a == 0 || b == 0 || (a > 0) == (b > 0)) return {a + b, Poly(1)};
    auto key = std::make_pair(a, b);
    if (auto it = words_.find(key); it != words_.end()) return it->second;
    std::pair<int, Poly> result;
    if (a > 0) {
      int nb = -b;
      auto [e, h] = word(a - 1, b + 1);
      result = {e, h * shift_(yx_, nb)};
    } else {
      auto [e, h] = word(a + 1, b - 1);
      result = {e, h * shift_(yx_, 1 - b)};
    }
    words_.emplace(key, result);
    return result;
  }

  /// (X^a f)(X^b g) = X^a X^b sigma^{-b}(f) g.
  Terms multiply(const Terms& lhs, const Terms& rhs) {
    Terms out;
    for (auto& [a, f] : lhs) {
      for (auto& [b, g] : rhs) {
        auto [e, h] = word(a, b);
        Poly term = h * (shift_(f, -b) * g);
        if (term.is_zero()) continue;
        auto [it, inserted] = out.try_emplace(e, term);
        if (!inserted) {
          it->second += term;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
    return out;
  }

 private:
  Poly yx_;
  Shift shift_;
  std::map<std::pair<int, int>, std::pair<int, Poly>> words_;
};

template <class Poly>
void add_into(std::map<int, Poly>& acc, const std::map<int, Poly>& other, bool subtract = false) {
  for (auto& [e, f] : other) {
    auto [it, inserted] = acc.try_emplace(e, subtract ? Poly() - f : f);
    if (!inserted) {
      if (subtract) it->second -= f;
      else it->second += f;
    }
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace gwa::detail

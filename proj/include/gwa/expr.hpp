#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gwa/ambient.hpp"
#include "gwa/weyl.hpp"

namespace gwa {

/// Grammar (whitespace-insensitive):
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' nat]
///   atom   := rational | generator | '(' expr ')'
/// Generators are x, y, z for B(p;q,r) and xp, xm, zp, zm for A(p;q+-).
struct Expr {
  enum class Kind { Sum, Product, Power, Negate, Number, Generator };

  Kind kind = Kind::Number;
  Rational value;            // Number
  std::string name;          // Generator
  int exponent = 0;          // Power
  std::vector<Expr> args;    // Sum, Product, Power (1), Negate (1)
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Expr parse(std::string_view text);

enum class AlgebraKind { Scalar, Weyl, Ambient };

/// Which algebra the generator tokens belong to. Throws std::invalid_argument
/// when B and A generators are mixed.
AlgebraKind detect_algebra(const Expr& e);

GwaElem evaluate(const Expr& e, const GwaAlgebra& alg);
AmbElem evaluate(const Expr& e, const AmbAlgebra& alg);

}  // namespace gwa

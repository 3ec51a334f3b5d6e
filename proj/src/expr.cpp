#include "gwa/expr.hpp"

#include <cctype>
#include <set>

namespace gwa {

namespace {

const std::set<std::string, std::less<>> kWeylGenerators = {"x", "y", "z"};
const std::set<std::string, std::less<>> kAmbientGenerators = {"xp", "xm", "zp", "zm"};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr sum;
    sum.kind = Expr::Kind::Sum;
    bool negate = accept('-');
    sum.args.push_back(negate ? negated(term()) : term());
    while (true) {
      if (accept('+')) sum.args.push_back(term());
      else if (accept('-')) sum.args.push_back(negated(term()));
      else break;
    }
    return sum.args.size() == 1 ? std::move(sum.args.front()) : sum;
  }

  static Expr negated(Expr e) {
    Expr n;
    n.kind = Expr::Kind::Negate;
    n.args.push_back(std::move(e));
    return n;
  }

  Expr term() {
    Expr prod;
    prod.kind = Expr::Kind::Product;
    prod.args.push_back(factor());
    while (accept('*')) prod.args.push_back(factor());
    return prod.args.size() == 1 ? std::move(prod.args.front()) : prod;
  }

  Expr factor() {
    Expr base = atom();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a non-negative integer exponent", start);
    Expr p;
    p.kind = Expr::Kind::Power;
    p.exponent = std::stoi(std::string(text_.substr(start, pos_ - start)));
    p.args.push_back(std::move(base));
    return p;
  }

  Expr atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return generator();
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Expr number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (den == pos_) throw ParseError("expected a denominator", den);
    }
    Expr n;
    n.kind = Expr::Kind::Number;
    try {
      n.value = Rational::parse(text_.substr(start, pos_ - start));
    } catch (const std::exception& ex) {
      throw ParseError(ex.what(), start);
    }
    return n;
  }

  Expr generator() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (!kWeylGenerators.count(name) && !kAmbientGenerators.count(name))
      throw ParseError("unknown generator '" + name + "'", start);
    Expr g;
    g.kind = Expr::Kind::Generator;
    g.name = std::move(name);
    return g;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect(const Expr& e, bool& weyl, bool& ambient) {
  if (e.kind == Expr::Kind::Generator) {
    if (kWeylGenerators.count(e.name)) weyl = true;
    else ambient = true;
  }
  for (auto& a : e.args) collect(a, weyl, ambient);
}

template <class Alg, class Elem, class Gen>
Elem eval_with(const Expr& e, const Alg& alg, const Gen& gen) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return alg.scalar(e.value);
    case Expr::Kind::Generator:
      return gen(e.name);
    case Expr::Kind::Negate:
      return eval_with<Alg, Elem>(e.args.front(), alg, gen) * Rational(-1);
    case Expr::Kind::Sum: {
      Elem acc = alg.zero();
      for (auto& a : e.args) acc += eval_with<Alg, Elem>(a, alg, gen);
      return acc;
    }
    case Expr::Kind::Product: {
      Elem acc = alg.one();
      for (auto& a : e.args) acc = acc * eval_with<Alg, Elem>(a, alg, gen);
      return acc;
    }
    case Expr::Kind::Power: {
      Elem base = eval_with<Alg, Elem>(e.args.front(), alg, gen);
      Elem acc = alg.one();
      for (int i = 0; i < e.exponent; ++i) acc = acc * base;
      return acc;
    }
  }
  throw std::logic_error("unhandled expression kind");
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

AlgebraKind detect_algebra(const Expr& e) {
  bool weyl = false, ambient = false;
  collect(e, weyl, ambient);
  if (weyl && ambient) throw std::invalid_argument("expression mixes x, y, z with xp, xm, zp, zm");
  if (ambient) return AlgebraKind::Ambient;
  return weyl ? AlgebraKind::Weyl : AlgebraKind::Scalar;
}

GwaElem evaluate(const Expr& e, const GwaAlgebra& alg) {
  if (detect_algebra(e) == AlgebraKind::Ambient) throw std::invalid_argument("expression uses A(p;q+-) generators");
  auto gen = [&alg](const std::string& name) {
    if (name == "x") return alg.x();
    if (name == "y") return alg.y();
    return alg.z();
  };
  return eval_with<GwaAlgebra, GwaElem>(e, alg, gen);
}

AmbElem evaluate(const Expr& e, const AmbAlgebra& alg) {
  if (detect_algebra(e) == AlgebraKind::Weyl) throw std::invalid_argument("expression uses B(p;q,r) generators");
  auto gen = [&alg](const std::string& name) {
    if (name == "xp") return alg.xp();
    if (name == "xm") return alg.xm();
    if (name == "zp") return alg.zp();
    return alg.zm();
  };
  return eval_with<AmbAlgebra, AmbElem>(e, alg, gen);
}

}  // namespace gwa

#ifndef HYPERIVT_PARSE_HPP
#define HYPERIVT_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hyperivt/error.hpp"
#include "hyperivt/hyper_poly.hpp"
#include "hyperivt/polynomial.hpp"
#include "hyperivt/rational.hpp"
#include "hyperivt/rfunc.hpp"
#include "hyperivt/ultrapower.hpp"

// Recursive-descent parser shared by every input grammar:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' natural)?
//   primary := number | symbol | '(' expr ')' | 'alt' '{' expr (';' expr)+ '}'
//
// Numbers are decimal integers or terminating decimals; "p/q" is read as a
// quotient. The algebra supplied to the parser decides which symbols exist
// and what the operators mean.

namespace hyperivt {

namespace detail {

template <class Algebra>
class ExprParser {
 public:
  using Value = typename Algebra::Value;

  ExprParser(std::string_view text, const Algebra& alg) : text_(text), alg_(alg) {}

  Value parse() {
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) +
                                           " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Value expr() {
    Value v = term();
    while (true) {
      if (accept('+'))
        v = alg_.add(v, term());
      else if (accept('-'))
        v = alg_.sub(v, term());
      else
        return v;
    }
  }

  Value term() {
    Value v = unary();
    while (true) {
      if (accept('*'))
        v = alg_.mul(v, unary());
      else if (accept('/'))
        v = alg_.div(v, unary());
      else
        return v;
    }
  }

  Value unary() {
    if (accept('-')) return alg_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a natural number");
    if (pos_ - start > 6) fail("exponent too large");
    unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    Value out = alg_.number(Rational(1));
    for (unsigned long i = 0; i < e; ++i) out = alg_.mul(out, base);
    return out;
  }

  Value primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      return alg_.number(Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "alt") {
        if (!Algebra::has_selector) fail("periodic selectors are not allowed here");
        expect('{');
        std::vector<Value> branches{expr()};
        while (accept(';')) branches.push_back(expr());
        expect('}');
        if (branches.size() < 2) fail("alt{...} needs at least two branches");
        if constexpr (Algebra::has_selector) return alg_.select(std::move(branches));
      }
      if (auto v = alg_.symbol(name)) return *v;
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Algebra& alg_;
  std::size_t pos_ = 0;
};

template <class P>
P checked_poly_div(const P& a, const P& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (b.degree() > 0) throw Error(ErrorCode::ParseError, "division by a non-constant polynomial");
  return a.scaled(typename P::value_type(1) / b.leading());
}

}  // namespace detail

/// Elements of Q(w): rationals, the symbol w, + - * / and ^ with natural
/// exponents.
struct RFuncAlgebra {
  using Value = RFunc;
  static constexpr bool has_selector = false;
  Value number(const Rational& r) const { return RFunc(r); }
  std::optional<Value> symbol(std::string_view s) const {
    if (s == "w") return RFunc::omega();
    return std::nullopt;
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
  Value neg(const Value& a) const { return -a; }
};

/// Polynomials in x with rational coefficients.
struct RatPolyAlgebra {
  using Value = RatPoly;
  static constexpr bool has_selector = false;
  Value number(const Rational& r) const { return RatPoly::constant(r); }
  std::optional<Value> symbol(std::string_view s) const {
    if (s == "x") return RatPoly::x();
    return std::nullopt;
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return detail::checked_poly_div(a, b); }
  Value neg(const Value& a) const { return -a; }
};

/// Polynomials in x whose coefficients may involve w.
struct HyperPolyAlgebra {
  using Value = HyperPolynomial;
  static constexpr bool has_selector = false;
  Value number(const Rational& r) const { return HyperPolynomial::constant(RFunc(r)); }
  std::optional<Value> symbol(std::string_view s) const {
    if (s == "x") return HyperPolynomial::x();
    if (s == "w") return HyperPolynomial::constant(RFunc::omega());
    return std::nullopt;
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return detail::checked_poly_div(a, b); }
  Value neg(const Value& a) const { return -a; }
};

/// Sequence expressions: rationals, the index n, + - * /, natural powers
/// and alt{e0; e1; ...} selecting branch n mod m.
struct SeqAlgebra {
  using Value = SeqExpr;
  static constexpr bool has_selector = true;
  Value number(const Rational& r) const { return SeqExpr::constant(r); }
  std::optional<Value> symbol(std::string_view s) const {
    if (s == "n") return SeqExpr::index();
    return std::nullopt;
  }
  Value add(const Value& a, const Value& b) const { return SeqExpr::binary(SeqExpr::Op::Add, a, b); }
  Value sub(const Value& a, const Value& b) const { return SeqExpr::binary(SeqExpr::Op::Sub, a, b); }
  Value mul(const Value& a, const Value& b) const { return SeqExpr::binary(SeqExpr::Op::Mul, a, b); }
  Value div(const Value& a, const Value& b) const { return SeqExpr::binary(SeqExpr::Op::Div, a, b); }
  Value neg(const Value& a) const {
    if (a.op() == SeqExpr::Op::Const) return SeqExpr::constant(-a.value());
    return SeqExpr::binary(SeqExpr::Op::Sub, SeqExpr::constant(Rational(0)), a);
  }
  Value select(std::vector<Value> branches) const { return SeqExpr::select(std::move(branches)); }
};

template <class Algebra>
typename Algebra::Value parse_with(std::string_view text, const Algebra& alg = Algebra{}) {
  return detail::ExprParser<Algebra>(text, alg).parse();
}

inline RFunc parse_element(std::string_view text) { return parse_with<RFuncAlgebra>(text); }
inline RatPoly parse_polynomial(std::string_view text) { return parse_with<RatPolyAlgebra>(text); }
inline HyperPolynomial parse_hyper_polynomial(std::string_view text) {
  return parse_with<HyperPolyAlgebra>(text);
}
inline HyperSeq parse_sequence(std::string_view text) {
  return HyperSeq(parse_with<SeqAlgebra>(text));
}

/// A rational number written as an expression, e.g. "-3/4" or "1/2^32".
inline Rational parse_rational_expr(std::string_view text) {
  RatPoly p = parse_polynomial(text);
  if (p.degree() > 0) throw Error(ErrorCode::ParseError, "expected a rational number");
  return p.coeff(0);
}

inline std::string to_string(const HyperPolynomial& f, const std::string& var = "x") {
  return to_string(f, var, [](const RFunc& c) { return c.to_string(); });
}

}  // namespace hyperivt

#endif  // HYPERIVT_PARSE_HPP

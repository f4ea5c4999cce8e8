#ifndef HYPERIVT_ULTRAPOWER_HPP
#define HYPERIVT_ULTRAPOWER_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyperivt/error.hpp"
#include "hyperivt/polynomial.hpp"
#include "hyperivt/rational.hpp"
#include "hyperivt/rfunc.hpp"

// Sequences of rationals modulo a nonprincipal ultrafilter.
//
// No ultrafilter is ever built. Sequences are restricted to a closed
// expression language (rational functions of the index n, combined with
// periodic selectors), so that on each residue class n = r (mod M) every
// sequence is a rational function of n. A nonprincipal ultrafilter contains
// exactly one residue class mod M, so any verdict shared by all classes is
// the verdict of every nonprincipal ultrafilter; when the classes disagree
// the answer depends on the ultrafilter and is reported as such.

namespace hyperivt {

class SeqExpr {
 public:
  enum class Op { Const, Index, Add, Sub, Mul, Div, Select };

  static SeqExpr constant(const Rational& r) { return SeqExpr(Node{Op::Const, r, {}}); }
  static SeqExpr index() { return SeqExpr(Node{Op::Index, Rational(0), {}}); }
  static SeqExpr binary(Op op, SeqExpr a, SeqExpr b) {
    return SeqExpr(Node{op, Rational(0), {std::move(a), std::move(b)}});
  }
  /// Periodic selector: term n is taken from branch n mod m. Requires m >= 2.
  static SeqExpr select(std::vector<SeqExpr> branches) {
    if (branches.size() < 2)
      throw Error(ErrorCode::ParseError, "periodic selector needs at least two branches");
    return SeqExpr(Node{Op::Select, Rational(0), std::move(branches)});
  }

  Op op() const { return node_->op; }
  const Rational& value() const { return node_->value; }
  const std::vector<SeqExpr>& children() const { return node_->children; }

  /// Least common multiple of all selector lengths (1 if there are none).
  std::size_t period() const {
    std::size_t p = op() == Op::Select ? children().size() : 1;
    for (const auto& c : children()) p = std::lcm(p, c.period());
    return p;
  }

  bool has_selector() const {
    if (op() == Op::Select) return true;
    for (const auto& c : children())
      if (c.has_selector()) return true;
    return false;
  }

  /// Term at index n; throws DivisionByZero where a denominator vanishes.
  Rational eval(const Integer& n) const {
    switch (op()) {
      case Op::Const: return value();
      case Op::Index: return Rational(n);
      case Op::Add: return children()[0].eval(n) + children()[1].eval(n);
      case Op::Sub: return children()[0].eval(n) - children()[1].eval(n);
      case Op::Mul: return children()[0].eval(n) * children()[1].eval(n);
      case Op::Div: return children()[0].eval(n) / children()[1].eval(n);
      case Op::Select: {
        Integer m(static_cast<unsigned long>(children().size()));
        Integer r = n % m;
        return children()[r.get_ui()].eval(n);
      }
    }
    return Rational(0);
  }

  /// The rational function of n (written in w) this expression equals on
  /// the residue class n = residue (mod modulus). modulus must be a
  /// multiple of period(). Throws DivisionByZero if a divisor is
  /// identically zero on that class.
  RFunc on_class(std::size_t residue, std::size_t modulus) const {
    switch (op()) {
      case Op::Const: return RFunc(value());
      case Op::Index: return RFunc::omega();
      case Op::Add: return children()[0].on_class(residue, modulus) + children()[1].on_class(residue, modulus);
      case Op::Sub: return children()[0].on_class(residue, modulus) - children()[1].on_class(residue, modulus);
      case Op::Mul: return children()[0].on_class(residue, modulus) * children()[1].on_class(residue, modulus);
      case Op::Div: return children()[0].on_class(residue, modulus) / children()[1].on_class(residue, modulus);
      case Op::Select: return children()[residue % children().size()].on_class(residue, modulus);
    }
    return RFunc();
  }

  std::string to_string() const {
    switch (op()) {
      case Op::Const: {
        std::string s = value().to_string();
        return value().sign() < 0 || !value().is_integer() ? "(" + s + ")" : s;
      }
      case Op::Index: return "n";
      case Op::Add: return "(" + children()[0].to_string() + " + " + children()[1].to_string() + ")";
      case Op::Sub: return "(" + children()[0].to_string() + " - " + children()[1].to_string() + ")";
      case Op::Mul: return children()[0].to_string() + "*" + children()[1].right_operand(false);
      case Op::Div: return children()[0].to_string() + "/" + children()[1].right_operand(true);
      case Op::Select: {
        std::string s = "alt{";
        for (std::size_t i = 0; i < children().size(); ++i)
          s += (i ? "; " : "") + children()[i].to_string();
        return s + "}";
      }
    }
    return {};
  }

 private:
  // Text of a right operand of * or /, bracketed where left association
  // would regroup it.
  std::string right_operand(bool after_div) const {
    const bool wrap = op() == Op::Div || (after_div && op() == Op::Mul);
    return wrap ? "(" + to_string() + ")" : to_string();
  }

  struct Node {
    Op op;
    Rational value;
    std::vector<SeqExpr> children;
  };

  explicit SeqExpr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

  std::shared_ptr<const Node> node_;
};

/// Three-way result that may also report dependence on the ultrafilter.
enum class SeqOrdering { Less, Equal, Greater };

/// An element [(r_n)] of the ultrapower, represented by an expression.
///
/// Construction computes, for every residue class modulo the expression's
/// period, the rational function the sequence follows there, and the index
/// valid_from beyond which every term is defined.
class HyperSeq {
 public:
  explicit HyperSeq(SeqExpr expr) : expr_(std::move(expr)) {
    period_ = expr_.period();
    classes_.reserve(period_);
    Integer from(1);
    analyze(expr_, from);
    for (std::size_t r = 0; r < period_; ++r)
      classes_.push_back(expr_.on_class(r, period_));
    valid_from_ = from;
  }

  const SeqExpr& expr() const { return expr_; }
  const Integer& valid_from() const { return valid_from_; }
  std::size_t period() const { return period_; }
  /// Rational function followed on the class n = r (mod period()).
  const RFunc& on_class(std::size_t r) const { return classes_[r % period_]; }

  Rational term(const Integer& n) const { return expr_.eval(n); }

 private:
  // Walks the tree, checks every divisor class by class and raises the
  // threshold past every zero of every divisor.
  void analyze(const SeqExpr& e, Integer& from) const {
    for (const auto& c : e.children()) analyze(c, from);
    if (e.op() != SeqExpr::Op::Div) return;
    const SeqExpr& divisor = e.children()[1];
    std::size_t zero_classes = 0;
    for (std::size_t r = 0; r < period_; ++r) {
      RFunc d = divisor.on_class(r, period_);
      if (d.is_zero()) {
        ++zero_classes;
        continue;
      }
      const auto& p = d.numerator();
      if (p.degree() > 0) {
        Integer bound = floor(cauchy_bound(p)) + 1;
        if (bound > from) from = bound;
      }
    }
    if (zero_classes == period_)
      throw Error(ErrorCode::EventuallyZeroDivisor,
                  "divisor " + divisor.to_string() + " is eventually zero");
    if (zero_classes > 0)
      throw Error(ErrorCode::UltrafilterDependent,
                  "divisor " + divisor.to_string() +
                      " vanishes on some residue classes only; whether the "
                      "quotient exists depends on the ultrafilter");
  }

  SeqExpr expr_;
  std::size_t period_ = 1;
  std::vector<RFunc> classes_;
  Integer valid_from_{1};
};

/// r* = [(r, r, r, ...)].
inline HyperSeq star_embed(const Rational& r) { return HyperSeq(SeqExpr::constant(r)); }

inline HyperSeq seq_arith(SeqExpr::Op op, const HyperSeq& a, const HyperSeq& b) {
  return HyperSeq(SeqExpr::binary(op, a.expr(), b.expr()));
}

inline HyperSeq operator+(const HyperSeq& a, const HyperSeq& b) { return seq_arith(SeqExpr::Op::Add, a, b); }
inline HyperSeq operator-(const HyperSeq& a, const HyperSeq& b) { return seq_arith(SeqExpr::Op::Sub, a, b); }
inline HyperSeq operator*(const HyperSeq& a, const HyperSeq& b) { return seq_arith(SeqExpr::Op::Mul, a, b); }
inline HyperSeq operator/(const HyperSeq& a, const HyperSeq& b) { return seq_arith(SeqExpr::Op::Div, a, b); }

namespace detail {

// Applies fn to the class functions of a - b over the common period and
// returns the shared verdict, or throws UltrafilterDependent.
template <class Fn>
auto common_verdict(const HyperSeq& a, const HyperSeq& b, Fn&& fn, const char* what) {
  const std::size_t m = std::lcm(a.period(), b.period());
  auto verdict = fn(a.on_class(0) - b.on_class(0));
  for (std::size_t r = 1; r < m; ++r) {
    if (fn(a.on_class(r) - b.on_class(r)) != verdict)
      throw Error(ErrorCode::UltrafilterDependent,
                  std::string(what) + " differs between residue classes of n; "
                  "the verdict depends on the choice of ultrafilter");
  }
  return verdict;
}

}  // namespace detail

inline SeqOrdering seq_compare(const HyperSeq& a, const HyperSeq& b) {
  int s = detail::common_verdict(
      a, b, [](const RFunc& d) { return d.sign(); }, "the eventual sign");
  return s < 0 ? SeqOrdering::Less : (s > 0 ? SeqOrdering::Greater : SeqOrdering::Equal);
}

inline Classification seq_classify(const HyperSeq& a) {
  static const HyperSeq zero = star_embed(Rational(0));
  return detail::common_verdict(
      a, zero, [](const RFunc& d) { return d.classify(); }, "the magnitude class");
}

/// Common limit of all residue classes. NotLimited when every class
/// diverges; UltrafilterDependent when classes disagree.
inline Rational seq_shadow(const HyperSeq& a) {
  bool any_infinite = false, all_infinite = true;
  for (std::size_t r = 0; r < a.period(); ++r) {
    bool inf = a.on_class(r).classify() == Classification::Infinite;
    any_infinite |= inf;
    all_infinite &= inf;
  }
  if (all_infinite)
    throw Error(ErrorCode::NotLimited, a.expr().to_string() + " is not limited");
  if (any_infinite)
    throw Error(ErrorCode::UltrafilterDependent,
                "limitedness differs between residue classes of n; the "
                "verdict depends on the choice of ultrafilter");
  static const HyperSeq zero = star_embed(Rational(0));
  return detail::common_verdict(
      a, zero, [](const RFunc& d) { return d.shadow(); }, "the limit");
}

/// Reads a selector-free sequence as the rational function of w it is.
inline RFunc from_seq(const HyperSeq& a) {
  if (a.expr().has_selector())
    throw Error(ErrorCode::NotRationalFunction,
                a.expr().to_string() + " contains a periodic selector");
  return a.on_class(0);
}

}  // namespace hyperivt

#endif  // HYPERIVT_ULTRAPOWER_HPP

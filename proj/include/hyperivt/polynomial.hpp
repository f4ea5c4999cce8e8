#ifndef HYPERIVT_POLYNOMIAL_HPP
#define HYPERIVT_POLYNOMIAL_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperivt/error.hpp"
#include "hyperivt/rational.hpp"

namespace hyperivt {

/// What the polynomial machinery needs from a coefficient type: exact field
/// operations plus a decidable sign.
template <class F>
concept OrderedField = requires(const F& a, const F& b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { sign(a) } -> std::convertible_to<int>;
  { is_zero(a) } -> std::convertible_to<bool>;
  F(0);
  F(1);
};

namespace detail {

template <class F>
bool coeff_is_zero(const F& a) {
  return is_zero(a);
}

}  // namespace detail

/// Dense univariate polynomial; coefficient i multiplies x^i. The coefficient
/// vector never ends in a zero, so the zero polynomial is the empty vector.
template <OrderedField F>
class Polynomial {
 public:
  using value_type = F;

  Polynomial() = default;
  explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const F& a) { return Polynomial(std::vector<F>{a}); }
  static Polynomial monomial(const F& a, std::size_t k) {
    std::vector<F> c(k + 1, F(0));
    c[k] = a;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(F(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coefficients() const { return c_; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
  F leading() const { return c_.empty() ? F(0) : c_.back(); }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& a : out.c_) a = -a;
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> out(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }

  Polynomial scaled(const F& s) const {
    std::vector<F> out;
    out.reserve(c_.size());
    for (const auto& a : c_) out.push_back(a * s);
    return Polynomial(std::move(out));
  }

  /// Euclidean division over the field: *this = q * d + r, deg r < deg d.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero())
      throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (degree() < d.degree()) return {Polynomial{}, *this};
    std::vector<F> rem = c_;
    std::vector<F> quot(c_.size() - d.c_.size() + 1, F(0));
    const F lead = d.leading();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
      const F t = rem[k + d.degree()] / lead;
      quot[k] = t;
      if (detail::coeff_is_zero(t)) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j)
        rem[k + j] = rem[k + j] - t * d.c_[j];
    }
    rem.resize(static_cast<std::size_t>(d.degree()));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
    return a.divmod(b).first;
  }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
    return a.divmod(b).second;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> out;
    out.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      out.push_back(c_[i] * F(static_cast<int>(i)));
    return Polynomial(std::move(out));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    return scaled(F(1) / leading());
  }

  /// Horner evaluation. X may be any field into which F embeds.
  template <class X = F>
  X operator()(const X& x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  /// Applies fn to every coefficient; the result type is deduced.
  template <class Fn>
  auto map(Fn&& fn) const {
    using G = std::decay_t<decltype(fn(std::declval<const F&>()))>;
    std::vector<G> out;
    out.reserve(c_.size());
    for (const auto& a : c_) out.push_back(fn(a));
    return Polynomial<G>(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Monic gcd; zero only when both arguments are zero.
template <OrderedField F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// f / gcd(f, f'), made monic: same distinct roots, all simple.
template <OrderedField F>
Polynomial<F> square_free_part(const Polynomial<F>& f) {
  if (f.degree() <= 0) return f.monic();
  return (f / gcd(f, f.derivative())).monic();
}

using RatPoly = Polynomial<Rational>;

/// Cauchy root bound 1 + max |a_i / a_m|. Every real root lies in (-B, B).
inline Rational cauchy_bound(const RatPoly& f) {
  Rational best(0);
  const Rational lead = f.leading();
  for (int i = 0; i < f.degree(); ++i) {
    Rational r = abs(f.coeff(static_cast<std::size_t>(i)) / lead);
    if (r > best) best = r;
  }
  return best + 1;
}

namespace detail {

// True for sums and differences, which must be bracketed as a factor.
// True when s has a sum or difference outside any parentheses.
inline bool needs_parens(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i + 2 < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ')
      return true;
  }
  return false;
}

}  // namespace detail

/// Renders terms in descending degree, e.g. "x^3 - 3/2*x + 5". Coefficients
/// whose own text contains operators are parenthesized, so the output
/// re-parses to the same polynomial.
template <OrderedField F, class Fmt>
std::string to_string(const Polynomial<F>& f, const std::string& var, Fmt&& fmt) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const F& a = f.coefficients()[static_cast<std::size_t>(i)];
    if (is_zero(a)) continue;
    std::string body;
    const bool negative = sign(a) < 0;
    std::string text = fmt(negative ? -a : a);
    if (detail::needs_parens(text)) text = "(" + text + ")";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (i == 0)
      body = text;
    else if (text == "1")
      body = mono;
    else
      body = text + "*" + mono;
    if (first)
      os << (negative ? "-" : "") << body;
    else
      os << (negative ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

inline std::string to_string(const Polynomial<Rational>& f,
                             const std::string& var = "x") {
  return to_string(f, var, [](const Rational& r) { return r.to_string(); });
}

}  // namespace hyperivt

#endif  // HYPERIVT_POLYNOMIAL_HPP

#ifndef HYPERIVT_RATIONAL_HPP
#define HYPERIVT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "hyperivt/error.hpp"

namespace hyperivt {

using Integer = mpz_class;

/// Exact fraction with a positive denominator, always kept in lowest terms.
///
/// Backed by GMP's mpq_t, which canonicalizes after every arithmetic
/// operation; the constructors below canonicalize explicitly.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(Integer(std::to_string(v), 10)) {}  // NOLINT
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "p/q" or a terminating decimal "d.ddd", each with an
  /// optional leading sign. Rejects q = 0 and anything else.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  /// "p/q", or just "p" when q = 1.
  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  /// Approximation for diagnostics only; never used in a decision.
  double to_double() const { return q_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_;
};

inline int sign(const Rational& r) { return r.sign(); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Integer floor(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return out;
}

inline Integer ceil(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return out;
}

/// Least natural number (counting from 1) strictly greater than x.
inline Integer archimedean_bound(const Rational& x) {
  Integer n = floor(x) + 1;
  return n < 1 ? Integer(1) : n;
}

/// Exact square root when r is the square of a rational.
inline bool rational_sqrt(const Rational& r, Rational& root) {
  if (r.sign() < 0) return false;
  const Integer num = r.numerator();
  const Integer den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  root = Rational(sn, sd);
  return true;
}

inline Rational pow(const Rational& base, unsigned long exponent) {
  Rational out(1);
  for (unsigned long i = 0; i < exponent; ++i) out *= base;
  return out;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::ParseError,
                "invalid rational '" + std::string(text) + "'");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto p = body.substr(0, slash);
    auto q = body.substr(slash + 1);
    if (!detail::all_digits(p) || !detail::all_digits(q)) return fail();
    Integer den(std::string(q), 10);
    if (den == 0) {
      throw Error(ErrorCode::ParseError,
                  "zero denominator in '" + std::string(text) + "'");
    }
    value = Rational(Integer(std::string(p), 10), den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if ((!whole.empty() && !detail::all_digits(whole)) ||
        (!frac.empty() && !detail::all_digits(frac)))
      return fail();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    value = Rational(digits, scale);
  } else {
    if (!detail::all_digits(body)) return fail();
    value = Rational(Integer(std::string(body), 10));
  }
  return negative ? -value : value;
}

}  // namespace hyperivt

#endif  // HYPERIVT_RATIONAL_HPP

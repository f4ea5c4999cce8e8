#ifndef HYPERIVT_RFUNC_HPP
#define HYPERIVT_RFUNC_HPP

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "hyperivt/error.hpp"
#include "hyperivt/polynomial.hpp"
#include "hyperivt/rational.hpp"

namespace hyperivt {

/// Magnitude class of a non-Archimedean element. Zero and
/// InfinitesimalNonzero together make up the infinitesimals; adding
/// Appreciable gives the limited elements; Infinite is everything else.
enum class Classification { Zero, InfinitesimalNonzero, Appreciable, Infinite };

constexpr std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::Zero: return "zero";
    case Classification::InfinitesimalNonzero: return "infinitesimal (nonzero)";
    case Classification::Appreciable: return "appreciable";
    case Classification::Infinite: return "infinite";
  }
  return "unknown";
}

/// Machine-readable tag for JSON.
constexpr std::string_view classification_tag(Classification c) {
  switch (c) {
    case Classification::Zero: return "zero";
    case Classification::InfinitesimalNonzero: return "infinitesimal_nonzero";
    case Classification::Appreciable: return "appreciable";
    case Classification::Infinite: return "infinite";
  }
  return "unknown";
}

inline std::ostream& operator<<(std::ostream& os, Classification c) {
  return os << classification_tag(c);
}

constexpr bool is_infinitesimal(Classification c) {
  return c == Classification::Zero || c == Classification::InfinitesimalNonzero;
}
constexpr bool is_limited(Classification c) { return c != Classification::Infinite; }

/// Element of the rational function field Q(w), where w is a positive
/// infinite element and p/q > 0 iff p/q is eventually positive as w grows.
///
/// Canonical form: the denominator is monic and coprime to the numerator;
/// zero is 0/1. Since a monic denominator is positive at infinity, the sign
/// of an element is the sign of its numerator's leading coefficient.
class RFunc {
 public:
  using Poly = Polynomial<Rational>;

  RFunc() : num_(), den_(Poly::constant(Rational(1))) {}
  RFunc(int v) : RFunc(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  RFunc(const Rational& r)  // NOLINT(google-explicit-constructor)
      : num_(Poly::constant(r)), den_(Poly::constant(Rational(1))) {}
  RFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  /// The infinite generator w.
  static RFunc omega() { return RFunc(Poly::x(), Poly::constant(Rational(1))); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.leading().sign(); }
  bool is_rational() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rational as_rational() const { return num_.coeff(0); }

  RFunc operator-() const { return RFunc(-num_, den_, Canonical{}); }

  friend RFunc operator+(const RFunc& a, const RFunc& b) {
    if (a.den_ == b.den_) return RFunc(a.num_ + b.num_, a.den_);
    return RFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RFunc operator-(const RFunc& a, const RFunc& b) { return a + (-b); }
  friend RFunc operator*(const RFunc& a, const RFunc& b) {
    return RFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RFunc operator/(const RFunc& a, const RFunc& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    return RFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RFunc& operator+=(const RFunc& o) { return *this = *this + o; }
  RFunc& operator-=(const RFunc& o) { return *this = *this - o; }
  RFunc& operator*=(const RFunc& o) { return *this = *this * o; }
  RFunc& operator/=(const RFunc& o) { return *this = *this / o; }

  friend bool operator==(const RFunc& a, const RFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const RFunc& a, const RFunc& b) {
    int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  Classification classify() const {
    if (is_zero()) return Classification::Zero;
    if (num_.degree() > den_.degree()) return Classification::Infinite;
    if (num_.degree() == den_.degree()) return Classification::Appreciable;
    return Classification::InfinitesimalNonzero;
  }

  /// The unique rational infinitely close to a limited element.
  Rational shadow() const {
    switch (classify()) {
      case Classification::Infinite:
        throw Error(ErrorCode::NotLimited, to_string() + " is not limited");
      case Classification::Appreciable:
        return num_.leading();  // den_ is monic
      default:
        return Rational(0);
    }
  }

  /// Value at w = n. Throws DivisionByZero at a pole.
  Rational at(const Rational& n) const {
    Rational d = den_(n);
    if (d.is_zero())
      throw Error(ErrorCode::DivisionByZero,
                  to_string() + " has a pole at w = " + n.to_string());
    return num_(n) / d;
  }

  /// Text in the element grammar, e.g. "(3*w + 1)/(w + 2)".
  std::string to_string() const {
    std::string n = hyperivt::to_string(num_, "w");
    if (den_.degree() == 0) return n;
    std::string d = hyperivt::to_string(den_, "w");
    auto is_sum = [](const std::string& t) {
      return t.find(" + ") != std::string::npos || t.find(" - ") != std::string::npos;
    };
    if (is_sum(n) || (num_.degree() == 0 && n.find('/') != std::string::npos)) n = "(" + n + ")";
    if (d.find_first_of("+-*/ ") != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
  }

  friend std::ostream& operator<<(std::ostream& os, const RFunc& r) {
    return os << r.to_string();
  }

 private:
  struct Canonical {};
  RFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_.is_zero())
      throw Error(ErrorCode::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::constant(Rational(1));
      return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    Rational lead = den_.leading();
    if (lead != Rational(1)) {
      Rational inv = Rational(1) / lead;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly num_;
  Poly den_;
};

inline int sign(const RFunc& a) { return a.sign(); }
inline bool is_zero(const RFunc& a) { return a.is_zero(); }
inline RFunc abs(const RFunc& a) { return a.sign() < 0 ? -a : a; }

inline Classification rf_classify(const RFunc& a) { return a.classify(); }
inline Rational rf_shadow(const RFunc& a) { return a.shadow(); }

/// x is infinitely close to y when x - y is infinitesimal.
inline bool infinitely_close(const RFunc& a, const RFunc& b) {
  return is_infinitesimal((a - b).classify());
}

}  // namespace hyperivt

#endif  // HYPERIVT_RFUNC_HPP

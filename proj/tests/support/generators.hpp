// Seeded random generators for property tests.
#ifndef HYPERIVT_TESTS_GENERATORS_HPP
#define HYPERIVT_TESTS_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hyperivt/polynomial.hpp"
#include "hyperivt/rational.hpp"
#include "hyperivt/rfunc.hpp"
#include "hyperivt/ultrapower.hpp"
#include "oracles.hpp"

namespace gen {

using hyperivt::Integer;
using hyperivt::Rational;
using hyperivt::RatPoly;
using hyperivt::RFunc;

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// p/q with q in [1, max_den] and |p/q| <= magnitude.
  Rational rational(long magnitude = 10, long max_den = 4) {
    long q = integer(1, max_den);
    long p = integer(-magnitude * q, magnitude * q);
    return Rational(Integer(p), Integer(q));
  }

  Rational nonzero_rational(long magnitude = 10, long max_den = 4) {
    Rational r;
    do r = rational(magnitude, max_den);
    while (r.is_zero());
    return r;
  }

  /// Polynomial of exactly the given degree.
  RatPoly polynomial(int degree, long magnitude = 10, long max_den = 4) {
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) c.push_back(rational(magnitude, max_den));
    c.push_back(nonzero_rational(magnitude, max_den));
    return RatPoly(std::move(c));
  }

  RatPoly square_free_polynomial(int degree, long magnitude = 10, long max_den = 4) {
    while (true) {
      RatPoly f = polynomial(degree, magnitude, max_den);
      if (hyperivt::gcd(f, f.derivative()).is_constant()) return f;
    }
  }

  /// Polynomial in w of the given degree with small coefficients.
  RatPoly w_poly(int degree) { return polynomial(degree, 5, 3); }

  /// Random element of Q(w) with numerator and denominator degree <= 3.
  RFunc rfunc() {
    return RFunc(w_poly(static_cast<int>(integer(0, 3))), w_poly(static_cast<int>(integer(0, 3))));
  }

  RFunc infinitesimal() {
    int dd = static_cast<int>(integer(1, 3));
    int nd = static_cast<int>(integer(0, dd - 1));
    return RFunc(w_poly(nd), w_poly(dd));
  }

  RFunc positive_infinitesimal() {
    RFunc e = infinitesimal();
    return e.sign() < 0 ? -e : e;
  }

  /// Limited element: degree of numerator at most degree of denominator.
  RFunc limited() {
    int dd = static_cast<int>(integer(0, 3));
    int nd = static_cast<int>(integer(0, dd));
    return RFunc(w_poly(nd), w_poly(dd));
  }

  /// Random selector-free expression in n; nullopt when a divisor degenerates.
  std::optional<hyperivt::HyperSeq> sequence(int depth = 3) {
    using hyperivt::SeqExpr;
    auto build = [&](auto&& self, int d) -> SeqExpr {
      if (d == 0 || integer(0, 3) == 0) return coin() ? SeqExpr::index() : SeqExpr::constant(rational(5, 3));
      auto op = static_cast<SeqExpr::Op>(integer(2, 5));  // Add..Div
      return SeqExpr::binary(op, self(self, d - 1), self(self, d - 1));
    };
    try {
      return hyperivt::HyperSeq(build(build, depth));
    } catch (const hyperivt::Error&) {
      return std::nullopt;
    }
  }

  RFunc infinite() {
    int dd = static_cast<int>(integer(0, 2));
    int nd = static_cast<int>(integer(dd + 1, 3));
    return RFunc(w_poly(nd), w_poly(dd));
  }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<oracle::Q> raw(const RatPoly& f) {
  std::vector<oracle::Q> out;
  for (const auto& c : f.coefficients()) out.push_back(c.raw());
  return out;
}

}  // namespace gen

#endif  // HYPERIVT_TESTS_GENERATORS_HPP

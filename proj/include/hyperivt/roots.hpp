#ifndef HYPERIVT_ROOTS_HPP
#define HYPERIVT_ROOTS_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperivt/error.hpp"
#include "hyperivt/polynomial.hpp"
#include "hyperivt/rational.hpp"

namespace hyperivt {

/// 2^-32, the default target width for isolating intervals.
inline Rational default_width() { return Rational(Integer(1), Integer(1) << 32); }

// ---------------------------------------------------------------------------
// Sturm chains

/// f, f', then negated remainders, until the remainder vanishes.
inline std::vector<RatPoly> sturm_chain(const RatPoly& f) {
  std::vector<RatPoly> chain{f};
  if (f.degree() <= 0) return chain;
  chain.push_back(f.derivative());
  while (true) {
    RatPoly r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

/// Sign changes along the chain evaluated at x, zeros skipped.
inline int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Number of distinct real roots of f in the half-open interval (lo, hi].
inline int sturm_count(const RatPoly& f, const Rational& lo, const Rational& hi) {
  if (!(lo < hi))
    throw Error(ErrorCode::DegenerateInterval,
                "interval (" + lo.to_string() + ", " + hi.to_string() + "] is empty");
  if (f.is_zero())
    throw Error(ErrorCode::DegenerateInterval, "the zero polynomial has no finite root count");
  auto chain = sturm_chain(square_free_part(f));
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

// ---------------------------------------------------------------------------
// Isolating intervals and the grid IVT engine

struct IsolatingInterval {
  enum class Kind { ExactRoot, SignChange };

  Rational lo;
  Rational hi;
  Kind kind = Kind::SignChange;

  static IsolatingInterval exact(const Rational& r) { return {r, r, Kind::ExactRoot}; }
  bool is_exact() const { return kind == Kind::ExactRoot; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }

  /// Exact check of the kind invariant against f.
  bool witnesses(const RatPoly& f) const {
    if (is_exact()) return lo == hi && f(lo).is_zero();
    return lo < hi && f(lo).sign() * f(hi).sign() < 0;
  }
};

constexpr std::string_view kind_tag(IsolatingInterval::Kind k) {
  return k == IsolatingInterval::Kind::ExactRoot ? "exact_root" : "sign_change";
}

/// Finite-grid rendering of the intermediate value argument.
///
/// Each level divides the current cell into `grid` equal parts. If a grid
/// point is an exact zero, the leftmost such point is returned. Otherwise
/// the first cell whose left end is negative and right end is positive
/// becomes the next cell (f is negated first when f(a) > 0). Stops once the
/// cell is no wider than `width`.
inline IsolatingInterval ivt_grid_root(const RatPoly& f, const Rational& a,
                                       const Rational& b, const Rational& width,
                                       unsigned grid = 2) {
  if (!(a < b))
    throw Error(ErrorCode::DegenerateInterval,
                "interval (" + a.to_string() + ", " + b.to_string() + ") is empty");
  if (width.sign() <= 0)
    throw Error(ErrorCode::DegenerateInterval, "width must be positive");
  if (grid < 2) throw Error(ErrorCode::DegenerateInterval, "grid count must be at least 2");
  const int sa = f(a).sign(), sb = f(b).sign();
  if (sa * sb >= 0)
    throw Error(ErrorCode::NoSignChange,
                "f(" + a.to_string() + ") * f(" + b.to_string() + ") is not negative");
  const RatPoly g = sa > 0 ? -f : f;

  Rational lo = a, hi = b;
  std::vector<int> signs(grid + 1);
  while (hi - lo > width) {
    const Rational step = (hi - lo) / Rational(static_cast<long>(grid));
    signs.front() = -1;
    signs.back() = 1;
    for (unsigned k = 1; k < grid; ++k) {
      Rational p = lo + step * Rational(static_cast<long>(k));
      signs[k] = g(p).sign();
      if (signs[k] == 0) return IsolatingInterval::exact(p);
    }
    unsigned k = 0;
    while (!(signs[k] < 0 && signs[k + 1] > 0)) ++k;
    Rational new_lo = lo + step * Rational(static_cast<long>(k));
    hi = k + 1 == grid ? hi : lo + step * Rational(static_cast<long>(k + 1));
    lo = new_lo;
  }
  return {lo, hi, IsolatingInterval::Kind::SignChange};
}

// ---------------------------------------------------------------------------
// Real algebraic numbers

/// A real root of a square-free rational polynomial, pinned down by an
/// interval holding exactly that root. For SignChange intervals the root is
/// interior and the defining polynomial is nonzero at both ends.
class RealAlgebraic {
 public:
  /// Trusted constructor; callers guarantee the invariant.
  RealAlgebraic(RatPoly defining, IsolatingInterval interval)
      : defining_(std::move(defining)), interval_(std::move(interval)) {}

  static RealAlgebraic rational(const Rational& r) {
    return {RatPoly{-r, Rational(1)}, IsolatingInterval::exact(r)};
  }

  const RatPoly& defining() const { return defining_; }
  const IsolatingInterval& interval() const { return interval_; }
  bool is_exact() const { return interval_.is_exact(); }

  /// Exactly one root of the defining polynomial lies in the interval.
  bool invariant_holds() const {
    if (is_exact()) return defining_(interval_.lo).is_zero();
    return interval_.witnesses(defining_) &&
           sturm_count(defining_, interval_.lo, interval_.hi) == 1;
  }

  /// Halves the interval, keeping the sign change (or landing on the root).
  void bisect() {
    if (is_exact()) return;
    const Rational mid = interval_.midpoint();
    const int sm = defining_(mid).sign();
    if (sm == 0) {
      interval_ = IsolatingInterval::exact(mid);
    } else if (sm == defining_(interval_.lo).sign()) {
      interval_.lo = mid;
    } else {
      interval_.hi = mid;
    }
  }

  void refine_to(const Rational& width) {
    while (!is_exact() && interval_.width() > width) bisect();
  }

  /// Sign of g at this number.
  int sign_of(const RatPoly& g) const {
    if (is_exact()) return g(interval_.lo).sign();
    RealAlgebraic self = *this;
    if (!gcd(g, defining_).is_constant()) {
      // g shares a factor with the defining polynomial: g vanishes here iff
      // the common factor has a root inside the isolating interval.
      RatPoly h = gcd(g, defining_);
      if (sturm_count(h, self.interval_.lo, self.interval_.hi) == 1) return 0;
    }
    // g has no root at this number; shrink until g has none in the interval.
    while (!self.is_exact() &&
           sturm_count(g, self.interval_.lo, self.interval_.hi) != 0)
      self.bisect();
    if (self.is_exact()) return g(self.interval_.lo).sign();
    return g(self.interval_.hi).sign();
  }

 private:
  RatPoly defining_;
  IsolatingInterval interval_;
};

namespace detail {

// Shrinks a sign-change interval of f until the square-free part g has a
// single root in it. An odd number of roots of f (with multiplicity) lies
// inside, so after each halving one half still changes sign.
inline RealAlgebraic isolate_for(const RatPoly& f, IsolatingInterval iv) {
  RatPoly g = square_free_part(f);
  if (iv.is_exact()) return RealAlgebraic(g, iv);
  const int slo = f(iv.lo).sign();
  while (sturm_count(g, iv.lo, iv.hi) != 1) {
    Rational mid = iv.midpoint();
    int sm = f(mid).sign();
    if (sm == 0) return RealAlgebraic(g, IsolatingInterval::exact(mid));
    if (sm == slo)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
  return RealAlgebraic(g, iv);
}

}  // namespace detail

/// A root of any odd-degree polynomial, found by the grid engine on the
/// Cauchy window (-B, B).
inline RealAlgebraic odd_degree_root(const RatPoly& f,
                                     const Rational& width = default_width()) {
  if (f.degree() % 2 == 0)
    throw Error(ErrorCode::NoSignChange, "polynomial degree is not odd");
  const Rational bound = cauchy_bound(f);
  return detail::isolate_for(f, ivt_grid_root(f, -bound, bound, width));
}

/// The positive square root of q.
inline RealAlgebraic real_sqrt(const Rational& q, const Rational& width = default_width()) {
  if (q.sign() < 0)
    throw Error(ErrorCode::NegativeRadicand, "negative radicand " + q.to_string());
  if (q.is_zero()) return RealAlgebraic(RatPoly::x(), IsolatingInterval::exact(Rational(0)));
  const RatPoly f{-q, Rational(0), Rational(1)};
  Rational root;
  if (rational_sqrt(q, root)) return RealAlgebraic(f, IsolatingInterval::exact(root));
  const Rational top = (q > Rational(1) ? q : Rational(1)) + 1;
  return RealAlgebraic(f, ivt_grid_root(f, Rational(0), top, width));
}

/// One entry per distinct real root, ascending, each interval no wider
/// than `width`.
inline std::vector<RealAlgebraic> isolate_all_roots(const RatPoly& f,
                                                    const Rational& width = default_width()) {
  if (f.is_zero())
    throw Error(ErrorCode::DegenerateInterval, "the zero polynomial has no isolated roots");
  const RatPoly g = square_free_part(f);
  std::vector<RealAlgebraic> out;
  if (g.degree() <= 0) return out;
  const auto chain = sturm_chain(g);
  const Rational bound = cauchy_bound(g);

  // Roots of g in the open interval (lo, hi).
  auto open_count = [&](const Rational& lo, const Rational& hi) {
    return sign_variations(chain, lo) - sign_variations(chain, hi) - (g(hi).is_zero() ? 1 : 0);
  };
  auto emit = [&](auto&& self, const Rational& lo, const Rational& hi) -> void {
    const int n = open_count(lo, hi);
    if (n == 0) return;
    if (n == 1 && !g(lo).is_zero() && !g(hi).is_zero()) {
      IsolatingInterval iv = ivt_grid_root(g, lo, hi, width);
      out.emplace_back(g, iv);
      return;
    }
    const Rational mid = (lo + hi) / Rational(2);
    self(self, lo, mid);
    if (g(mid).is_zero()) out.emplace_back(g, IsolatingInterval::exact(mid));
    self(self, mid, hi);
  };
  emit(emit, -bound, bound);
  return out;
}

// ---------------------------------------------------------------------------
// Ordering of real algebraic numbers

inline std::strong_ordering alg_compare(RealAlgebraic a, RealAlgebraic b) {
  auto from_int = [](int s) {
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  };
  if (a.is_exact() && b.is_exact()) return a.interval().lo <=> b.interval().lo;
  if (a.is_exact() || b.is_exact()) {
    const bool a_exact = a.is_exact();
    const Rational r = a_exact ? a.interval().lo : b.interval().lo;
    RealAlgebraic& other = a_exact ? b : a;
    // Sign of (other - r): refine until r is outside the interval or hit.
    while (true) {
      const auto& iv = other.interval();
      int s;
      if (other.is_exact())
        s = (iv.lo <=> r) < 0 ? -1 : ((iv.lo <=> r) > 0 ? 1 : 0);
      else if (r <= iv.lo)
        s = 1;
      else if (r >= iv.hi)
        s = -1;
      else if (other.defining()(r).is_zero())
        s = 0;
      else {
        other.bisect();
        continue;
      }
      return from_int(a_exact ? -s : s);
    }
  }

  const RatPoly h = gcd(a.defining(), b.defining());
  auto root_of_h = [&](const RealAlgebraic& x) {
    return h.degree() > 0 && sturm_count(h, x.interval().lo, x.interval().hi) == 1;
  };
  const bool may_equal = root_of_h(a) && root_of_h(b);
  while (true) {
    if (a.is_exact() || b.is_exact()) return alg_compare(a, b);
    const auto& ia = a.interval();
    const auto& ib = b.interval();
    if (ia.hi <= ib.lo) return std::strong_ordering::less;
    if (ib.hi <= ia.lo) return std::strong_ordering::greater;
    if (may_equal) {
      const Rational lo = ia.lo < ib.lo ? ia.lo : ib.lo;
      const Rational hi = ia.hi > ib.hi ? ia.hi : ib.hi;
      // Both are roots of h and the hull holds a single root of h.
      if (sturm_count(h, lo, hi) == 1 && !h(hi).is_zero())
        return std::strong_ordering::equal;
    }
    a.bisect();
    b.bisect();
  }
}

// ---------------------------------------------------------------------------
// Dedekind cuts of Q

/// Shapes of a cut (L, U): a jump has both max L and min U; a gap has
/// neither; otherwise exactly one of the two extrema exists.
enum class CutKind { Jump, Gap, MaxInLower, MinInUpper };

constexpr std::string_view cut_kind_tag(CutKind k) {
  switch (k) {
    case CutKind::Jump: return "jump";
    case CutKind::Gap: return "gap";
    case CutKind::MaxInLower: return "max_in_lower";
    case CutKind::MinInUpper: return "min_in_upper";
  }
  return "unknown";
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// The rational value of a, if it has one (rational root theorem).
inline std::optional<Rational> rational_value(RealAlgebraic a) {
  if (a.is_exact()) return a.interval().lo;
  // Clear denominators to integer coefficients.
  Integer lcm_den(1);
  for (const auto& c : a.defining().coefficients())
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  const Integer lead = (a.defining().leading() * Rational(lcm_den)).numerator();
  const Integer abs_lead = lead < 0 ? Integer(-lead) : lead;
  // A rational root p/q has q | lead; once the interval is narrower than
  // 1/|lead| each q admits at most one numerator p inside it.
  a.refine_to(Rational(Integer(1), abs_lead + 1));
  if (a.is_exact()) return a.interval().lo;
  for (const Integer& q : detail::positive_divisors(abs_lead)) {
    const Rational scaled_lo = a.interval().lo * Rational(q);
    Integer p = floor(scaled_lo) + 1;
    Rational candidate(p, q);
    if (candidate < a.interval().hi && a.defining()(candidate).is_zero()) return candidate;
  }
  return std::nullopt;
}

/// Cut of (Q, <) given by L = {q : q <= a}. Rational a puts its maximum in
/// L; irrational a leaves a gap. A real number never induces a jump in Q
/// since Q is dense, so Jump and MinInUpper are not produced under this
/// convention.
inline CutKind cut_classify(const RealAlgebraic& a) {
  return rational_value(a) ? CutKind::MaxInLower : CutKind::Gap;
}

}  // namespace hyperivt

#endif  // HYPERIVT_ROOTS_HPP

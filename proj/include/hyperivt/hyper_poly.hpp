#ifndef HYPERIVT_HYPER_POLY_HPP
#define HYPERIVT_HYPER_POLY_HPP

#include <cstddef>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperivt/error.hpp"
#include "hyperivt/polynomial.hpp"
#include "hyperivt/rational.hpp"
#include "hyperivt/rfunc.hpp"
#include "hyperivt/roots.hpp"

namespace hyperivt {

/// Polynomial whose coefficients live in Q(w).
using HyperPolynomial = Polynomial<RFunc>;

/// f*(a): a standard polynomial applied to an element of Q(w). On embedded
/// rationals it agrees with ordinary evaluation.
inline RFunc star_eval(const RatPoly& f, const RFunc& a) { return f.operator()<RFunc>(a); }

inline HyperPolynomial star_lift(const RatPoly& f) {
  return f.map([](const Rational& c) { return RFunc(c); });
}

/// Evaluates f*(a) and f*(b) and reports whether they are infinitely close.
/// For limited a with a infinitely close to b this always holds; an
/// infinite a is outside the hypothesis and is rejected.
inline bool microcontinuity_check(const RatPoly& f, const RFunc& a, const RFunc& b) {
  if (a.classify() == Classification::Infinite)
    throw Error(ErrorCode::NotLimited, a.to_string() + " is not limited");
  return infinitely_close(star_eval(f, a), star_eval(f, b));
}

/// Strictly increasing refinement levels n_1 < n_2 < ..., each at least 2.
class GridSchedule {
 public:
  explicit GridSchedule(std::vector<Integer> levels) : levels_(std::move(levels)) {
    if (levels_.empty() || levels_.front() < 2)
      throw Error(ErrorCode::DegenerateInterval, "schedule must start at a level >= 2");
    for (std::size_t i = 1; i < levels_.size(); ++i)
      if (!(levels_[i - 1] < levels_[i]))
        throw Error(ErrorCode::DegenerateInterval, "schedule must be strictly increasing");
  }

  /// n_j = 2^j for j = 1..count.
  static GridSchedule dyadic(unsigned count = 32) {
    if (count == 0) throw Error(ErrorCode::DegenerateInterval, "schedule needs at least one level");
    std::vector<Integer> levels;
    for (unsigned j = 1; j <= count; ++j) levels.push_back(Integer(1) << j);
    return GridSchedule(std::move(levels));
  }

  const std::vector<Integer>& levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }

 private:
  std::vector<Integer> levels_;
};

/// Outcome of one level of the per-index construction.
struct HyperIvtLevel {
  Integer n;
  /// Set when the level was usable; empty when it was skipped.
  std::optional<IsolatingInterval> interval;
  Rational midpoint;
  Rational residual;
  /// Exact bound on |residual| from the derivative bound and cell width.
  Rational residual_bound;
  /// Why the level was skipped (an error code name), empty otherwise.
  std::string skipped;
};

struct HyperIvtResult {
  std::vector<HyperIvtLevel> levels;
  /// Classification of the residual sequence [(f_n(c_n))].
  Classification residual;
  /// Symbolic majorant of |f_n(c_n)| as an element of Q(w), used when the
  /// residuals are not identically zero.
  RFunc residual_majorant;
};

namespace detail {

// Sum over i >= 1 of i * |A_i| * R^(i-1): a Lipschitz bound for F on [-R, R].
template <class T>
T derivative_bound(const std::vector<T>& coeffs, const T& radius) {
  T total(0), power(1);
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    total = total + T(static_cast<int>(i)) * abs(coeffs[i]) * power;
    power = power * radius;
  }
  return total;
}

inline HyperIvtLevel run_level(const HyperPolynomial& F, const RFunc& a, const RFunc& b,
                               const Integer& n) {
  HyperIvtLevel level;
  level.n = n;
  const Rational at(n);
  std::vector<Rational> coeffs;
  Rational an, bn;
  try {
    for (const auto& c : F.coefficients()) coeffs.push_back(c.at(at));
    an = a.at(at);
    bn = b.at(at);
  } catch (const Error&) {
    level.skipped = std::string(error_code_name(ErrorCode::UndefinedInstantiation));
    return level;
  }
  const RatPoly fn(coeffs);
  if (!(an < bn) || fn(an).sign() * fn(bn).sign() >= 0) {
    level.skipped = std::string(error_code_name(ErrorCode::NoSignChange));
    return level;
  }
  const IsolatingInterval iv = ivt_grid_root(fn, an, bn, Rational(Integer(1), n));
  level.interval = iv;
  level.midpoint = iv.midpoint();
  level.residual = fn(level.midpoint);
  const Rational radius = abs(an) > abs(bn) ? abs(an) : abs(bn);
  level.residual_bound =
      derivative_bound(fn.coefficients(), radius) * iv.width() / Rational(2);
  return level;
}

}  // namespace detail

/// Intermediate value theorem for a polynomial with coefficients in Q(w),
/// carried out index by index.
///
/// At each level n of the schedule, the coefficients and endpoints are
/// instantiated at w = n and the grid engine finds a cell of width at most
/// 1/n around a root of the resulting rational polynomial; its midpoint is
/// c_n. Levels where an instantiation is undefined or the sign condition
/// fails are skipped: only finitely many can be, since the conditions hold
/// eventually. Levels run concurrently and are reported in schedule order.
inline HyperIvtResult hyper_ivt_root(const HyperPolynomial& F, const RFunc& a, const RFunc& b,
                                     const GridSchedule& schedule = GridSchedule::dyadic()) {
  if (!(a < b))
    throw Error(ErrorCode::DegenerateInterval,
                "interval (" + a.to_string() + ", " + b.to_string() + ") is empty");
  if (F(a).sign() * F(b).sign() >= 0)
    throw Error(ErrorCode::NoSignChange, "F(a) * F(b) is not negative");

  std::vector<std::future<HyperIvtLevel>> jobs;
  jobs.reserve(schedule.size());
  for (const auto& n : schedule.levels())
    jobs.push_back(std::async(std::launch::async, [&F, &a, &b, n] {
      return detail::run_level(F, a, b, n);
    }));

  HyperIvtResult result;
  bool any_used = false, all_zero = true;
  for (auto& job : jobs) {
    result.levels.push_back(job.get());
    const auto& lv = result.levels.back();
    if (!lv.interval) continue;
    any_used = true;
    all_zero &= lv.residual.is_zero();
  }
  if (!any_used)
    throw Error(ErrorCode::UndefinedInstantiation,
                "no level of the schedule yields a usable instantiation");

  // |F_n(c_n)| <= M_n * width_n / 2 with width_n <= 1/n; read in Q(w) this
  // is M(w) / (2w), infinitesimal whenever M grows slower than w.
  const RFunc radius = abs(a) > abs(b) ? abs(a) : abs(b);
  result.residual_majorant =
      detail::derivative_bound(F.coefficients(), radius) / (RFunc(2) * RFunc::omega());
  if (all_zero) {
    result.residual = Classification::Zero;
  } else {
    Classification bound = result.residual_majorant.classify();
    result.residual = is_infinitesimal(bound) ? Classification::InfinitesimalNonzero : bound;
  }
  return result;
}

}  // namespace hyperivt

#endif  // HYPERIVT_HYPER_POLY_HPP

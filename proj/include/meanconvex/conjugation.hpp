#pragma once

#include <functional>
#include <limits>
#include <random>
#include <string>

#include "meanconvex/power_means.hpp"

namespace meanconvex {

/// Open interval (lo, hi); hi may be +infinity, lo may be -infinity for images under log.
struct Interval {
  double lo;
  double hi;

  bool contains(double t) const noexcept { return t > lo && t < hi; }
  bool empty() const noexcept { return !(lo < hi); }
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Parameter pair of a (p,q)-Jensen convexity claim.
class ConvexityPair {
 public:
  ConvexityPair(double p, double q) : p_(p), q_(q) {
    if (!std::isfinite(p) || !std::isfinite(q)) throw DomainError("convexity pair must be finite");
  }

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

 private:
  double p_;
  double q_;
};

/// A positive function on an open sub-interval of ]0, inf[. The evaluator must be stateless.
struct SampledFunction {
  std::function<double(double)> evaluator;
  Interval domain{0.0, kInfinity};
  std::string name;

  double operator()(double t) const;
};

/// {t^p : t in I} for p != 0 (endpoints swap for p < 0), {log t : t in I} for p == 0.
Interval interval_image(Interval I, double p);

/// The transform f_{p,q} evaluated at u in I_p.
double conjugate_value(const SampledFunction& f, ConvexityPair pq, double u);

/// H_q(f(x), f(y)) - f(H_p(x, y)).
double pq_jensen_gap(const SampledFunction& f, ConvexityPair pq, double x, double y);

/// (g(u) + g(v)) / 2 - g((u + v) / 2).
double classical_jensen_gap(const std::function<double(double)>& g, double u, double v);

/// Gap of f_{p,q} at the points x, y pushed into I_p.
double conjugated_jensen_gap(const SampledFunction& f, ConvexityPair pq, double x, double y);

enum class GapSign { negative, indeterminate, positive };

/// Classifies a gap against the band |gap| <= relative_tol * scale.
GapSign classify_gap(double gap, double scale, double relative_tol = 1e-9);

/// Larger of the two means compared by pq_jensen_gap; the natural scale of that gap.
double pq_gap_scale(const SampledFunction& f, ConvexityPair pq, double x, double y);

// Test-function registry used for randomized checks of the transform.
namespace family {

SampledFunction power(double beta);
/// t -> exp(a t + b)
SampledFunction exponential(double a, double b);
/// t -> base + slope * max(0, t - knot)^2, a convex C^1 spline.
SampledFunction convex_spline(double base, double slope, double knot);
/// t -> base + slope * min(t, knot), a concave piecewise-linear cap.
SampledFunction concave_cap(double base, double slope, double knot);

/// Draws one member of the registry: t^beta with beta in [-3,3], exp(at+b) with
/// a,b in [-1,1], or a spline/cap with positive parameters.
SampledFunction random_member(std::mt19937_64& rng);

}  // namespace family

}  // namespace meanconvex

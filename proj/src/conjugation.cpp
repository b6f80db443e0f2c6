#include "meanconvex/conjugation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "meanconvex/random.hpp"

namespace meanconvex {

namespace {

double sign_of(double q) { return q > 0 ? 1.0 : -1.0; }

// Inverse of the change of variables t -> t^p (or log t when p == 0).
double pull_back(double u, double p) { return p == 0.0 ? std::exp(u) : std::pow(u, 1.0 / p); }

double push_forward(double t, double p) { return p == 0.0 ? std::log(t) : std::pow(t, p); }

std::string format_name(const char* stem, std::initializer_list<double> params) {
  std::ostringstream out;
  out.precision(17);
  out << stem << '(';
  bool first = true;
  for (double v : params) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << ')';
  return out.str();
}

}  // namespace

double SampledFunction::operator()(double t) const {
  if (!domain.contains(t)) throw DomainError("argument outside the domain of " + name);
  const double value = evaluator(t);
  if (!(value > 0.0) || !std::isfinite(value))
    throw DomainError("function " + name + " is not positive and finite at the argument");
  return value;
}

Interval interval_image(Interval I, double p) {
  if (I.empty()) throw DomainError("interval is empty");
  if (I.lo < 0.0) throw DomainError("interval must lie in the positive reals");
  if (!std::isfinite(p)) throw DomainError("exponent must be finite");
  if (p == 0.0) return {I.lo == 0.0 ? -kInfinity : std::log(I.lo), std::log(I.hi)};
  const double a = std::pow(I.lo, p);
  const double b = std::pow(I.hi, p);
  return p > 0 ? Interval{a, b} : Interval{b, a};
}

double conjugate_value(const SampledFunction& f, ConvexityPair pq, double u) {
  if (!interval_image(f.domain, pq.p()).contains(u))
    throw DomainError("conjugate argument outside the image interval");
  const double value = f(pull_back(u, pq.p()));
  if (pq.q() == 0.0) return std::log(value);
  return sign_of(pq.q()) * std::pow(value, pq.q());
}

double pq_jensen_gap(const SampledFunction& f, ConvexityPair pq, double x, double y) {
  const double mid = holder_mean(MeanParameter(pq.p()), x, y);
  return holder_mean(MeanParameter(pq.q()), f(x), f(y)) - f(mid);
}

double pq_gap_scale(const SampledFunction& f, ConvexityPair pq, double x, double y) {
  const double mid = holder_mean(MeanParameter(pq.p()), x, y);
  return std::max(holder_mean(MeanParameter(pq.q()), f(x), f(y)), f(mid));
}

double classical_jensen_gap(const std::function<double(double)>& g, double u, double v) {
  if (!std::isfinite(u) || !std::isfinite(v)) throw DomainError("Jensen gap arguments must be finite");
  return (g(u) + g(v)) / 2.0 - g((u + v) / 2.0);
}

double conjugated_jensen_gap(const SampledFunction& f, ConvexityPair pq, double x, double y) {
  const auto g = [&](double u) { return conjugate_value(f, pq, u); };
  return classical_jensen_gap(g, push_forward(x, pq.p()), push_forward(y, pq.p()));
}

GapSign classify_gap(double gap, double scale, double relative_tol) {
  if (std::abs(gap) <= relative_tol * std::abs(scale)) return GapSign::indeterminate;
  return gap > 0 ? GapSign::positive : GapSign::negative;
}

namespace family {

SampledFunction power(double beta) {
  return {[beta](double t) { return std::pow(t, beta); }, {0.0, kInfinity}, format_name("pow", {beta})};
}

SampledFunction exponential(double a, double b) {
  return {[a, b](double t) { return std::exp(a * t + b); }, {0.0, kInfinity}, format_name("exp", {a, b})};
}

SampledFunction convex_spline(double base, double slope, double knot) {
  if (!(base > 0) || slope < 0) throw DomainError("spline needs base > 0 and slope >= 0");
  return {[=](double t) {
            const double excess = std::max(0.0, t - knot);
            return base + slope * excess * excess;
          },
          {0.0, kInfinity},
          format_name("spline", {base, slope, knot})};
}

SampledFunction concave_cap(double base, double slope, double knot) {
  if (!(base > 0) || slope < 0) throw DomainError("cap needs base > 0 and slope >= 0");
  return {[=](double t) { return base + slope * std::min(t, knot); },
          {0.0, kInfinity},
          format_name("cap", {base, slope, knot})};
}

SampledFunction random_member(std::mt19937_64& rng) {
  switch (uniform_int(rng, 0, 3)) {
    case 0:
      return power(uniform_real(rng, -3.0, 3.0));
    case 1: {
      const double a = uniform_real(rng, -1.0, 1.0);
      return exponential(a, uniform_real(rng, -1.0, 1.0));
    }
    case 2: {
      const double base = uniform_real(rng, 0.1, 2.0);
      const double slope = uniform_real(rng, 0.0, 2.0);
      return convex_spline(base, slope, uniform_real(rng, 0.1, 10.0));
    }
    default: {
      const double base = uniform_real(rng, 0.1, 2.0);
      const double slope = uniform_real(rng, 0.0, 2.0);
      return concave_cap(base, slope, uniform_real(rng, 0.1, 10.0));
    }
  }
}

}  // namespace family

}  // namespace meanconvex

#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "meanconvex/errors.hpp"

namespace meanconvex {

/// Order p of a power mean. Finite; p == 0 selects the geometric mean.
class MeanParameter {
 public:
  explicit MeanParameter(double p) : p_(p) {
    if (!std::isfinite(p)) throw DomainError("power mean order must be finite");
  }

  double value() const noexcept { return p_; }
  bool is_geometric() const noexcept { return p_ == 0.0; }

 private:
  double p_;
};

struct WeightedValue {
  double weight;
  double value;
};

/// Weights in ]0,1] summing to one (relative 1e-12) attached to positive values.
class WeightVector {
 public:
  explicit WeightVector(std::vector<WeightedValue> entries);

  const std::vector<WeightedValue>& entries() const noexcept { return entries_; }

 private:
  std::vector<WeightedValue> entries_;
};

namespace detail {

// log((1 + e^L) / 2) without overflow and without cancellation near L = 0.
template <class Real>
Real log_half_one_plus_exp(const Real& L) {
  using std::exp;
  using std::expm1;
  using std::log;
  using std::log1p;
  if (L <= 1) return log1p(expm1(L) / 2);
  return L - log(Real(2)) + log1p(exp(-L));
}

}  // namespace detail

/// Two-variable power mean, evaluated relative to the larger argument so that
/// x^p is never formed. Works for double and for multiprecision reals.
/// Exact p == 0 is the geometric mean; tiny nonzero p uses the literal formula.
template <class Real>
Real basic_holder_mean(const Real& p, const Real& x, const Real& y) {
  using std::exp;
  using std::log;
  using std::sqrt;
  if (!(x > 0) || !(y > 0)) throw DomainError("power mean arguments must be positive");
  const Real hi = x < y ? y : x;
  const Real lo = x < y ? x : y;
  const Real ratio = lo / hi;
  Real mean;
  if (p == 0) {
    mean = hi * sqrt(ratio);
  } else {
    const Real L = p * log(ratio);
    mean = hi * exp(detail::log_half_one_plus_exp(L) / p);
  }
  if (mean < lo) mean = lo;
  if (mean > hi) mean = hi;
  return mean;
}

double holder_mean(MeanParameter p, double x, double y);

double weighted_holder_mean(MeanParameter p, const WeightVector& w);

}  // namespace meanconvex

#include "meanconvex/power_means.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace meanconvex {

WeightVector::WeightVector(std::vector<WeightedValue> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("weight vector is empty");
  double total = 0.0;
  for (const auto& e : entries_) {
    if (!(e.weight > 0.0) || e.weight > 1.0 || !std::isfinite(e.weight))
      throw DomainError("weights must lie in ]0,1]");
    if (!(e.value > 0.0) || !std::isfinite(e.value))
      throw DomainError("weighted values must be positive and finite");
    total += e.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) throw DomainError("weights must sum to 1");
}

double holder_mean(MeanParameter p, double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("power mean arguments must be finite");
  return basic_holder_mean(p.value(), x, y);
}

double weighted_holder_mean(MeanParameter p, const WeightVector& w) {
  const auto& entries = w.entries();
  double hi = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& e : entries) {
    hi = std::max(hi, e.value);
    lo = std::min(lo, e.value);
  }

  // Work with ratios r_i = v_i / max <= 1 and exponents L_i = p log r_i.
  double log_mean_ratio = 0.0;
  if (p.is_geometric()) {
    for (const auto& e : entries) log_mean_ratio += e.weight * std::log(e.value / hi);
  } else {
    const double order = p.value();
    std::vector<double> exponents;
    exponents.reserve(entries.size());
    double largest = -std::numeric_limits<double>::infinity();
    for (const auto& e : entries) {
      exponents.push_back(order * std::log(e.value / hi));
      largest = std::max(largest, exponents.back());
    }
    double log_power_sum;
    if (largest <= 1.0) {
      // sum w_i e^{L_i} = 1 + sum w_i (e^{L_i} - 1) since the weights sum to one
      double excess = 0.0;
      for (std::size_t i = 0; i < entries.size(); ++i)
        excess += entries[i].weight * std::expm1(exponents[i]);
      log_power_sum = std::log1p(excess);
    } else {
      double scaled = 0.0;
      for (std::size_t i = 0; i < entries.size(); ++i)
        scaled += entries[i].weight * std::exp(exponents[i] - largest);
      log_power_sum = largest + std::log(scaled);
    }
    log_mean_ratio = log_power_sum / order;
  }
  return std::clamp(hi * std::exp(log_mean_ratio), lo, hi);
}

}  // namespace meanconvex

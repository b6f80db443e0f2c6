#include "meanconvex/numeric.hpp"

#include <cmath>

namespace meanconvex {

namespace {

bool is_decimal(const std::string& s) {
  bool digit = false;
  bool point = false;
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      digit = true;
    } else if (c == '.' && !point) {
      point = true;
    } else {
      return false;
    }
  }
  return digit;
}

template <class Real, class Convert>
Real evaluate_ratio(const FormalElement& a, std::span<const Real> values, Convert&& convert, const Real& threshold) {
  using std::abs;
  try {
    Real den_scale;
    const Real num = a.numerator().evaluate<Real>(values, convert);
    const Real den = a.denominator().evaluate<Real>(values, convert, &den_scale);
    if (abs(den) <= threshold * den_scale)
      throw EvaluationError("denominator of " + a.to_string() + " vanishes numerically at the assignment");
    return num / den;
  } catch (const std::out_of_range& e) {
    throw EvaluationError(e.what());
  }
}

}  // namespace

NumericAssignment::NumericAssignment(std::vector<std::string> decimals, unsigned precision)
    : decimals_(std::move(decimals)), precision_(precision) {
  if (precision_ < 10) throw DomainError("working precision must be at least 10 digits");
  for (const auto& d : decimals_) {
    if (!is_decimal(d)) throw DomainError("generator value '" + d + "' is not a plain decimal");
    if (d.find_first_of("123456789") == std::string::npos)
      throw DomainError("generator values must be strictly positive");
  }
}

std::vector<HighPrecision> NumericAssignment::values() const {
  std::vector<HighPrecision> out;
  out.reserve(decimals_.size());
  for (const auto& d : decimals_) out.emplace_back(d);
  return out;
}

std::vector<double> NumericAssignment::double_values() const {
  std::vector<double> out;
  for (const auto& d : decimals_) out.push_back(std::stod(d));
  return out;
}

HighPrecision to_high_precision(const Rational& r) {
  return HighPrecision(numerator(r)) / HighPrecision(denominator(r));
}

HighPrecision evaluate_numeric(const FormalElement& a, const NumericAssignment& va) {
  PrecisionScope scope(va.precision());
  const auto values = va.values();
  const HighPrecision threshold = pow(HighPrecision(10), 4 - static_cast<int>(va.precision()));
  return evaluate_ratio<HighPrecision>(a, values, to_high_precision, threshold);
}

double evaluate_numeric_double(const FormalElement& a, const NumericAssignment& va) {
  const auto values = va.double_values();
  const auto convert = [](const Rational& r) { return r.convert_to<double>(); };
  return evaluate_ratio<double>(a, values, convert, 1e-11);
}

}  // namespace meanconvex

#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "meanconvex/errors.hpp"
#include "meanconvex/formal_element.hpp"

namespace meanconvex {

/// Variable-precision binary float backed by MPFR. New values take the
/// precision installed by the innermost live PrecisionScope.
using HighPrecision = boost::multiprecision::mpfr_float;

/// Installs a default working precision (decimal digits) for HighPrecision values
/// created during its lifetime and restores the previous one on exit. Not for
/// concurrent use with different precisions.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10) : previous_(HighPrecision::default_precision()) {
    HighPrecision::default_precision(digits10);
  }
  ~PrecisionScope() { HighPrecision::default_precision(previous_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_;
};

/// First 50 decimals of pi.
inline constexpr const char* kPiDecimal = "3.14159265358979323846264338327950288419716939937510";
/// First 50 decimals of e, the default value of t2.
inline constexpr const char* kEDecimal = "2.71828182845904523536028747135266249775724709369995";

/// Embedding of Q(t1..tn) into the reals for probing: each generator gets a positive
/// decimal approximation of a transcendental number. This is a model of the formal
/// field, not an oracle; exact identities are decided formally.
class NumericAssignment {
 public:
  NumericAssignment() : NumericAssignment({kPiDecimal, kEDecimal}, 50) {}
  NumericAssignment(std::vector<std::string> decimals, unsigned precision);

  const std::vector<std::string>& decimals() const noexcept { return decimals_; }
  unsigned precision() const noexcept { return precision_; }
  std::size_t size() const noexcept { return decimals_.size(); }

  /// Generator values at the current working precision.
  std::vector<HighPrecision> values() const;
  std::vector<double> double_values() const;

 private:
  std::vector<std::string> decimals_;
  unsigned precision_;
};

HighPrecision to_high_precision(const Rational& r);

/// Numeric value of a at the assignment, computed at the assignment's precision
/// (a PrecisionScope is installed internally). Throws EvaluationError when the
/// denominator cancels to below 10^(4 - precision) of its term magnitudes.
HighPrecision evaluate_numeric(const FormalElement& a, const NumericAssignment& va);

/// Plain double evaluation with the same cancellation guard at 15 digits.
double evaluate_numeric_double(const FormalElement& a, const NumericAssignment& va);

}  // namespace meanconvex

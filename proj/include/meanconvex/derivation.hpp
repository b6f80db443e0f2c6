#pragma once

#include <vector>

#include "meanconvex/formal_element.hpp"

namespace meanconvex {

/// A derivation restricted to Q(t1..tn), fixed by its values c_i = d(t_i).
/// Generators beyond the listed values are mapped to 0; the empty or all-zero
/// spec is the zero derivation.
class DerivationSpec {
 public:
  DerivationSpec() = default;
  explicit DerivationSpec(std::vector<Rational> values) : values_(std::move(values)) {}

  const std::vector<Rational>& values() const noexcept { return values_; }
  Rational value(std::size_t index) const { return index < values_.size() ? values_[index] : Rational(0); }
  bool is_zero() const;

 private:
  std::vector<Rational> values_;
};

/// d(a) = sum_i (da/dt_i) c_i, the unique extension of the generator values that is
/// additive and satisfies the Leibniz rule. Vanishes on rational constants.
FormalElement derive(const FormalElement& a, const DerivationSpec& d);

/// l(a) = d(a)/a, a logarithmic map: l(ab) = l(a) + l(b). Throws DomainError for a = 0.
FormalElement logarithmic_part(const FormalElement& a, const DerivationSpec& d);

}  // namespace meanconvex

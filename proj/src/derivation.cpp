#include "meanconvex/derivation.hpp"

#include "meanconvex/errors.hpp"

namespace meanconvex {

namespace {

// Sum of c_i * dp/dt_i for a polynomial p.
Polynomial derive_polynomial(const Polynomial& p, const DerivationSpec& d) {
  Polynomial out;
  const std::size_t n = std::min(p.span(), d.values().size());
  for (std::size_t i = 0; i < n; ++i) {
    if (d.value(i) == 0) continue;
    out += p.partial_derivative(i).scaled(d.value(i));
  }
  return out;
}

}  // namespace

bool DerivationSpec::is_zero() const {
  for (const auto& c : values_)
    if (c != 0) return false;
  return true;
}

FormalElement derive(const FormalElement& a, const DerivationSpec& d) {
  if (a.is_constant() || d.is_zero()) return {};
  const Polynomial& num = a.numerator();
  const Polynomial& den = a.denominator();
  const Polynomial dnum = derive_polynomial(num, d);
  if (den.is_constant()) return FormalElement::fraction(dnum, den);
  // Quotient rule: d(n/m) = (m d(n) - n d(m)) / m^2.
  return FormalElement::fraction(dnum * den - num * derive_polynomial(den, d), den * den);
}

FormalElement logarithmic_part(const FormalElement& a, const DerivationSpec& d) {
  if (a.is_zero()) throw DomainError("logarithmic part of zero is undefined");
  if (a.is_constant() || d.is_zero()) return {};
  // l(n/m) = d(n)/n - d(m)/m, formed as one fraction over n*m.
  const Polynomial& num = a.numerator();
  const Polynomial& den = a.denominator();
  const Polynomial dnum = derive_polynomial(num, d);
  if (den.is_constant()) return FormalElement::fraction(dnum, num);
  return FormalElement::fraction(dnum * den - num * derive_polynomial(den, d), num * den);
}

}  // namespace meanconvex

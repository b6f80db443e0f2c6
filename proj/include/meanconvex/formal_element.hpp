#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "meanconvex/errors.hpp"
#include "meanconvex/polynomial.hpp"

namespace meanconvex {

/// An element of Q(t1, ..., tn) held in canonical form: numerator and denominator
/// coprime, denominator with coprime integer coefficients and positive leading
/// coefficient (graded lex, t1 > t2 > ...), zero stored as 0/1. Canonical form
/// makes structural equality coincide with field equality.
class FormalElement {
 public:
  FormalElement() : denominator_(1) {}
  FormalElement(const Rational& constant) : numerator_(constant), denominator_(1) {}  // NOLINT
  FormalElement(long constant) : FormalElement(Rational(constant)) {}                 // NOLINT
  FormalElement(const Polynomial& polynomial) : numerator_(polynomial), denominator_(1) {}  // NOLINT

  /// Canonicalizes numerator / denominator; throws DomainError on a zero denominator.
  static FormalElement fraction(Polynomial numerator, Polynomial denominator);
  static FormalElement generator(std::size_t index) { return Polynomial::generator(index); }

  const Polynomial& numerator() const noexcept { return numerator_; }
  const Polynomial& denominator() const noexcept { return denominator_; }

  bool is_zero() const noexcept { return numerator_.is_zero(); }
  bool is_constant() const noexcept { return numerator_.is_constant() && denominator_.is_constant(); }
  /// Requires is_constant().
  Rational constant_value() const;
  std::size_t span() const { return std::max(numerator_.span(), denominator_.span()); }

  FormalElement operator-() const;
  FormalElement add(const FormalElement& other) const;
  FormalElement subtract(const FormalElement& other) const { return add(-other); }
  /// Cross cancellation keeps the product canonical up to scaling.
  FormalElement multiply(const FormalElement& other) const;
  /// Throws DomainError when other is zero.
  FormalElement divide(const FormalElement& other) const;

  friend FormalElement operator+(const FormalElement& a, const FormalElement& b) { return a.add(b); }
  friend FormalElement operator-(const FormalElement& a, const FormalElement& b) { return a.subtract(b); }
  friend FormalElement operator*(const FormalElement& a, const FormalElement& b) { return a.multiply(b); }
  friend FormalElement operator/(const FormalElement& a, const FormalElement& b) { return a.divide(b); }
  FormalElement& operator+=(const FormalElement& other) { return *this = *this + other; }
  FormalElement& operator-=(const FormalElement& other) { return *this = *this - other; }
  FormalElement& operator*=(const FormalElement& other) { return *this = *this * other; }
  FormalElement& operator/=(const FormalElement& other) { return *this = *this / other; }

  FormalElement reciprocal() const;
  /// Integer power; negative exponents require a nonzero element.
  FormalElement pow(long exponent) const;

  FormalElement partial_derivative(std::size_t var) const;

  bool operator==(const FormalElement& other) const {
    return numerator_ == other.numerator_ && denominator_ == other.denominator_;
  }

  /// Stable canonical text, re-parseable by parse_element.
  std::string to_string() const;

 private:
  FormalElement(Polynomial numerator, Polynomial denominator, bool /*canonical*/)
      : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {}

  Polynomial numerator_;
  Polynomial denominator_;
};

enum class FieldOp { add, sub, mul, div };

FormalElement field_arithmetic(FieldOp op, const FormalElement& a, const FormalElement& b);

/// Formal partial derivative with respect to generator t_{index}, index >= 1.
FormalElement partial_derivative(const FormalElement& a, std::size_t index);

/// Parses the expression grammar: integers, a/b, t1..tn (t alone means t1),
/// + - * / ^ with integer exponents, parentheses.
FormalElement parse_element(std::string_view text);

}  // namespace meanconvex

#include "meanconvex/formal_element.hpp"

#include <stdexcept>

#include "meanconvex/errors.hpp"

namespace meanconvex {

FormalElement FormalElement::fraction(Polynomial numerator, Polynomial denominator) {
  if (denominator.is_zero()) throw DomainError("division by the zero polynomial");
  if (numerator.is_zero()) return {};
  const Polynomial common = gcd(numerator, denominator);
  if (!common.is_constant()) {
    numerator = exact_divide(numerator, common);
    denominator = exact_divide(denominator, common);
  }
  const Rational factor = denominator.make_integer_primitive();
  if (factor != 1) numerator = numerator.scaled(factor);
  return {std::move(numerator), std::move(denominator), true};
}

Rational FormalElement::constant_value() const {
  if (!is_constant()) throw std::logic_error("element is not a rational constant");
  return numerator_.constant_value() / denominator_.constant_value();
}

FormalElement FormalElement::operator-() const { return {-numerator_, denominator_, true}; }

FormalElement FormalElement::add(const FormalElement& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (denominator_ == other.denominator_) return fraction(numerator_ + other.numerator_, denominator_);
  // a/b + c/d with g = gcd(b, d): only the sum can share factors with g.
  const Polynomial g = gcd(denominator_, other.denominator_);
  if (g.is_constant()) {
    return fraction(numerator_ * other.denominator_ + other.numerator_ * denominator_,
                    denominator_ * other.denominator_);
  }
  // Henrici: t = a (d/g) + c (b/g) can only share factors with g.
  const Polynomial b = exact_divide(denominator_, g);
  const Polynomial d = exact_divide(other.denominator_, g);
  Polynomial t = numerator_ * d + other.numerator_ * b;
  if (t.is_zero()) return {};
  const Polynomial g2 = gcd(t, g);
  if (!g2.is_constant()) return fraction(exact_divide(t, g2), b * exact_divide(other.denominator_, g2));
  return fraction(std::move(t), b * other.denominator_);
}

FormalElement FormalElement::multiply(const FormalElement& other) const {
  if (is_zero() || other.is_zero()) return {};
  // Cross cancellation keeps the product canonical up to scaling.
  const Polynomial g1 = gcd(numerator_, other.denominator_);
  const Polynomial g2 = gcd(other.numerator_, denominator_);
  const auto reduce = [](const Polynomial& p, const Polynomial& g) { return g.is_constant() ? p : exact_divide(p, g); };
  Polynomial num = reduce(numerator_, g1) * reduce(other.numerator_, g2);
  Polynomial den = reduce(denominator_, g2) * reduce(other.denominator_, g1);
  const Rational factor = den.make_integer_primitive();
  if (factor != 1) num = num.scaled(factor);
  return {std::move(num), std::move(den), true};
}

FormalElement FormalElement::reciprocal() const {
  if (is_zero()) throw DomainError("division by the zero element");
  Polynomial num = denominator_;
  Polynomial den = numerator_;
  const Rational factor = den.make_integer_primitive();
  return {num.scaled(factor), std::move(den), true};
}

FormalElement FormalElement::divide(const FormalElement& other) const {
  if (other.is_zero()) throw DomainError("division by the zero element");
  return *this * other.reciprocal();
}

FormalElement FormalElement::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  // Powers of coprime polynomials stay coprime.
  const auto e = static_cast<unsigned>(exponent);
  return {numerator_.pow(e), denominator_.pow(e), true};
}

FormalElement FormalElement::partial_derivative(std::size_t var) const {
  const Polynomial dn = numerator_.partial_derivative(var);
  if (denominator_.is_constant()) return fraction(dn, denominator_);
  const Polynomial dd = denominator_.partial_derivative(var);
  return fraction(dn * denominator_ - numerator_ * dd, denominator_ * denominator_);
}

std::string FormalElement::to_string() const {
  if (denominator_ == Polynomial(1)) return numerator_.to_string();
  const auto wrap = [](const Polynomial& p) {
    const std::string s = p.to_string();
    return p.term_count() == 1 && p.is_constant() ? s : "(" + s + ")";
  };
  return wrap(numerator_) + "/" + wrap(denominator_);
}

FormalElement field_arithmetic(FieldOp op, const FormalElement& a, const FormalElement& b) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
  }
  throw std::invalid_argument("unknown field operation");
}

FormalElement partial_derivative(const FormalElement& a, std::size_t index) {
  if (index == 0) throw DomainError("generator indices start at 1");
  return a.partial_derivative(index - 1);
}

}  // namespace meanconvex

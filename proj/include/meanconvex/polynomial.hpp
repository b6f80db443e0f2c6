#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace meanconvex {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Exponent vector over generators t1, t2, ... (index 0 is t1). Trailing zero
/// exponents are never stored, so equal monomials have equal representations.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents);

  static Monomial generator(std::size_t index, unsigned power = 1);

  unsigned exponent(std::size_t index) const noexcept {
    return index < exponents_.size() ? exponents_[index] : 0u;
  }
  unsigned degree() const noexcept { return degree_; }
  /// One past the highest generator index with a nonzero exponent.
  std::size_t span() const noexcept { return exponents_.size(); }
  bool is_one() const noexcept { return exponents_.empty(); }
  const std::vector<unsigned>& exponents() const noexcept { return exponents_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial with_exponent(std::size_t index, unsigned power) const;

  bool operator==(const Monomial&) const = default;

 private:
  void trim();

  std::vector<unsigned> exponents_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order with t1 > t2 > ...; `true` when a comes strictly before b
/// in descending order.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with rational coefficients, terms kept in
/// descending graded lexicographic order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(const Monomial& m, const Rational& coefficient);

  static Polynomial generator(std::size_t index) { return Polynomial(Monomial::generator(index), 1); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  /// Constant term value; requires is_constant().
  Rational constant_value() const;
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  /// One past the highest generator index occurring in any term.
  std::size_t span() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Rational& factor) const;
  Polynomial times_monomial(const Monomial& m, const Rational& coefficient) const;
  Polynomial pow(unsigned exponent) const;

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

  /// Coefficients as polynomials in the other generators, indexed by the power of `var`.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;
  static Polynomial from_coefficients(std::size_t var, std::span<const Polynomial> coefficients);

  Polynomial partial_derivative(std::size_t var) const;

  /// Scales by a nonzero rational so that coefficients are coprime integers with
  /// a positive leading coefficient. Returns the factor used.
  Rational make_integer_primitive();

  std::string to_string() const;

  /// Evaluates at generator values values[0] = t1, ...; missing generators are an error.
  template <class Real, class Convert>
  Real evaluate(std::span<const Real> values, Convert&& to_real, Real* magnitude = nullptr) const;

 private:
  friend std::optional<Polynomial> divide_if_exact(const Polynomial&, const Polynomial&);

  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

/// Exact quotient; throws std::logic_error when divisor does not divide dividend.
Polynomial exact_divide(const Polynomial& dividend, const Polynomial& divisor);
/// Quotient when divisor divides dividend, nullopt otherwise.
std::optional<Polynomial> divide_if_exact(const Polynomial& dividend, const Polynomial& divisor);

/// Greatest common divisor, normalized to coprime integer coefficients with a positive
/// leading coefficient (1 when the inputs are coprime or constant).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

template <class Real, class Convert>
Real Polynomial::evaluate(std::span<const Real> values, Convert&& to_real, Real* magnitude) const {
  using std::abs;
  Real total(0);
  Real size(0);
  std::vector<std::vector<Real>> powers(values.size());
  for (const auto& [m, c] : terms_) {
    Real term = to_real(c);
    for (std::size_t i = 0; i < m.span(); ++i) {
      const unsigned e = m.exponent(i);
      if (e == 0) continue;
      if (i >= values.size()) throw std::out_of_range("no value assigned to generator t" + std::to_string(i + 1));
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Real(1));
      while (cache.size() <= e) cache.push_back(cache.back() * values[i]);
      term *= cache[e];
    }
    total += term;
    size += abs(term);
  }
  if (magnitude) *magnitude = size;
  return total;
}

}  // namespace meanconvex

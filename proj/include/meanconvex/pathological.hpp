#pragma once

#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "meanconvex/derivation.hpp"
#include "meanconvex/numeric.hpp"
#include "meanconvex/probe_report.hpp"

namespace meanconvex {

/// s^r for a field element s and rational r. F is evaluated on these through
/// F(s^r) = F(s)^r, which holds for every multiplicative F.
struct PoweredElement {
  FormalElement base;
  Rational exponent{1};

  PoweredElement(FormalElement b, Rational r = 1);  // NOLINT(google-explicit-constructor)

  /// (s, r) * (s, r') = (s, r + r'); bases must match.
  PoweredElement operator*(const PoweredElement& other) const;
};

using PoweredPair = std::pair<PoweredElement, PoweredElement>;

/// F(x) = x^alpha exp(d(x)/x) with rational alpha > 0 and a derivation d on Q(t1..tn).
class PathologicalSpec {
 public:
  PathologicalSpec(Rational alpha, DerivationSpec d, NumericAssignment assignment = {});

  const Rational& alpha() const noexcept { return alpha_; }
  const DerivationSpec& derivation() const noexcept { return d_; }
  const NumericAssignment& assignment() const noexcept { return assignment_; }
  unsigned precision() const noexcept { return assignment_.precision(); }
  /// alpha >= 1: F is also Jensen convex in the classical sense.
  bool jensen_convex_regime() const { return alpha_ >= 1; }

 private:
  Rational alpha_;
  DerivationSpec d_;
  NumericAssignment assignment_;
};

/// log F(x) = alpha log x + ell, with ell = d(x)/x kept exact.
struct LogFComponents {
  Rational alpha;
  FormalElement x;
  FormalElement ell;
};

/// Throws DomainError when x is zero or not positive at the assignment.
LogFComponents log_F_components(const FormalElement& x, const PathologicalSpec& spec);

/// F(base)^exponent at the working precision of the assignment.
HighPrecision evaluate_F(const PoweredElement& x, const PathologicalSpec& spec);

/// Pair shaped for order p = m/n: (w^n, z^n), so that x^p = w^m stays in the field.
PoweredPair shaped_pair(const FormalElement& w, const FormalElement& z, const Rational& p);

struct JensenProbeOptions {
  /// Range order q; defaults to p / alpha.
  std::optional<Rational> range_order;
  /// Overrides the default tolerance: relative to the compared means when the
  /// precision is at most 17 digits, absolute otherwise.
  std::optional<double> tolerance;
};

/// For each pair, gap = H_q(F(x), F(y)) - F(H_p(x, y)), with F(H_p(x,y)) computed as
/// F(s)^(1/p) for the field element s = (x^p + y^p)/2. Every x^p must be a field
/// element (exponent * p integral), otherwise ShapingError.
ProbeReport jensen_probe(const PathologicalSpec& spec, const Rational& p, std::span<const PoweredPair> pairs,
                         const JensenProbeOptions& options = {});

enum class Approximants { decimal_truncation, continued_fraction };

/// Rational approximants q_k of the value assigned to t1; F(q_k) = q_k^alpha tends
/// to (t1*)^alpha while F(t1) = (t1*)^alpha exp(c1/t1*). Throws DomainError for the
/// zero derivation.
ProbeReport discontinuity_demo(const PathologicalSpec& spec, int k_max,
                               Approximants kind = Approximants::decimal_truncation);

/// Random element of Q(t1) of the form (a + b t1 + c t1^2)/(e + f t1) that is
/// positive at the assignment. Integer coefficients are small.
FormalElement sample_field_point(std::mt19937_64& rng, const NumericAssignment& assignment);

/// The exact value of a plain decimal string, e.g. "3.14" -> 157/50.
Rational decimal_to_rational(const std::string& decimal);

std::string to_text(const HighPrecision& x, unsigned digits);

}  // namespace meanconvex

#include "meanconvex/pathological.hpp"

#include <algorithm>

#include "meanconvex/power_means.hpp"
#include "meanconvex/random.hpp"

namespace meanconvex {

namespace {

std::string rational_text(const Rational& r) { return r.str(); }

nlohmann::ordered_json derivation_json(const DerivationSpec& d) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& c : d.values()) out.push_back(c.str());
  return out;
}

nlohmann::ordered_json spec_parameters(const PathologicalSpec& spec) {
  nlohmann::ordered_json p;
  p["alpha"] = rational_text(spec.alpha());
  p["d"] = derivation_json(spec.derivation());
  p["theta"] = spec.assignment().decimals();
  p["precision"] = spec.precision();
  return p;
}

std::string powered_text(const PoweredElement& x) {
  const std::string base = "(" + x.base.to_string() + ")";
  return x.exponent == 1 ? base : base + "^(" + x.exponent.str() + ")";
}

HighPrecision log_F_value(const LogFComponents& parts, const PathologicalSpec& spec) {
  const HighPrecision x = evaluate_numeric(parts.x, spec.assignment());
  const HighPrecision ell = parts.ell.is_zero() ? HighPrecision(0) : evaluate_numeric(parts.ell, spec.assignment());
  return to_high_precision(parts.alpha) * log(x) + ell;
}

long integral_value(const Rational& r) { return numerator(r).convert_to<long>(); }

}  // namespace

PoweredElement::PoweredElement(FormalElement b, Rational r) : base(std::move(b)), exponent(std::move(r)) {
  if (base.is_zero()) throw DomainError("powered element needs a nonzero base");
}

PoweredElement PoweredElement::operator*(const PoweredElement& other) const {
  if (!(base == other.base)) throw DomainError("powered elements with different bases do not compose");
  return {base, exponent + other.exponent};
}

PathologicalSpec::PathologicalSpec(Rational alpha, DerivationSpec d, NumericAssignment assignment)
    : alpha_(std::move(alpha)), d_(std::move(d)), assignment_(std::move(assignment)) {
  if (alpha_ <= 0) throw DomainError("alpha must be positive");
}

LogFComponents log_F_components(const FormalElement& x, const PathologicalSpec& spec) {
  if (x.is_zero()) throw DomainError("F is defined on positive arguments only");
  if (x.is_constant()) {
    if (x.constant_value() <= 0) throw DomainError("F is defined on positive arguments only");
  } else {
    PrecisionScope scope(spec.precision());
    if (evaluate_numeric(x, spec.assignment()) <= 0)
      throw DomainError("argument " + x.to_string() + " is not positive at the assignment");
  }
  return {spec.alpha(), x, logarithmic_part(x, spec.derivation())};
}

HighPrecision evaluate_F(const PoweredElement& x, const PathologicalSpec& spec) {
  PrecisionScope scope(spec.precision());
  const LogFComponents parts = log_F_components(x.base, spec);
  return exp(to_high_precision(x.exponent) * log_F_value(parts, spec));
}

PoweredPair shaped_pair(const FormalElement& w, const FormalElement& z, const Rational& p) {
  const Rational n(denominator(p));
  return {PoweredElement(w, n), PoweredElement(z, n)};
}

ProbeReport jensen_probe(const PathologicalSpec& spec, const Rational& p, std::span<const PoweredPair> pairs,
                         const JensenProbeOptions& options) {
  if (p <= 0) throw DomainError("probe order p must be a positive rational");
  const Rational q = options.range_order.value_or(p / spec.alpha());
  const bool extended = spec.precision() > 17;

  ProbeReport report;
  report.command = "pathological probe";
  report.parameters = spec_parameters(spec);
  report.parameters["p"] = rational_text(p);
  report.parameters["q"] = rational_text(q);
  report.parameters["pairs"] = pairs.size();

  PrecisionScope scope(spec.precision());
  const HighPrecision q_value = to_high_precision(q);
  const Rational inverse_p = 1 / p;
  const HighPrecision absolute_tol =
      options.tolerance ? HighPrecision(*options.tolerance) : pow(HighPrecision(10), 10 - static_cast<int>(spec.precision()));
  const double relative_tol = options.tolerance.value_or(1e-9);
  report.parameters["tolerance"] = extended ? to_text(absolute_tol, 3) : std::to_string(relative_tol);
  report.parameters["tolerance_kind"] = extended ? "absolute" : "relative";

  std::optional<HighPrecision> smallest;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x, y] = pairs[i];
    const Rational kx = x.exponent * p;
    const Rational ky = y.exponent * p;
    if (denominator(kx) != 1 || denominator(ky) != 1)
      throw ShapingError("pair " + std::to_string(i) + ": x^p is not a field element for p = " + p.str() +
                         "; supply points as n-th powers (w^n, z^n) where p = m/n");
    const FormalElement midpoint = (x.base.pow(integral_value(kx)) + y.base.pow(integral_value(ky))) / FormalElement(2);

    const HighPrecision fx = evaluate_F(x, spec);
    const HighPrecision fy = evaluate_F(y, spec);
    const HighPrecision lhs = evaluate_F(PoweredElement(midpoint, inverse_p), spec);
    const HighPrecision rhs = basic_holder_mean(q_value, fx, fy);
    const HighPrecision gap = rhs - lhs;
    const HighPrecision scale = rhs > lhs ? rhs : lhs;

    const std::string input = "x=" + powered_text(x) + ", y=" + powered_text(y);
    report.add_gap(input, gap.convert_to<double>(), to_text(gap, 12));
    const bool violated = extended ? gap < -absolute_tol : gap < -relative_tol * scale;
    if (violated) report.violations.push_back(input + ": gap " + to_text(gap, 12));
    if (!smallest || gap < *smallest) smallest = gap;
  }
  report.finalize();
  if (smallest) report.min_gap_text = to_text(*smallest, 12);
  return report;
}

ProbeReport discontinuity_demo(const PathologicalSpec& spec, int k_max, Approximants kind) {
  if (spec.derivation().value(0) == 0)
    throw DomainError("zero derivation on t1: F is continuous along t1, nothing to demonstrate");
  if (k_max < 1) throw DomainError("need at least one approximant");
  const std::string& theta_text = spec.assignment().decimals().at(0);
  const Rational theta_exact = decimal_to_rational(theta_text);

  std::vector<Rational> approximants;
  if (kind == Approximants::decimal_truncation) {
    const auto point = theta_text.find('.');
    for (int k = 1; k <= k_max; ++k) {
      std::string digits = theta_text;
      if (point != std::string::npos) digits = theta_text.substr(0, std::min(theta_text.size(), point + 1 + k));
      approximants.push_back(decimal_to_rational(digits));
    }
  } else {
    // Convergents h_k / k_k of the continued fraction of the exact decimal.
    Integer num = numerator(theta_exact);
    Integer den = denominator(theta_exact);
    Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    for (int k = 0; k < k_max && den != 0; ++k) {
      const Integer a = num / den;
      const Integer h = a * h_prev + h_prev2;
      const Integer kk = a * k_prev + k_prev2;
      h_prev2 = h_prev;
      h_prev = h;
      k_prev2 = k_prev;
      k_prev = kk;
      approximants.emplace_back(h, kk);
      const Integer r = num - a * den;
      num = den;
      den = r;
    }
  }

  ProbeReport report;
  report.command = "pathological demo";
  report.parameters = spec_parameters(spec);
  report.parameters["k"] = k_max;
  report.parameters["approximants"] = kind == Approximants::decimal_truncation ? "decimal" : "continued-fraction";

  PrecisionScope scope(spec.precision());
  const unsigned digits = spec.precision();
  HighPrecision last_value;
  for (const auto& q : approximants) {
    last_value = evaluate_F(PoweredElement(FormalElement(q)), spec);
    report.add_value("F(" + q.str() + ")", last_value.convert_to<double>(), to_text(last_value, digits));
  }
  const HighPrecision theta = to_high_precision(theta_exact);
  const HighPrecision alpha = to_high_precision(spec.alpha());
  const HighPrecision limit = pow(theta, alpha);
  const HighPrecision f_theta = evaluate_F(PoweredElement(FormalElement::generator(0)), spec);
  report.add_value("F(t1)", f_theta.convert_to<double>(), to_text(f_theta, digits));

  const HighPrecision jump_factor = f_theta / limit;
  const HighPrecision analytic_jump = abs(limit * (exp(to_high_precision(spec.derivation().value(0)) / theta) - 1));
  const HighPrecision discrepancy = abs(last_value - f_theta);

  report.add_fixture("theta_star", to_text(theta, digits));
  report.add_fixture("limit_of_F_on_approximants", to_text(limit, digits));
  report.add_fixture("F_at_t1", to_text(f_theta, digits));
  report.add_fixture("jump_factor", to_text(jump_factor, digits));
  report.add_fixture("analytic_jump", to_text(analytic_jump, digits));
  report.add_fixture("terminal_discrepancy", to_text(discrepancy, digits));
  if (discrepancy < analytic_jump / 2)
    report.violations.push_back("terminal discrepancy " + to_text(discrepancy, 12) + " is below half the analytic jump " +
                                to_text(analytic_jump, 12));
  report.notes.push_back("F equals q^alpha on rationals (derivations vanish there) but differs from the limit at t1");
  report.finalize();
  return report;
}

FormalElement sample_field_point(std::mt19937_64& rng, const NumericAssignment& assignment) {
  const FormalElement t = FormalElement::generator(0);
  const double value = assignment.double_values().at(0);
  while (true) {
    // Draws are sequenced one per statement so the stream order is fixed.
    const long a = uniform_int(rng, -4, 9);
    const long b = uniform_int(rng, -4, 9);
    const long c = uniform_int(rng, 0, 3);
    const long e = uniform_int(rng, 1, 9);
    const long f = uniform_int(rng, 0, 4);
    const FormalElement num = FormalElement(a) + FormalElement(b) * t + FormalElement(c) * t * t;
    const FormalElement den = FormalElement(e) + FormalElement(f) * t;
    const FormalElement candidate = num / den;
    if (candidate.is_zero()) continue;
    // Keep values away from zero so that F stays well scaled.
    const double approx = evaluate_numeric_double(candidate, NumericAssignment({assignment.decimals().at(0)}, 16));
    if (approx > 0.05 * std::max(1.0, value)) return candidate;
  }
}

Rational decimal_to_rational(const std::string& decimal) {
  const auto point = decimal.find('.');
  if (point == std::string::npos) return Rational(Integer(decimal));
  const std::string digits = decimal.substr(0, point) + decimal.substr(point + 1);
  Integer scale = 1;
  for (std::size_t i = point + 1; i < decimal.size(); ++i) scale *= 10;
  return Rational(Integer(digits.empty() ? "0" : digits), scale);
}

std::string to_text(const HighPrecision& x, unsigned digits) { return x.str(digits, std::ios_base::scientific); }

}  // namespace meanconvex

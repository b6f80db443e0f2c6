#include "meanconvex/regularity.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>

#include "meanconvex/random.hpp"

namespace meanconvex {

namespace {

std::string num(double v) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, v);
  return std::string(buffer, result.ptr);
}

constexpr const char* kMechanismNote =
    "demonstrates the image-set upper bound only; positive inner measure of the order set is not decidable from "
    "finite samples";

}  // namespace

ParameterSet::ParameterSet(std::vector<std::pair<double, double>> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("parameter set is empty");
  std::set<double> seen;
  for (const auto& [p, q] : entries_) {
    if (!std::isfinite(p) || !std::isfinite(q)) throw DomainError("parameter set entries must be finite");
    if (!seen.insert(p).second) throw DomainError("parameter set orders must be distinct");
  }
}

ParameterSet::ParameterSet(const std::vector<double>& samples, const std::function<double(double)>& q_of_p)
    : ParameterSet([&] {
        std::vector<std::pair<double, double>> e;
        for (double p : samples) e.emplace_back(p, q_of_p(p));
        return e;
      }()) {}

ProbeReport image_boundedness_probe(const SampledFunction& f, double x, double y, const ParameterSet& P,
                                    double relative_tol) {
  ProbeReport report;
  report.command = "thmp";
  report.parameters["function"] = f.name;
  report.parameters["x"] = x;
  report.parameters["y"] = y;
  report.parameters["orders"] = P.entries().size();
  report.parameters["tolerance"] = relative_tol;
  report.notes.push_back(kMechanismNote);

  if (x == y) {
    report.parameters["degenerate"] = true;
    report.violations.push_back("degenerate sample: x = y gives a single image point");
    report.finalize();
    return report;
  }

  const double fx = f(x);
  const double fy = f(y);
  const double bound = std::max(fx, fy);
  auto entries = P.entries();
  std::sort(entries.begin(), entries.end());

  std::optional<double> previous;
  for (const auto& [p, q] : entries) {
    const double image = holder_mean(MeanParameter(p), x, y);
    if (previous && !(image > *previous))
      report.violations.push_back("p -> H_p(x,y) not strictly increasing at p=" + num(p));
    previous = image;

    if (q < 0) {
      // (p,q) with q < 0: f_{p,q} is negative everywhere on I_p.
      const ConvexityPair pq(p, q);
      const double u = p == 0 ? std::log(image) : std::pow(image, p);
      const double value = conjugate_value(f, pq, u);
      report.add_value("f_{p,q}(H_p^p) for p=" + num(p) + ", q=" + num(q), value);
      if (!(value < 0)) report.violations.push_back("sign check failed for negative q at p=" + num(p));
      continue;
    }

    const double f_image = f(image);
    const double margin = bound - f_image;
    report.add_gap("max(f(x),f(y)) - f(H_p) for p=" + num(p), margin);
    if (margin < -relative_tol * bound)
      report.violations.push_back("bound exceeded at p=" + num(p) + ": f(H_p)=" + num(f_image) + " > " + num(bound));

    const ConvexityPair pq(p, q);
    const double gap = pq_jensen_gap(f, pq, x, y);
    if (gap < -relative_tol * pq_gap_scale(f, pq, x, y))
      report.violations.push_back("claim fails at p=" + num(p) + ", q=" + num(q) + ": Jensen gap " + num(gap));
  }
  report.finalize();
  return report;
}

ProbeReport pathological_boundedness_probe(const PathologicalSpec& spec, const FormalElement& w, const FormalElement& z,
                                           const std::vector<Rational>& orders) {
  if (orders.empty()) throw DomainError("no orders sampled");
  Integer common = 1;
  for (const auto& p : orders) {
    if (p <= 0) throw DomainError("orders for F must be positive rationals");
    common = lcm(common, Integer(denominator(p)));
  }
  const PoweredElement x(w, Rational(common));
  const PoweredElement y(z, Rational(common));

  ProbeReport report;
  report.command = "thmp pathological";
  report.parameters["alpha"] = spec.alpha().str();
  report.parameters["d"] = nlohmann::ordered_json::array();
  for (const auto& c : spec.derivation().values()) report.parameters["d"].push_back(c.str());
  report.parameters["theta"] = spec.assignment().decimals();
  report.parameters["precision"] = spec.precision();
  report.parameters["x"] = "(" + w.to_string() + ")^" + common.str();
  report.parameters["y"] = "(" + z.to_string() + ")^" + common.str();
  report.parameters["orders"] = orders.size();
  report.notes.push_back(kMechanismNote);

  PrecisionScope scope(spec.precision());
  const HighPrecision xv = exp(to_high_precision(x.exponent) * log(evaluate_numeric(w, spec.assignment())));
  const HighPrecision yv = exp(to_high_precision(y.exponent) * log(evaluate_numeric(z, spec.assignment())));
  if (w == z || xv == yv) {
    report.parameters["degenerate"] = true;
    report.violations.push_back("degenerate sample: x = y gives a single image point");
    report.finalize();
    return report;
  }
  const HighPrecision fx = evaluate_F(x, spec);
  const HighPrecision fy = evaluate_F(y, spec);
  const HighPrecision bound = fx > fy ? fx : fy;
  const HighPrecision tol = pow(HighPrecision(10), 10 - static_cast<int>(spec.precision())) * bound;

  auto sorted = orders;
  std::sort(sorted.begin(), sorted.end());
  std::optional<HighPrecision> previous;
  for (const auto& p : sorted) {
    const HighPrecision image = basic_holder_mean(to_high_precision(p), xv, yv);
    if (previous && !(image > *previous))
      report.violations.push_back("p -> H_p(x,y) not strictly increasing at p=" + p.str());
    previous = image;

    const Rational k = x.exponent * p;  // integral by construction
    const long power = numerator(k).convert_to<long>();
    const FormalElement midpoint = (w.pow(power) + z.pow(power)) / FormalElement(2);
    const HighPrecision f_image = evaluate_F(PoweredElement(midpoint, 1 / p), spec);
    const HighPrecision margin = bound - f_image;
    report.add_gap("max(F(x),F(y)) - F(H_p) for p=" + p.str(), margin.convert_to<double>(), to_text(margin, 12));
    if (margin < -tol) report.violations.push_back("bound exceeded at p=" + p.str());

    const HighPrecision claim_gap = basic_holder_mean(to_high_precision(p / spec.alpha()), fx, fy) - f_image;
    if (claim_gap < -tol) report.violations.push_back("claim fails at p=" + p.str() + ": gap " + to_text(claim_gap, 12));
  }
  report.finalize();
  return report;
}

ProbeReport support_inequality_check(double beta, double lambda, std::span<const double> t_samples,
                                     std::size_t spot_checks, std::uint64_t seed, double relative_tol) {
  if (t_samples.empty()) throw DomainError("no t samples");
  for (double t : t_samples)
    if (!(t > 0) || !std::isfinite(t)) throw DomainError("support inequality samples must be positive");

  const auto m = [beta](double t) { return std::pow(t, beta); };
  ProbeReport report;
  report.command = "m2";
  report.parameters["beta"] = beta;
  report.parameters["lambda"] = lambda;
  report.parameters["samples"] = t_samples.size();
  report.parameters["spot_checks"] = spot_checks;
  report.parameters["seed"] = seed;
  report.parameters["tolerance"] = relative_tol;

  for (double t : t_samples) {
    const double lhs = m(t);
    const double rhs = 1.0 + lambda * (t - 1.0);
    const double gap = lhs - rhs;
    report.add_gap("t=" + num(t), gap);
    if (gap < -relative_tol * std::max({1.0, std::abs(lhs), std::abs(rhs)}))
      report.violations.push_back("t=" + num(t) + ": m(t)=" + num(lhs) + " < 1+a(t-1)=" + num(rhs));
  }

  if (report.violations.empty() && spot_checks > 0) {
    const auto [lo, hi] = std::minmax_element(t_samples.begin(), t_samples.end());
    std::mt19937_64 rng(seed);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < spot_checks; ++i) {
      const double x = uniform_real(rng, *lo, *hi);
      const double y = uniform_real(rng, *lo, *hi);
      const double sum = m(x) + m(y);
      const double twice_mid = 2.0 * m((x + y) / 2.0);
      if (sum - twice_mid < -relative_tol * std::max(sum, twice_mid)) {
        ++failures;
        report.violations.push_back("Jensen spot check fails at x=" + num(x) + ", y=" + num(y));
      }
    }
    report.parameters["spot_check_failures"] = failures;
  }
  report.finalize();
  return report;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::convex: return "convex";
    case Verdict::nonconvex: return "nonconvex";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

RegionGrid convexity_region_scan(const SampledFunction& f, const RegionSpec& spec,
                                 std::span<const std::pair<double, double>> domain_samples) {
  if (spec.resolution < 2) throw DomainError("region grid needs at least two points per axis");
  if (!(spec.p_range.lo <= spec.p_range.hi) || !(spec.q_range.lo <= spec.q_range.hi))
    throw DomainError("region ranges must be nonempty");
  if (domain_samples.empty()) throw DomainError("no domain samples");

  const auto axis = [n = spec.resolution](Interval r) {
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i)
      values[i] = r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return values;
  };
  RegionGrid grid;
  grid.p_values = axis(spec.p_range);
  grid.q_values = axis(spec.q_range);
  grid.verdicts.assign(spec.resolution, std::vector<Verdict>(spec.resolution, Verdict::indeterminate));

  for (std::size_t i = 0; i < grid.p_values.size(); ++i) {
    for (std::size_t j = 0; j < grid.q_values.size(); ++j) {
      const ConvexityPair pq(grid.p_values[i], grid.q_values[j]);
      double worst = kInfinity;
      for (const auto& [x, y] : domain_samples)
        worst = std::min(worst, pq_jensen_gap(f, pq, x, y) / pq_gap_scale(f, pq, x, y));
      Verdict v = Verdict::indeterminate;
      if (worst >= -spec.tolerance) {
        v = Verdict::convex;
      } else if (worst < -100.0 * spec.tolerance) {
        v = Verdict::nonconvex;
      }
      grid.verdicts[i][j] = v;
    }
  }
  return grid;
}

std::optional<double> convex_boundary(const RegionGrid& grid, std::size_t p_index) {
  const auto& column = grid.verdicts.at(p_index);
  for (std::size_t j = 0; j < column.size(); ++j)
    if (column[j] == Verdict::convex) return grid.q_values[j];
  return std::nullopt;
}

bool is_monotone_staircase(const RegionGrid& grid) {
  const std::size_t np = grid.p_values.size();
  const std::size_t nq = grid.q_values.size();
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < nq; ++j) {
      if (grid.verdicts[i][j] != Verdict::convex) continue;
      for (std::size_t jj = j; jj < nq; ++jj)
        if (grid.verdicts[i][jj] == Verdict::nonconvex) return false;
      for (std::size_t ii = 0; ii <= i; ++ii)
        if (grid.verdicts[ii][j] == Verdict::nonconvex) return false;
    }
  }
  return true;
}

std::string RegionGrid::to_csv() const {
  std::string out = "p,q,verdict\n";
  for (std::size_t i = 0; i < p_values.size(); ++i)
    for (std::size_t j = 0; j < q_values.size(); ++j)
      out += num(p_values[i]) + ',' + num(q_values[j]) + ',' + verdict_name(verdicts[i][j]) + '\n';
  return out;
}

nlohmann::ordered_json RegionGrid::to_json() const {
  nlohmann::ordered_json out;
  out["p_values"] = p_values;
  out["q_values"] = q_values;
  auto& rows = out["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& column : verdicts) {
    auto row = nlohmann::ordered_json::array();
    for (Verdict v : column) row.push_back(verdict_name(v));
    rows.push_back(std::move(row));
  }
  return out;
}

std::vector<std::pair<double, double>> random_domain_pairs(std::mt19937_64& rng, std::size_t count, double lo,
                                                           double hi) {
  if (!(lo > 0) || !(lo < hi)) throw DomainError("domain sample range must be a positive interval");
  std::vector<std::pair<double, double>> out;
  out.reserve(count);
  while (out.size() < count) {
    const double x = uniform_real(rng, lo, hi);
    const double y = uniform_real(rng, lo, hi);
    if (x != y) out.emplace_back(x, y);
  }
  return out;
}

}  // namespace meanconvex

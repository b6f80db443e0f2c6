// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "meanconvex/cli.hpp"
#include "meanconvex/derivation.hpp"
#include "meanconvex/pathological.hpp"
#include "meanconvex/random.hpp"
#include "meanconvex/regularity.hpp"

using namespace meanconvex;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform_real(rng, std::log(lo), std::log(hi)));
}

std::string fixture(const ProbeReport& r, const std::string& name) {
  for (const auto& [k, v] : r.fixture_values)
    if (k == name) return v;
  return "nan";
}

// ---------------------------------------------------------------------------

Outcome power_mean_suite() {
  Outcome out;
  std::mt19937_64 rng(101);
  const int triples = 20000;
  for (int i = 0; i < triples && out.pass; ++i) {
    const double p1 = uniform_real(rng, -64, 64);
    const double p2 = uniform_real(rng, -64, 64);
    const double x = log_uniform(rng, 1e-3, 1e3);
    const double y = log_uniform(rng, 1e-3, 1e3);
    const double t = log_uniform(rng, 1e-3, 1e3);
    const double h = holder_mean(MeanParameter(p1), x, y);
    if (h < std::min(x, y) || h > std::max(x, y)) out.fail(fmt("internality at p=%g x=%g y=%g", p1, x, y));
    if (h != holder_mean(MeanParameter(p1), y, x)) out.fail(fmt("symmetry at p=%g x=%g y=%g", p1, x, y));
    const double scaled = holder_mean(MeanParameter(p1), t * x, t * y);
    if (std::abs(scaled - t * h) > 1e-12 * t * h) out.fail(fmt("homogeneity at p=%g x=%g y=%g t=%g", p1, x, y, t));
    const double lo = std::min(p1, p2), hi = std::max(p1, p2);
    if (holder_mean(MeanParameter(lo), x, y) > holder_mean(MeanParameter(hi), x, y) + 1e-12 * std::max(x, y))
      out.fail(fmt("monotonicity at p=%g,%g x=%g y=%g", lo, hi, x, y));
  }
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const double x = uniform_real(rng, 0.1, 10);
    const double y = uniform_real(rng, 0.1, 10);
    const double g = std::sqrt(x * y);
    for (double p : {1e-8, -1e-8}) worst = std::max(worst, std::abs(holder_mean(MeanParameter(p), x, y) - g) / g);
  }
  if (worst > 1e-6) out.fail(fmt("geometric limit off by %g", worst));
  if (out.pass) out.detail = fmt("%d triples, geometric-limit error %.1e", triples, worst);
  return out;
}

Outcome conjugation_equivalence() {
  Outcome out;
  std::mt19937_64 rng(202);
  const int draws = 20000;
  int decided = 0;
  for (int i = 0; i < draws && out.pass; ++i) {
    const SampledFunction f = family::random_member(rng);
    const double p = uniform_real(rng, -3, 3);
    const double q = uniform_real(rng, 0, 3);
    const double x = uniform_real(rng, 0.05, 10);
    const double y = uniform_real(rng, 0.05, 10);
    const ConvexityPair pq(p, q);
    const double gap = pq_jensen_gap(f, pq, x, y);
    const GapSign sign = classify_gap(gap, pq_gap_scale(f, pq, x, y));
    if (sign == GapSign::indeterminate) continue;
    ++decided;
    const double classical = conjugated_jensen_gap(f, pq, x, y);
    if ((sign == GapSign::positive) != (classical > 0))
      out.fail(fmt("disagreement for %s p=%g q=%g x=%g y=%g", f.name.c_str(), p, q, x, y));
  }
  if (out.pass) out.detail = fmt("%d draws, %d outside the tolerance band, 0 disagreements", draws, decided);
  return out;
}

Outcome exact_algebra() {
  Outcome out;
  std::mt19937_64 rng(303);
  const DerivationSpec d({Rational(3, 7), Rational(-2)});
  const int rounds = 1000;
  for (int i = 0; i < rounds && out.pass; ++i) {
    const FormalElement a = oracle::random_element(rng);
    const FormalElement b = oracle::random_nonzero_element(rng);
    const FormalElement c = oracle::random_nonzero_element(rng);
    const Rational q(uniform_int(rng, -1000, 1000), uniform_int(rng, 1, 1000));
    const auto check = [&](bool ok, const char* what) {
      if (!ok) out.fail(std::string(what) + " fails for a=" + a.to_string() + ", b=" + b.to_string());
    };
    check((a + b) + c == a + (b + c), "associativity of +");
    check((a * b) * c == a * (b * c), "associativity of *");
    check(a + b == b + a && a * b == b * a, "commutativity");
    check(a * (b + c) == a * b + a * c, "distributivity");
    check(a + FormalElement(0) == a && a * FormalElement(1) == a, "identities");
    check(a + (-a) == FormalElement(0), "additive inverse");
    check(b * b.reciprocal() == FormalElement(1), "multiplicative inverse");
    check((a / b) * b == a, "division");
    check(parse_element(a.to_string()) == a && parse_element(b.to_string()) == b, "parser round-trip");
    for (std::size_t v = 1; v <= 2; ++v)
      check(partial_derivative(a * b, v) == a * partial_derivative(b, v) + b * partial_derivative(a, v), "Leibniz");
    check(derive(a + b, d) == derive(a, d) + derive(b, d), "additivity of d");
    check(derive(a * b, d) == a * derive(b, d) + b * derive(a, d), "Leibniz for d");
    check(derive(q * a, d) == q * derive(a, d), "Q-homogeneity of d");
    check(logarithmic_part(b * c, d) == logarithmic_part(b, d) + logarithmic_part(c, d), "additivity of ell");
  }
  if (out.pass) out.detail = fmt("%d rounds of three elements", rounds);
  return out;
}

HighPrecision max_abs_gap(const ProbeReport& r) {
  HighPrecision worst = 0;
  for (const auto& s : r.samples) worst = std::max(worst, HighPrecision(abs(HighPrecision(s.text))));
  return worst;
}

Outcome jensen_probe_suite() {
  Outcome out;
  const std::vector<Rational> alphas{Rational(1), Rational(2), Rational(1, 2)};
  const std::vector<Rational> orders{Rational(1), Rational(1, 2), Rational(2, 3), Rational(3)};
  const std::size_t pair_count = 1000;
  // theta* is pi to 50 digits; gaps are computed with 10 guard digits because
  // F reaches ~1e10 on these samples and the tolerance is absolute.
  const NumericAssignment theta({kPiDecimal}, 60);
  PrecisionScope outer(70);
  HighPrecision smallest = 1, control = 0;
  std::mt19937_64 rng(404);
  for (const auto& alpha : alphas) {
    const PathologicalSpec spec(alpha, DerivationSpec({Rational(1)}), theta);
    const PathologicalSpec flat(alpha, DerivationSpec({Rational(0)}), theta);
    for (const auto& p : orders) {
      std::vector<PoweredPair> pairs;
      for (std::size_t i = 0; i < pair_count; ++i) {
        const FormalElement w = sample_field_point(rng, spec.assignment());
        const FormalElement z = sample_field_point(rng, spec.assignment());
        pairs.push_back(shaped_pair(w, z, p));
      }
      const ProbeReport r = jensen_probe(spec, p, pairs);
      const HighPrecision min_gap(r.min_gap_text);
      smallest = std::min(smallest, min_gap);
      if (min_gap < HighPrecision("-1e-40"))
        out.fail("alpha=" + alpha.str() + " p=" + p.str() + ": min gap " + r.min_gap_text);
      const ProbeReport z = jensen_probe(flat, p, pairs);
      const HighPrecision worst = max_abs_gap(z);
      control = std::max(control, worst);
      if (worst > HighPrecision("1e-40"))
        out.fail("zero derivation alpha=" + alpha.str() + " p=" + p.str() + ": |gap| up to " + to_text(worst, 3));
    }
  }
  if (out.pass)
    out.detail = "12 configurations x " + std::to_string(pair_count) + " pairs, min gap " + to_text(smallest, 3) +
                 ", zero-derivation |gap| <= " + to_text(control, 3);
  return out;
}

Outcome fractional_power_fixture() {
  Outcome out;
  std::mt19937_64 rng(505);
  const std::vector<Rational> alphas{Rational(1), Rational(2), Rational(1, 2)};
  PrecisionScope outer(50);
  HighPrecision worst = 0;
  for (int i = 0; i < 100; ++i) {
    const PathologicalSpec spec(alphas[static_cast<std::size_t>(i) % 3], DerivationSpec({Rational(1)}));
    const FormalElement s = sample_field_point(rng, spec.assignment());
    const long m = uniform_int(rng, -7, 7);
    const long n = uniform_int(rng, 1, 7);
    const HighPrecision lhs = pow(evaluate_F(PoweredElement(s, Rational(m, n)), spec), n);
    const HighPrecision rhs = pow(evaluate_F(PoweredElement(s), spec), m);
    const HighPrecision rel = abs(lhs - rhs) / abs(rhs);
    worst = std::max(worst, rel);
  }
  if (worst > HighPrecision("1e-42")) out.fail("relative error " + to_text(worst, 3));
  out.detail = "100 samples, max relative error " + to_text(worst, 3);
  return out;
}

Outcome discontinuity() {
  Outcome out;
  const PathologicalSpec spec(2, DerivationSpec({Rational(1)}));
  const ProbeReport r = discontinuity_demo(spec, 8);
  PrecisionScope scope(60);
  const HighPrecision jump(fixture(r, "jump_factor"));
  const HighPrecision expected(oracle::kExpInvPi);
  const HighPrecision rel = abs(jump - expected) / expected;
  const HighPrecision discrepancy(fixture(r, "terminal_discrepancy"));
  if (!r.pass) out.fail("demo report failed");
  if (rel > HighPrecision("1e-40")) out.fail("jump factor off by " + to_text(rel, 3));
  if (discrepancy < HighPrecision(oracle::kHalfAnalyticJump)) out.fail("terminal discrepancy " + to_text(discrepancy, 10));
  if (out.pass)
    out.detail = "jump factor " + to_text(jump, 12) + " (rel err " + to_text(rel, 2) + "), discrepancy " +
                 to_text(discrepancy, 10);
  return out;
}

Outcome region_scan() {
  Outcome out;
  double slowest = 0;
  for (double beta : {0.5, 1.0, 2.0, 3.0}) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(606);
    const auto pairs = random_domain_pairs(rng, 64, 0.25, 4);
    const RegionGrid grid = convexity_region_scan(family::power(beta), RegionSpec{{0, 4}, {0, 4}, 40}, pairs);
    const double step = grid.q_step();
    if (!is_monotone_staircase(grid)) out.fail(fmt("beta=%g: not a staircase", beta));
    for (std::size_t i = 0; i < grid.p_values.size(); ++i) {
      const double expected = grid.p_values[i] / beta;
      const auto boundary = convex_boundary(grid, i);
      if (expected <= 4) {
        if (!boundary || std::abs(*boundary - expected) > step + 1e-12)
          out.fail(fmt("beta=%g p=%g: boundary %g, expected %g", beta, grid.p_values[i], boundary.value_or(NAN), expected));
      } else if (expected > 4 + step && boundary) {
        out.fail(fmt("beta=%g p=%g: convex cell above the grid boundary", beta, grid.p_values[i]));
      }
    }
    const double t = seconds_since(start);
    slowest = std::max(slowest, t);
    if (t > 30) out.fail(fmt("beta=%g took %.1f s", beta, t));
  }
  if (out.pass) out.detail = fmt("4 exponents on a 40x40 grid, slowest %.2f s", slowest);
  return out;
}

Outcome support_inequality() {
  Outcome out;
  std::vector<double> ts;
  for (int i = 0; i < 1000; ++i) ts.push_back(std::pow(10.0, -2 + 4 * i / 999.0));
  ts.push_back(4.0);
  const ProbeReport good = support_inequality_check(2, 2, ts, 1000, 7);
  if (!good.pass) out.fail("(2,2) reported violations");
  const ProbeReport flat = support_inequality_check(1, 1, ts, 1000, 7);
  if (!flat.pass) out.fail("(1,1) reported violations");
  const ProbeReport bad = support_inequality_check(0.5, 0.5, ts, 1000, 7);
  bool found = false;
  for (const auto& v : bad.violations) found = found || v == "t=4: m(t)=2 < 1+a(t-1)=2.5";
  if (bad.pass || !found) out.fail("(1/2,1/2) did not report the t=4 violation");
  if (out.pass) out.detail = fmt("(2,2) and (1,1) pass with 1000 spot checks; (1/2,1/2) flags %zu samples incl. t=4",
                                 bad.violations.size());
  return out;
}

Outcome image_boundedness() {
  Outcome out;
  std::vector<Rational> orders;
  for (int k = 1; k <= 100; ++k) orders.emplace_back(k, 25);
  const FormalElement t1 = FormalElement::generator(0);
  for (const Rational& alpha : {Rational(1), Rational(2), Rational(1, 2)}) {
    const PathologicalSpec spec(alpha, DerivationSpec({Rational(1)}));
    const ProbeReport r = pathological_boundedness_probe(spec, t1, t1 + 1, orders);
    if (!r.pass) out.fail("alpha=" + alpha.str() + ": " + r.violations.front());
  }
  if (out.pass) out.detail = "alpha in {1, 2, 1/2}, 100 orders k/25, no violations, H_p strictly increasing";
  return out;
}

Outcome cli_contract() {
  Outcome out;
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases{
      {{"mean", "--p", "2", "1", "7"}, 0},
      {{"gap", "--family", "pow", "--beta", "2", "--p", "1", "--q", "1", "1", "3"}, 0},
      {{"gap", "--family", "pow", "--beta", "2", "--p", "2", "--q", "1/4", "1", "3"}, 1},
      {{"transform", "--family", "exp", "--a", "1", "--b", "0", "--p", "2", "--q", "1", "1", "4", "9"}, 0},
      {{"derive", "t1^2/(t1+1)", "--d", "1"}, 0},
      {{"pathological", "probe", "--alpha", "2", "--p", "2/3", "--pairs", "50", "--seed", "17"}, 0},
      {{"pathological", "demo", "--alpha", "2", "--d", "1", "--k", "8"}, 0},
      {{"scan", "--family", "pow", "--beta", "2", "--p-range", "0:4", "--q-range", "0:4", "--res", "40"}, 0},
      {{"scan", "--family", "exp", "--res", "10", "--seed", "3", "--format", "json"}, 0},
      {{"m2", "--beta", "2", "--lambda", "2", "--seed", "5"}, 0},
      {{"m2", "--beta", "1/2", "--lambda", "1/2", "4"}, 1},
      {{"thmp", "--family", "pow", "--beta", "1", "--x", "1", "--y", "4"}, 0},
      {{"thmp", "--family", "pathological", "--alpha", "2", "--count", "20"}, 0},
      {{"mean", "--p", "1", "--", "-1", "2"}, 1},
      {{"mean", "--p"}, 2},
      {{"scan", "--res", "ten"}, 2},
  };
  for (const auto& c : cases) {
    std::ostringstream out1, err1, out2, err2;
    const int first = run_cli(c.args, out1, err1);
    const int second = run_cli(c.args, out2, err2);
    std::string line;
    for (const auto& a : c.args) line += a + " ";
    if (out1.str() != out2.str() || first != second) out.fail("nondeterministic: " + line);
    if (first != c.code) out.fail(fmt("exit %d, expected %d: ", first, c.code) + line);
  }
  if (out.pass) out.detail = fmt("%zu invocations run twice, byte-identical, exit codes as expected", cases.size());
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria{
      {"power-mean properties", power_mean_suite, 5},
      {"conjugation equivalence", conjugation_equivalence, 10},
      {"exact field algebra", exact_algebra, 30},
      {"Jensen probe for F", jensen_probe_suite, 60},
      {"fractional powers of F", fractional_power_fixture, 0},
      {"discontinuity of F", discontinuity, 0},
      {"region scan oracle", region_scan, 0},
      {"support inequality", support_inequality, 0},
      {"image boundedness for F", image_boundedness, 0},
      {"CLI determinism and exit codes", cli_contract, 0},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = criteria[i].run();
    const double t = seconds_since(start);
    if (criteria[i].budget_seconds > 0 && t > criteria[i].budget_seconds)
      o.fail(fmt("took %.2f s, budget %.0f s", t, criteria[i].budget_seconds));
    if (!o.pass) ++failures;
    std::printf("%s %2zu %-32s %.2f s  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, t, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

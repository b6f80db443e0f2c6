#include "meanconvex/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "meanconvex/derivation.hpp"
#include "meanconvex/pathological.hpp"
#include "meanconvex/regularity.hpp"

namespace meanconvex {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    const std::string num = text.substr(0, slash);
    if (num.empty() || num.find_first_not_of("+-0123456789") != std::string::npos) throw UsageError("");
    const Integer n(num.front() == '+' ? num.substr(1) : num);
    if (slash == std::string::npos) return Rational(n);
    const std::string den = text.substr(slash + 1);
    if (den.empty() || den.find_first_not_of("0123456789") != std::string::npos) throw UsageError("");
    const Integer d(den);
    if (d == 0) throw UsageError("");
    return Rational(n, d);
  } catch (const std::exception&) {
    throw UsageError("expected a rational m/n, got '" + text + "'");
  }
}

// Reals: a rational m/n or a decimal literal.
double parse_real(const std::string& text) {
  if (text.find('/') != std::string::npos) return parse_rational(text).convert_to<double>();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(v)) throw UsageError("expected a real number, got '" + text + "'");
  return v;
}

Rational parse_decimal(const std::string& text) {
  parse_real(text);
  try {
    return decimal_to_rational(text);
  } catch (const std::exception&) {
    throw UsageError("expected a decimal, got '" + text + "'");
  }
}

Interval parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("expected a range lo:hi, got '" + text + "'");
  const Interval r{parse_real(text.substr(0, colon)), parse_real(text.substr(colon + 1))};
  if (!(r.lo <= r.hi)) throw UsageError("range '" + text + "' is empty");
  return r;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

DerivationSpec parse_derivation(const std::string& text) {
  std::vector<Rational> values;
  for (const auto& item : split(text, ',')) values.push_back(parse_rational(item));
  return DerivationSpec(std::move(values));
}

struct FamilyOptions {
  std::string family = "pow";
  std::string beta = "2";
  std::string a = "1";
  std::string b = "0";
  std::string base = "1";
  std::string slope = "1";
  std::string knot = "1";

  void attach(CLI::App* cmd, bool with_pathological = false) {
    std::vector<std::string> names{"pow", "exp", "spline", "cap"};
    if (with_pathological) names.emplace_back("pathological");
    cmd->add_option("--family", family, "pow | exp | spline | cap")->check(CLI::IsMember(names));
    cmd->add_option("--beta", beta, "exponent of pow");
    cmd->add_option("--a", a, "slope of exp(a t + b)");
    cmd->add_option("--b", b, "offset of exp(a t + b)");
    cmd->add_option("--base", base, "spline/cap base value");
    cmd->add_option("--slope", slope, "spline/cap slope");
    cmd->add_option("--knot", knot, "spline/cap knot");
  }

  SampledFunction build() const {
    if (family == "pow") return family::power(parse_real(beta));
    if (family == "exp") return family::exponential(parse_real(a), parse_real(b));
    if (family == "spline") return family::convex_spline(parse_real(base), parse_real(slope), parse_real(knot));
    return family::concave_cap(parse_real(base), parse_real(slope), parse_real(knot));
  }
};

struct PathologicalOptions {
  std::string alpha = "1";
  std::string d = "1";
  std::string theta = kPiDecimal;
  unsigned precision = 50;

  void attach(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "exponent alpha as m/n");
    cmd->add_option("--d", d, "derivation values d(t1),d(t2),... as rationals");
    cmd->add_option("--theta", theta, "decimal values of t1,t2,... (default pi to 50 digits, then e)");
    cmd->add_option("--precision", precision, "working precision in decimal digits");
  }

  PathologicalSpec build() const {
    auto decimals = split(theta, ',');
    if (decimals.size() < 2) decimals.emplace_back(kEDecimal);
    return PathologicalSpec(parse_rational(alpha), parse_derivation(d), NumericAssignment(decimals, precision));
  }
};

nlohmann::ordered_json error_report(const std::string& command, const std::string& kind, const std::string& message) {
  nlohmann::ordered_json out;
  out["command"] = command;
  out["error"] = {{"kind", kind}, {"message", message}};
  out["pass"] = false;
  return out;
}

std::string num(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certification probes for convexity with respect to power means", "meanconvex"};
  app.require_subcommand(1);

  std::string format = "json";
  std::uint64_t seed = 1;
  std::string tol_text;
  const auto add_common = [&](CLI::App* cmd, bool with_seed) {
    cmd->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--tol", tol_text, "tolerance");
    if (with_seed) cmd->add_option("--seed", seed, "seed of the mt19937_64 stream");
  };

  // mean
  auto* mean_cmd = app.add_subcommand("mean", "power mean H_p(x, y)");
  std::string mean_p = "1";
  std::vector<std::string> mean_xy;
  mean_cmd->add_option("--p", mean_p, "order p");
  mean_cmd->add_option("xy", mean_xy, "x y")->expected(2)->required();
  add_common(mean_cmd, false);

  // gap
  auto* gap_cmd = app.add_subcommand("gap", "(p,q)-Jensen gap of a test-family function");
  FamilyOptions gap_family;
  gap_family.attach(gap_cmd);
  std::string gap_p = "1", gap_q = "1";
  std::vector<std::string> gap_xy;
  gap_cmd->add_option("--p", gap_p, "order p");
  gap_cmd->add_option("--q", gap_q, "order q");
  gap_cmd->add_option("xy", gap_xy, "x y")->expected(2)->required();
  add_common(gap_cmd, false);

  // transform
  auto* transform_cmd = app.add_subcommand("transform", "table of the transform f_{p,q}");
  FamilyOptions transform_family;
  transform_family.attach(transform_cmd);
  std::string transform_p = "1", transform_q = "1";
  std::vector<std::string> transform_u;
  transform_cmd->add_option("--p", transform_p, "order p");
  transform_cmd->add_option("--q", transform_q, "order q");
  transform_cmd->add_option("u", transform_u, "points of I_p")->required();
  add_common(transform_cmd, false);

  // derive
  auto* derive_cmd = app.add_subcommand("derive", "derivation and logarithmic part of an expression");
  std::string derive_expr;
  std::string derive_d = "1";
  derive_cmd->add_option("expression", derive_expr, "element of Q(t1..tn)")->required();
  derive_cmd->add_option("--d", derive_d, "derivation values d(t1),d(t2),...");
  add_common(derive_cmd, false);

  // pathological probe | demo
  auto* patho_cmd = app.add_subcommand("pathological", "the function x^alpha exp(d(x)/x)");
  patho_cmd->require_subcommand(1);
  auto* probe_cmd = patho_cmd->add_subcommand("probe", "(p, p/alpha)-Jensen probe on random field points");
  PathologicalOptions probe_opts;
  probe_opts.attach(probe_cmd);
  std::string probe_p = "1";
  std::string probe_q;
  std::size_t probe_pairs = 1000;
  probe_cmd->add_option("--p", probe_p, "positive rational order m/n");
  probe_cmd->add_option("--q", probe_q, "range order (default p/alpha)");
  probe_cmd->add_option("--pairs", probe_pairs, "number of random pairs");
  add_common(probe_cmd, true);
  auto* demo_cmd = patho_cmd->add_subcommand("demo", "discontinuity along rational approximants of t1");
  PathologicalOptions demo_opts;
  demo_opts.alpha = "1";
  demo_opts.attach(demo_cmd);
  int demo_k = 8;
  bool demo_convergents = false;
  demo_cmd->add_option("--k", demo_k, "number of approximants");
  demo_cmd->add_flag("--convergents", demo_convergents, "continued-fraction convergents instead of truncations");
  add_common(demo_cmd, false);

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "(p,q) convexity region of a test-family function");
  FamilyOptions scan_family;
  scan_family.attach(scan_cmd);
  std::string scan_p_range = "0:4", scan_q_range = "0:4", scan_domain = "0.25:4";
  std::size_t scan_res = 40, scan_samples = 64;
  scan_cmd->add_option("--p-range", scan_p_range, "p axis lo:hi");
  scan_cmd->add_option("--q-range", scan_q_range, "q axis lo:hi");
  scan_cmd->add_option("--res", scan_res, "grid points per axis");
  scan_cmd->add_option("--samples", scan_samples, "random domain pairs");
  scan_cmd->add_option("--domain", scan_domain, "domain sample range lo:hi");
  add_common(scan_cmd, true);

  // m2
  auto* m2_cmd = app.add_subcommand("m2", "support inequality t^beta >= 1 + lambda (t - 1)");
  std::string m2_beta = "2", m2_lambda = "2", m2_range = "0.01:100";
  std::size_t m2_samples = 1000, m2_spot = 1000;
  std::vector<std::string> m2_extra;
  m2_cmd->add_option("--beta", m2_beta, "exponent of m(t) = t^beta");
  m2_cmd->add_option("--lambda", m2_lambda, "slope of a(t) = lambda t");
  m2_cmd->add_option("--samples", m2_samples, "log-spaced samples of t");
  m2_cmd->add_option("--t-range", m2_range, "sample range lo:hi");
  m2_cmd->add_option("--spot", m2_spot, "Jensen spot checks");
  m2_cmd->add_option("t", m2_extra, "additional t values");
  add_common(m2_cmd, true);

  // thmp
  auto* thmp_cmd = app.add_subcommand("thmp", "image boundedness mechanism over a sampled order set");
  FamilyOptions thmp_family;
  thmp_family.attach(thmp_cmd, true);
  PathologicalOptions thmp_patho;
  thmp_patho.attach(thmp_cmd);
  std::string thmp_x = "1", thmp_y = "4", thmp_p_range = "-4:4", thmp_q_scale = "1";
  std::size_t thmp_count = 100, thmp_denominator = 25;
  thmp_cmd->add_option("--x", thmp_x, "first point (an expression for --family pathological)");
  thmp_cmd->add_option("--y", thmp_y, "second point");
  thmp_cmd->add_option("--p-range", thmp_p_range, "order range lo:hi");
  thmp_cmd->add_option("--count", thmp_count, "number of sampled orders");
  thmp_cmd->add_option("--q-scale", thmp_q_scale, "q(p) = scale * p");
  thmp_cmd->add_option("--denominator", thmp_denominator, "orders k/denominator, k = 1..count (pathological)");
  add_common(thmp_cmd, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  std::string command;
  for (auto* sub : app.get_subcommands()) {
    command = sub->get_name();
    for (auto* nested : sub->get_subcommands()) command += " " + nested->get_name();
  }

  const auto emit = [&](ProbeReport report) {
    report.command = command;
    if (format == "csv") {
      out << report.to_csv();
    } else {
      out << report.to_json().dump(2) << '\n';
    }
    return report.pass ? 0 : 1;
  };

  try {
    const std::optional<double> tol = tol_text.empty() ? std::nullopt : std::optional<double>(parse_real(tol_text));

    if (mean_cmd->parsed()) {
      const double p = parse_real(mean_p);
      const double x = parse_real(mean_xy[0]);
      const double y = parse_real(mean_xy[1]);
      ProbeReport report;
      report.command = command;
      report.parameters["p"] = p;
      report.parameters["x"] = x;
      report.parameters["y"] = y;
      report.add_value("H_p(x,y)", holder_mean(MeanParameter(p), x, y));
      report.finalize();
      return emit(report);
    }

    if (gap_cmd->parsed()) {
      const SampledFunction f = gap_family.build();
      const ConvexityPair pq(parse_real(gap_p), parse_real(gap_q));
      const double x = parse_real(gap_xy[0]);
      const double y = parse_real(gap_xy[1]);
      const double relative = tol.value_or(1e-9);
      ProbeReport report;
      report.command = command;
      report.parameters["function"] = f.name;
      report.parameters["p"] = pq.p();
      report.parameters["q"] = pq.q();
      report.parameters["x"] = x;
      report.parameters["y"] = y;
      report.parameters["tolerance"] = relative;
      const double gap = pq_jensen_gap(f, pq, x, y);
      report.add_gap("H_q(f(x),f(y)) - f(H_p(x,y))", gap);
      report.add_value("Jensen gap of f_{p,q} at the conjugated points", conjugated_jensen_gap(f, pq, x, y));
      if (classify_gap(gap, pq_gap_scale(f, pq, x, y), relative) == GapSign::negative)
        report.violations.push_back("(p,q)-Jensen inequality fails at x=" + num(x) + ", y=" + num(y));
      report.finalize();
      return emit(report);
    }

    if (transform_cmd->parsed()) {
      const SampledFunction f = transform_family.build();
      const ConvexityPair pq(parse_real(transform_p), parse_real(transform_q));
      ProbeReport report;
      report.command = command;
      report.parameters["function"] = f.name;
      report.parameters["p"] = pq.p();
      report.parameters["q"] = pq.q();
      const Interval image = interval_image(f.domain, pq.p());
      report.parameters["image"] = {image.lo, image.hi};
      for (const auto& text : transform_u) {
        const double u = parse_real(text);
        report.add_value("f_{p,q}(" + num(u) + ")", conjugate_value(f, pq, u));
      }
      report.finalize();
      return emit(report);
    }

    if (derive_cmd->parsed()) {
      const FormalElement a = parse_element(derive_expr);
      const DerivationSpec d = parse_derivation(derive_d);
      ProbeReport report;
      report.command = command;
      report.parameters["expression"] = derive_expr;
      report.parameters["d"] = split(derive_d, ',');
      report.add_fixture("element", a.to_string());
      report.add_fixture("derivation", derive(a, d).to_string());
      if (a.is_zero()) {
        report.notes.push_back("logarithmic part undefined at zero");
      } else {
        report.add_fixture("logarithmic_part", logarithmic_part(a, d).to_string());
      }
      report.finalize();
      return emit(report);
    }

    if (probe_cmd->parsed()) {
      const PathologicalSpec spec = probe_opts.build();
      const Rational p = parse_rational(probe_p);
      if (p <= 0) throw UsageError("--p must be a positive rational");
      std::mt19937_64 rng(seed);
      std::vector<PoweredPair> pairs;
      pairs.reserve(probe_pairs);
      for (std::size_t i = 0; i < probe_pairs; ++i) {
        const FormalElement w = sample_field_point(rng, spec.assignment());
        const FormalElement z = sample_field_point(rng, spec.assignment());
        pairs.push_back(shaped_pair(w, z, p));
      }
      JensenProbeOptions options;
      if (!probe_q.empty())
        options.range_order = probe_q.find('/') != std::string::npos ? parse_rational(probe_q) : parse_decimal(probe_q);
      options.tolerance = tol;
      ProbeReport report = jensen_probe(spec, p, pairs, options);
      report.parameters["seed"] = seed;
      return emit(report);
    }

    if (demo_cmd->parsed()) {
      const PathologicalSpec spec = demo_opts.build();
      return emit(discontinuity_demo(spec, demo_k,
                                     demo_convergents ? Approximants::continued_fraction : Approximants::decimal_truncation));
    }

    if (scan_cmd->parsed()) {
      const SampledFunction f = scan_family.build();
      RegionSpec spec{parse_range(scan_p_range), parse_range(scan_q_range), scan_res, tol.value_or(1e-9)};
      const Interval domain = parse_range(scan_domain);
      std::mt19937_64 rng(seed);
      const auto samples = random_domain_pairs(rng, scan_samples, domain.lo, domain.hi);
      const RegionGrid grid = convexity_region_scan(f, spec, samples);
      const bool staircase = is_monotone_staircase(grid);
      // Grids default to CSV.
      if (format == "csv" || scan_cmd->get_option("--format")->count() == 0) {
        out << grid.to_csv();
      } else {
        nlohmann::ordered_json report;
        report["command"] = command;
        report["parameters"] = {{"function", f.name},  {"p_range", scan_p_range}, {"q_range", scan_q_range},
                                {"res", scan_res},      {"samples", scan_samples}, {"domain", scan_domain},
                                {"seed", seed},         {"tolerance", spec.tolerance}};
        report["grid"] = grid.to_json();
        report["staircase"] = staircase;
        report["pass"] = staircase;
        out << report.dump(2) << '\n';
      }
      if (!staircase) err << "verdict matrix is not a monotone staircase\n";
      return staircase ? 0 : 1;
    }

    if (m2_cmd->parsed()) {
      const Interval range = parse_range(m2_range);
      if (!(range.lo > 0)) throw UsageError("--t-range must be positive");
      std::vector<double> ts;
      for (std::size_t i = 0; i < m2_samples; ++i) {
        const double f = m2_samples == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(m2_samples - 1);
        ts.push_back(std::exp(std::log(range.lo) + f * (std::log(range.hi) - std::log(range.lo))));
      }
      for (const auto& t : m2_extra) ts.push_back(parse_real(t));
      return emit(support_inequality_check(parse_real(m2_beta), parse_real(m2_lambda), ts, m2_spot, seed,
                                           tol.value_or(1e-12)));
    }

    if (thmp_cmd->parsed()) {
      if (thmp_family.family == "pathological") {
        const PathologicalSpec spec = thmp_patho.build();
        std::vector<Rational> orders;
        for (std::size_t k = 1; k <= thmp_count; ++k)
          orders.emplace_back(static_cast<long>(k), static_cast<long>(thmp_denominator));
        const std::string x = thmp_x == "1" ? "t1" : thmp_x;
        const std::string y = thmp_y == "4" ? "t1 + 1" : thmp_y;
        return emit(pathological_boundedness_probe(spec, parse_element(x), parse_element(y), orders));
      }
      const SampledFunction f = thmp_family.build();
      const Interval range = parse_range(thmp_p_range);
      const double scale = parse_real(thmp_q_scale);
      std::vector<double> orders;
      for (std::size_t k = 0; k < thmp_count; ++k)
        orders.push_back(thmp_count == 1 ? range.lo
                                         : range.lo + (range.hi - range.lo) * static_cast<double>(k) /
                                                          static_cast<double>(thmp_count - 1));
      const ParameterSet P(orders, [scale](double p) { return scale * p; });
      return emit(image_boundedness_probe(f, parse_real(thmp_x), parse_real(thmp_y), P, tol.value_or(1e-12)));
    }
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    out << error_report(command, "parse_error", e.what()).dump(2) << '\n';
    return 1;
  } catch (const DomainError& e) {
    out << error_report(command, "domain_error", e.what()).dump(2) << '\n';
    return 1;
  } catch (const EvaluationError& e) {
    out << error_report(command, "evaluation_error", e.what()).dump(2) << '\n';
    return 1;
  }
  return 2;
}

}  // namespace meanconvex

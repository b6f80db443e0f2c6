#pragma once

#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "meanconvex/conjugation.hpp"
#include "meanconvex/pathological.hpp"
#include "meanconvex/probe_report.hpp"

namespace meanconvex {

/// Finite sample of orders p with the range order q(p) assigned to each.
/// Negative q(p) entries are checked through the sign of f_{p,q} instead of the
/// boundedness bound.
class ParameterSet {
 public:
  explicit ParameterSet(std::vector<std::pair<double, double>> entries);
  ParameterSet(const std::vector<double>& samples, const std::function<double(double)>& q_of_p);

  const std::vector<std::pair<double, double>>& entries() const noexcept { return entries_; }

 private:
  std::vector<std::pair<double, double>> entries_;
};

/// For f claimed (p, q(p))-Jensen convex on the sample: S = {H_p(x,y)} must satisfy
/// f(s) <= max(f(x), f(y)), and p -> H_p(x,y) must be strictly increasing.
/// Claim failures and bound failures are listed as violations, not thrown.
ProbeReport image_boundedness_probe(const SampledFunction& f, double x, double y, const ParameterSet& P,
                                    double relative_tol = 1e-12);

/// Same mechanism for F_{d,alpha} at the field points x = w^N, y = z^N, where N is
/// the common denominator of the sampled positive rational orders (so every x^p is
/// a field element) and q(p) = p / alpha.
ProbeReport pathological_boundedness_probe(const PathologicalSpec& spec, const FormalElement& w, const FormalElement& z,
                                           const std::vector<Rational>& orders);

/// Checks t^beta >= 1 + lambda (t - 1) on the samples; if that holds, spot-checks
/// m(x) + m(y) >= 2 m((x+y)/2) on `spot_checks` random pairs drawn from the sample range.
ProbeReport support_inequality_check(double beta, double lambda, std::span<const double> t_samples,
                                     std::size_t spot_checks = 1000, std::uint64_t seed = 1,
                                     double relative_tol = 1e-12);

enum class Verdict { convex, nonconvex, indeterminate };

const char* verdict_name(Verdict v);

struct RegionSpec {
  Interval p_range;  // closed; endpoints are grid points
  Interval q_range;
  std::size_t resolution = 40;  // grid points per axis
  double tolerance = 1e-9;      // relative to the compared means
};

struct RegionGrid {
  std::vector<double> p_values;
  std::vector<double> q_values;
  /// verdicts[i][j] for (p_values[i], q_values[j]).
  std::vector<std::vector<Verdict>> verdicts;

  double q_step() const { return q_values.size() > 1 ? q_values[1] - q_values[0] : 0.0; }
  double p_step() const { return p_values.size() > 1 ? p_values[1] - p_values[0] : 0.0; }

  std::string to_csv() const;
  nlohmann::ordered_json to_json() const;
};

/// Convex when the smallest relative gap over the samples is >= -tol, nonconvex when
/// it is below -100 tol, indeterminate in between.
RegionGrid convexity_region_scan(const SampledFunction& f, const RegionSpec& spec,
                                 std::span<const std::pair<double, double>> domain_samples);

/// Smallest q on the grid with a convex verdict in column p_index.
std::optional<double> convex_boundary(const RegionGrid& grid, std::size_t p_index);

/// A convex cell forces every cell with larger q (same p) and smaller p (same q)
/// to be convex or indeterminate.
bool is_monotone_staircase(const RegionGrid& grid);

/// count pairs with both coordinates uniform in [lo, hi] and x != y.
std::vector<std::pair<double, double>> random_domain_pairs(std::mt19937_64& rng, std::size_t count, double lo,
                                                           double hi);

}  // namespace meanconvex

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace meanconvex {

struct ProbeSample {
  std::string input;
  double value = 0.0;
  /// Decimal text at the working precision, empty for plain double probes.
  std::string text;
  /// Whether `value` is a convexity gap (counted by min_gap) or a plain value.
  bool is_gap = true;
};

/// Outcome of a verification run. Serialization is deterministic: identical
/// inputs and seed produce byte-identical JSON.
struct ProbeReport {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<ProbeSample> samples;
  std::vector<std::string> violations;
  std::vector<std::pair<std::string, std::string>> fixture_values;
  std::vector<std::string> notes;
  /// Minimum over gap samples (finalize); min_gap_text optionally carries it at full precision.
  std::optional<double> min_gap;
  std::string min_gap_text;
  bool pass = false;

  void add_gap(std::string input, double gap, std::string text = {});
  void add_value(std::string input, double value, std::string text = {});
  void add_fixture(std::string name, std::string value) { fixture_values.emplace_back(std::move(name), std::move(value)); }
  /// Sets pass from the violation list and min_gap from the samples.
  void finalize();

  nlohmann::ordered_json to_json() const;
  /// input,value,text rows with a header line.
  std::string to_csv() const;
};

}  // namespace meanconvex

#include "meanconvex/probe_report.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace meanconvex {

namespace {

std::string shortest(double v) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, v);
  return std::string(buffer, result.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void ProbeReport::add_gap(std::string input, double gap, std::string text) {
  samples.push_back({std::move(input), gap, std::move(text), true});
}

void ProbeReport::add_value(std::string input, double value, std::string text) {
  samples.push_back({std::move(input), value, std::move(text), false});
}

void ProbeReport::finalize() {
  pass = violations.empty();
  std::optional<double> smallest;
  for (const auto& s : samples)
    if (s.is_gap && (!smallest || s.value < *smallest)) smallest = s.value;
  min_gap = smallest;
}

nlohmann::ordered_json ProbeReport::to_json() const {
  nlohmann::ordered_json out;
  out["command"] = command;
  out["parameters"] = parameters;
  auto& rows = out["samples"] = nlohmann::ordered_json::array();
  for (const auto& s : samples) {
    nlohmann::ordered_json row;
    row["input"] = s.input;
    row[s.is_gap ? "gap" : "value"] = s.value;
    if (!s.text.empty()) row["text"] = s.text;
    rows.push_back(std::move(row));
  }
  out["min_gap"] = min_gap ? nlohmann::ordered_json(*min_gap) : nlohmann::ordered_json(nullptr);
  if (!min_gap_text.empty()) out["min_gap_text"] = min_gap_text;
  out["violations"] = violations;
  out["pass"] = pass;
  auto& fixtures = out["fixture_values"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : fixture_values) fixtures[name] = value;
  if (!notes.empty()) out["notes"] = notes;
  return out;
}

std::string ProbeReport::to_csv() const {
  std::string out = "input,kind,value,text\n";
  for (const auto& s : samples) {
    out += csv_field(s.input) + ',' + (s.is_gap ? "gap" : "value") + ',' + shortest(s.value) + ',' + csv_field(s.text) + '\n';
  }
  return out;
}

}  // namespace meanconvex

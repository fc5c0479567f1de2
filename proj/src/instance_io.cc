// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairloc/instance_io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "fairloc/errors.h"

namespace fairloc {
namespace {

using nlohmann::json;

// Structural problems have no byte offset; they are reported at 0:0 with
// the offending key in the message.
[[noreturn]] void ShapeError(const std::string& message) {
  throw ParseError(message, 0, 0);
}

ParseError SyntaxError(std::string_view text, const json::parse_error& e) {
  // e.byte is the 1-based offset of the last byte read.
  const std::size_t end = std::min<std::size_t>(e.byte, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  std::string message = e.what();
  return ParseError(message, line, column);
}

double RequireNumber(const json& value, const std::string& what) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string() && value.get<std::string>() == "inf") return kInfinity;
  if (value.is_string() && value.get<std::string>() == "-inf") {
    return -kInfinity;
  }
  ShapeError(what + " must be a number");
}

std::optional<double> OptionalNumber(const json& object, const char* key) {
  if (!object.contains(key)) return std::nullopt;
  return RequireNumber(object.at(key), key);
}

Expectation ParseExpectation(const json& entry) {
  if (!entry.is_object()) ShapeError("expected entries must be objects");
  if (!entry.contains("mechanism") || !entry.at("mechanism").is_string()) {
    ShapeError("expected entry needs a mechanism string");
  }
  if (!entry.contains("objective") || !entry.at("objective").is_string()) {
    ShapeError("expected entry needs an objective string");
  }
  Expectation e;
  try {
    e.mechanism = MechanismId::Parse(entry.at("mechanism").get<std::string>());
    e.objective = ObjectiveSpec::Parse(entry.at("objective").get<std::string>());
  } catch (const Error& err) {
    ShapeError(err.what());
  }
  e.mechanism_value = OptionalNumber(entry, "mechanism_value");
  e.optimal_value = OptionalNumber(entry, "optimal_value");
  e.optimal_location = OptionalNumber(entry, "optimal_location");
  e.ratio = OptionalNumber(entry, "ratio");
  if (entry.contains("outcome")) {
    const json& support = entry.at("outcome");
    if (!support.is_array()) ShapeError("outcome must be an array");
    std::vector<SupportPoint> points;
    for (const json& s : support) {
      if (!s.is_array() || s.size() != 2) {
        ShapeError("outcome entries must be [point, probability] pairs");
      }
      points.push_back({RequireNumber(s[0], "outcome point"),
                        RequireNumber(s[1], "outcome probability")});
    }
    e.outcome = std::move(points);
  }
  if (entry.contains("note")) {
    if (!entry.at("note").is_string()) ShapeError("note must be a string");
    e.note = entry.at("note").get<std::string>();
  }
  return e;
}

}  // namespace

InstanceFile ParseInstanceFile(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SyntaxError(text, e);
  }
  if (!doc.is_object()) ShapeError("instance must be a JSON object");
  if (!doc.contains("schema_version") ||
      !doc.at("schema_version").is_number_integer()) {
    ShapeError("schema_version must be an integer");
  }
  const int version = doc.at("schema_version").get<int>();
  if (version != kSchemaVersion) {
    ShapeError("unsupported schema_version " + std::to_string(version));
  }
  if (!doc.contains("groups") || !doc.at("groups").is_array()) {
    ShapeError("groups must be an array");
  }
  std::vector<std::vector<double>> groups;
  for (const json& g : doc.at("groups")) {
    if (!g.is_array()) ShapeError("each group must be an array");
    std::vector<double> members;
    for (const json& x : g) {
      if (!x.is_number()) ShapeError("agent locations must be numbers");
      members.push_back(x.get<double>());
    }
    groups.push_back(std::move(members));
  }

  std::string name;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) ShapeError("name must be a string");
    name = doc.at("name").get<std::string>();
  }
  std::vector<Expectation> expected;
  if (doc.contains("expected")) {
    if (!doc.at("expected").is_array()) ShapeError("expected must be an array");
    for (const json& entry : doc.at("expected")) {
      expected.push_back(ParseExpectation(entry));
    }
  }

  try {
    return {std::move(name), ProfileFromGroups(groups), std::move(expected)};
  } catch (const Error& e) {
    throw ValidationError(e.what());
  }
}

GroupedProfile ParseInstance(std::string_view text) {
  return ParseInstanceFile(text).profile;
}

InstanceFile LoadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstanceFile(buffer.str());
}

std::string SerializeInstance(const GroupedProfile& profile,
                              const std::string& name) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  if (!name.empty()) doc["name"] = name;
  doc["groups"] = ProfileToJson(profile);
  return doc.dump();
}

json NumberToJson(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

double NumberFromJson(const json& value) {
  return RequireNumber(value, "value");
}

json ProfileToJson(const GroupedProfile& profile) {
  return profile.GroupLists();
}

json OutcomeToJson(const FacilityOutcome& outcome) {
  json support = json::array();
  for (const SupportPoint& s : outcome.support()) {
    support.push_back({s.point, s.probability});
  }
  return support;
}

json RunReportToJson(const RunReport& report) {
  const RatioReport& r = report.result;
  return {
      {"instance", report.instance},
      {"mechanism", report.mechanism.Name()},
      {"objective", report.objective.Name()},
      {"outcome", OutcomeToJson(r.outcome)},
      {"mechanism_value", NumberToJson(r.mechanism_value)},
      {"optimal_location", NumberToJson(r.optimal.location)},
      {"optimal_value", NumberToJson(r.optimal.value)},
      {"ratio", NumberToJson(r.ratio)},
      {"sp_violations", report.sp_violations},
  };
}

json WorstCaseReportToJson(const WorstCaseReport& report,
                           const MechanismId& mechanism,
                           const ObjectiveSpec& objective,
                           const SearchConfig& config) {
  json trace = json::array();
  for (const TracePoint& p : report.trace) {
    trace.push_back({{"restart", p.restart},
                     {"iteration", p.iteration},
                     {"ratio", NumberToJson(p.ratio)}});
  }
  return {
      {"mechanism", mechanism.Name()},
      {"objective", objective.Name()},
      {"config",
       {{"seed", config.seed},
        {"n_range", {config.n_min, config.n_max}},
        {"m_range", {config.m_min, config.m_max}},
        {"iterations", config.iterations},
        {"perturbation_scale", config.perturbation_scale},
        {"restarts", config.restarts}}},
      {"best_ratio", NumberToJson(report.best_ratio)},
      {"best_restart", report.best_restart},
      {"best_profile", ProfileToJson(report.best_profile)},
      {"trace", trace},
  };
}

}  // namespace fairloc

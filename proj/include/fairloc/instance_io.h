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

// JSON instance files and report serialization.
//
// Instance format, version 1:
//
//   {"schema_version": 1,
//    "name": "optional label",
//    "groups": [[0, 0.5], [1]],
//    "expected": [ ...optional annotations... ]}
//
// Each annotation names a mechanism and an objective and may pin any of
// mechanism_value, optimal_value, optimal_location, ratio and outcome.
// Infinite values are written as the strings "inf" and "-inf".

#ifndef FAIRLOC_INSTANCE_IO_H_
#define FAIRLOC_INSTANCE_IO_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairloc/adversary.h"
#include "fairloc/mechanisms.h"
#include "fairloc/model.h"
#include "fairloc/objectives.h"
#include "fairloc/oracle.h"
#include "json.hpp"

namespace fairloc {

inline constexpr int kSchemaVersion = 1;

struct Expectation {
  MechanismId mechanism;
  ObjectiveSpec objective;
  std::optional<double> mechanism_value;
  std::optional<double> optimal_value;
  std::optional<double> optimal_location;
  std::optional<double> ratio;
  std::optional<std::vector<SupportPoint>> outcome;
  std::string note;
};

struct InstanceFile {
  std::string name;
  GroupedProfile profile;
  std::vector<Expectation> expected;
};

// Throws ParseError for malformed JSON, a wrong shape or an unsupported
// schema_version, and ValidationError when the groups do not form a valid
// profile.
InstanceFile ParseInstanceFile(std::string_view text);
GroupedProfile ParseInstance(std::string_view text);

// Reads and parses a file; an unreadable file raises Error.
InstanceFile LoadInstanceFile(const std::string& path);

std::string SerializeInstance(const GroupedProfile& profile,
                              const std::string& name = "");

// Numbers, with infinities written as "inf" and "-inf".
nlohmann::json NumberToJson(double value);
double NumberFromJson(const nlohmann::json& value);

nlohmann::json ProfileToJson(const GroupedProfile& profile);
nlohmann::json OutcomeToJson(const FacilityOutcome& outcome);

struct RunReport {
  std::string instance;
  MechanismId mechanism;
  ObjectiveSpec objective;
  RatioReport result;
  std::size_t sp_violations = 0;
};

nlohmann::json RunReportToJson(const RunReport& report);
nlohmann::json WorstCaseReportToJson(const WorstCaseReport& report,
                                     const MechanismId& mechanism,
                                     const ObjectiveSpec& objective,
                                     const SearchConfig& config);

}  // namespace fairloc

#endif  // FAIRLOC_INSTANCE_IO_H_

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

// Subcommands of the fairloc tool. Each returns a process exit status:
// 0 for a clean run, 1 for a finding or a mismatch. Usage and parse errors
// surface as exceptions and are mapped to 2 by main.

#ifndef FAIRLOC_TOOLS_COMMANDS_H_
#define FAIRLOC_TOOLS_COMMANDS_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fairloc/adversary.h"
#include "fairloc/instance_io.h"
#include "fairloc/mechanisms.h"
#include "fairloc/objectives.h"

namespace fairloc::cli {

inline constexpr int kExitClean = 0;
inline constexpr int kExitFinding = 1;
inline constexpr int kExitUsage = 2;

inline constexpr char kSweepHeader[] =
    "instance,mechanism,objective,mechanism_value,optimal_value,"
    "optimal_location,ratio";

// 12 significant digits, '.' as decimal point, "inf" and "-inf" for infinities.
std::string FormatNumber(double value);

// Evaluates one mechanism on one instance and audits it at `resolution`.
// Always exits 0; the audit count is informational.
int CmdEval(const InstanceFile& instance, const MechanismId& mechanism,
            const ObjectiveSpec& objective, int resolution, bool json,
            std::ostream& out);

// Checks every annotation of every *.json file in `dir` whose mechanism,
// objective or instance name contains `filter` (case-insensitive).
int CmdFixtures(const std::string& dir, const std::string& filter, bool json,
                std::ostream& out, std::ostream& err);

// Runs the unilateral and colocated-group audits. `label` names the
// mechanism in the output.
int CmdAudit(const GroupedProfile& profile, const Mechanism& mechanism,
             const std::string& label, int resolution, bool json,
             std::ostream& out);

struct SearchOutputs {
  std::string report_path;  // WorstCaseReport JSON
  std::string plot_path;    // "iteration ratio" lines
};

// Hill climbs; with a bound, exits 1 when the bound is exceeded.
int CmdSearch(const MechanismId& mechanism, const ObjectiveSpec& objective,
              const SearchConfig& config, std::optional<double> bound,
              const SearchOutputs& outputs, bool json, std::ostream& out);

// One CSV row per (instance, mechanism, objective) over the *.json files of
// `dir` in lexicographic order. Exits 1 when no row was written.
int CmdSweep(const std::string& dir,
             const std::vector<MechanismId>& mechanisms,
             const std::vector<ObjectiveSpec>& objectives, std::ostream& out,
             std::ostream& err);

}  // namespace fairloc::cli

#endif  // FAIRLOC_TOOLS_COMMANDS_H_

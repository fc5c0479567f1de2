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

#include "commands.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "fairloc/audit.h"
#include "fairloc/errors.h"
#include "fairloc/oracle.h"

namespace fairloc::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool Contains(const std::string& haystack, const std::string& needle) {
  return Lower(haystack).find(Lower(needle)) != std::string::npos;
}

bool Near(double expected, double actual) {
  if (std::isinf(expected) || std::isinf(actual)) return expected == actual;
  return std::abs(expected - actual) <= kTolerance;
}

std::vector<fs::path> JsonFiles(const std::string& dir) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir);
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::string OutcomeText(const FacilityOutcome& outcome) {
  std::string text;
  for (const SupportPoint& s : outcome.support()) {
    if (!text.empty()) text += " ";
    text += FormatNumber(s.point) + "@" + FormatNumber(s.probability);
  }
  return text;
}

// Compares one annotation against a fresh evaluation; returns the
// mismatches as "field expected X got Y".
std::vector<std::string> Mismatches(const Expectation& e,
                                    const RatioReport& r) {
  std::vector<std::string> out;
  auto check = [&](const char* field, const std::optional<double>& want,
                   double got) {
    if (want && !Near(*want, got)) {
      out.push_back(std::string(field) + " expected " + FormatNumber(*want) +
                    " got " + FormatNumber(got));
    }
  };
  check("mechanism_value", e.mechanism_value, r.mechanism_value);
  check("optimal_value", e.optimal_value, r.optimal.value);
  check("optimal_location", e.optimal_location, r.optimal.location);
  check("ratio", e.ratio, r.ratio);
  if (e.outcome) {
    const auto got = r.outcome.support();
    bool same = got.size() == e.outcome->size();
    for (std::size_t i = 0; same && i < got.size(); ++i) {
      same = Near((*e.outcome)[i].point, got[i].point) &&
             Near((*e.outcome)[i].probability, got[i].probability);
    }
    if (!same) out.push_back("outcome got " + OutcomeText(r.outcome));
  }
  return out;
}

json FindingToJson(const AuditFinding& f) {
  return {{"deviators", f.deviators},
          {"true_location", f.true_location},
          {"misreport", f.misreport},
          {"truthful_cost", f.truthful_cost},
          {"deviating_cost", f.deviating_cost}};
}

}  // namespace

std::string FormatNumber(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value,
                                    std::chars_format::general, 12);
  return std::string(buffer, result.ptr);
}

int CmdEval(const InstanceFile& instance, const MechanismId& mechanism,
            const ObjectiveSpec& objective, int resolution, bool json_output,
            std::ostream& out) {
  const Mechanism mech = MakeMechanism(mechanism);
  RunReport report{instance.name, mechanism, objective,
                   Ratio(instance.profile, mech, objective), 0};
  report.sp_violations =
      SpAudit(mech, instance.profile, resolution).size() +
      GroupSpAudit(mech, instance.profile, resolution).size();

  if (json_output) {
    out << RunReportToJson(report).dump(2) << "\n";
    return kExitClean;
  }
  const RatioReport& r = report.result;
  out << "instance          " << (instance.name.empty() ? "-" : instance.name)
      << "\n"
      << "mechanism         " << mechanism.Name() << "\n"
      << "objective         " << objective.Name() << "\n"
      << "outcome           " << OutcomeText(r.outcome) << "\n"
      << "mechanism_value   " << FormatNumber(r.mechanism_value) << "\n"
      << "optimal_location  " << FormatNumber(r.optimal.location) << "\n"
      << "optimal_value     " << FormatNumber(r.optimal.value) << "\n"
      << "ratio             " << FormatNumber(r.ratio) << "\n"
      << "sp_violations     " << report.sp_violations << "\n";
  return kExitClean;
}

int CmdFixtures(const std::string& dir, const std::string& filter,
                bool json_output, std::ostream& out, std::ostream& err) {
  int checked = 0;
  int failed = 0;
  json rows = json::array();
  for (const fs::path& path : JsonFiles(dir)) {
    std::optional<InstanceFile> loaded;
    try {
      loaded = LoadInstanceFile(path.string());
    } catch (const Error& e) {
      err << "error: " << path.filename().string() << ": " << e.what() << "\n";
      ++failed;
      continue;
    }
    const InstanceFile& file = *loaded;
    const std::string name =
        file.name.empty() ? path.stem().string() : file.name;
    for (const Expectation& e : file.expected) {
      if (!filter.empty() && !Contains(e.objective.Name(), filter) &&
          !Contains(e.mechanism.Name(), filter) && !Contains(name, filter)) {
        continue;
      }
      ++checked;
      std::vector<std::string> problems;
      try {
        problems = Mismatches(e, Ratio(file.profile, e.mechanism, e.objective));
      } catch (const Error& ex) {
        problems.push_back(ex.what());
      }
      if (!problems.empty()) ++failed;
      if (json_output) {
        rows.push_back({{"instance", name},
                        {"mechanism", e.mechanism.Name()},
                        {"objective", e.objective.Name()},
                        {"pass", problems.empty()},
                        {"problems", problems}});
        continue;
      }
      out << (problems.empty() ? "PASS " : "FAIL ") << name << " "
          << e.mechanism.Name() << " " << e.objective.Name();
      for (const std::string& p : problems) out << "\n     " << p;
      out << "\n";
    }
  }
  if (json_output) {
    out << json{{"checked", checked}, {"failed", failed}, {"results", rows}}
               .dump(2)
        << "\n";
  } else {
    out << checked << " fixture checks, " << failed << " failure(s)\n";
  }
  return failed == 0 ? kExitClean : kExitFinding;
}

int CmdAudit(const GroupedProfile& profile, const Mechanism& mechanism,
             const std::string& label, int resolution, bool json_output,
             std::ostream& out) {
  const auto single = SpAudit(mechanism, profile, resolution);
  const auto group = GroupSpAudit(mechanism, profile, resolution);
  const std::size_t total = single.size() + group.size();
  if (json_output) {
    json findings = json::array();
    for (const auto& f : single) findings.push_back(FindingToJson(f));
    for (const auto& f : group) findings.push_back(FindingToJson(f));
    out << json{{"mechanism", label},
                {"resolution", resolution},
                {"violations", total},
                {"findings", findings}}
               .dump(2)
        << "\n";
  } else {
    auto print = [&](const char* kind, const AuditFinding& f) {
      out << kind << " agents";
      for (std::size_t d : f.deviators) out << " " << d;
      out << " at " << FormatNumber(f.true_location) << " report "
          << FormatNumber(f.misreport) << ": cost "
          << FormatNumber(f.truthful_cost) << " -> "
          << FormatNumber(f.deviating_cost) << "\n";
    };
    for (const auto& f : single) print("single", f);
    for (const auto& f : group) print("group", f);
    out << label << ": " << total << " violation(s) at resolution "
        << resolution << "\n";
  }
  return total == 0 ? kExitClean : kExitFinding;
}

int CmdSearch(const MechanismId& mechanism, const ObjectiveSpec& objective,
              const SearchConfig& config, std::optional<double> bound,
              const SearchOutputs& outputs, bool json_output,
              std::ostream& out) {
  const Mechanism mech = MakeMechanism(mechanism);
  const ConformanceResult result = BoundConformance(
      mech, objective, bound.value_or(kInfinity), config);
  const WorstCaseReport& report = result.report;

  json doc = WorstCaseReportToJson(report, mechanism, objective, config);
  if (bound) {
    doc["bound"] = *bound;
    doc["conforms"] = result.conforms;
  }
  if (!outputs.report_path.empty()) {
    std::ofstream file(outputs.report_path);
    if (!file) throw Error("cannot write " + outputs.report_path);
    file << doc.dump(2) << "\n";
  }
  if (!outputs.plot_path.empty()) {
    std::ofstream file(outputs.plot_path);
    if (!file) throw Error("cannot write " + outputs.plot_path);
    // Steps are counted across restarts so the x column is increasing.
    file << "# step best_ratio\n";
    for (const TracePoint& p : report.trace) {
      const long long step =
          static_cast<long long>(p.restart) * (config.iterations + 1) +
          p.iteration;
      file << step << " " << FormatNumber(p.ratio) << "\n";
    }
  }

  if (json_output) {
    out << doc.dump(2) << "\n";
  } else {
    out << "mechanism    " << mechanism.Name() << "\n"
        << "objective    " << objective.Name() << "\n"
        << "best_ratio   " << FormatNumber(report.best_ratio) << "\n"
        << "best_restart " << report.best_restart << "\n"
        << "best_profile " << ProfileToJson(report.best_profile).dump()
        << "\n";
    if (bound) {
      out << "bound        " << FormatNumber(*bound) << " "
          << (result.conforms ? "respected" : "EXCEEDED") << "\n";
    }
  }
  return result.conforms ? kExitClean : kExitFinding;
}

int CmdSweep(const std::string& dir,
             const std::vector<MechanismId>& mechanisms,
             const std::vector<ObjectiveSpec>& objectives, std::ostream& out,
             std::ostream& err) {
  std::vector<fs::path> files;
  try {
    files = JsonFiles(dir);
  } catch (const Error& e) {
    err << "warning: " << e.what() << "\n";
  }
  int rows = 0;
  for (const fs::path& path : files) {
    std::optional<InstanceFile> loaded;
    try {
      loaded = LoadInstanceFile(path.string());
    } catch (const Error& e) {
      err << "warning: skipping " << path.filename().string() << ": "
          << e.what() << "\n";
      continue;
    }
    const InstanceFile& file = *loaded;
    const std::string name =
        file.name.empty() ? path.stem().string() : file.name;
    for (const MechanismId& m : mechanisms) {
      for (const ObjectiveSpec& o : objectives) {
        RatioReport r;
        try {
          r = Ratio(file.profile, m, o);
        } catch (const Error& e) {
          err << "warning: skipping " << name << " " << m.Name() << " "
              << o.Name() << ": " << e.what() << "\n";
          continue;
        }
        if (rows == 0) out << kSweepHeader << "\n";
        out << name << "," << m.Name() << "," << o.Name() << ","
            << FormatNumber(r.mechanism_value) << ","
            << FormatNumber(r.optimal.value) << ","
            << FormatNumber(r.optimal.location) << ","
            << FormatNumber(r.ratio) << "\n";
        ++rows;
      }
    }
  }
  return rows > 0 ? kExitClean : kExitFinding;
}

}  // namespace fairloc::cli

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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.h"
#include "fairloc/errors.h"
#include "fairloc/instance_io.h"

#ifndef FAIRLOC_FIXTURE_DIR
#define FAIRLOC_FIXTURE_DIR "fixtures"
#endif

namespace {

using namespace fairloc;

std::vector<MechanismId> ParseMechanisms(const std::vector<std::string>& s) {
  std::vector<MechanismId> ids;
  for (const auto& text : s) ids.push_back(MechanismId::Parse(text));
  return ids;
}

std::vector<ObjectiveSpec> ParseObjectives(const std::vector<std::string>& s) {
  std::vector<ObjectiveSpec> specs;
  for (const auto& text : s) specs.push_back(ObjectiveSpec::Parse(text));
  return specs;
}

int Run(int argc, char** argv) {
  CLI::App app{"Group-fair facility location on the line: evaluate, audit "
               "and stress-test location mechanisms."};
  app.require_subcommand(1);

  bool json = false;
  std::uint64_t seed = 0;
  int resolution = 101;
  std::string filter;
  app.add_flag("--json", json, "Machine-readable JSON output");
  app.add_option("--seed", seed, "Seed for randomized search");
  app.add_option("--resolution", resolution, "Audit grid resolution")
      ->check(CLI::Range(2, 100000000));
  app.add_option("--filter", filter,
                 "Only fixtures whose mechanism, objective or name matches");

  std::string instance_path, mechanism = "MDM", objective = "mtgc";
  bool normalize = false;
  auto* eval = app.add_subcommand("eval", "Evaluate a mechanism on an instance");
  eval->add_option("instance", instance_path, "Instance JSON file")
      ->required();
  eval->add_option("--mech", mechanism, "Mechanism, e.g. MGDM or KLDM:2");
  eval->add_option("--obj", objective, "Objective, e.g. mtgc or alt-b-max");
  eval->add_flag("--normalize", normalize, "Rescale locations onto [0, 1]");

  std::string fixture_dir = FAIRLOC_FIXTURE_DIR;
  auto* fixtures =
      app.add_subcommand("fixtures", "Check the annotated fixture corpus");
  fixtures->add_option("--dir", fixture_dir, "Fixture directory");

  auto* audit = app.add_subcommand("audit", "Search for profitable misreports");
  audit->add_option("instance", instance_path, "Instance JSON file")
      ->required();
  audit->add_option("--mech", mechanism, "Mechanism");

  SearchConfig config;
  std::optional<int> fixed_n;
  std::optional<double> bound;
  cli::SearchOutputs outputs;
  auto* search = app.add_subcommand("search", "Hill-climb for bad profiles");
  search->add_option("--mech", mechanism, "Mechanism");
  search->add_option("--obj", objective, "Objective");
  search->add_option("--bound", bound, "Upper bound to check against");
  search->add_option("--n", fixed_n, "Fix the number of agents");
  search->add_option("--n-min", config.n_min);
  search->add_option("--n-max", config.n_max);
  search->add_option("--m-min", config.m_min);
  search->add_option("--m-max", config.m_max);
  search->add_option("--iterations", config.iterations);
  search->add_option("--restarts", config.restarts);
  search->add_option("--scale", config.perturbation_scale,
                     "Standard deviation of location moves");
  search->add_option("--report", outputs.report_path, "Report JSON path");
  search->add_option("--plot", outputs.plot_path, "Two-column trace path");

  std::string sweep_dir;
  std::vector<std::string> mechanisms{"MDM", "MGDM", "NRM"};
  std::vector<std::string> objectives{"mtgc", "magc"};
  auto* sweep = app.add_subcommand("sweep", "CSV over a directory of instances");
  sweep->add_option("dir", sweep_dir, "Instance directory")->required();
  sweep->add_option("--mech", mechanisms, "Mechanisms")->delimiter(',');
  sweep->add_option("--obj", objectives, "Objectives")->delimiter(',');

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitClean : cli::kExitUsage;
  }

  try {
    if (*eval) {
      InstanceFile file = LoadInstanceFile(instance_path);
      if (normalize) file.profile = NormalizeToUnitInterval(file.profile);
      return cli::CmdEval(file, MechanismId::Parse(mechanism),
                          ObjectiveSpec::Parse(objective), resolution, json,
                          std::cout);
    }
    if (*fixtures) {
      return cli::CmdFixtures(fixture_dir, filter, json, std::cout, std::cerr);
    }
    if (*audit) {
      const MechanismId id = MechanismId::Parse(mechanism);
      return cli::CmdAudit(LoadInstanceFile(instance_path).profile,
                           MakeMechanism(id), id.Name(), resolution, json,
                           std::cout);
    }
    if (*search) {
      config.seed = seed;
      if (fixed_n) config.n_min = config.n_max = *fixed_n;
      config.m_max = std::min(config.m_max, config.n_max);
      config.m_min = std::min(config.m_min, config.m_max);
      return cli::CmdSearch(MechanismId::Parse(mechanism),
                            ObjectiveSpec::Parse(objective), config, bound,
                            outputs, json, std::cout);
    }
    if (*sweep) {
      return cli::CmdSweep(sweep_dir, ParseMechanisms(mechanisms),
                           ParseObjectives(objectives), std::cout, std::cerr);
    }
  } catch (const fairloc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  }
  return cli::kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return Run(argc, argv); }

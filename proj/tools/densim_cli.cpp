// Copyright 2026 The densim developers
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

#include <CLI11.hpp>

#include "densim/cli.hpp"

namespace {

std::optional<densim::ChannelKind> parse_channel(const std::string& name,
                                                 std::ostream& err) {
  auto kind = densim::channel_kind_from_name(name);
  if (!kind) {
    err << "unknown channel \"" << name
        << "\"; expected one of depolarizing, amplitudedamping, phasedamping, "
           "bitflip, phaseflip, bitphaseflip\n";
  }
  return kind;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"density-matrix quantum simulator"};
  app.require_subcommand(1);
  bool sparse = false;
  app.add_flag("--sparse", sparse, "use the sparse matrix backend");

  // deutsch
  auto* deutsch_cmd = app.add_subcommand("deutsch", "run the Deutsch circuit");
  int oracle_id = 0;
  deutsch_cmd->add_option("--oracle", oracle_id, "oracle id (1-4)")->required();

  // grover
  auto* grover_cmd = app.add_subcommand("grover", "run Grover's search");
  int grover_qubits = 0;
  std::uint64_t grover_target = 0;
  std::string grover_channel;
  double grover_p = 0.0;
  bool grover_p_given = false;
  int grover_samples = 0;
  std::uint64_t grover_seed = 0;
  bool grover_seed_given = false;
  grover_cmd->add_option("--qubits", grover_qubits, "working register size")
      ->required();
  grover_cmd->add_option("--target", grover_target, "marked element")->required();
  grover_cmd->add_option("--channel", grover_channel,
                         "noise channel applied after each iteration");
  grover_cmd->add_option("--p", grover_p, "channel parameter in [0,1]")
      ->each([&](const std::string&) { grover_p_given = true; });
  grover_cmd->add_option("--samples", grover_samples,
                         "number of outcomes to draw from the distribution");
  grover_cmd->add_option("--seed", grover_seed, "seed for outcome sampling")
      ->each([&](const std::string&) { grover_seed_given = true; });

  // sweep
  auto* sweep_cmd =
      app.add_subcommand("sweep", "noisy-Grover sweep over a parameter grid");
  std::vector<int> sweep_qubits;
  std::string sweep_channel;
  densim::cli::SweepConfig config;
  sweep_cmd->add_option("--qubits", sweep_qubits, "qubit sizes (comma separated)")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--channel", sweep_channel, "noise channel name")
      ->required();
  sweep_cmd->add_option("--p-start", config.p_start, "grid start")->required();
  sweep_cmd->add_option("--p-end", config.p_end, "grid end")->required();
  sweep_cmd->add_option("--steps", config.steps, "number of grid points")
      ->required();
  sweep_cmd->add_option("--out", config.output_path, "output CSV path")
      ->required();
  std::uint64_t sweep_seed = 0;
  bool sweep_seed_given = false;
  sweep_cmd->add_option("--seed", sweep_seed, "session seed")
      ->each([&](const std::string&) { sweep_seed_given = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return densim::cli::kExitUsage;
  }

  if (deutsch_cmd->parsed()) {
    return densim::cli::cmd_deutsch(oracle_id, sparse, std::cout, std::cerr);
  }

  if (grover_cmd->parsed()) {
    std::optional<densim::NoiseSpec> noise;
    if (!grover_channel.empty()) {
      auto kind = parse_channel(grover_channel, std::cerr);
      if (!kind) return densim::cli::kExitUsage;
      if (!grover_p_given) {
        std::cerr << "grover: --channel requires --p\n";
        return densim::cli::kExitUsage;
      }
      noise = densim::NoiseSpec{*kind, grover_p};
    } else if (grover_p_given) {
      std::cerr << "grover: --p requires --channel\n";
      return densim::cli::kExitUsage;
    }
    std::optional<std::uint64_t> seed;
    if (grover_seed_given) seed = grover_seed;
    return densim::cli::cmd_grover(grover_qubits, grover_target, noise,
                                   grover_samples, seed, sparse, std::cout,
                                   std::cerr);
  }

  auto kind = parse_channel(sweep_channel, std::cerr);
  if (!kind) return densim::cli::kExitUsage;
  config.qubit_sizes = sweep_qubits;
  config.kind = *kind;
  config.sparse = sparse;
  if (sweep_seed_given) config.seed = sweep_seed;
  return densim::cli::cmd_sweep(config, std::cerr);
}

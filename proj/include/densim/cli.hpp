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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "densim/algorithms.hpp"
#include "densim/channels.hpp"

namespace densim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Shortest decimal representation limited to 12 significant digits.
std::string format_number(double v);

/// MSB-first bit string of a basis index over n qubits.
std::string bitstring(std::uint64_t index, int n);

/// Noisy-Grover parameter sweep over qubit sizes and a channel-parameter grid.
/// A single-point grid (steps == 1) requires p_start == p_end; a proper grid
/// (steps >= 2) requires p_start < p_end.
struct SweepConfig {
  std::vector<int> qubit_sizes;
  ChannelKind kind = ChannelKind::depolarizing;
  double p_start = 0.0;
  double p_end = 1.0;
  int steps = 2;
  bool sparse = false;
  std::optional<std::uint64_t> seed;
  std::string output_path;
};

/// Runs the Deutsch circuit and prints one "index, bitstring, probability"
/// row per basis state of the measured qubit.
int cmd_deutsch(int oracle_id, bool sparse, std::ostream& out, std::ostream& err);

/// Runs Grover's search, printing the full measurement distribution as CSV
/// followed by a "success_prob=" summary line; optionally draws `samples`
/// outcomes using the session generator.
int cmd_grover(int n_qubits, std::uint64_t target,
               const std::optional<NoiseSpec>& noise, int samples,
               std::optional<std::uint64_t> seed, bool sparse, std::ostream& out,
               std::ostream& err);

/// Writes the sweep results as a deterministic CSV file with header
/// "qubits,p,success_prob", rows ordered by (qubits asc, p asc).
int cmd_sweep(const SweepConfig& config, std::ostream& err);

}  // namespace densim::cli

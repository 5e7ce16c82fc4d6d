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

#include "densim/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "densim/session.hpp"

namespace densim::cli {

namespace {

/// Probability formatted like format_number but always carrying a decimal
/// point, so deterministic 0/1 outcomes read as "0.0" and "1.0".
std::string format_probability(double v) {
  std::string s = format_number(v);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos) {
    s += ".0";
  }
  return s;
}

double grid_point(const SweepConfig& config, int i) {
  if (config.steps == 1) return config.p_start;
  return config.p_start +
         (config.p_end - config.p_start) * i / (config.steps - 1);
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string bitstring(std::uint64_t index, int n) {
  std::string bits(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((index >> (n - 1 - i)) & 1u) bits[static_cast<std::size_t>(i)] = '1';
  }
  return bits;
}

int cmd_deutsch(int oracle_id, bool sparse, std::ostream& out, std::ostream& err) {
  if (oracle_id < 1 || oracle_id > 4) {
    err << "deutsch: oracle must be one of 1..4 (got " << oracle_id << ")\n";
    return kExitUsage;
  }
  try {
    const ProbabilityDistribution dist = deutsch(oracle_id, sparse);
    for (std::size_t i = 0; i < dist.size(); ++i) {
      out << i << ", " << bitstring(i, 1) << ", " << format_probability(dist[i])
          << "\n";
    }
  } catch (const std::exception& e) {
    err << "deutsch: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

int cmd_grover(int n_qubits, std::uint64_t target,
               const std::optional<NoiseSpec>& noise, int samples,
               std::optional<std::uint64_t> seed, bool sparse, std::ostream& out,
               std::ostream& err) {
  if (n_qubits < 1 || n_qubits > 10) {
    err << "grover: --qubits must be in 1..10 (got " << n_qubits << ")\n";
    return kExitUsage;
  }
  if (target >= (std::uint64_t{1} << n_qubits)) {
    err << "grover: --target " << target << " out of range for " << n_qubits
        << " qubits\n";
    return kExitUsage;
  }
  if (noise && (noise->p < 0.0 || noise->p > 1.0)) {
    err << "grover: --p must lie in [0,1]\n";
    return kExitUsage;
  }
  if (samples < 0) {
    err << "grover: --samples must be nonnegative\n";
    return kExitUsage;
  }
  try {
    Session session(sparse, seed);
    const ProbabilityDistribution dist =
        grover(OracleSpec{target, n_qubits}, noise, session);
    out << "index,bitstring,probability\n";
    for (std::size_t i = 0; i < dist.size(); ++i) {
      out << i << "," << bitstring(i, n_qubits) << "," << format_number(dist[i])
          << "\n";
    }
    char summary[64];
    std::snprintf(summary, sizeof(summary), "success_prob=%.6f",
                  dist[static_cast<std::size_t>(target)]);
    out << summary << "\n";
    if (samples > 0) {
      out << "sample,index,bitstring\n";
      for (int s = 0; s < samples; ++s) {
        const std::uint64_t drawn = session.collapse(dist);
        out << s << "," << drawn << "," << bitstring(drawn, n_qubits) << "\n";
      }
    }
  } catch (const std::exception& e) {
    err << "grover: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

int cmd_sweep(const SweepConfig& config, std::ostream& err) {
  if (config.qubit_sizes.empty()) {
    err << "sweep: --qubits list must be nonempty\n";
    return kExitUsage;
  }
  for (int n : config.qubit_sizes) {
    if (n < 1 || n > 8) {
      err << "sweep: qubit sizes must lie in 1..8 (got " << n << ")\n";
      return kExitUsage;
    }
  }
  if (!(config.p_start >= 0.0 && config.p_start <= config.p_end &&
        config.p_end <= 1.0)) {
    err << "sweep: require 0 <= p-start <= p-end <= 1\n";
    return kExitUsage;
  }
  if (config.steps < 1) {
    err << "sweep: --steps must be positive\n";
    return kExitUsage;
  }
  if (config.steps == 1 && config.p_start != config.p_end) {
    err << "sweep: a single-step grid requires p-start == p-end\n";
    return kExitUsage;
  }
  if (config.steps >= 2 && !(config.p_start < config.p_end)) {
    err << "sweep: p-start must be below p-end when steps >= 2\n";
    return kExitUsage;
  }
  if (config.output_path.empty()) {
    err << "sweep: --out path must be given\n";
    return kExitUsage;
  }

  std::vector<int> sizes = config.qubit_sizes;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  std::ostringstream rows;
  rows << "qubits,p,success_prob\n";
  try {
    for (int n : sizes) {
      // The sweep searches for the all-ones element; success probability is
      // invariant under this choice.
      const std::uint64_t target = (std::uint64_t{1} << n) - 1;
      for (int i = 0; i < config.steps; ++i) {
        const double p = grid_point(config, i);
        Session session(config.sparse, config.seed);
        const ProbabilityDistribution dist = grover(
            OracleSpec{target, n}, NoiseSpec{config.kind, p}, session);
        rows << n << "," << format_number(p) << ","
             << format_number(dist[static_cast<std::size_t>(target)]) << "\n";
      }
    }
  } catch (const std::exception& e) {
    err << "sweep: " << e.what() << "\n";
    return kExitRuntime;
  }

  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "sweep: cannot open output file " << config.output_path << "\n";
    return kExitRuntime;
  }
  file << rows.str();
  file.flush();
  if (!file) {
    err << "sweep: failed writing " << config.output_path << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace densim::cli

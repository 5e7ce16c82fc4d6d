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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "densim/matrix.hpp"
#include "densim/registers.hpp"
#include "densim/states.hpp"

namespace densim {

/// Set of Kraus operators K_i defining the evolution
/// rho -> sum_i K_i rho K_i^dagger. A valid channel satisfies the
/// completeness relation sum_i K_i^dagger K_i = I (see ischannel).
struct KrausSet {
  std::vector<CMatrix> operators;

  /// Dimension of the operators; throws when empty or non-uniform.
  Eigen::Index dim() const;
};

enum class ChannelKind {
  depolarizing,
  amplitudedamping,
  phasedamping,
  bitflip,
  phaseflip,
  bitphaseflip,
};

std::string_view channel_name(ChannelKind kind);
std::optional<ChannelKind> channel_kind_from_name(std::string_view name);

/// One-qubit Kraus set for the named channel with parameter p in [0,1]:
///   depolarizing:     rho -> (1-p)*rho + p*I/2
///   bitflip:          {sqrt(1-p)*I, sqrt(p)*X}
///   phaseflip:        {sqrt(1-p)*I, sqrt(p)*Z}
///   bitphaseflip:     {sqrt(1-p)*I, sqrt(p)*Y}
///   amplitudedamping: {[[1,0],[0,sqrt(1-p)]], [[0,sqrt(p)],[0,0]]}
///   phasedamping:     {[[1,0],[0,sqrt(1-p)]], [[0,0],[0,sqrt(p)]]}
KrausSet channel(ChannelKind kind, double p);

/// Extension of a one-qubit channel to `size` qubits, acting independently on
/// every qubit of `target` and trivially elsewhere. The result is the product
/// set of the per-qubit embeddings (|k|^|target| operators).
KrausSet localchannel(const KrausSet& k, const QuantumRegister& target, int size);

/// Applies the channel: rho -> sum_i K_i rho K_i^dagger.
DensityMatrix applychannel(const KrausSet& k, const DensityMatrix& rho);

/// True iff ||sum_i K_i^dagger K_i - I||_max <= kSpectralTol.
bool ischannel(const KrausSet& k);

}  // namespace densim

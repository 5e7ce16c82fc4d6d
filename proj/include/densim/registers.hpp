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
#include <initializer_list>
#include <vector>

namespace densim {

/// Ordered list of distinct 1-based qubit indices addressing part of the
/// quantum heap. Qubit 1 is the first tensor factor and the most significant
/// bit of basis-state indices.
class QuantumRegister {
 public:
  QuantumRegister() = default;
  QuantumRegister(std::initializer_list<int> qubits);
  explicit QuantumRegister(std::vector<int> qubits);

  /// Register of `count` consecutive qubits starting at `first`.
  static QuantumRegister range(int first, int count);

  std::size_t size() const { return qubits_.size(); }
  bool empty() const { return qubits_.empty(); }
  const std::vector<int>& qubits() const { return qubits_; }
  int operator[](std::size_t i) const { return qubits_[i]; }

  bool contains(int qubit) const;
  bool disjoint_with(const QuantumRegister& other) const;
  /// True when every index lies in {1..size}.
  bool within(int size) const;
  std::vector<int> ascending() const;

 private:
  std::vector<int> qubits_;
};

/// Union of two disjoint registers, in ascending qubit order.
QuantumRegister merge_disjoint(const QuantumRegister& a, const QuantumRegister& b);

}  // namespace densim

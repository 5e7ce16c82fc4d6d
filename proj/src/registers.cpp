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

#include "densim/registers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace densim {

namespace {

void check_indices(const std::vector<int>& qubits) {
  std::unordered_set<int> seen;
  for (int q : qubits) {
    if (q < 1) {
      throw std::invalid_argument("register qubit index " + std::to_string(q) +
                                  " is not positive");
    }
    if (!seen.insert(q).second) {
      throw std::invalid_argument("register qubit index " + std::to_string(q) +
                                  " is repeated");
    }
  }
}

}  // namespace

QuantumRegister::QuantumRegister(std::initializer_list<int> qubits)
    : qubits_(qubits) {
  check_indices(qubits_);
}

QuantumRegister::QuantumRegister(std::vector<int> qubits)
    : qubits_(std::move(qubits)) {
  check_indices(qubits_);
}

QuantumRegister QuantumRegister::range(int first, int count) {
  if (count < 0) throw std::invalid_argument("register size must be nonnegative");
  std::vector<int> qs(static_cast<std::size_t>(count));
  std::iota(qs.begin(), qs.end(), first);
  return QuantumRegister(std::move(qs));
}

bool QuantumRegister::contains(int qubit) const {
  return std::find(qubits_.begin(), qubits_.end(), qubit) != qubits_.end();
}

bool QuantumRegister::disjoint_with(const QuantumRegister& other) const {
  for (int q : qubits_) {
    if (other.contains(q)) return false;
  }
  return true;
}

bool QuantumRegister::within(int size) const {
  return std::all_of(qubits_.begin(), qubits_.end(),
                     [size](int q) { return q >= 1 && q <= size; });
}

std::vector<int> QuantumRegister::ascending() const {
  std::vector<int> qs = qubits_;
  std::sort(qs.begin(), qs.end());
  return qs;
}

QuantumRegister merge_disjoint(const QuantumRegister& a, const QuantumRegister& b) {
  if (!a.disjoint_with(b)) {
    throw std::invalid_argument("merge_disjoint: registers overlap");
  }
  std::vector<int> qs = a.qubits();
  qs.insert(qs.end(), b.qubits().begin(), b.qubits().end());
  std::sort(qs.begin(), qs.end());
  return QuantumRegister(std::move(qs));
}

}  // namespace densim

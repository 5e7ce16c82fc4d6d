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
#include <set>

#include "densim/gates.hpp"
#include "densim/registers.hpp"

namespace densim {

/// Numerical value of a subset x of register r: each qubit of x contributes
/// 2^p where p is its 0-based position in the ascending ordering of r (the
/// lowest qubit index is the least significant bit).
std::uint64_t qvalueof(const QuantumRegister& x, const QuantumRegister& r);

/// Predicate over a control register, held extensionally as the set T of
/// register values (in qvalueof convention) that satisfy it. The complement
/// F = {0..2^m-1} \ T is the else-branch set, so T and F cover all values.
class QExpr {
 public:
  QExpr(QuantumRegister control, std::set<std::uint64_t> satisfying);

  /// Control register, in ascending qubit order.
  const QuantumRegister& control() const { return control_; }
  const std::set<std::uint64_t>& satisfying() const { return satisfying_; }
  bool satisfied_by(std::uint64_t value) const {
    return satisfying_.count(value) != 0;
  }
  /// Number of register values, 2^m for m control qubits.
  std::uint64_t value_count() const {
    return std::uint64_t{1} << control_.size();
  }

 private:
  QuantumRegister control_;
  std::set<std::uint64_t> satisfying_;
};

enum class Rel { eq, ne, ge, gt, le, lt };

/// Expression [r] op n over the register value (qvalueof convention).
QExpr qrel(Rel op, const QuantumRegister& r, std::int64_t n);

/// Expression: [r] is a member of `values` (values outside {0..2^m-1} are ignored).
QExpr qrin(const QuantumRegister& r, const std::set<std::uint64_t>& values);

/// Logical conjunction/disjunction of expressions over disjoint control registers.
QExpr qrand(const QExpr& e1, const QExpr& e2);
QExpr qror(const QExpr& e1, const QExpr& e2);

/// One branch of a conditional: a one-qubit gate and the register it acts on.
struct ConditionalBranch {
  Gate gate;
  QuantumRegister target;
};

/// Generalized quantum if-then-else: for every basis value v of the control
/// register, applies ifpart.gate to every qubit of ifpart.target when v
/// satisfies e, and elsepart.gate to elsepart.target otherwise. Identity on
/// all other qubits; control qubits are never modified.
Gate qif(const QExpr& e, const ConditionalBranch& ifpart,
         const ConditionalBranch& elsepart, int size);

/// Quantum pointer: the control register's value v selects which target
/// qubit (the one at ascending position v) receives the gate g. Requires
/// |target| == 2^|control|.
Gate qpointer(const Gate& g, const QuantumRegister& control,
              const QuantumRegister& target, int size);

}  // namespace densim

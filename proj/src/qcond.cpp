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

#include "densim/qcond.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace densim {

namespace {

constexpr std::size_t kMaxControlQubits = 20;

/// Positions (0-based, within the ascending order of `joint`) of the qubits
/// of `part`; part must be a subregister of joint.
std::vector<int> positions_in(const QuantumRegister& part,
                              const std::vector<int>& joint_ascending) {
  std::vector<int> pos;
  pos.reserve(part.size());
  for (int q : part.ascending()) {
    auto it = std::find(joint_ascending.begin(), joint_ascending.end(), q);
    if (it == joint_ascending.end()) {
      throw std::invalid_argument("register is not contained in the joint register");
    }
    pos.push_back(static_cast<int>(it - joint_ascending.begin()));
  }
  return pos;
}

/// Restriction of a joint register value to a subregister: collect the bits
/// at the subregister's positions, keeping the qvalueof bit order.
std::uint64_t restrict_value(std::uint64_t joint_value,
                             const std::vector<int>& positions) {
  std::uint64_t out = 0;
  for (std::size_t p = 0; p < positions.size(); ++p) {
    if ((joint_value >> positions[p]) & 1u) out |= std::uint64_t{1} << p;
  }
  return out;
}

/// Register of control qubits whose bit is 0 in `value` (the qubits that must
/// be negated so that the all-ones control condition matches `value`).
QuantumRegister zero_bit_qubits(const QuantumRegister& control_ascending,
                                std::uint64_t value) {
  std::vector<int> qs;
  for (std::size_t p = 0; p < control_ascending.size(); ++p) {
    if (((value >> p) & 1u) == 0) qs.push_back(control_ascending[p]);
  }
  return QuantumRegister(std::move(qs));
}

void check_branch_target(const QuantumRegister& control,
                         const QuantumRegister& target, int size,
                         const char* what) {
  if (!target.within(size)) {
    throw std::invalid_argument(std::string(what) +
                                ": target register out of range");
  }
  if (!control.disjoint_with(target)) {
    throw std::invalid_argument(std::string(what) +
                                ": target overlaps the control register");
  }
}

}  // namespace

std::uint64_t qvalueof(const QuantumRegister& x, const QuantumRegister& r) {
  const std::vector<int> r_asc = r.ascending();
  for (int q : x.qubits()) {
    if (!r.contains(q)) {
      throw std::invalid_argument("qvalueof: qubit " + std::to_string(q) +
                                  " is not part of the register");
    }
  }
  const std::vector<int> pos = positions_in(x, r_asc);
  std::uint64_t value = 0;
  for (int p : pos) value |= std::uint64_t{1} << p;
  return value;
}

QExpr::QExpr(QuantumRegister control, std::set<std::uint64_t> satisfying)
    : control_(QuantumRegister(control.ascending())),
      satisfying_(std::move(satisfying)) {
  if (control_.empty()) {
    throw std::invalid_argument("QExpr: control register must be nonempty");
  }
  if (control_.size() > kMaxControlQubits) {
    throw std::invalid_argument("QExpr: control register above supported size");
  }
  if (!satisfying_.empty() && *satisfying_.rbegin() >= value_count()) {
    throw std::invalid_argument("QExpr: satisfying value " +
                                std::to_string(*satisfying_.rbegin()) +
                                " out of range");
  }
}

QExpr qrel(Rel op, const QuantumRegister& r, std::int64_t n) {
  if (r.empty() || r.size() > kMaxControlQubits) {
    throw std::invalid_argument("qrel: register size unsupported");
  }
  const std::uint64_t count = std::uint64_t{1} << r.size();
  std::set<std::uint64_t> values;
  for (std::uint64_t v = 0; v < count; ++v) {
    const auto sv = static_cast<std::int64_t>(v);
    bool keep = false;
    switch (op) {
      case Rel::eq: keep = sv == n; break;
      case Rel::ne: keep = sv != n; break;
      case Rel::ge: keep = sv >= n; break;
      case Rel::gt: keep = sv > n; break;
      case Rel::le: keep = sv <= n; break;
      case Rel::lt: keep = sv < n; break;
    }
    if (keep) values.insert(v);
  }
  return QExpr(r, std::move(values));
}

QExpr qrin(const QuantumRegister& r, const std::set<std::uint64_t>& values) {
  if (r.empty() || r.size() > kMaxControlQubits) {
    throw std::invalid_argument("qrin: register size unsupported");
  }
  const std::uint64_t count = std::uint64_t{1} << r.size();
  std::set<std::uint64_t> kept;
  for (std::uint64_t v : values) {
    if (v < count) kept.insert(v);
  }
  return QExpr(r, std::move(kept));
}

namespace {

QExpr combine(const QExpr& e1, const QExpr& e2, bool conjunction) {
  if (!e1.control().disjoint_with(e2.control())) {
    throw std::invalid_argument("qrand/qror: control registers overlap");
  }
  const QuantumRegister joint = merge_disjoint(e1.control(), e2.control());
  const std::vector<int> joint_asc = joint.ascending();
  const std::vector<int> pos1 = positions_in(e1.control(), joint_asc);
  const std::vector<int> pos2 = positions_in(e2.control(), joint_asc);
  const std::uint64_t count = std::uint64_t{1} << joint.size();
  std::set<std::uint64_t> values;
  for (std::uint64_t v = 0; v < count; ++v) {
    const bool s1 = e1.satisfied_by(restrict_value(v, pos1));
    const bool s2 = e2.satisfied_by(restrict_value(v, pos2));
    if (conjunction ? (s1 && s2) : (s1 || s2)) values.insert(v);
  }
  return QExpr(joint, std::move(values));
}

}  // namespace

QExpr qrand(const QExpr& e1, const QExpr& e2) { return combine(e1, e2, true); }
QExpr qror(const QExpr& e1, const QExpr& e2) { return combine(e1, e2, false); }

Gate qif(const QExpr& e, const ConditionalBranch& ifpart,
         const ConditionalBranch& elsepart, int size) {
  if (size < 1) throw std::invalid_argument("qif: size must be positive");
  if (!e.control().within(size)) {
    throw std::invalid_argument("qif: control register out of range");
  }
  check_branch_target(e.control(), ifpart.target, size, "qif");
  check_branch_target(e.control(), elsepart.target, size, "qif");

  // One conjugated controlled gate per control value: X gates flip the
  // zero bits of the pattern so the all-ones condition matches exactly that
  // value. The factors act on orthogonal control subspaces and commute.
  const Gate not_gate = pauli(Axis::x);
  CMatrix total = CMatrix::identity(Eigen::Index{1} << size);
  for (std::uint64_t v = 0; v < e.value_count(); ++v) {
    const ConditionalBranch& branch = e.satisfied_by(v) ? ifpart : elsepart;
    const QuantumRegister zeros = zero_bit_qubits(e.control(), v);
    const CMatrix controlled =
        controlledgate(branch.gate, e.control(), branch.target, size).matrix();
    if (zeros.empty()) {
      total = controlled * total;
    } else {
      const CMatrix flips = productgate(not_gate, zeros, size).matrix();
      total = flips * controlled * flips * total;
    }
  }
  return Gate(std::move(total));
}

Gate qpointer(const Gate& g, const QuantumRegister& control,
              const QuantumRegister& target, int size) {
  if (size < 1) throw std::invalid_argument("qpointer: size must be positive");
  if (!control.within(size) || !target.within(size)) {
    throw std::invalid_argument("qpointer: register out of range");
  }
  if (!control.disjoint_with(target)) {
    throw std::invalid_argument("qpointer: control and target overlap");
  }
  if (control.size() > kMaxControlQubits ||
      target.size() != (std::size_t{1} << control.size())) {
    throw std::invalid_argument(
        "qpointer: target size must be 2^(control size), got " +
        std::to_string(target.size()) + " targets for " +
        std::to_string(control.size()) + " controls");
  }
  const QuantumRegister control_asc(control.ascending());
  const std::vector<int> target_asc = target.ascending();
  const Gate not_gate = pauli(Axis::x);
  CMatrix total = CMatrix::identity(Eigen::Index{1} << size);
  const std::uint64_t count = std::uint64_t{1} << control.size();
  for (std::uint64_t v = 0; v < count; ++v) {
    const QuantumRegister selected{target_asc[static_cast<std::size_t>(v)]};
    const QuantumRegister zeros = zero_bit_qubits(control_asc, v);
    const CMatrix controlled =
        controlledgate(g, control_asc, selected, size).matrix();
    if (zeros.empty()) {
      total = controlled * total;
    } else {
      const CMatrix flips = productgate(not_gate, zeros, size).matrix();
      total = flips * controlled * flips * total;
    }
  }
  return Gate(std::move(total));
}

}  // namespace densim

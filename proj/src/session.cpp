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

#include "densim/session.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace densim {

namespace {

constexpr double kProbClampTol = 1e-12;
constexpr double kProbSumTol = 1e-9;

/// Builds a global basis index from sub-indices over two disjoint qubit
/// position lists (both MSB-first within their own ordering).
std::uint64_t compose_index(std::uint64_t kept, const std::vector<int>& keep,
                            std::uint64_t traced, const std::vector<int>& traced_qs,
                            int n) {
  std::uint64_t out = 0;
  for (std::size_t p = 0; p < keep.size(); ++p) {
    if ((kept >> (keep.size() - 1 - p)) & 1u) {
      out |= std::uint64_t{1} << (n - keep[p]);
    }
  }
  for (std::size_t p = 0; p < traced_qs.size(); ++p) {
    if ((traced >> (traced_qs.size() - 1 - p)) & 1u) {
      out |= std::uint64_t{1} << (n - traced_qs[p]);
    }
  }
  return out;
}

}  // namespace

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) {
    throw std::invalid_argument("ProbabilityDistribution: empty");
  }
  double sum = 0.0;
  for (double& p : probabilities_) {
    if (p < -kProbClampTol || !std::isfinite(p)) {
      throw std::invalid_argument("ProbabilityDistribution: invalid entry " +
                                  std::to_string(p));
    }
    if (p < 0.0) p = 0.0;
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbSumTol) {
    throw std::invalid_argument("ProbabilityDistribution: sum " +
                                std::to_string(sum) + " is not 1");
  }
}

DensityMatrix ptrace(const DensityMatrix& rho, const QuantumRegister& target) {
  const int n = rho.qubits();
  if (!target.within(n)) {
    throw std::invalid_argument("ptrace: target register out of range");
  }
  if (target.empty()) return rho;

  const std::vector<int> traced = target.ascending();
  std::vector<int> keep;
  for (int q = 1; q <= n; ++q) {
    if (!target.contains(q)) keep.push_back(q);
  }
  const Eigen::Index keep_dim = Eigen::Index{1} << keep.size();
  const Eigen::Index traced_dim = Eigen::Index{1} << traced.size();

  const Eigen::MatrixXcd full = rho.matrix().dense();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(keep_dim, keep_dim);
  for (Eigen::Index a = 0; a < keep_dim; ++a) {
    for (Eigen::Index b = 0; b < keep_dim; ++b) {
      cxd sum{0.0, 0.0};
      for (Eigen::Index t = 0; t < traced_dim; ++t) {
        const auto row = compose_index(static_cast<std::uint64_t>(a), keep,
                                       static_cast<std::uint64_t>(t), traced, n);
        const auto col = compose_index(static_cast<std::uint64_t>(b), keep,
                                       static_cast<std::uint64_t>(t), traced, n);
        sum += full(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
      }
      out(a, b) = sum;
    }
  }
  return DensityMatrix(CMatrix(std::move(out), rho.matrix().backend()));
}

std::uint64_t collapse(const ProbabilityDistribution& d, std::mt19937_64& rng) {
  // Uniform double in [0,1) from the top 53 bits; portable across platforms.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  double acc = 0.0;
  std::uint64_t last_nonzero = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > 0.0) last_nonzero = i;
    acc += d[i];
    if (u < acc) return i;
  }
  return last_nonzero;
}

Session::Session(bool sparse, std::optional<std::uint64_t> seed)
    : state_(CMatrix::identity(1, sparse ? Backend::sparse : Backend::dense)),
      sparse_(sparse),
      rng_(seed.value_or(std::random_device{}())) {}

RegisterId Session::newregister(int size) {
  if (size < 1) throw std::invalid_argument("newregister: size must be positive");
  const Eigen::Index dim = Eigen::Index{1} << size;
  // |0..0><0..0| on the new qubits, appended as the least significant block.
  const CMatrix zeros = CMatrix::from_triplets(dim, dim, {{0, 0, cxd{1.0, 0.0}}},
                                               backend());
  state_ = kron(state_, zeros);
  const RegisterId id{next_id_++};
  registers_.emplace_back(id, QuantumRegister::range(qubit_count_ + 1, size));
  qubit_count_ += size;
  return id;
}

void Session::clearregister(RegisterId id) {
  const QuantumRegister reg = find(id);
  state_ = ptrace(DensityMatrix(state_), reg).matrix();

  // Renumber the surviving qubits contiguously, preserving relative order.
  std::map<int, int> remap;
  int next = 1;
  for (int q = 1; q <= qubit_count_; ++q) {
    if (!reg.contains(q)) remap[q] = next++;
  }
  std::vector<std::pair<RegisterId, QuantumRegister>> remaining;
  remaining.reserve(registers_.size() - 1);
  for (const auto& [rid, rreg] : registers_) {
    if (rid == id) continue;
    std::vector<int> qs;
    qs.reserve(rreg.size());
    for (int q : rreg.qubits()) qs.push_back(remap.at(q));
    remaining.emplace_back(rid, QuantumRegister(std::move(qs)));
  }
  registers_ = std::move(remaining);
  qubit_count_ -= static_cast<int>(reg.size());
}

void Session::evolve(const Gate& u) {
  if (u.qubits() != qubit_count_) {
    throw std::invalid_argument("evolve: gate acts on " +
                                std::to_string(u.qubits()) + " qubits, heap has " +
                                std::to_string(qubit_count_));
  }
  const CMatrix um = u.matrix().to_backend(backend());
  state_ = um * state_ * dagger(um);
}

void Session::applychannel(const KrausSet& k) {
  DensityMatrix next = densim::applychannel(k, DensityMatrix(state_));
  state_ = next.matrix().to_backend(backend());
}

ProbabilityDistribution Session::measurecompbasis() {
  if (qubit_count_ == 0) {
    throw std::invalid_argument("measurecompbasis: no qubits allocated");
  }
  const Eigen::VectorXcd diag = state_.diagonal();
  std::vector<double> probs(static_cast<std::size_t>(diag.size()));
  std::vector<Eigen::Triplet<cxd>> trips;
  trips.reserve(probs.size());
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    probs[static_cast<std::size_t>(i)] = diag(i).real();
    if (diag(i) != cxd{0.0, 0.0}) trips.emplace_back(i, i, diag(i));
  }
  // Measurement dephases the heap: off-diagonal terms are discarded.
  state_ = CMatrix::from_triplets(diag.size(), diag.size(), trips, backend());
  return ProbabilityDistribution(std::move(probs));
}

std::uint64_t Session::collapse(const ProbabilityDistribution& d) {
  return densim::collapse(d, rng_);
}

DensityMatrix Session::getstate() const { return DensityMatrix(state_); }

QuantumRegister Session::qureg(RegisterId id) const { return find(id); }

void Session::set_sparse(bool on) {
  if (on == sparse_) return;
  sparse_ = on;
  state_ = state_.to_backend(backend());
}

void Session::validate() const {
  if (state_.rows() != (Eigen::Index{1} << qubit_count_)) {
    throw std::logic_error("session: state dimension does not match qubit count");
  }
  std::vector<bool> used(static_cast<std::size_t>(qubit_count_), false);
  for (const auto& [id, reg] : registers_) {
    for (int q : reg.qubits()) {
      if (q < 1 || q > qubit_count_) {
        throw std::logic_error("session: register qubit out of range");
      }
      if (used[static_cast<std::size_t>(q - 1)]) {
        throw std::logic_error("session: registers overlap");
      }
      used[static_cast<std::size_t>(q - 1)] = true;
    }
  }
  DensityMatrix(state_).validate();
}

const QuantumRegister& Session::find(RegisterId id) const {
  for (const auto& [rid, reg] : registers_) {
    if (rid == id) return reg;
  }
  throw std::invalid_argument("session: unknown register id " +
                              std::to_string(id.value));
}

}  // namespace densim

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

#include "densim/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace densim {

namespace {

Eigen::MatrixXcd m2(cxd a, cxd b, cxd c, cxd d) {
  Eigen::MatrixXcd m(2, 2);
  m << a, b, c, d;
  return m;
}

/// I_left (x) K (x) I_right placing a one-qubit operator on qubit q.
CMatrix embed_one_qubit(const CMatrix& k, int q, int size) {
  const Eigen::Index left = Eigen::Index{1} << (q - 1);
  const Eigen::Index right = Eigen::Index{1} << (size - q);
  return kron(kron(CMatrix::identity(left), k), CMatrix::identity(right));
}

}  // namespace

Eigen::Index KrausSet::dim() const {
  if (operators.empty()) {
    throw std::invalid_argument("KrausSet: no operators");
  }
  const Eigen::Index d = operators.front().rows();
  for (const CMatrix& op : operators) {
    if (op.rows() != d || op.cols() != d) {
      throw std::invalid_argument("KrausSet: operators have ragged dimensions");
    }
  }
  return d;
}

std::string_view channel_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::depolarizing: return "depolarizing";
    case ChannelKind::amplitudedamping: return "amplitudedamping";
    case ChannelKind::phasedamping: return "phasedamping";
    case ChannelKind::bitflip: return "bitflip";
    case ChannelKind::phaseflip: return "phaseflip";
    case ChannelKind::bitphaseflip: return "bitphaseflip";
  }
  return "unknown";
}

std::optional<ChannelKind> channel_kind_from_name(std::string_view name) {
  for (ChannelKind kind :
       {ChannelKind::depolarizing, ChannelKind::amplitudedamping,
        ChannelKind::phasedamping, ChannelKind::bitflip, ChannelKind::phaseflip,
        ChannelKind::bitphaseflip}) {
    if (name == channel_name(kind)) return kind;
  }
  return std::nullopt;
}

KrausSet channel(ChannelKind kind, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("channel: parameter " + std::to_string(p) +
                                " outside [0,1]");
  }
  KrausSet out;
  switch (kind) {
    case ChannelKind::depolarizing: {
      const double keep = std::sqrt(1.0 - 3.0 * p / 4.0);
      const double mix = std::sqrt(p / 4.0);
      out.operators.push_back(CMatrix(m2(keep, 0, 0, keep)));
      out.operators.push_back(CMatrix(m2(0, mix, mix, 0)));
      out.operators.push_back(CMatrix(m2(0, cxd{0, -mix}, cxd{0, mix}, 0)));
      out.operators.push_back(CMatrix(m2(mix, 0, 0, -mix)));
      break;
    }
    case ChannelKind::bitflip: {
      const double keep = std::sqrt(1.0 - p);
      const double flip = std::sqrt(p);
      out.operators.push_back(CMatrix(m2(keep, 0, 0, keep)));
      out.operators.push_back(CMatrix(m2(0, flip, flip, 0)));
      break;
    }
    case ChannelKind::phaseflip: {
      const double keep = std::sqrt(1.0 - p);
      const double flip = std::sqrt(p);
      out.operators.push_back(CMatrix(m2(keep, 0, 0, keep)));
      out.operators.push_back(CMatrix(m2(flip, 0, 0, -flip)));
      break;
    }
    case ChannelKind::bitphaseflip: {
      const double keep = std::sqrt(1.0 - p);
      const double flip = std::sqrt(p);
      out.operators.push_back(CMatrix(m2(keep, 0, 0, keep)));
      out.operators.push_back(CMatrix(m2(0, cxd{0, -flip}, cxd{0, flip}, 0)));
      break;
    }
    case ChannelKind::amplitudedamping: {
      out.operators.push_back(CMatrix(m2(1, 0, 0, std::sqrt(1.0 - p))));
      out.operators.push_back(CMatrix(m2(0, std::sqrt(p), 0, 0)));
      break;
    }
    case ChannelKind::phasedamping: {
      out.operators.push_back(CMatrix(m2(1, 0, 0, std::sqrt(1.0 - p))));
      out.operators.push_back(CMatrix(m2(0, 0, 0, std::sqrt(p))));
      break;
    }
  }
  return out;
}

KrausSet localchannel(const KrausSet& k, const QuantumRegister& target, int size) {
  if (size < 1) throw std::invalid_argument("localchannel: size must be positive");
  if (!target.within(size)) {
    throw std::invalid_argument("localchannel: target register out of range");
  }
  if (k.dim() != 2) {
    throw std::invalid_argument("localchannel: expected a one-qubit channel");
  }
  const Eigen::Index full = Eigen::Index{1} << size;
  KrausSet out;
  out.operators.push_back(CMatrix::identity(full));
  for (int q : target.ascending()) {
    std::vector<CMatrix> next;
    next.reserve(out.operators.size() * k.operators.size());
    for (const CMatrix& op : k.operators) {
      const CMatrix embedded = embed_one_qubit(op, q, size);
      for (const CMatrix& prev : out.operators) {
        next.push_back(embedded * prev);
      }
    }
    out.operators = std::move(next);
  }
  return out;
}

DensityMatrix applychannel(const KrausSet& k, const DensityMatrix& rho) {
  const Eigen::Index d = k.dim();
  if (d != rho.dim()) {
    throw std::invalid_argument("applychannel: dimension mismatch");
  }
  if (!ischannel(k)) {
    throw std::invalid_argument("applychannel: operators do not form a channel");
  }
  CMatrix acc = CMatrix::zero(d, d, rho.matrix().backend());
  for (const CMatrix& op : k.operators) {
    acc = acc + op * rho.matrix() * dagger(op);
  }
  return DensityMatrix(std::move(acc));
}

bool ischannel(const KrausSet& k) {
  const Eigen::Index d = k.dim();
  CMatrix acc = CMatrix::zero(d, d);
  for (const CMatrix& op : k.operators) {
    acc = acc + dagger(op) * op;
  }
  return approx_equal(acc, CMatrix::identity(d, acc.backend()), kSpectralTol);
}

}  // namespace densim

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

#include <doctest.h>

#include <random>

#include "densim/channels.hpp"
#include "densim/gates.hpp"
#include "densim/session.hpp"
#include "oracles.hpp"

using namespace densim;

namespace {

const ChannelKind kAllKinds[] = {
    ChannelKind::depolarizing, ChannelKind::amplitudedamping,
    ChannelKind::phasedamping, ChannelKind::bitflip,
    ChannelKind::phaseflip,    ChannelKind::bitphaseflip,
};

DensityMatrix random_state(Eigen::Index dim, std::mt19937& rng) {
  return DensityMatrix(CMatrix(densim::testing::random_density(dim, rng)));
}

}  // namespace

TEST_SUITE_BEGIN("channels");

TEST_CASE("channel name round trip") {
  for (ChannelKind kind : kAllKinds) {
    CHECK(channel_kind_from_name(channel_name(kind)) == kind);
  }
  CHECK(!channel_kind_from_name("gaussian"));
}

TEST_CASE("all named channels are valid across the parameter range") {
  for (ChannelKind kind : kAllKinds) {
    for (double p : {0.0, 0.25, 0.5, 1.0}) {
      CHECK(ischannel(channel(kind, p)));
    }
  }
  CHECK_THROWS_AS(channel(ChannelKind::bitflip, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(channel(ChannelKind::bitflip, 1.1), std::invalid_argument);
}

TEST_CASE("bitflip at p=0 is the identity channel") {
  std::mt19937 rng(101);
  const DensityMatrix rho = random_state(2, rng);
  const DensityMatrix out = applychannel(channel(ChannelKind::bitflip, 0.0), rho);
  CHECK(max_abs_diff(out.matrix(), rho.matrix()) == 0.0);
}

TEST_CASE("depolarizing mixes toward identity") {
  std::mt19937 rng(103);
  for (double p : {0.0, 0.3, 0.75, 1.0}) {
    const DensityMatrix rho = random_state(2, rng);
    const DensityMatrix out = applychannel(channel(ChannelKind::depolarizing, p), rho);
    const CMatrix expected = rho.matrix() * cxd{1.0 - p, 0.0} +
                             CMatrix::identity(2) * cxd{p / 2.0, 0.0};
    CHECK(max_abs_diff(out.matrix(), expected) <= 1e-12);
  }
}

TEST_CASE("phaseflip at one half kills coherences") {
  Eigen::VectorXcd plus(2);
  plus << M_SQRT1_2, M_SQRT1_2;
  const DensityMatrix rho = state(Ket(plus));
  const DensityMatrix out = applychannel(channel(ChannelKind::phaseflip, 0.5), rho);
  CHECK(max_abs_diff(out.matrix(), CMatrix::identity(2) * cxd{0.5, 0.0}) <= 1e-12);
}

TEST_CASE("amplitude damping endpoint") {
  const DensityMatrix one = state(ket({1}));
  const DensityMatrix out =
      applychannel(channel(ChannelKind::amplitudedamping, 1.0), one);
  CHECK(max_abs_diff(out.matrix(), state(ket({0})).matrix()) <= 1e-12);
}

TEST_CASE("localchannel basics") {
  const KrausSet empty_target =
      localchannel(channel(ChannelKind::bitflip, 0.3), {}, 2);
  CHECK(empty_target.operators.size() == 1);
  CHECK(max_abs_diff(empty_target.operators[0], CMatrix::identity(4)) == 0.0);

  KrausSet only_identity;
  only_identity.operators.push_back(CMatrix::identity(2));
  const KrausSet lifted = localchannel(only_identity, {1, 2}, 2);
  CHECK(lifted.operators.size() == 1);
  CHECK(max_abs_diff(lifted.operators[0], CMatrix::identity(4)) <= 1e-15);

  // a certain flip on qubit 2 moves |00><00| to |01><01|
  const KrausSet flip2 = localchannel(channel(ChannelKind::bitflip, 1.0), {2}, 2);
  const DensityMatrix out = applychannel(flip2, state(ket({0, 0})));
  CHECK(max_abs_diff(out.matrix(), state(ket({0, 1})).matrix()) <= 1e-12);

  CHECK_THROWS_AS(localchannel(channel(ChannelKind::bitflip, 0.5), {3}, 2),
                  std::invalid_argument);
}

TEST_CASE("localchannel stays a valid channel") {
  for (ChannelKind kind : kAllKinds) {
    const KrausSet lifted = localchannel(channel(kind, 0.35), {1, 3}, 3);
    CHECK(lifted.operators.size() == channel(kind, 0.35).operators.size() *
                                         channel(kind, 0.35).operators.size());
    CHECK(ischannel(lifted));
  }
}

TEST_CASE("localchannel equals sequential per-qubit application") {
  std::mt19937 rng(107);
  for (ChannelKind kind : {ChannelKind::depolarizing, ChannelKind::amplitudedamping}) {
    const KrausSet one_qubit = channel(kind, 0.4);
    const KrausSet full = localchannel(one_qubit, {1, 2, 3}, 3);
    const DensityMatrix rho = random_state(8, rng);

    DensityMatrix sequential = rho;
    for (int q = 1; q <= 3; ++q) {
      sequential = applychannel(localchannel(one_qubit, {q}, 3), sequential);
    }
    const DensityMatrix product = applychannel(full, rho);
    CHECK(max_abs_diff(product.matrix(), sequential.matrix()) <= 1e-12);
  }
}

TEST_CASE("applychannel") {
  std::mt19937 rng(109);
  const DensityMatrix rho = random_state(2, rng);

  KrausSet ident;
  ident.operators.push_back(CMatrix::identity(2));
  CHECK(max_abs_diff(applychannel(ident, rho).matrix(), rho.matrix()) == 0.0);

  const DensityMatrix fully_mixed =
      applychannel(channel(ChannelKind::depolarizing, 1.0), rho);
  CHECK(max_abs_diff(fully_mixed.matrix(), CMatrix::identity(2) * cxd{0.5, 0.0}) <=
        1e-12);

  KrausSet bogus;
  bogus.operators.push_back(CMatrix::identity(2));
  bogus.operators.push_back(CMatrix::identity(2));
  CHECK_THROWS_AS(applychannel(bogus, rho), std::invalid_argument);

  CHECK_THROWS_AS(applychannel(ident, random_state(4, rng)),
                  std::invalid_argument);
}

TEST_CASE("ischannel") {
  KrausSet ident;
  ident.operators.push_back(CMatrix::identity(2));
  CHECK(ischannel(ident));

  KrausSet doubled;
  doubled.operators.push_back(CMatrix::identity(2));
  doubled.operators.push_back(CMatrix::identity(2));
  CHECK(!ischannel(doubled));

  KrausSet split;
  split.operators.push_back(CMatrix::identity(2) * cxd{std::sqrt(0.3), 0.0});
  split.operators.push_back(pauli(Axis::x).matrix() * cxd{std::sqrt(0.7), 0.0});
  CHECK(ischannel(split));

  KrausSet ragged;
  ragged.operators.push_back(CMatrix::identity(2));
  ragged.operators.push_back(CMatrix::identity(4));
  CHECK_THROWS_AS(ischannel(ragged), std::invalid_argument);
}

TEST_CASE("channel chains preserve state invariants") {
  std::mt19937 rng(113);
  std::uniform_int_distribution<int> pick_kind(0, 5);
  std::uniform_real_distribution<double> pick_p(0.0, 1.0);
  std::uniform_int_distribution<int> pick_qubit(1, 3);

  DensityMatrix rho = random_state(8, rng);
  for (int step = 0; step < 10; ++step) {
    const KrausSet k = localchannel(
        channel(kAllKinds[pick_kind(rng)], pick_p(rng)), {pick_qubit(rng)}, 3);
    rho = applychannel(k, rho);
    CHECK(std::abs(trace(rho.matrix()) - cxd{1.0, 0.0}) <= 1e-10);
    CHECK(is_hermitian(rho.matrix(), 1e-10));
    const HermitianEig eig = hermitian_eig(rho.matrix());
    CHECK(eig.values.minCoeff() >= -1e-9);
  }
}

TEST_CASE("unital channels never increase purity") {
  std::mt19937 rng(127);
  for (ChannelKind kind : {ChannelKind::depolarizing, ChannelKind::bitflip,
                           ChannelKind::phaseflip, ChannelKind::bitphaseflip}) {
    const DensityMatrix rho = random_state(2, rng);
    const DensityMatrix out = applychannel(channel(kind, 0.37), rho);
    const double purity_in = trace(rho.matrix() * rho.matrix()).real();
    const double purity_out = trace(out.matrix() * out.matrix()).real();
    CHECK(purity_out <= purity_in + 1e-12);
  }
}

TEST_CASE("channel acting on one qubit leaves the rest untouched") {
  std::mt19937 rng(131);
  const DensityMatrix rho = random_state(8, rng);
  for (ChannelKind kind : kAllKinds) {
    const DensityMatrix out =
        applychannel(localchannel(channel(kind, 0.6), {2}, 3), rho);
    const DensityMatrix before = ptrace(rho, {2});
    const DensityMatrix after = ptrace(out, {2});
    CHECK(max_abs_diff(before.matrix(), after.matrix()) <= 1e-10);
  }
}

TEST_SUITE_END();

// Copyright 2026 The qdb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Random primitive-gate blocks and their reference unitaries.

#ifndef QDB_TESTS_RANDOM_BLOCKS_H_
#define QDB_TESTS_RANDOM_BLOCKS_H_

#include <algorithm>
#include <random>
#include <vector>

#include "oracles.h"
#include "qdb/ir.h"

namespace oracle {

// Reference matrix of one primitive on n qubits, built from definitions.
inline Mat gate_on(const qdb::Gate& g, const std::vector<int>& q, int n) {
  using qdb::GateKind;
  const double a = g.angle;
  switch (g.kind) {
    case GateKind::kX: return embed(X(), q, n);
    case GateKind::kY: return embed(Y(), q, n);
    case GateKind::kZ: return embed(Z(), q, n);
    case GateKind::kH: return embed(H(), q, n);
    case GateKind::kS: return embed(Phase(kPi / 2), q, n);
    case GateKind::kSdg: return embed(Phase(-kPi / 2), q, n);
    case GateKind::kT: return embed(Phase(kPi / 4), q, n);
    case GateKind::kTdg: return embed(Phase(-kPi / 4), q, n);
    case GateKind::kRx: return embed(Rx(a), q, n);
    case GateKind::kRy: return embed(Ry(a), q, n);
    case GateKind::kRz: return embed(Rz(a), q, n);
    case GateKind::kP: return embed(Phase(a), q, n);
    case GateKind::kCnot: return controlled(embed(X(), {q[1]}, n), {q[0]});
    case GateKind::kCz: return controlled(embed(Z(), {q[1]}, n), {q[0]});
    case GateKind::kToffoli:
      return controlled(embed(X(), {q[2]}, n), {q[0], q[1]});
    case GateKind::kSwap: {
      Mat s = Mat::Zero(4, 4);
      s(0, 0) = s(3, 3) = s(1, 2) = s(2, 1) = 1;
      return embed(s, {q[0], q[1]}, n);
    }
    case GateKind::kCswap: {
      Mat s = Mat::Zero(4, 4);
      s(0, 0) = s(3, 3) = s(1, 2) = s(2, 1) = 1;
      return controlled(embed(s, {q[1], q[2]}, n), {q[0]});
    }
  }
  return Mat();
}

inline Mat unitary_of_instructions(const std::vector<qdb::Instruction>& ins,
                                   int n) {
  Mat u = Mat::Identity(1L << n, 1L << n);
  for (const auto& i : ins) {
    std::vector<int> q;
    for (auto id : i.qubits) q.push_back(static_cast<int>(id.index));
    u = gate_on(i.gate, q, n) * u;
  }
  return u;
}

inline qdb::Gate random_gate(std::mt19937_64& rng, int max_arity) {
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (;;) {
    const auto kind = static_cast<qdb::GateKind>(rng() % 17);
    qdb::Gate g{kind, 0.0};
    if (static_cast<int>(g.arity()) > max_arity) continue;
    if (g.parametric()) g.angle = ang(rng);
    return g;
  }
}

// Random flat primitive list on qubits [0, n).
inline std::vector<qdb::Instruction> random_instructions(std::mt19937_64& rng,
                                                         int n, int count) {
  std::vector<qdb::Instruction> out;
  std::vector<int> order(n);
  for (int i = 0; i < count; ++i) {
    qdb::Gate g = random_gate(rng, n);
    for (int k = 0; k < n; ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), rng);
    qdb::Qubits qs;
    for (std::size_t k = 0; k < g.arity(); ++k) {
      qs.push_back(qdb::qubit(static_cast<std::uint32_t>(order[k])));
    }
    out.push_back({g, qs});
  }
  return out;
}

inline qdb::Block block_of(const std::vector<qdb::Instruction>& ins,
                           const std::string& name = "random") {
  qdb::Block b(name);
  for (const auto& i : ins) b.add(i.gate, i.qubits);
  return b;
}

}  // namespace oracle

#endif  // QDB_TESTS_RANDOM_BLOCKS_H_

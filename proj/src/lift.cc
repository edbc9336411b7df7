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

#include <algorithm>
#include <map>
#include <numbers>

#include "qdb/ir.h"

namespace qdb {

namespace {

constexpr double kPi = std::numbers::pi;

// Controlled-Rz(theta) up to the relative phase restored by decompose_cRz.
void abc_rotation(Block& out, double theta, QubitId c, QubitId t,
                  AbcVariant v) {
  switch (v) {
    case AbcVariant::kOmitA:
      out.rz(t, theta / 2).cnot(c, t).rz(t, -theta / 2).cnot(c, t);
      break;
    case AbcVariant::kOmitC:
      out.cnot(c, t).rz(t, -theta / 2).cnot(c, t).rz(t, theta / 2);
      break;
    case AbcVariant::kAnglesFlipped:
      out.rz(t, -theta / 2).cnot(c, t).rz(t, theta / 2).cnot(c, t);
      break;
  }
}

void controlled_p(Block& out, double theta, QubitId c, QubitId t,
                  AbcVariant v) {
  out.append(decompose_cRz(theta, c, t, v));
}

void controlled_rz(Block& out, double theta, QubitId c, QubitId t,
                   AbcVariant v) {
  abc_rotation(out, theta, c, t, v);
}

void controlled_rx(Block& out, double theta, QubitId c, QubitId t,
                   AbcVariant v) {
  out.h(t);
  controlled_rz(out, theta, c, t, v);
  out.h(t);
}

class Lifter {
 public:
  explicit Lifter(const LiftOptions& opts) : opts_(opts) {}

  Block lift(const Block& b, const Qubits& controls) {
    if (controls.empty()) return b;
    Block out(b.name().empty() ? b.name() : "ctrl-" + b.name());
    if (controls.size() == 1) {
      for (const Item& item : b.items()) lift_item(out, item, controls[0]);
    } else {
      lift_multi(out, b, controls);
    }
    return out;
  }

 private:
  BlockPtr lift_shared(const BlockPtr& b, QubitId c) {
    auto key = std::make_pair(b.get(), c);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    BlockPtr lifted = share(lift(*b, {c}));
    memo_.emplace(key, lifted);
    return lifted;
  }

  void lift_multi(Block& out, const Block& b, const Qubits& controls) {
    const std::size_t k = controls.size();
    const bool scratch = opts_.policy == AncillaPolicy::kScratch;
    Qubits anc;
    if (scratch) {
      anc = new_placeholders(k - 1);
    } else {
      if (opts_.borrowed.size() < k - 1) {
        throw ArgumentError("borrowed ancilla policy needs " +
                            std::to_string(k - 1) + " qubit(s)");
      }
      anc.assign(opts_.borrowed.begin(),
                 opts_.borrowed.begin() + static_cast<std::ptrdiff_t>(k - 1));
    }
    Block chain("and-chain");
    chain.toffoli(controls[1], controls[0], anc[0]);
    for (std::size_t j = 1; j + 1 < k; ++j) {
      chain.toffoli(anc[j - 1], controls[j + 1], anc[j]);
    }
    Block body = lift(b, {anc[k - 2]});
    Block scoped;
    scoped.compute_uncompute(std::move(chain), std::move(body));
    if (scratch) {
      out.scratch(std::move(anc), std::move(scoped));
    } else {
      out.append(scoped);
    }
  }

  void lift_item(Block& out, const Item& item, QubitId c) {
    std::visit(
        [&](const auto& it) {
          using T = std::decay_t<decltype(it)>;
          if constexpr (std::is_same_v<T, Instruction>) {
            lift_gate(out, it, c);
          } else if constexpr (std::is_same_v<T, Call>) {
            out.call(lift_shared(it.body, c));
          } else if constexpr (std::is_same_v<T, Invert>) {
            out.add(Invert{lift_shared(it.body, c)});
          } else if constexpr (std::is_same_v<T, Controlled>) {
            Qubits all{c};
            all.insert(all.end(), it.controls.begin(), it.controls.end());
            out.call(lift(*it.body, all));
          } else if constexpr (std::is_same_v<T, ComputeUncompute>) {
            out.add(ComputeUncompute{it.compute, lift_shared(it.action, c)});
          } else if constexpr (std::is_same_v<T, Scratch>) {
            out.add(Scratch{it.placeholders, lift_shared(it.body, c)});
          } else {
            out.add(it);
          }
        },
        item);
  }

  void lift_gate(Block& out, const Instruction& ins, QubitId c) {
    const Qubits& q = ins.qubits;
    if (std::find(q.begin(), q.end(), c) != q.end()) {
      throw ValidationError("control " + to_string(c) +
                            " is also an operand of " + ins.gate.name());
    }
    const AbcVariant v = opts_.abc;
    switch (ins.gate.kind) {
      case GateKind::kX: out.cnot(c, q[0]); break;
      case GateKind::kY: out.sdg(q[0]).cnot(c, q[0]).s(q[0]); break;
      case GateKind::kZ: out.cz(c, q[0]); break;
      case GateKind::kH:
        out.ry(q[0], kPi / 4).cnot(c, q[0]).ry(q[0], -kPi / 4);
        break;
      case GateKind::kS: controlled_p(out, kPi / 2, c, q[0], v); break;
      case GateKind::kSdg: controlled_p(out, -kPi / 2, c, q[0], v); break;
      case GateKind::kT: controlled_p(out, kPi / 4, c, q[0], v); break;
      case GateKind::kTdg: controlled_p(out, -kPi / 4, c, q[0], v); break;
      case GateKind::kP: controlled_p(out, ins.gate.angle, c, q[0], v); break;
      case GateKind::kRz: controlled_rz(out, ins.gate.angle, c, q[0], v); break;
      case GateKind::kRx: controlled_rx(out, ins.gate.angle, c, q[0], v); break;
      case GateKind::kRy:
        out.sdg(q[0]);
        controlled_rx(out, ins.gate.angle, c, q[0], v);
        out.s(q[0]);
        break;
      case GateKind::kCnot: out.toffoli(c, q[0], q[1]); break;
      case GateKind::kCz: out.h(q[1]).toffoli(c, q[0], q[1]).h(q[1]); break;
      case GateKind::kSwap: out.cswap(c, q[0], q[1]); break;
      case GateKind::kToffoli: {
        Block x;
        x.x(q[2]);
        lift_multi(out, x, {c, q[0], q[1]});
        break;
      }
      case GateKind::kCswap: {
        // CSWAP(a; x, y) = CNOT(y, x) CCX(a, x, y) CNOT(y, x)
        Block compute, ccx;
        compute.cnot(q[2], q[1]);
        ccx.toffoli(q[0], q[1], q[2]);
        out.add(ComputeUncompute{share(std::move(compute)),
                                 share(lift(ccx, {c}))});
        break;
      }
    }
  }

  const LiftOptions& opts_;
  std::map<std::pair<const Block*, QubitId>, BlockPtr> memo_;
};

}  // namespace

Block decompose_cRz(double theta, QubitId control, QubitId target,
                    AbcVariant variant) {
  Block out("cphase");
  abc_rotation(out, theta, control, target, variant);
  out.p(control, theta / 2);
  return out;
}

Block control_lift(const Block& b, const Qubits& controls,
                   const LiftOptions& opts) {
  for (std::size_t i = 0; i < controls.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (controls[i] == controls[j]) {
        throw ValidationError("control " + to_string(controls[i]) +
                              " repeated");
      }
    }
  }
  Lifter lifter(opts);
  return lifter.lift(b, controls);
}

}  // namespace qdb

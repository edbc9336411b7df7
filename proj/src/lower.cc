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
#include <cmath>
#include <complex>
#include <numbers>

#include "qdb/ir.h"

namespace qdb {

namespace {

class Lowerer {
 public:
  Lowerer(LoweringTarget& target, const LiftOptions& opts)
      : target_(target), opts_(opts) {}

  void run(const Block& b) {
    const bool named = !b.name().empty();
    if (named) path_.push_back(b.name());
    for (const Item& item : b.items()) run_item(item);
    if (named) path_.pop_back();
  }

 private:
  QubitId resolve(QubitId q) const {
    if (!q.is_placeholder()) return q;
    for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
      if (it->first == q) return it->second;
    }
    throw ArgumentError("placeholder " + to_string(q) +
                        " used outside its scratch scope");
  }

  Qubits resolve(const Qubits& qs) const {
    Qubits out;
    out.reserve(qs.size());
    for (QubitId q : qs) out.push_back(resolve(q));
    return out;
  }

  std::string location() const {
    std::string out;
    for (const std::string& p : path_) {
      if (!out.empty()) out += '/';
      out += p;
    }
    return out;
  }

  void run_item(const Item& item) {
    std::visit(
        [&](const auto& it) {
          using T = std::decay_t<decltype(it)>;
          if constexpr (std::is_same_v<T, Instruction>) {
            bool symbolic = false;
            for (QubitId q : it.qubits) symbolic |= q.is_placeholder();
            if (!symbolic) {
              target_.gate(it);
            } else {
              target_.gate(Instruction{it.gate, resolve(it.qubits)});
            }
          } else if constexpr (std::is_same_v<T, Call>) {
            run(*it.body);
          } else if constexpr (std::is_same_v<T, Invert>) {
            run(invert(*it.body));
          } else if constexpr (std::is_same_v<T, Controlled>) {
            run(control_lift(*it.body, it.controls, opts_));
          } else if constexpr (std::is_same_v<T, ComputeUncompute>) {
            run(*it.compute);
            run(*it.action);
            run(invert(*it.compute));
          } else if constexpr (std::is_same_v<T, Scratch>) {
            const Qubits real = target_.acquire(it.placeholders.size());
            for (std::size_t i = 0; i < real.size(); ++i) {
              bindings_.emplace_back(it.placeholders[i], real[i]);
            }
            run(*it.body);
            bindings_.resize(bindings_.size() - real.size());
            target_.release(real, location());
          } else if constexpr (std::is_same_v<T, RequireZero>) {
            target_.require_zero(resolve(it.qubits), it.what, location());
          }
        },
        item);
  }

  LoweringTarget& target_;
  const LiftOptions& opts_;
  std::vector<std::pair<QubitId, QubitId>> bindings_;
  std::vector<std::string> path_;
};

void max_id(const Block& b, std::uint32_t& best) {
  auto see = [&](const Qubits& qs) {
    for (QubitId q : qs) {
      if (!q.is_placeholder()) best = std::max(best, q.index + 1);
    }
  };
  for (const Item& item : b.items()) {
    std::visit(
        [&](const auto& it) {
          using T = std::decay_t<decltype(it)>;
          if constexpr (std::is_same_v<T, Instruction>) {
            see(it.qubits);
          } else if constexpr (std::is_same_v<T, ComputeUncompute>) {
            max_id(*it.compute, best);
            max_id(*it.action, best);
          } else if constexpr (std::is_same_v<T, Controlled>) {
            see(it.controls);
            max_id(*it.body, best);
          } else if constexpr (std::is_same_v<T, RequireZero>) {
            see(it.qubits);
          } else {
            max_id(*it.body, best);
          }
        },
        item);
  }
}

class Recorder : public LoweringTarget {
 public:
  explicit Recorder(std::uint32_t first_free) : next_(first_free) {}

  void gate(const Instruction& ins) override { out.push_back(ins); }
  Qubits acquire(std::size_t k) override {
    Qubits qs;
    for (std::size_t i = 0; i < k; ++i) {
      if (!free_.empty()) {
        qs.push_back(free_.back());
        free_.pop_back();
      } else {
        qs.push_back(qubit(next_++));
      }
    }
    return qs;
  }
  void release(const Qubits& qs, const std::string&) override {
    free_.insert(free_.end(), qs.rbegin(), qs.rend());
  }
  void require_zero(const Qubits&, const std::string&,
                    const std::string&) override {}

  std::vector<Instruction> out;

 private:
  std::uint32_t next_;
  Qubits free_;
};

class Counter : public Recorder {
 public:
  Counter() : Recorder(0) {}
  void gate(const Instruction&) override { ++count; }
  std::size_t count = 0;
};

}  // namespace

void lower(const Block& b, LoweringTarget& target, const LiftOptions& opts) {
  Lowerer(target, opts).run(b);
}

std::vector<Instruction> lower(const Block& b, const LiftOptions& opts) {
  std::uint32_t first = 0;
  max_id(b, first);
  if (opts.policy == AncillaPolicy::kBorrowed) {
    for (QubitId q : opts.borrowed) first = std::max(first, q.index + 1);
  }
  Recorder rec(first);
  lower(b, rec, opts);
  return std::move(rec.out);
}

std::size_t gate_count(const Block& b, const LiftOptions& opts) {
  Counter c;
  lower(b, c, opts);
  return c.count;
}

// ---------------------------------------------------------------------------

void apply_instruction(QuantumState& s, const Instruction& ins) {
  using namespace std::complex_literals;
  const Qubits& q = ins.qubits;
  auto pos = [&](std::size_t i) { return s.position(q[i]); };
  auto bit = [&](std::size_t i) { return std::uint64_t{1} << pos(i); };
  const double a = ins.gate.angle;
  const double r = 1.0 / std::sqrt(2.0);
  switch (ins.gate.kind) {
    case GateKind::kX: s.apply_x(pos(0), 0); break;
    case GateKind::kY: s.apply_1q({0, -1i, 1i, 0}, pos(0), 0); break;
    case GateKind::kZ: s.apply_diag(1, -1, pos(0), 0); break;
    case GateKind::kH: s.apply_1q({r, r, r, -r}, pos(0), 0); break;
    case GateKind::kS: s.apply_diag(1, 1i, pos(0), 0); break;
    case GateKind::kSdg: s.apply_diag(1, -1i, pos(0), 0); break;
    case GateKind::kT:
      s.apply_diag(1, std::polar(1.0, std::numbers::pi / 4), pos(0), 0);
      break;
    case GateKind::kTdg:
      s.apply_diag(1, std::polar(1.0, -std::numbers::pi / 4), pos(0), 0);
      break;
    case GateKind::kRx: {
      const double c = std::cos(a / 2), sn = std::sin(a / 2);
      s.apply_1q({c, -1i * sn, -1i * sn, c}, pos(0), 0);
      break;
    }
    case GateKind::kRy: {
      const double c = std::cos(a / 2), sn = std::sin(a / 2);
      s.apply_1q({c, -sn, sn, c}, pos(0), 0);
      break;
    }
    case GateKind::kRz:
      s.apply_diag(std::polar(1.0, -a / 2), std::polar(1.0, a / 2), pos(0), 0);
      break;
    case GateKind::kP: s.apply_diag(1, std::polar(1.0, a), pos(0), 0); break;
    case GateKind::kCnot: s.apply_x(pos(1), bit(0)); break;
    case GateKind::kCz: s.apply_diag(1, -1, pos(1), bit(0)); break;
    case GateKind::kToffoli: s.apply_x(pos(2), bit(0) | bit(1)); break;
    case GateKind::kSwap: s.apply_swap(pos(0), pos(1), 0); break;
    case GateKind::kCswap: s.apply_swap(pos(1), pos(2), bit(0)); break;
  }
}

Executor::Executor(QuantumState& state, ExecOptions opts)
    : state_(state), opts_(std::move(opts)) {}

void Executor::run(const Block& b) { lower(b, *this, opts_.lift); }

void Executor::run(std::span<const Instruction> ins) {
  for (const Instruction& i : ins) gate(i);
}

void Executor::gate(const Instruction& ins) { apply_instruction(state_, ins); }

Qubits Executor::acquire(std::size_t k) { return state_.allocate(k); }

void Executor::release(const Qubits& qs, const std::string& location) {
  FreeOutcome out =
      state_.free(qs, opts_.free_policy, opts_.free_eps, location);
  if (!out.clean) dirty_.push_back({qs, std::move(out.residual), location});
}

void Executor::require_zero(const Qubits& qs, const std::string& what,
                            const std::string& location) {
  Distribution d = state_.probabilities(qs);
  if (1.0 - d[0] > opts_.free_eps) {
    if (!opts_.throw_on_requirement) {
      unmet_.push_back({qs, std::move(d), location + ": " + what});
      return;
    }
    throw PreconditionError(what + " is not |0> (P(nonzero) = " +
                            std::to_string(1.0 - d[0]) + ")" +
                            (location.empty() ? "" : " in " + location));
  }
}

CMatrix unitary_of(const Block& b, std::size_t n, const LiftOptions& opts) {
  if (n > 10) {
    throw CapacityError("unitary_of supports at most 10 qubits, got " +
                        std::to_string(n));
  }
  const std::size_t dim = std::size_t{1} << n;
  CMatrix u(dim);
  ExecOptions eo;
  eo.lift = opts;
  for (std::size_t col = 0; col < dim; ++col) {
    QuantumState s = QuantumState::basis(n, col);
    Executor(s, eo).run(b);
    if (s.num_qubits() != n) {
      throw LifecycleError("block leaked scratch qubits");
    }
    for (std::size_t row = 0; row < dim; ++row) u(row, col) = s.amplitudes()[row];
  }
  return u;
}

}  // namespace qdb

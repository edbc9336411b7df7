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

// Circuit IR: immutable blocks of gates and meta-operations, lowered to flat
// gate streams by a single pass that binds scratch ancillas.

#ifndef QDB_IR_H_
#define QDB_IR_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qdb/linalg.h"
#include "qdb/statevec.h"

namespace qdb {

enum class GateKind {
  kX, kY, kZ, kH, kS, kSdg, kT, kTdg,
  kRx, kRy, kRz, kP,
  kCnot, kCz, kToffoli, kSwap, kCswap,
};

struct Gate {
  GateKind kind = GateKind::kX;
  double angle = 0.0;  // used by Rx, Ry, Rz, P only

  std::size_t arity() const;
  bool parametric() const;
  Gate inverse() const;
  // Matrix index bit t corresponds to the t-th qubit operand.
  CMatrix matrix() const;
  const char* name() const;

  bool operator==(const Gate&) const = default;
};

// Rz(t) = diag(e^{-it/2}, e^{it/2}); P(t) = diag(1, e^{it}).
namespace gates {
inline Gate x() { return {GateKind::kX}; }
inline Gate y() { return {GateKind::kY}; }
inline Gate z() { return {GateKind::kZ}; }
inline Gate h() { return {GateKind::kH}; }
inline Gate s() { return {GateKind::kS}; }
inline Gate sdg() { return {GateKind::kSdg}; }
inline Gate t() { return {GateKind::kT}; }
inline Gate tdg() { return {GateKind::kTdg}; }
inline Gate rx(double a) { return {GateKind::kRx, a}; }
inline Gate ry(double a) { return {GateKind::kRy, a}; }
inline Gate rz(double a) { return {GateKind::kRz, a}; }
inline Gate p(double a) { return {GateKind::kP, a}; }
inline Gate cnot() { return {GateKind::kCnot}; }
inline Gate cz() { return {GateKind::kCz}; }
inline Gate toffoli() { return {GateKind::kToffoli}; }
inline Gate swap() { return {GateKind::kSwap}; }
inline Gate cswap() { return {GateKind::kCswap}; }
}  // namespace gates

struct Instruction {
  Gate gate;
  Qubits qubits;  // controls first for controlled kinds

  bool operator==(const Instruction&) const = default;
};

class Block;
using BlockPtr = std::shared_ptr<const Block>;

// Sub-block applied as-is; keeps its name for error locations.
struct Call {
  BlockPtr body;
};
struct Invert {
  BlockPtr body;
};
struct Controlled {
  Qubits controls;
  BlockPtr body;
};
// compute; action; inverse(compute)
struct ComputeUncompute {
  BlockPtr compute;
  BlockPtr action;
};
// Ancilla scope. Placeholders are bound to fresh |0> qubits on entry and must
// be |0> again on exit.
struct Scratch {
  Qubits placeholders;
  BlockPtr body;
};
// Runtime check that the qubits are |0>; raises PreconditionError otherwise.
struct RequireZero {
  Qubits qubits;
  std::string what;
};

bool operator==(const Call& a, const Call& b);
bool operator==(const Invert& a, const Invert& b);
bool operator==(const Controlled& a, const Controlled& b);
bool operator==(const ComputeUncompute& a, const ComputeUncompute& b);
bool operator==(const Scratch& a, const Scratch& b);
bool operator==(const RequireZero& a, const RequireZero& b);

using Item = std::variant<Instruction, Call, Invert, Controlled,
                          ComputeUncompute, Scratch, RequireZero>;

class Block {
 public:
  explicit Block(std::string name = "") : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const std::vector<Item>& items() const { return items_; }
  bool empty() const { return items_.empty(); }

  // Validates arity and operand distinctness.
  Block& add(Gate g, Qubits qs);
  Block& add(Item item);
  // Inlines the other block's items.
  Block& append(const Block& other);

  Block& call(Block b);
  Block& call(BlockPtr b);
  Block& invert(Block b);
  Block& controlled(Qubits controls, Block b);
  Block& compute_uncompute(Block compute, Block action);
  Block& scratch(Qubits placeholders, Block body);
  Block& require_zero(Qubits qs, std::string what);

  Block& x(QubitId q) { return add(gates::x(), {q}); }
  Block& y(QubitId q) { return add(gates::y(), {q}); }
  Block& z(QubitId q) { return add(gates::z(), {q}); }
  Block& h(QubitId q) { return add(gates::h(), {q}); }
  Block& s(QubitId q) { return add(gates::s(), {q}); }
  Block& sdg(QubitId q) { return add(gates::sdg(), {q}); }
  Block& t(QubitId q) { return add(gates::t(), {q}); }
  Block& tdg(QubitId q) { return add(gates::tdg(), {q}); }
  Block& rx(QubitId q, double a) { return add(gates::rx(a), {q}); }
  Block& ry(QubitId q, double a) { return add(gates::ry(a), {q}); }
  Block& rz(QubitId q, double a) { return add(gates::rz(a), {q}); }
  Block& p(QubitId q, double a) { return add(gates::p(a), {q}); }
  Block& cnot(QubitId c, QubitId t) { return add(gates::cnot(), {c, t}); }
  Block& cz(QubitId a, QubitId b) { return add(gates::cz(), {a, b}); }
  Block& toffoli(QubitId c1, QubitId c2, QubitId t) {
    return add(gates::toffoli(), {c1, c2, t});
  }
  Block& swap(QubitId a, QubitId b) { return add(gates::swap(), {a, b}); }
  Block& cswap(QubitId c, QubitId a, QubitId b) {
    return add(gates::cswap(), {c, a, b});
  }

  bool operator==(const Block& other) const;

 private:
  std::string name_;
  std::vector<Item> items_;
};

BlockPtr share(Block b);

// Fresh placeholder ids, unique for the process lifetime.
Qubits new_placeholders(std::size_t k);

// Adjoint. Involutive on structure: invert(invert(b)) == b.
Block invert(const Block& b);

// Operand-level rewrites for bug injection.
enum class AbcVariant {
  kOmitA,          // Rz(+t/2) CNOT Rz(-t/2) CNOT
  kOmitC,          // CNOT Rz(-t/2) CNOT Rz(+t/2)
  kAnglesFlipped,  // Rz(-t/2) CNOT Rz(+t/2) CNOT (wrong)
};

enum class AncillaPolicy {
  kScratch,   // multi-control chains allocate scratch ancillas
  kBorrowed,  // chains use LiftOptions::borrowed, which must start in |0>
};

struct LiftOptions {
  AbcVariant abc = AbcVariant::kOmitA;
  AncillaPolicy policy = AncillaPolicy::kScratch;
  Qubits borrowed;
};

// Controlled phase via the ABC construction plus a phase on the control.
// Equal to controlled-P(theta) exactly for the two correct variants.
Block decompose_cRz(double theta, QubitId control, QubitId target,
                    AbcVariant variant = AbcVariant::kOmitA);

// The block with every gate conditioned on all `controls` being 1.
// Compute halves of ComputeUncompute stay uncontrolled.
Block control_lift(const Block& b, const Qubits& controls,
                   const LiftOptions& opts = {});

// Receives a lowered gate stream with resolved qubits.
class LoweringTarget {
 public:
  virtual ~LoweringTarget() = default;
  virtual void gate(const Instruction& ins) = 0;
  virtual Qubits acquire(std::size_t k) = 0;
  virtual void release(const Qubits& qs, const std::string& location) = 0;
  virtual void require_zero(const Qubits& qs, const std::string& what,
                            const std::string& location) = 0;
};

void lower(const Block& b, LoweringTarget& target, const LiftOptions& opts = {});

// Flat gate list. Scratch ancillas get ids above every id used in `b`,
// reused in LIFO order.
std::vector<Instruction> lower(const Block& b, const LiftOptions& opts = {});

// One instruction per line: NAME q0 q1 ... [angle]. Angles print with 17
// significant digits.
std::string dump(std::span<const Instruction> ins);
std::vector<Instruction> parse_dump(const std::string& text);

struct DirtyFree {
  Qubits qubits;
  Distribution residual;
  std::string location;
};

struct ExecOptions {
  FreePolicy free_policy = FreePolicy::kStrict;
  double free_eps = 1e-9;
  LiftOptions lift;
  // When false, failed RequireZero checks are recorded instead of thrown.
  bool throw_on_requirement = true;
};

class Executor : public LoweringTarget {
 public:
  explicit Executor(QuantumState& state, ExecOptions opts = {});

  void run(const Block& b);
  void run(std::span<const Instruction> ins);

  void gate(const Instruction& ins) override;
  Qubits acquire(std::size_t k) override;
  void release(const Qubits& qs, const std::string& location) override;
  void require_zero(const Qubits& qs, const std::string& what,
                    const std::string& location) override;

  // Non-clean frees seen under the kReport and kUnsafe policies.
  const std::vector<DirtyFree>& dirty_frees() const { return dirty_; }
  // Failed RequireZero checks when throw_on_requirement is false.
  const std::vector<DirtyFree>& requirement_failures() const {
    return unmet_;
  }

 private:
  QuantumState& state_;
  ExecOptions opts_;
  std::vector<DirtyFree> dirty_;
  std::vector<DirtyFree> unmet_;
};

void apply_instruction(QuantumState& state, const Instruction& ins);

// Dense unitary of `b` on qubits 0..n-1 (n <= 10), column j = b|j>.
CMatrix unitary_of(const Block& b, std::size_t n, const LiftOptions& opts = {});

// Number of gates after lowering.
std::size_t gate_count(const Block& b, const LiftOptions& opts = {});

}  // namespace qdb

#endif  // QDB_IR_H_

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

#include "qdb/ir.h"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace qdb {

namespace {

constexpr double kPi = std::numbers::pi;

struct GateInfo {
  GateKind kind;
  const char* name;
  std::size_t arity;
  bool parametric;
};

constexpr GateInfo kGateTable[] = {
    {GateKind::kX, "X", 1, false},         {GateKind::kY, "Y", 1, false},
    {GateKind::kZ, "Z", 1, false},         {GateKind::kH, "H", 1, false},
    {GateKind::kS, "S", 1, false},         {GateKind::kSdg, "SDG", 1, false},
    {GateKind::kT, "T", 1, false},         {GateKind::kTdg, "TDG", 1, false},
    {GateKind::kRx, "RX", 1, true},        {GateKind::kRy, "RY", 1, true},
    {GateKind::kRz, "RZ", 1, true},        {GateKind::kP, "P", 1, true},
    {GateKind::kCnot, "CNOT", 2, false},   {GateKind::kCz, "CZ", 2, false},
    {GateKind::kToffoli, "CCX", 3, false}, {GateKind::kSwap, "SWAP", 2, false},
    {GateKind::kCswap, "CSWAP", 3, false},
};

const GateInfo& info(GateKind k) { return kGateTable[static_cast<int>(k)]; }

// Embeds a 2x2 block on the last operand, controlled by all earlier ones.
CMatrix controlled_matrix(std::size_t num_controls, const CMatrix& u) {
  const std::size_t dim = std::size_t{1} << (num_controls + 1);
  const std::size_t cmask = (std::size_t{1} << num_controls) - 1;
  const std::size_t tbit = std::size_t{1} << num_controls;
  CMatrix m = CMatrix::identity(dim);
  for (std::size_t base = 0; base < dim; ++base) {
    if ((base & cmask) != cmask || (base & tbit)) continue;
    m(base, base) = u(0, 0);
    m(base, base | tbit) = u(0, 1);
    m(base | tbit, base) = u(1, 0);
    m(base | tbit, base | tbit) = u(1, 1);
  }
  return m;
}

CMatrix swap_matrix(bool controlled) {
  const std::size_t off = controlled ? 1 : 0;
  const std::size_t dim = std::size_t{1} << (2 + off);
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t j = i;
    const bool active = !controlled || (i & 1);
    const std::size_t a = (i >> off) & 1, b = (i >> (off + 1)) & 1;
    if (active && a != b) j = i ^ (std::size_t{3} << off);
    m(j, i) = 1.0;
  }
  return m;
}

std::atomic<std::uint32_t> next_placeholder{QubitId::kPlaceholderBase};

std::string invert_name(const std::string& name) {
  static const std::string kSuffix = "^-1";
  if (name.size() >= kSuffix.size() &&
      name.compare(name.size() - kSuffix.size(), kSuffix.size(), kSuffix) == 0) {
    return name.substr(0, name.size() - kSuffix.size());
  }
  return name.empty() ? name : name + kSuffix;
}

}  // namespace

std::size_t Gate::arity() const { return info(kind).arity; }
bool Gate::parametric() const { return info(kind).parametric; }
const char* Gate::name() const { return info(kind).name; }

Gate Gate::inverse() const {
  switch (kind) {
    case GateKind::kS: return gates::sdg();
    case GateKind::kSdg: return gates::s();
    case GateKind::kT: return gates::tdg();
    case GateKind::kTdg: return gates::t();
    case GateKind::kRx:
    case GateKind::kRy:
    case GateKind::kRz:
    case GateKind::kP: return {kind, -angle};
    default: return *this;
  }
}

CMatrix Gate::matrix() const {
  using namespace std::complex_literals;
  const double r = 1.0 / std::sqrt(2.0);
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  auto m2 = [](cx a, cx b, cx cc, cx d) {
    return CMatrix(2, {a, b, cc, d});
  };
  switch (kind) {
    case GateKind::kX: return m2(0, 1, 1, 0);
    case GateKind::kY: return m2(0, -1i, 1i, 0);
    case GateKind::kZ: return m2(1, 0, 0, -1);
    case GateKind::kH: return m2(r, r, r, -r);
    case GateKind::kS: return m2(1, 0, 0, 1i);
    case GateKind::kSdg: return m2(1, 0, 0, -1i);
    case GateKind::kT: return m2(1, 0, 0, std::polar(1.0, kPi / 4));
    case GateKind::kTdg: return m2(1, 0, 0, std::polar(1.0, -kPi / 4));
    case GateKind::kRx: return m2(c, -1i * s, -1i * s, c);
    case GateKind::kRy: return m2(c, -s, s, c);
    case GateKind::kRz:
      return m2(std::polar(1.0, -angle / 2), 0, 0, std::polar(1.0, angle / 2));
    case GateKind::kP: return m2(1, 0, 0, std::polar(1.0, angle));
    case GateKind::kCnot: return controlled_matrix(1, gates::x().matrix());
    case GateKind::kCz: return controlled_matrix(1, gates::z().matrix());
    case GateKind::kToffoli: return controlled_matrix(2, gates::x().matrix());
    case GateKind::kSwap: return swap_matrix(false);
    case GateKind::kCswap: return swap_matrix(true);
  }
  throw ValidationError("unknown gate kind");
}

bool operator==(const Call& a, const Call& b) { return *a.body == *b.body; }
bool operator==(const Invert& a, const Invert& b) { return *a.body == *b.body; }
bool operator==(const Controlled& a, const Controlled& b) {
  return a.controls == b.controls && *a.body == *b.body;
}
bool operator==(const ComputeUncompute& a, const ComputeUncompute& b) {
  return *a.compute == *b.compute && *a.action == *b.action;
}
bool operator==(const Scratch& a, const Scratch& b) {
  return a.placeholders == b.placeholders && *a.body == *b.body;
}
bool operator==(const RequireZero& a, const RequireZero& b) {
  return a.qubits == b.qubits && a.what == b.what;
}

bool Block::operator==(const Block& other) const {
  return name_ == other.name_ && items_ == other.items_;
}

Block& Block::add(Gate g, Qubits qs) {
  if (qs.size() != g.arity()) {
    throw ValidationError(std::string(g.name()) + " takes " +
                          std::to_string(g.arity()) + " qubit(s), got " +
                          std::to_string(qs.size()));
  }
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (qs[i] == qs[j]) {
        throw ValidationError(std::string(g.name()) + " operand " +
                              to_string(qs[i]) + " repeated");
      }
    }
  }
  if (!std::isfinite(g.angle)) throw ValidationError("non-finite angle");
  items_.emplace_back(Instruction{g, std::move(qs)});
  return *this;
}

Block& Block::add(Item item) {
  if (auto* ins = std::get_if<Instruction>(&item)) {
    return add(ins->gate, ins->qubits);
  }
  items_.push_back(std::move(item));
  return *this;
}

Block& Block::append(const Block& other) {
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  return *this;
}

BlockPtr share(Block b) { return std::make_shared<const Block>(std::move(b)); }

Block& Block::call(Block b) { return call(share(std::move(b))); }
Block& Block::call(BlockPtr b) {
  items_.emplace_back(Call{std::move(b)});
  return *this;
}
Block& Block::invert(Block b) {
  items_.emplace_back(Invert{share(std::move(b))});
  return *this;
}
Block& Block::controlled(Qubits controls, Block b) {
  items_.emplace_back(Controlled{std::move(controls), share(std::move(b))});
  return *this;
}
Block& Block::compute_uncompute(Block compute, Block action) {
  items_.emplace_back(
      ComputeUncompute{share(std::move(compute)), share(std::move(action))});
  return *this;
}
Block& Block::scratch(Qubits placeholders, Block body) {
  for (QubitId q : placeholders) {
    if (!q.is_placeholder()) {
      throw ValidationError("scratch scope needs placeholder ids, got " +
                            to_string(q));
    }
  }
  items_.emplace_back(Scratch{std::move(placeholders), share(std::move(body))});
  return *this;
}
Block& Block::require_zero(Qubits qs, std::string what) {
  items_.emplace_back(RequireZero{std::move(qs), std::move(what)});
  return *this;
}

Qubits new_placeholders(std::size_t k) {
  Qubits out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(qubit(next_placeholder.fetch_add(1)));
  }
  return out;
}

namespace {

Item invert_item(const Item& item) {
  return std::visit(
      [](const auto& it) -> Item {
        using T = std::decay_t<decltype(it)>;
        if constexpr (std::is_same_v<T, Instruction>) {
          return Instruction{it.gate.inverse(), it.qubits};
        } else if constexpr (std::is_same_v<T, Call>) {
          return Invert{it.body};
        } else if constexpr (std::is_same_v<T, Invert>) {
          return Call{it.body};
        } else if constexpr (std::is_same_v<T, Controlled>) {
          return Controlled{it.controls, share(invert(*it.body))};
        } else if constexpr (std::is_same_v<T, ComputeUncompute>) {
          return ComputeUncompute{it.compute, share(invert(*it.action))};
        } else if constexpr (std::is_same_v<T, Scratch>) {
          return Scratch{it.placeholders, share(invert(*it.body))};
        } else {
          return it;
        }
      },
      item);
}

}  // namespace

Block invert(const Block& b) {
  Block out(invert_name(b.name()));
  const auto& items = b.items();
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    out.add(invert_item(*it));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string dump(std::span<const Instruction> ins) {
  std::string out;
  char buf[64];
  for (const Instruction& i : ins) {
    out += i.gate.name();
    for (QubitId q : i.qubits) {
      out += ' ';
      out += to_string(q);
    }
    if (i.gate.parametric()) {
      std::snprintf(buf, sizeof(buf), " %.17g", i.gate.angle);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::vector<Instruction> parse_dump(const std::string& text) {
  std::vector<Instruction> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    const GateInfo* gi = nullptr;
    for (const GateInfo& g : kGateTable) {
      if (name == g.name) gi = &g;
    }
    if (gi == nullptr) throw ParseError(lineno, "unknown gate '" + name + "'");
    Instruction ins{Gate{gi->kind}, {}};
    for (std::size_t k = 0; k < gi->arity; ++k) {
      long long q = -1;
      if (!(ls >> q) || q < 0) throw ParseError(lineno, "bad qubit operand");
      ins.qubits.push_back(qubit(static_cast<std::uint32_t>(q)));
    }
    if (gi->parametric && !(ls >> ins.gate.angle)) {
      throw ParseError(lineno, "missing angle");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
    out.push_back(std::move(ins));
  }
  return out;
}

}  // namespace qdb

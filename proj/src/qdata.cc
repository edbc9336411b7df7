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

#include "qdb/qdata.h"

#include <numbers>

namespace qdb {

QuReg::QuReg(std::string name, Qubits qubits, Endianness endian, BasisTag tag)
    : name_(std::move(name)), qubits_(std::move(qubits)), endian_(endian),
      tag_(tag) {
  if (qubits_.empty()) throw ArgumentError("register " + name_ + " is empty");
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits_[i] == qubits_[j]) {
        throw ArgumentError("register " + name_ + " repeats qubit " +
                            to_string(qubits_[i]));
      }
    }
  }
}

QubitId QuReg::bit(std::size_t i) const {
  if (i >= qubits_.size()) {
    throw ArgumentError("bit " + std::to_string(i) + " out of range for " +
                        name_);
  }
  return endian_ == Endianness::kLittle ? qubits_[i]
                                        : qubits_[qubits_.size() - 1 - i];
}

Qubits QuReg::bits_lsb_first() const {
  Qubits out;
  for (std::size_t i = 0; i < width(); ++i) out.push_back(bit(i));
  return out;
}

QuReg QuReg::with_tag(BasisTag tag) const {
  return QuReg(name_, qubits_, endian_, tag);
}

QuInt::QuInt(QuReg reg) : reg_(std::move(reg)) {
  if (reg_.tag() != BasisTag::kComputational) {
    throw BasisError("integer view of Fourier-tagged register " + reg_.name());
  }
}

Block encode_classical(const QuReg& reg, std::uint64_t value) {
  if (reg.width() < 64 && (value >> reg.width()) != 0) {
    throw ArgumentError("value " + std::to_string(value) + " needs more than " +
                        std::to_string(reg.width()) + " bits");
  }
  Block b("encode-" + reg.name());
  for (std::size_t i = 0; i < reg.width(); ++i) {
    if ((value >> i) & 1) b.x(reg.bit(i));
  }
  return b;
}

void encode_classical(QuantumState& state, const QuReg& reg,
                      std::uint64_t value) {
  const Distribution d = state.probabilities(reg.qubits());
  if (1.0 - d[0] > 1e-9) {
    throw PreconditionError("register " + reg.name() + " is not |0>");
  }
  Executor(state).run(encode_classical(reg, value));
}

Distribution read_int(const QuantumState& state, const QuReg& reg) {
  if (reg.tag() != BasisTag::kComputational) {
    throw BasisError("register " + reg.name() +
                     " is in the Fourier basis; apply iqft before reading");
  }
  return state.probabilities(reg.bits_lsb_first());
}

Transformed qft(const QuReg& reg, bool with_final_swaps) {
  if (reg.tag() != BasisTag::kComputational) {
    throw BasisError("qft of " + reg.name() + " which is already Fourier");
  }
  Block b("qft-" + reg.name());
  const std::size_t n = reg.width();
  for (std::size_t j = n; j-- > 0;) {
    b.h(reg.bit(j));
    for (std::size_t k = j; k-- > 0;) {
      Block rot;
      rot.p(reg.bit(j), std::numbers::pi / static_cast<double>(1ull << (j - k)));
      b.controlled({reg.bit(k)}, std::move(rot));
    }
  }
  if (with_final_swaps) {
    for (std::size_t i = 0; i < n / 2; ++i) b.swap(reg.bit(i), reg.bit(n - 1 - i));
  }
  return {std::move(b), reg.with_tag(BasisTag::kFourier)};
}

Transformed iqft(const QuReg& reg, bool with_final_swaps) {
  if (reg.tag() != BasisTag::kFourier) {
    throw BasisError("iqft of " + reg.name() + " which is not Fourier");
  }
  Transformed fwd = qft(reg.with_tag(BasisTag::kComputational), with_final_swaps);
  Block b = invert(fwd.block);
  return {std::move(b), reg.with_tag(BasisTag::kComputational)};
}

}  // namespace qdb

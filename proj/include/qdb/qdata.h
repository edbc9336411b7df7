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

// Typed quantum registers and the quantum Fourier transform.

#ifndef QDB_QDATA_H_
#define QDB_QDATA_H_

#include <cstdint>
#include <string>

#include "qdb/ir.h"
#include "qdb/statevec.h"

namespace qdb {

enum class Endianness { kLittle, kBig };
enum class BasisTag { kComputational, kFourier };

// Immutable handle: a named, ordered list of qubits holding an integer.
class QuReg {
 public:
  QuReg(std::string name, Qubits qubits,
        Endianness endian = Endianness::kLittle,
        BasisTag tag = BasisTag::kComputational);

  const std::string& name() const { return name_; }
  const Qubits& qubits() const { return qubits_; }
  std::size_t width() const { return qubits_.size(); }
  Endianness endianness() const { return endian_; }
  BasisTag tag() const { return tag_; }

  // Qubit holding bit i (weight 2^i) of the integer.
  QubitId bit(std::size_t i) const;
  // Qubits ordered least significant first.
  Qubits bits_lsb_first() const;
  QubitId msb() const { return bit(width() - 1); }

  QuReg with_tag(BasisTag tag) const;

 private:
  std::string name_;
  Qubits qubits_;
  Endianness endian_;
  BasisTag tag_;
};

// Unsigned integer view of a computational-basis register.
class QuInt {
 public:
  explicit QuInt(QuReg reg);
  const QuReg& reg() const { return reg_; }
  std::size_t width() const { return reg_.width(); }
  QubitId bit(std::size_t i) const { return reg_.bit(i); }

 private:
  QuReg reg_;
};

// Basis-state preparation onto a register that is currently |0>.
Block encode_classical(const QuReg& reg, std::uint64_t value);
// Same, applied to a state after checking the register is |0>.
void encode_classical(QuantumState& state, const QuReg& reg,
                      std::uint64_t value);

// Distribution of the integer held by a computational-basis register.
Distribution read_int(const QuantumState& state, const QuReg& reg);

struct Transformed {
  Block block;
  QuReg reg;
};

// QFT, most significant bit first. Without the final swap layer the output
// is bit-reversed: bit i of the register holds phase e^{2 pi i x / 2^{i+1}},
// which is what the Fourier adders expect. With swaps the unitary is the DFT
// |x> -> sum_y e^{2 pi i x y / 2^n} |y> / sqrt(2^n).
Transformed qft(const QuReg& reg, bool with_final_swaps = true);
Transformed iqft(const QuReg& reg, bool with_final_swaps = true);

}  // namespace qdb

#endif  // QDB_QDATA_H_

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

// Fourier-space modular arithmetic for order finding.

#ifndef QDB_ARITH_H_
#define QDB_ARITH_H_

#include <cstdint>

#include "qdb/ir.h"
#include "qdb/qdata.h"

namespace qdb {

// x in [1, N) with a * x = 1 (mod N). Throws NoInverseError if gcd(a, N) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t modulus);

class ModulusContext {
 public:
  // Validates gcd(a, N) = 1 and a * a_inv = 1 (mod N).
  ModulusContext(std::int64_t modulus, std::int64_t a, std::int64_t a_inv);
  // Computes a_inv.
  static ModulusContext for_multiplier(std::int64_t modulus, std::int64_t a);
  // Skips validation. Only for deliberately wrong inputs.
  static ModulusContext unchecked(std::int64_t modulus, std::int64_t a,
                                  std::int64_t a_inv);

  std::int64_t modulus() const { return modulus_; }
  std::int64_t a() const { return a_; }
  std::int64_t a_inv() const { return a_inv_; }
  // ceil(log2 N)
  std::size_t width() const { return width_; }
  // Context for multiplying by a_inv.
  ModulusContext inverse() const;

 private:
  struct Unchecked {};
  ModulusContext(Unchecked, std::int64_t modulus, std::int64_t a,
                 std::int64_t a_inv);

  std::int64_t modulus_;
  std::int64_t a_;
  std::int64_t a_inv_;
  std::size_t width_;
};

struct ArithOptions {
  // Adder inner loop stops before a_indx = 0.
  bool adder_loop_short = false;
  // phi_add_mod's second iqft/qft pair uses the swapping convention.
  bool mirror_iqft_swapped = false;
  // c_ua omits the inverse multiplication that clears the accumulator.
  bool skip_uncompute = false;
};

// Adds constant `a` into Fourier-tagged `b`, conditioned on 0-2 controls.
Block phi_add(const QuReg& b, std::uint64_t a, const Qubits& controls = {},
              const ArithOptions& opts = {});

// (b + a) mod N on a Fourier-tagged register of width n+1, for b < N, when
// both controls are 1. The overflow bit is the MSB of `b`. `judge` must be
// |0> on entry and is |0> on exit.
Block phi_add_mod(const QuReg& b, std::uint64_t a, const ModulusContext& ctx,
                  const Qubits& controls, QubitId judge,
                  const ArithOptions& opts = {});

// acc += x * a mod N when `control` is 1. `acc` is computational, width n+1.
// Each modular addition gets its own scratch judge.
Block cmult_mod(const QuInt& x, const QuReg& acc, const ModulusContext& ctx,
                QubitId control, const ArithOptions& opts = {});

// x <- a * x mod N when `control` is 1, using `acc` (width n+1, |0>) as
// workspace. acc returns to |0> iff a_inv is the inverse of a.
Block c_ua(const QuInt& x, const ModulusContext& ctx, QubitId control,
           const QuReg& acc, const ArithOptions& opts = {});

}  // namespace qdb

#endif  // QDB_ARITH_H_

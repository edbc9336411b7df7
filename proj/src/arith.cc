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

#include "qdb/arith.h"

#include <cmath>
#include <numbers>
#include <numeric>

namespace qdb {

std::int64_t mod_inverse(std::int64_t a, std::int64_t modulus) {
  if (modulus < 1) throw ArgumentError("modulus must be positive");
  std::int64_t old_r = ((a % modulus) + modulus) % modulus, r = modulus;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) {
    throw NoInverseError(a, modulus, old_r == 0 ? modulus : old_r);
  }
  return ((old_s % modulus) + modulus) % modulus;
}

namespace {

std::size_t bit_width_of(std::int64_t modulus) {
  std::size_t n = 0;
  while ((std::int64_t{1} << n) < modulus) ++n;
  return n;
}

}  // namespace

ModulusContext::ModulusContext(Unchecked, std::int64_t modulus, std::int64_t a,
                               std::int64_t a_inv)
    : modulus_(modulus), a_(a), a_inv_(a_inv), width_(bit_width_of(modulus)) {
  if (modulus < 2) throw ArgumentError("modulus must be at least 2");
}

ModulusContext::ModulusContext(std::int64_t modulus, std::int64_t a,
                               std::int64_t a_inv)
    : ModulusContext(Unchecked{}, modulus, a, a_inv) {
  const std::int64_t g = std::gcd(a, modulus);
  if (g != 1) throw NoInverseError(a, modulus, g);
  if ((a % modulus) * (a_inv % modulus) % modulus != 1) {
    throw ValidationError(std::to_string(a) + " * " + std::to_string(a_inv) +
                          " is not 1 mod " + std::to_string(modulus));
  }
}

ModulusContext ModulusContext::for_multiplier(std::int64_t modulus,
                                              std::int64_t a) {
  return ModulusContext(modulus, a, mod_inverse(a, modulus));
}

ModulusContext ModulusContext::unchecked(std::int64_t modulus, std::int64_t a,
                                         std::int64_t a_inv) {
  return ModulusContext(Unchecked{}, modulus, a, a_inv);
}

ModulusContext ModulusContext::inverse() const {
  return ModulusContext(Unchecked{}, modulus_, a_inv_, a_);
}

Block phi_add(const QuReg& b, std::uint64_t a, const Qubits& controls,
              const ArithOptions& opts) {
  if (b.tag() != BasisTag::kFourier) {
    throw BasisError("phi_add needs a Fourier-tagged register, got " +
                     b.name());
  }
  if (controls.size() > 2) throw ArgumentError("phi_add takes 0-2 controls");
  Block rot;
  const int width = static_cast<int>(b.width());
  const int last = opts.adder_loop_short ? 1 : 0;
  for (int b_indx = width - 1; b_indx >= 0; --b_indx) {
    for (int a_indx = b_indx; a_indx >= last; --a_indx) {
      if ((a >> a_indx) & 1) {
        const double angle = std::numbers::pi / std::pow(2, b_indx - a_indx);
        rot.p(b.bit(static_cast<std::size_t>(b_indx)), angle);
      }
    }
  }
  Block out("phi_add(" + std::to_string(a) + ")");
  if (rot.empty()) return out;
  if (controls.empty()) {
    out.append(rot);
  } else {
    out.controlled(controls, std::move(rot));
  }
  return out;
}

Block phi_add_mod(const QuReg& b, std::uint64_t a, const ModulusContext& ctx,
                  const Qubits& controls, QubitId judge,
                  const ArithOptions& opts) {
  if (b.tag() != BasisTag::kFourier) {
    throw BasisError("phi_add_mod needs a Fourier-tagged register, got " +
                     b.name());
  }
  if (b.width() != ctx.width() + 1) {
    throw ArgumentError("phi_add_mod register needs width n+1 = " +
                        std::to_string(ctx.width() + 1));
  }
  if (controls.size() != 2) throw ArgumentError("phi_add_mod takes 2 controls");
  const auto n_mod = static_cast<std::uint64_t>(ctx.modulus());
  const QubitId overflow = b.msb();

  Block out("phi_add_mod(" + std::to_string(a) + ")");
  out.require_zero({judge}, "judge ancilla");
  out.call(phi_add(b, a, controls, opts));
  out.invert(phi_add(b, n_mod, {}, opts));
  Transformed plain = iqft(b, false);
  out.call(std::move(plain.block));
  out.cnot(overflow, judge);
  out.call(qft(plain.reg, false).block);
  out.call(phi_add(b, n_mod, {judge}, opts));
  out.invert(phi_add(b, a, controls, opts));
  // Restore the judge: b < N again now, so the MSB tells whether the earlier
  // subtraction underflowed.
  const bool swapped = opts.mirror_iqft_swapped;
  Transformed plain2 = iqft(b, swapped);
  out.call(std::move(plain2.block));
  out.x(overflow).cnot(overflow, judge).x(overflow);
  out.call(qft(plain2.reg, swapped).block);
  out.call(phi_add(b, a, controls, opts));
  return out;
}

Block cmult_mod(const QuInt& x, const QuReg& acc, const ModulusContext& ctx,
                QubitId control, const ArithOptions& opts) {
  if (acc.width() != ctx.width() + 1) {
    throw ArgumentError("accumulator needs width n+1 = " +
                        std::to_string(ctx.width() + 1));
  }
  const auto n_mod = static_cast<std::uint64_t>(ctx.modulus());
  Block out("cmult_mod(" + std::to_string(ctx.a()) + ")");
  Transformed f = qft(acc, false);
  out.call(std::move(f.block));
  std::uint64_t term = static_cast<std::uint64_t>(ctx.a()) % n_mod;
  for (std::size_t i = 0; i < x.width(); ++i) {
    const Qubits judge = new_placeholders(1);
    out.scratch(judge, phi_add_mod(f.reg, term, ctx, {control, x.bit(i)},
                                   judge[0], opts));
    term = (term * 2) % n_mod;
  }
  out.call(iqft(f.reg, false).block);
  return out;
}

Block c_ua(const QuInt& x, const ModulusContext& ctx, QubitId control,
           const QuReg& acc, const ArithOptions& opts) {
  if (x.width() != ctx.width()) {
    throw ArgumentError("x register needs width n = " +
                        std::to_string(ctx.width()));
  }
  Block out("c_ua(" + std::to_string(ctx.a()) + ")");
  out.call(cmult_mod(x, acc, ctx, control, opts));
  Block swaps("cswap");
  for (std::size_t i = 0; i < x.width(); ++i) {
    swaps.cswap(control, x.bit(i), acc.bit(i));
  }
  out.call(std::move(swaps));
  if (!opts.skip_uncompute) {
    out.invert(cmult_mod(x, acc, ctx.inverse(), control, opts));
  }
  return out;
}

}  // namespace qdb

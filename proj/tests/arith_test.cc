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

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"

namespace qdb {
namespace {

Qubits range(std::uint32_t from, std::uint32_t count) {
  Qubits out;
  for (std::uint32_t i = 0; i < count; ++i) out.push_back(qubit(from + i));
  return out;
}

// Runs `b` on |value> and returns the distribution of `reg`.
Distribution run_read(const Block& b, std::size_t n, std::uint64_t value,
                      const QuReg& reg) {
  QuantumState s = QuantumState::basis(n, value);
  Executor(s).run(b);
  EXPECT_EQ(s.num_qubits(), n);
  return read_int(s, reg);
}

TEST(ModInverse, examples) {
  EXPECT_EQ(mod_inverse(7, 15), 13);
  EXPECT_EQ(mod_inverse(4, 15), 4);
  EXPECT_EQ(mod_inverse(13, 15), 7);
  for (std::int64_t n : {2, 15, 21, 97}) EXPECT_EQ(mod_inverse(1, n), 1);
  try {
    mod_inverse(6, 15);
    FAIL();
  } catch (const NoInverseError& e) {
    EXPECT_EQ(e.gcd(), 3);
  }
}

TEST(ModInverse, brute_force_agreement) {
  for (std::int64_t n = 2; n < 40; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      std::int64_t want = -1;
      for (std::int64_t x = 1; x < n; ++x) {
        if (a * x % n == 1) want = x;
      }
      if (want < 0) {
        EXPECT_THROW(mod_inverse(a, n), NoInverseError);
      } else {
        EXPECT_EQ(mod_inverse(a, n), want);
      }
    }
  }
}

TEST(ModulusContext, validates_inverse_pairs) {
  EXPECT_NO_THROW(ModulusContext(15, 7, 13));
  EXPECT_THROW(ModulusContext(15, 7, 12), ValidationError);
  EXPECT_THROW(ModulusContext(15, 5, 3), NoInverseError);
  EXPECT_EQ(ModulusContext::for_multiplier(15, 7).a_inv(), 13);
  EXPECT_EQ(ModulusContext::unchecked(15, 7, 12).a_inv(), 12);
  EXPECT_EQ(ModulusContext(15, 7, 13).width(), 4u);
}

TEST(PhiAdd, zero_constant_is_empty) {
  QuReg b("b", range(0, 3), Endianness::kLittle, BasisTag::kFourier);
  EXPECT_TRUE(phi_add(b, 0).empty());
}

TEST(PhiAdd, requires_fourier_tag) {
  QuReg b("b", range(0, 3));
  EXPECT_THROW(phi_add(b, 1), BasisError);
}

void exhaustive_add(std::size_t w) {
  const std::uint64_t m = 1u << w;
  QuReg b("b", range(0, static_cast<std::uint32_t>(w)));
  for (std::uint64_t a = 0; a < m; ++a) {
    for (std::uint64_t v = 0; v < m; ++v) {
      Transformed f = qft(b, false);
      Block add;
      add.call(f.block).call(phi_add(f.reg, a)).call(iqft(f.reg, false).block);
      ASSERT_NEAR(run_read(add, w, v, b)[(a + v) % m], 1.0, 1e-9)
          << a << " + " << v;
      Block sub;
      sub.call(f.block).invert(phi_add(f.reg, a)).call(iqft(f.reg, false).block);
      ASSERT_NEAR(run_read(sub, w, v, b)[(v + m - a) % m], 1.0, 1e-9)
          << v << " - " << a;
    }
  }
}

TEST(PhiAdd, exhaustive_width_three) { exhaustive_add(3); }
TEST(PhiAdd, exhaustive_width_four) { exhaustive_add(4); }

TEST(PhiAdd, controls_gate_the_addition) {
  const std::size_t w = 3;
  QuReg b("b", range(0, 3));
  Qubits c = {qubit(3), qubit(4)};
  for (std::size_t nc = 1; nc <= 2; ++nc) {
    Qubits ctrl(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(nc));
    for (std::uint64_t cv = 0; cv < (1u << nc); ++cv) {
      for (std::uint64_t v = 0; v < 8; ++v) {
        Transformed f = qft(b, false);
        Block add;
        add.call(f.block).call(phi_add(f.reg, 5, ctrl)).call(iqft(f.reg, false).block);
        const bool on = cv == (1u << nc) - 1;
        const std::uint64_t want = on ? (v + 5) % 8 : v;
        ASSERT_NEAR(run_read(add, w + nc, v | (cv << w), b)[want], 1.0, 1e-9);
      }
    }
  }
}

TEST(PhiAdd, short_loop_mutant_breaks_odd_constants) {
  QuReg b("b", range(0, 3));
  ArithOptions bad;
  bad.adder_loop_short = true;
  Transformed f = qft(b, false);
  Block add;
  add.call(f.block).call(phi_add(f.reg, 1, {}, bad)).call(iqft(f.reg, false).block);
  EXPECT_LT(run_read(add, 3, 2, b)[3], 0.5);
}

// Layout for the modular tests: b = 0..4, c1 = 5, c2 = 6, judge = 7.
struct ModLayout {
  QuReg b{"b", range(0, 5)};
  QubitId c1 = qubit(5), c2 = qubit(6), judge = qubit(7);
};

Block mod_add_block(const ModLayout& l, std::uint64_t a,
                    const ModulusContext& ctx, const ArithOptions& o = {}) {
  Transformed f = qft(l.b, false);
  Block out;
  out.call(f.block);
  out.call(phi_add_mod(f.reg, a, ctx, {l.c1, l.c2}, l.judge, o));
  out.call(iqft(f.reg, false).block);
  return out;
}

TEST(PhiAddMod, exhaustive_valid_inputs) {
  ModLayout l;
  const ModulusContext ctx = ModulusContext::for_multiplier(15, 7);
  for (std::uint64_t a : {7u, 4u, 1u, 13u}) {
    const Block blk = mod_add_block(l, a, ctx);
    for (std::uint64_t v = 0; v < 15; ++v) {
      for (std::uint64_t cv = 0; cv < 4; ++cv) {
        QuantumState s = QuantumState::basis(8, v | (cv << 5));
        Executor(s).run(blk);
        const std::uint64_t want = cv == 3 ? (v + a) % 15 : v;
        ASSERT_NEAR(read_int(s, l.b)[want], 1.0, 1e-9) << a << " " << v;
        const Qubits j{l.judge};
        ASSERT_LE(1.0 - s.probabilities(j)[0], 1e-9);
      }
    }
  }
}

TEST(PhiAddMod, documented_examples) {
  ModLayout l;
  const ModulusContext ctx = ModulusContext::for_multiplier(15, 7);
  EXPECT_NEAR(run_read(mod_add_block(l, 7, ctx), 8, 7 | (3u << 5), l.b)[14], 1.0, 1e-9);
  EXPECT_NEAR(run_read(mod_add_block(l, 9, ctx), 8, 8 | (3u << 5), l.b)[2], 1.0, 1e-9);
}

TEST(PhiAddMod, dirty_judge_is_a_precondition_error) {
  ModLayout l;
  const ModulusContext ctx = ModulusContext::for_multiplier(15, 7);
  QuantumState s = QuantumState::basis(8, 1u << 7);
  EXPECT_THROW(Executor(s).run(mod_add_block(l, 7, ctx)), PreconditionError);
}

TEST(PhiAddMod, inverse_composed_is_identity) {
  ModLayout l;
  const ModulusContext ctx = ModulusContext::for_multiplier(15, 7);
  Transformed f = qft(l.b, false);
  const Block fwd = phi_add_mod(f.reg, 7, ctx, {l.c1, l.c2}, l.judge);
  Block both;
  both.call(fwd).call(invert(fwd));
  // Every judge = 0 input, amplitudes compared in full.
  for (std::uint64_t v = 0; v < 128; ++v) {
    QuantumState s = QuantumState::basis(8, v);
    ExecOptions o;
    o.throw_on_requirement = false;
    Executor(s, o).run(both);
    ASSERT_NEAR(std::norm(s.amplitudes()[v]), 1.0, 1e-10) << v;
  }
}

// Layout: control = 0, x = 1..4, acc = 5..9.
struct MulLayout {
  QubitId control = qubit(0);
  QuInt x{QuReg("x", range(1, 4))};
  QuReg acc{"acc", range(5, 5)};
};

TEST(CMultMod, multiplies_into_accumulator) {
  MulLayout l;
  for (std::int64_t a : {7, 4, 13, 1}) {
    const ModulusContext ctx = ModulusContext::for_multiplier(15, a);
    const Block blk = cmult_mod(l.x, l.acc, ctx, l.control);
    for (std::uint64_t x = 0; x < 15; ++x) {
      for (std::uint64_t c = 0; c < 2; ++c) {
        QuantumState s = QuantumState::basis(10, c | (x << 1));
        Executor(s).run(blk);
        const std::uint64_t want = c ? (x * a) % 15 : 0;
        ASSERT_NEAR(read_int(s, l.acc)[want], 1.0, 1e-9) << a << " " << x;
        ASSERT_NEAR(read_int(s, l.x.reg())[x], 1.0, 1e-9);
      }
    }
  }
}

TEST(CMultMod, inverse_composed_is_identity_on_random_valid_states) {
  MulLayout l;
  const ModulusContext ctx = ModulusContext::for_multiplier(15, 7);
  const Block fwd = cmult_mod(l.x, l.acc, ctx, l.control);
  Block both;
  both.call(fwd).call(invert(fwd));
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 3; ++trial) {
    // Superposition over control, x and acc < 15.
    QuantumState s(10);
    Block prep;
    for (std::uint32_t q = 0; q < 5; ++q) prep.ry(qubit(q), 0.3 + 0.4 * trial + q);
    for (std::uint32_t q = 5; q < 8; ++q) prep.ry(qubit(q), 1.1 * (q - 4));
    Executor(s).run(prep);
    const std::vector<cx> before = s.amplitudes();
    Executor(s).run(both);
    for (std::size_t i = 0; i < before.size(); ++i) {
      ASSERT_NEAR(std::abs(before[i] - s.amplitudes()[i]), 0.0, 1e-10);
    }
  }
}

TEST(CUa, permutes_x_and_clears_workspace) {
  MulLayout l;
  for (auto [a, a_inv] : {std::pair{7, 13}, {4, 4}, {1, 1}, {13, 7}}) {
    const ModulusContext ctx(15, a, a_inv);
    const Block blk = c_ua(l.x, ctx, l.control, l.acc);
    for (std::uint64_t x = 1; x < 15; ++x) {
      for (std::uint64_t c = 0; c < 2; ++c) {
        QuantumState s = QuantumState::basis(10, c | (x << 1));
        Executor(s).run(blk);
        const std::uint64_t want = c ? (x * a) % 15 : x;
        ASSERT_NEAR(read_int(s, l.x.reg())[want], 1.0, 1e-9) << a << " " << x;
        ASSERT_NEAR(read_int(s, l.acc)[0], 1.0, 1e-9);
      }
    }
  }
}

TEST(CUa, wrong_inverse_leaves_workspace_dirty) {
  MulLayout l;
  const Block blk = c_ua(l.x, ModulusContext::unchecked(15, 7, 12), l.control, l.acc);
  QuantumState s = QuantumState::basis(10, 1 | (1u << 1));
  Executor(s).run(blk);
  EXPECT_LT(read_int(s, l.acc)[0], 1e-9);
}

}  // namespace
}  // namespace qdb

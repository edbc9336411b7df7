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

#include <gtest/gtest.h>

#include "oracles.h"

namespace qdb {
namespace {

QuReg reg3(Endianness e = Endianness::kLittle) {
  return QuReg("r", {qubit(0), qubit(1), qubit(2)}, e);
}

TEST(QData, encode_zero_emits_no_gates) {
  EXPECT_TRUE(encode_classical(reg3(), 0).empty());
}

TEST(QData, encode_five_flips_bits_zero_and_two) {
  auto ins = lower(encode_classical(reg3(), 5));
  ASSERT_EQ(ins.size(), 2u);
  EXPECT_EQ(ins[0].qubits, Qubits{qubit(0)});
  EXPECT_EQ(ins[1].qubits, Qubits{qubit(2)});
}

TEST(QData, encode_read_round_trip_up_to_width_four) {
  for (std::size_t w = 1; w <= 4; ++w) {
    Qubits qs;
    for (std::uint32_t i = 0; i < w; ++i) qs.push_back(qubit(i));
    for (Endianness e : {Endianness::kLittle, Endianness::kBig}) {
      QuReg r("r", qs, e);
      for (std::uint64_t v = 0; v < (1u << w); ++v) {
        QuantumState s(w);
        encode_classical(s, r, v);
        ASSERT_NEAR(read_int(s, r)[v], 1.0, 1e-15);
      }
    }
  }
}

TEST(QData, endianness_duality) {
  for (std::uint64_t v = 0; v < 8; ++v) {
    QuantumState s(3);
    encode_classical(s, reg3(Endianness::kLittle), v);
    const std::uint64_t rev = ((v & 1) << 2) | (v & 2) | ((v >> 2) & 1);
    EXPECT_NEAR(read_int(s, reg3(Endianness::kBig))[rev], 1.0, 1e-15);
  }
}

TEST(QData, encode_onto_dirty_register_is_a_precondition_error) {
  QuantumState s = QuantumState::basis(3, 1);
  EXPECT_THROW(encode_classical(s, reg3(), 2), PreconditionError);
  EXPECT_THROW(encode_classical(reg3(), 8), ArgumentError);
}

TEST(QData, read_uniform_two_qubits) {
  QuantumState s(2);
  QuReg r("r", {qubit(0), qubit(1)});
  Executor(s).run(Block().h(qubit(0)).h(qubit(1)));
  Distribution d = read_int(s, r);
  for (int v = 0; v < 4; ++v) EXPECT_NEAR(d[v], 0.25, 1e-12);
}

TEST(QData, fourier_register_refuses_readout) {
  QuantumState s(3);
  Transformed f = qft(reg3());
  EXPECT_EQ(f.reg.tag(), BasisTag::kFourier);
  EXPECT_THROW(read_int(s, f.reg), BasisError);
  EXPECT_THROW(qft(f.reg), BasisError);
  EXPECT_THROW(iqft(reg3()), BasisError);
  EXPECT_THROW(QuInt(f.reg), BasisError);
}

TEST(QData, qft_of_zero_is_uniform) {
  QuantumState s(3);
  Transformed f = qft(reg3());
  Executor(s).run(f.block);
  Distribution d = s.probabilities(reg3().qubits());
  for (int v = 0; v < 8; ++v) EXPECT_NEAR(d[v], 0.125, 1e-12);
}

TEST(QData, iqft_inverts_qft_on_basis_states) {
  for (bool swaps : {true, false}) {
    for (std::uint64_t v = 0; v < 8; ++v) {
      QuantumState s = QuantumState::basis(3, v);
      Transformed f = qft(reg3(), swaps);
      Transformed b = iqft(f.reg, swaps);
      Executor(s).run(f.block);
      Executor(s).run(b.block);
      ASSERT_NEAR(read_int(s, b.reg)[v], 1.0, 1e-12);
    }
  }
}

TEST(QData, iqft_qft_is_identity_unitary) {
  Transformed f = qft(reg3());
  Block both;
  both.call(f.block).call(iqft(f.reg).block);
  EXPECT_LT(oracle::diff(oracle::from(unitary_of(both, 3)),
                         oracle::Mat::Identity(8, 8)),
            1e-10);
}

TEST(QData, qft_columns_are_geometric_sequences) {
  // With swaps: column k holds w^{jk}/sqrt(8).
  const CMatrix u = unitary_of(qft(reg3()).block, 3);
  EXPECT_LT(oracle::diff(oracle::from(u), oracle::dft(3)), 1e-12);
}

TEST(QData, swapless_qft_is_bit_reversed_dft) {
  const oracle::Mat u = oracle::from(unitary_of(qft(reg3(), false).block, 3));
  const oracle::Mat f = oracle::dft(3);
  auto rev = [](int v) { return ((v & 1) << 2) | (v & 2) | ((v >> 2) & 1); };
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) EXPECT_NEAR(std::abs(u(rev(r), c) - f(r, c)), 0, 1e-12);
}

TEST(QData, iqft_of_analytic_fourier_state_reads_three) {
  // Load sum_k e^{2 pi i 3k/8}|k>/sqrt(8) as the first column of a unitary.
  oracle::Mat basis = oracle::Mat::Random(8, 8);
  for (int k = 0; k < 8; ++k) {
    basis(k, 0) = std::polar(1 / std::sqrt(8.0), 2 * oracle::kPi * 3 * k / 8);
  }
  Eigen::HouseholderQR<oracle::Mat> qr(basis);
  oracle::Mat q = qr.householderQ();
  CMatrix load(8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) load(r, c) = q(r, c);
  QuantumState s(3);
  s.apply(load, reg3().qubits());
  Transformed b = iqft(reg3().with_tag(BasisTag::kFourier));
  Executor(s).run(b.block);
  EXPECT_NEAR(read_int(s, b.reg)[3], 1.0, 1e-12);
}

TEST(QData, skipping_final_swaps_reverses_readout) {
  // The Fourier state of 3 decoded without swaps reads bit-reversed 3 = 6.
  QuantumState s = QuantumState::basis(3, 3);
  Executor(s).run(qft(reg3(), true).block);
  Transformed b = iqft(reg3().with_tag(BasisTag::kFourier), false);
  Executor(s).run(b.block);
  EXPECT_LT(read_int(s, b.reg)[3], 1.0 - 1e-3);
}

}  // namespace
}  // namespace qdb

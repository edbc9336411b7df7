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

#ifndef QDB_BENCH_H_
#define QDB_BENCH_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdb/arith.h"
#include "qdb/assertions.h"
#include "qdb/ir.h"
#include "qdb/qdata.h"
#include "qdb/statevec.h"

namespace qdb {

// ---- Hamiltonians -------------------------------------------------------

struct PauliTerm {
  double coefficient = 0.0;
  // Character i acts on qubit i.
  std::string word;

  bool is_identity() const;
};

struct HamiltonianSpec {
  std::size_t num_qubits = 0;
  std::vector<PauliTerm> terms;

  // Sum of identity-term coefficients.
  double identity_offset() const;
  // Throws ValidationError.
  void validate() const;
};

// Format: a `qubits: <n>` header, then `<coefficient> <pauli-word>` per line.
// Blank lines and `#` comments are ignored. Throws ParseError with the line.
HamiltonianSpec parse_hamiltonian(const std::string& text);
HamiltonianSpec load_hamiltonian(const std::string& path);

// Path of the shipped H2 file.
std::string default_hamiltonian_path();

struct PauliOptions {
  // Mutation: rotate Y letters with the X basis change.
  bool y_as_x = false;
};

// exp(-i theta P) up to global phase, P given by `word` on `qs`. An identity
// word yields an empty block.
Block pauli_exp_circuit(const std::string& word, double theta,
                        const Qubits& qs, const PauliOptions& opts = {});

// (prod_j exp(-i c_j t/r P_j))^r in file order. Identity terms are dropped,
// so the result equals exp(-i (H - offset) t) in the large-r limit.
Block trotter_circuit(const HamiltonianSpec& h, double t, int r,
                      const Qubits& qs, const PauliOptions& opts = {});

// ---- Iterative phase estimation -----------------------------------------

struct IpeResult {
  // Over m-bit integers s, phase = s / 2^m.
  Distribution phase;
  // Sampled histogram; empty when shots = 0.
  std::vector<std::uint64_t> counts;
  // Final marginal of the system register, branch-weighted.
  Distribution system;
};

// System qubits are 0..num_system-1; the recycled control is qubit
// num_system. power(j) must implement U^(2^j) on the system.
IpeResult run_ipe(const std::function<Block(std::size_t)>& power,
                  const Block& prep, std::size_t num_system, std::size_t m,
                  std::size_t shots, std::uint64_t seed,
                  const LiftOptions& lift = {});

// ---- Benchmarks ---------------------------------------------------------

// Bonding up, bonding down, antibonding up, antibonding down on q0..q3.
struct ElectronAssignment {
  std::uint64_t occupation = 0;  // bit i = qubit i

  // Names G, E1a, E1b, E2a, E2b, E3, or a 4-character 0/1 string in qubit
  // order. Throws ArgumentError.
  static ElectronAssignment parse(const std::string& s);
  static const std::vector<std::pair<std::string, ElectronAssignment>>& all();
  std::string bits() const;
  void validate() const;
};

// Energy from an m-bit IPE outcome: offset - 2 pi s' / (2^m t) where s' is s
// taken into (-2^(m-1), 2^(m-1)].
double phase_to_energy(std::uint64_t s, std::size_t m, double t,
                       double offset);

// Program mutations. The default value is the correct program.
struct Mutations {
  // Shor
  std::optional<std::int64_t> shor_inverse_k0;
  AbcVariant abc = AbcVariant::kOmitA;
  ArithOptions arith;
  bool shor_lsb_first = false;
  // Grover
  bool grover_skip_prep_h0 = false;
  std::optional<int> grover_iterations;
  bool grover_chain_wrong_control = false;
  bool grover_unmirrored_diffusion = false;
  // H2
  std::optional<ElectronAssignment> h2_assignment;
  std::optional<std::size_t> h2_flip_term;
  std::optional<int> h2_trotter_steps;
  bool h2_y_as_x = false;

  bool any() const;
};

struct RunOptions {
  StageSet stages;
  std::size_t shots = 0;
  std::uint64_t seed = 0;
  Mutations mutations;
};

struct BenchmarkResult {
  std::string name;
  Distribution output_distribution;
  Distribution ancilla_distribution;
  // Value = (ancilla << output bits) | output, when recorded.
  std::optional<Distribution> joint_distribution;
  std::optional<double> energy_estimate;
  std::vector<AssertReport> assert_reports;
  std::uint64_t seed = 0;
  double wall_time = 0.0;  // seconds
  // Sampled output histogram, empty in exact mode.
  std::vector<std::uint64_t> counts;
  // Benchmark-specific scalars.
  std::map<std::string, double> metrics;
  // Shor only: (a_k, a_k^-1) per iteration.
  std::vector<std::pair<std::int64_t, std::int64_t>> schedule;
};

struct H2Config {
  HamiltonianSpec hamiltonian;
  ElectronAssignment assignment = ElectronAssignment::parse("G");
  double t = 1.0;
  int r = 8;
  std::size_t m = 8;
};

BenchmarkResult run_h2(const H2Config& cfg, const RunOptions& opts = {});

struct ShorConfig {
  std::int64_t guess = 7;
  std::size_t bits = 3;
};

// (a_k, a_k^-1) with a_k = guess^(2^k) mod 15.
std::vector<std::pair<std::int64_t, std::int64_t>> shor15_schedule(
    std::int64_t guess, std::size_t bits);

BenchmarkResult run_shor15(const ShorConfig& cfg, const RunOptions& opts = {});

// Phase flip on |marked> of q0..q(n-1): X-conjugated multi-controlled Z.
Block make_bitmask_oracle(std::size_t n, std::uint64_t marked);

struct GroverConfig {
  std::size_t n = 3;
  std::vector<std::uint64_t> marked = {5};
  // Defaults to floor(pi/4 sqrt(2^n / M)).
  std::optional<int> iterations;
};

int grover_default_iterations(std::size_t n, std::size_t marked_count);

// H on q0..q(n-1).
Block grover_prepare(std::size_t n, const Mutations& mut = {});

// Diffusion on q0..q(n-1) with chain ancillas `anc` (n-2 of them for n >= 3).
Block grover_diffusion(std::size_t n, const Qubits& anc,
                       const Mutations& mut = {});

BenchmarkResult run_grover(const GroverConfig& cfg,
                           const RunOptions& opts = {});

}  // namespace qdb

#endif  // QDB_BENCH_H_

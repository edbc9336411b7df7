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

#include <Eigen/Dense>
#include <bit>
#include <chrono>
#include <cmath>
#include <numbers>

#include "qdb/bench.h"

namespace qdb {

ElectronAssignment ElectronAssignment::parse(const std::string& s) {
  for (const auto& [name, a] : all()) {
    if (name == s) return a;
  }
  if (s.size() == 4 && s.find_first_not_of("01") == std::string::npos) {
    ElectronAssignment a;
    for (std::size_t i = 0; i < 4; ++i) {
      if (s[i] == '1') a.occupation |= std::uint64_t{1} << i;
    }
    a.validate();
    return a;
  }
  throw ArgumentError("unknown electron assignment '" + s + "'");
}

const std::vector<std::pair<std::string, ElectronAssignment>>&
ElectronAssignment::all() {
  static const std::vector<std::pair<std::string, ElectronAssignment>> k = {
      {"G", {0b0011}},   {"E1a", {0b1010}}, {"E1b", {0b0101}},
      {"E2a", {0b0110}}, {"E2b", {0b1001}}, {"E3", {0b1100}},
  };
  return k;
}

std::string ElectronAssignment::bits() const {
  std::string s(4, '0');
  for (std::size_t i = 0; i < 4; ++i) {
    if ((occupation >> i) & 1) s[i] = '1';
  }
  return s;
}

void ElectronAssignment::validate() const {
  if (occupation >= 16 || std::popcount(occupation) != 2) {
    throw ValidationError("assignment must place two electrons on four orbitals");
  }
}

double phase_to_energy(std::uint64_t s, std::size_t m, double t,
                       double offset) {
  const double full = std::ldexp(1.0, static_cast<int>(m));
  double signed_s = static_cast<double>(s);
  if (signed_s > full / 2) signed_s -= full;
  return offset - 2.0 * std::numbers::pi * signed_s / (full * t);
}

bool Mutations::any() const {
  return shor_inverse_k0 || abc != AbcVariant::kOmitA ||
         arith.adder_loop_short || arith.mirror_iqft_swapped ||
         arith.skip_uncompute || shor_lsb_first || grover_skip_prep_h0 ||
         grover_iterations || grover_chain_wrong_control ||
         grover_unmirrored_diffusion || h2_assignment || h2_flip_term ||
         h2_trotter_steps || h2_y_as_x;
}

namespace {

Qubits system_qubits(std::size_t n) {
  Qubits qs;
  for (std::size_t i = 0; i < n; ++i) qs.push_back(qubit(static_cast<std::uint32_t>(i)));
  return qs;
}

// Energy of the Trotter step unitary's eigenvector that overlaps the
// prepared state (weight >= 0.25) and lies nearest `hint`.
double trotter_energy(const HamiltonianSpec& h, double t, int r,
                      std::uint64_t prepared, double hint,
                      const PauliOptions& popts) {
  const std::size_t n = h.num_qubits;
  const CMatrix u = unitary_of(trotter_circuit(h, t, r, system_qubits(n), popts), n);
  const std::size_t dim = u.dim();
  Eigen::MatrixXcd m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = u(i, j);
  }
  // Schur vectors of a normal matrix are orthonormal eigenvectors.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(m);
  const Eigen::MatrixXcd& q = schur.matrixU();
  const Eigen::MatrixXcd& tri = schur.matrixT();
  const double offset = h.identity_offset();
  double best = hint, best_dist = INFINITY;
  for (std::size_t k = 0; k < dim; ++k) {
    const double weight = std::norm(q(prepared, k));
    if (weight < 0.25) continue;
    const double e = offset - std::arg(tri(k, k)) / t;
    if (std::abs(e - hint) < best_dist) {
      best_dist = std::abs(e - hint);
      best = e;
    }
  }
  return best;
}

std::vector<int> trotter_sequence(int r) {
  std::vector<int> seq;
  int start = r;
  for (int i = 0; i < 2 && start % 2 == 0; ++i) start /= 2;
  for (int v = start; v <= r; v *= 2) seq.push_back(v);
  seq.push_back(2 * r);
  return seq;
}

}  // namespace

BenchmarkResult run_h2(const H2Config& cfg, const RunOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  cfg.hamiltonian.validate();
  if (cfg.hamiltonian.num_qubits != 4) {
    throw ValidationError("h2 benchmark expects a 4-qubit hamiltonian");
  }
  cfg.assignment.validate();
  if (cfg.r < 1 || cfg.m < 1 || cfg.m > 12 || !(cfg.t > 0.0)) {
    throw ArgumentError("h2 needs r >= 1, 1 <= m <= 12, t > 0");
  }
  const Mutations& mut = opts.mutations;

  HamiltonianSpec h = cfg.hamiltonian;
  if (mut.h2_flip_term) {
    if (*mut.h2_flip_term >= h.terms.size()) {
      throw ValidationError("coefficient mutation targets a missing term");
    }
    h.terms[*mut.h2_flip_term].coefficient *= -1.0;
  }
  const int r = mut.h2_trotter_steps.value_or(cfg.r);
  const ElectronAssignment prepared = mut.h2_assignment.value_or(cfg.assignment);
  PauliOptions popts;
  popts.y_as_x = mut.h2_y_as_x;

  const Qubits sys = system_qubits(4);
  const QuReg reg("orbitals", sys);
  const Block prep = encode_classical(reg, prepared.occupation);
  const double offset = h.identity_offset();

  const Block unit = trotter_circuit(h, cfg.t, r, sys, popts);
  const BlockPtr shared = share(unit);
  auto power = [&](std::size_t j) {
    Block b("U^" + std::to_string(std::size_t{1} << j));
    for (std::size_t i = 0; i < (std::size_t{1} << j); ++i) b.call(shared);
    return b;
  };

  BenchmarkResult res;
  res.name = "h2";
  res.seed = opts.seed;

  if (opts.stages.pre) {
    QuantumState s(4);
    Executor(s).run(prep);
    AssertReport rep = assert_classical(s, reg, cfg.assignment.occupation);
    rep.stage = Stage::kPre;
    rep.location = "h2/prepare";
    res.assert_reports.push_back(std::move(rep));
  }

  const IpeResult ipe = run_ipe(power, prep, 4, cfg.m, opts.shots, opts.seed);
  const std::uint64_t mode = ipe.phase.mode();
  const double energy = phase_to_energy(mode, cfg.m, cfg.t, offset);
  const double resolution =
      2.0 * std::numbers::pi / (std::ldexp(1.0, static_cast<int>(cfg.m)) * cfg.t);

  if (opts.stages.progress) {
    std::vector<std::pair<int, double>> energies;
    for (int rr : trotter_sequence(r)) {
      energies.emplace_back(
          rr, trotter_energy(h, cfg.t, rr, prepared.occupation, energy, popts));
    }
    AssertReport tr = check_progress_trotter(energies, resolution);
    tr.location = "h2/trotter";
    res.metrics["trotter_gap"] =
        std::abs(energies.back().second - energies[energies.size() - 2].second);
    res.assert_reports.push_back(std::move(tr));

    // One more phase bit must refine, not move, the estimate.
    const IpeResult fine = run_ipe(power, prep, 4, cfg.m + 1, 0, opts.seed);
    AssertReport pr = check_progress_precision(ipe.phase, fine.phase);
    pr.location = "h2/phase-bits";
    res.assert_reports.push_back(std::move(pr));
  }

  if (opts.stages.post) {
    // The hamiltonian conserves electron number.
    std::vector<std::uint64_t> two;
    for (std::uint64_t v = 0; v < 16; ++v) {
      if (std::popcount(v) == 2) two.push_back(v);
    }
    AssertReport pn = assert_output_mass(ipe.system, two, 1.0 - 1e-9);
    pn.stage = Stage::kPost;
    pn.location = "h2/electron-number";
    res.assert_reports.push_back(std::move(pn));
  }

  res.output_distribution = ipe.phase;
  res.ancilla_distribution = Distribution::point(1, 0);
  res.energy_estimate = energy;
  res.counts = ipe.counts;
  res.metrics["phase_mode"] = static_cast<double>(mode);
  res.metrics["energy_resolution"] = resolution;
  res.metrics["identity_offset"] = offset;
  res.metrics["trotter_steps"] = r;
  res.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace qdb

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

#include "qdb/buglab.h"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace qdb {

// ---- Benchmarks ---------------------------------------------------------

const char* to_string(BenchmarkId b) {
  switch (b) {
    case BenchmarkId::kH2: return "h2";
    case BenchmarkId::kShor15: return "shor15";
    case BenchmarkId::kGrover: return "grover";
  }
  return "?";
}

BenchmarkId parse_benchmark(const std::string& s) {
  for (BenchmarkId b : all_benchmarks()) {
    if (s == to_string(b)) return b;
  }
  throw ArgumentError("unknown benchmark '" + s + "' (expected h2, shor15 or grover)");
}

const std::vector<BenchmarkId>& all_benchmarks() {
  static const std::vector<BenchmarkId> k = {BenchmarkId::kH2, BenchmarkId::kShor15,
                                             BenchmarkId::kGrover};
  return k;
}

BenchmarkConfig BenchmarkConfig::defaults(BenchmarkId id) {
  BenchmarkConfig cfg;
  cfg.id = id;
  if (id == BenchmarkId::kH2) {
    cfg.h2.hamiltonian = load_hamiltonian(default_hamiltonian_path());
  }
  return cfg;
}

BenchmarkResult run_benchmark(const BenchmarkConfig& cfg, const RunOptions& opts) {
  switch (cfg.id) {
    case BenchmarkId::kH2: return run_h2(cfg.h2, opts);
    case BenchmarkId::kShor15: return run_shor15(cfg.shor, opts);
    case BenchmarkId::kGrover: return run_grover(cfg.grover, opts);
  }
  throw ArgumentError("unknown benchmark");
}

// ---- Enum names ---------------------------------------------------------

const char* to_string(TaxonomyClass c) {
  switch (c) {
    case TaxonomyClass::kClassicalInput: return "classical_input";
    case TaxonomyClass::kInitialValue: return "initial_value";
    case TaxonomyClass::kWrongOperation: return "wrong_operation";
    case TaxonomyClass::kWrongIndexing: return "wrong_indexing";
    case TaxonomyClass::kWrongEncoding: return "wrong_encoding";
    case TaxonomyClass::kBadDeallocation: return "bad_deallocation";
    case TaxonomyClass::kInsufficientProgress: return "insufficient_progress";
  }
  return "?";
}

const char* to_string(BugLocation l) {
  switch (l) {
    case BugLocation::kClassicalParams: return "classical_params";
    case BugLocation::kQubitAlloc: return "qubit_alloc";
    case BugLocation::kBasic: return "basic";
    case BugLocation::kIterate: return "iterate";
    case BugLocation::kMirror: return "mirror";
    case BugLocation::kRecurse: return "recurse";
    case BugLocation::kDealloc: return "dealloc";
  }
  return "?";
}

const char* to_string(Defense d) {
  switch (d) {
    case Defense::kUnitTesting: return "unit_testing";
    case Defense::kDataTypes: return "data_types";
    case Defense::kReverseComp: return "reverse_comp";
    case Defense::kControlledOps: return "controlled_ops";
    case Defense::kPreconditions: return "preconditions";
    case Defense::kProgress: return "progress";
    case Defense::kPostconditions: return "postconditions";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kDetected: return "detected";
    case Verdict::kMissed: return "missed";
    case Verdict::kNotApplicable: return "not_applicable";
  }
  return "?";
}

const std::vector<TaxonomyClass>& all_taxonomy_classes() {
  static const std::vector<TaxonomyClass> k = {
      TaxonomyClass::kClassicalInput, TaxonomyClass::kInitialValue,
      TaxonomyClass::kWrongOperation, TaxonomyClass::kWrongIndexing,
      TaxonomyClass::kWrongEncoding,  TaxonomyClass::kBadDeallocation,
      TaxonomyClass::kInsufficientProgress};
  return k;
}

const std::vector<BugLocation>& all_locations() {
  static const std::vector<BugLocation> k = {
      BugLocation::kClassicalParams, BugLocation::kQubitAlloc, BugLocation::kBasic,
      BugLocation::kIterate,         BugLocation::kMirror,     BugLocation::kRecurse,
      BugLocation::kDealloc};
  return k;
}

const std::vector<Defense>& all_defenses() {
  static const std::vector<Defense> k = {
      Defense::kUnitTesting,   Defense::kDataTypes, Defense::kReverseComp,
      Defense::kControlledOps, Defense::kPreconditions, Defense::kProgress,
      Defense::kPostconditions};
  return k;
}

bool is_constructive(Defense d) {
  return d == Defense::kUnitTesting || d == Defense::kDataTypes ||
         d == Defense::kReverseComp || d == Defense::kControlledOps;
}

namespace {

// ---- Unit-test oracles ----------------------------------------------------

constexpr double kUnitTol = 1e-9;

Qubits span_of(std::uint32_t from, std::uint32_t count) {
  Qubits qs;
  for (std::uint32_t i = 0; i < count; ++i) qs.push_back(qubit(from + i));
  return qs;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

ExecOptions lenient(AbcVariant abc = AbcVariant::kOmitA) {
  ExecOptions o;
  o.free_policy = FreePolicy::kUnsafe;
  o.throw_on_requirement = false;
  o.lift.abc = abc;
  return o;
}

// Exhaustive (a, b) in [0,16)^2 through qft / phi_add / iqft.
UnitCheck phi_add_table(const ArithOptions& arith) {
  const QuReg b("b", span_of(0, 4));
  for (std::uint64_t a = 0; a < 16; ++a) {
    const Transformed f = qft(b, false);
    Block blk;
    blk.call(f.block).call(phi_add(f.reg, a, {}, arith)).call(iqft(f.reg, false).block);
    for (std::uint64_t v = 0; v < 16; ++v) {
      QuantumState s = QuantumState::basis(4, v);
      Executor(s, lenient()).run(blk);
      const std::uint64_t want = (a + v) % 16;
      const double p = read_int(s, b)[want];
      if (p < 1.0 - kUnitTol) {
        return {true, "phi_add(" + std::to_string(a) + ") on " + std::to_string(v) +
                          ": P(" + std::to_string(want) + ") = " + fmt(p)};
      }
    }
  }
  return {false, "phi_add matched (a + b) mod 16 on all 256 inputs"};
}

// phi_add_mod for N = 15 and a in {7, 4, 1, 13} against (b + a) mod 15.
UnitCheck phi_add_mod_table(const ArithOptions& arith) {
  const QuReg b("b", span_of(0, 5));
  const QubitId c1 = qubit(5), c2 = qubit(6), judge = qubit(7);
  const ModulusContext ctx = ModulusContext::for_multiplier(15, 7);
  for (std::uint64_t a : {7u, 4u, 1u, 13u}) {
    const Transformed f = qft(b, false);
    Block blk;
    blk.call(f.block)
        .call(phi_add_mod(f.reg, a, ctx, {c1, c2}, judge, arith))
        .call(iqft(f.reg, false).block);
    for (std::uint64_t v = 0; v < 15; ++v) {
      QuantumState s = QuantumState::basis(8, v | (3u << 5));
      Executor ex(s, lenient());
      ex.run(blk);
      const std::uint64_t want = (v + a) % 15;
      const double p = read_int(s, b)[want];
      const Qubits j{judge};
      const double judge_dirty = 1.0 - s.probabilities(j)[0];
      if (p < 1.0 - kUnitTol || judge_dirty > kUnitTol) {
        return {true, "phi_add_mod(" + std::to_string(a) + ") on " + std::to_string(v) +
                          ": P(" + std::to_string(want) + ") = " + fmt(p) +
                          ", judge off zero " + fmt(judge_dirty)};
      }
    }
  }
  return {false, "phi_add_mod matched (b + a) mod 15 for a in {7,4,1,13}"};
}

// c_ua with correctly derived inverses against x -> a x mod 15, acc clean.
UnitCheck c_ua_table(const ArithOptions& arith) {
  const QubitId c = qubit(0);
  const QuInt x(QuReg("x", span_of(1, 4)));
  const QuReg acc("acc", span_of(5, 5));
  for (std::int64_t a : {7, 4, 1}) {
    const ModulusContext ctx = ModulusContext::for_multiplier(15, a);
    const Block blk = c_ua(x, ctx, c, acc, arith);
    for (std::uint64_t v = 1; v < 15; ++v) {
      QuantumState s = QuantumState::basis(10, 1 | (v << 1));
      Executor(s, lenient()).run(blk);
      const std::uint64_t want = (v * static_cast<std::uint64_t>(a)) % 15;
      const double p = read_int(s, x.reg())[want];
      const double clean = read_int(s, acc)[0];
      if (p < 1.0 - kUnitTol || clean < 1.0 - kUnitTol) {
        return {true, "c_ua(" + std::to_string(a) + ") on x = " + std::to_string(v) +
                          ": P(x = " + std::to_string(want) + ") = " + fmt(p) +
                          ", P(acc = 0) = " + fmt(clean)};
      }
    }
  }
  return {false, "c_ua matched x -> a x mod 15 with a clean workspace for a in {7,4,1}"};
}

CMatrix kron_h(std::size_t n) {
  const double s = 1.0 / std::sqrt(std::ldexp(1.0, static_cast<int>(n)));
  const std::size_t dim = std::size_t{1} << n;
  CMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      m(r, c) = (std::popcount(r & c) % 2 ? -s : s);
    }
  }
  return m;
}

UnitCheck grover_prep_unit(const Mutations& mut) {
  constexpr std::size_t n = 3;
  const double d = max_abs_diff(unitary_of(grover_prepare(n, mut), n), kron_h(n));
  if (d > kUnitTol) return {true, "prepare differs from H^3 by " + fmt(d)};
  return {false, "prepare equals H^3"};
}

// Diffusion at n = 3 (one chain ancilla, q3) restricted to ancilla |0>
// against 2|s><s| - I up to global phase.
UnitCheck grover_diffusion_unit(const Mutations& mut) {
  constexpr std::size_t n = 3;
  const CMatrix full = unitary_of(grover_diffusion(n, {qubit(3)}, mut), n + 1);
  const std::size_t dim = std::size_t{1} << n;
  CMatrix sub(dim), want(dim);
  double leak = 0.0;
  for (std::size_t r = 0; r < full.dim(); ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (r < dim) {
        sub(r, c) = full(r, c);
      } else {
        leak = std::max(leak, std::abs(full(r, c)));
      }
    }
  }
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      want(r, c) = 2.0 / static_cast<double>(dim) - (r == c ? 1.0 : 0.0);
    }
  }
  const double d = max_abs_diff_up_to_phase(want, sub);
  if (d > kUnitTol || leak > kUnitTol) {
    return {true, "diffusion differs from 2|s><s| - I by " + fmt(d) +
                      ", ancilla leak " + fmt(leak)};
  }
  return {false, "diffusion equals 2|s><s| - I on the clean-ancilla block"};
}

// The full search at the default configuration against dense (D O)^k H|0>.
UnitCheck grover_search_unit(const Mutations& mut) {
  const GroverConfig cfg;
  const std::size_t n = cfg.n;
  const std::size_t dim = std::size_t{1} << n;
  const int k = grover_default_iterations(n, cfg.marked.size());
  std::vector<cx> psi(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  for (int step = 0; step < k; ++step) {
    for (std::uint64_t v : cfg.marked) psi[v] = -psi[v];
    cx mean = 0.0;
    for (const cx& a : psi) mean += a;
    mean /= static_cast<double>(dim);
    for (cx& a : psi) a = 2.0 * mean - a;
  }
  std::vector<double> want(dim);
  for (std::size_t i = 0; i < dim; ++i) want[i] = std::norm(psi[i]);
  RunOptions opts;
  opts.mutations = mut;
  const BenchmarkResult r = run_grover(cfg, opts);
  const double d = r.output_distribution.max_abs_diff(Distribution(n, want));
  if (d > kUnitTol) {
    return {true, "search output differs from the dense golden run by " + fmt(d)};
  }
  return {false, "search output equals the dense golden run"};
}

UnitCheck crz_unit(AbcVariant v) {
  const double theta = std::numbers::pi / 2;
  CMatrix want = CMatrix::identity(4);
  want(3, 3) = std::polar(1.0, theta);
  const double d = max_abs_diff(unitary_of(decompose_cRz(theta, qubit(0), qubit(1), v), 2), want);
  if (d > kUnitTol) return {true, "decompose_cRz(pi/2) differs from controlled-P by " + fmt(d)};
  return {false, "decompose_cRz(pi/2) equals controlled-P"};
}

// Dense Pauli word, character i on qubit i.
Eigen::MatrixXcd dense_pauli(const std::string& word) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t i = 0; i < word.size(); ++i) {
    Eigen::Matrix2cd p;
    switch (word[i]) {
      case 'X': p << 0, 1, 1, 0; break;
      case 'Y': p << 0, cx(0, -1), cx(0, 1), 0; break;
      case 'Z': p << 1, 0, 0, -1; break;
      default: p = Eigen::Matrix2cd::Identity(); break;
    }
    // Qubit i is bit i of the index, so it goes on the left of the product.
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        next.block(a * m.rows(), b * m.cols(), m.rows(), m.cols()) = p(a, b) * m;
      }
    }
    m = std::move(next);
  }
  return m;
}

Eigen::MatrixXcd to_eigen(const CMatrix& u) {
  Eigen::MatrixXcd m(u.dim(), u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = 0; j < u.dim(); ++j) m(i, j) = u(i, j);
  }
  return m;
}

// Phase-insensitive distance between unitaries of equal size.
double phase_free_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const cx tr = (a.adjoint() * b).trace();
  const cx phase = std::abs(tr) > 0 ? tr / std::abs(tr) : cx(1.0);
  return (a * phase - b).cwiseAbs().maxCoeff();
}

// exp(-i theta P) for every non-identity word of the shipped H2 file.
UnitCheck pauli_exp_unit(const PauliOptions& popts) {
  const HamiltonianSpec h = load_hamiltonian(default_hamiltonian_path());
  const double theta = 0.37;
  for (const PauliTerm& term : h.terms) {
    if (term.is_identity()) continue;
    const std::size_t n = term.word.size();
    const Eigen::MatrixXcd got =
        to_eigen(unitary_of(pauli_exp_circuit(term.word, theta, span_of(0, static_cast<std::uint32_t>(n)), popts), n));
    const Eigen::MatrixXcd p = dense_pauli(term.word);
    const Eigen::MatrixXcd want =
        std::cos(theta) * Eigen::MatrixXcd::Identity(p.rows(), p.cols()) -
        cx(0, std::sin(theta)) * p;
    const double d = phase_free_distance(want, got);
    if (d > kUnitTol) {
      return {true, "pauli_exp(" + term.word + ") differs from cos I - i sin P by " + fmt(d)};
    }
  }
  return {false, "pauli_exp matched cos I - i sin P for every term"};
}

// Trotterized evolution against exp(-i (H - offset) t). The tolerance is one
// IPE energy bin of phase error, the resolution the benchmark can see.
UnitCheck trotter_unit(int r) {
  const H2Config cfg{load_hamiltonian(default_hamiltonian_path())};
  const HamiltonianSpec& h = cfg.hamiltonian;
  const std::size_t n = h.num_qubits;
  const int dim = 1 << n;
  Eigen::MatrixXcd ham = Eigen::MatrixXcd::Zero(dim, dim);
  for (const PauliTerm& term : h.terms) {
    if (!term.is_identity()) ham += term.coefficient * dense_pauli(term.word);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ham);
  Eigen::VectorXcd phases(dim);
  for (int i = 0; i < dim; ++i) phases(i) = std::polar(1.0, -es.eigenvalues()(i) * cfg.t);
  const Eigen::MatrixXcd want =
      es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  const Eigen::MatrixXcd got =
      to_eigen(unitary_of(trotter_circuit(h, cfg.t, r, span_of(0, static_cast<std::uint32_t>(n))), n));
  const double d = (want - got).cwiseAbs().maxCoeff();
  const double tol = 2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(cfg.m));
  if (d > tol) {
    return {true, "trotter(r = " + std::to_string(r) + ") differs from exp(-iHt) by " +
                      fmt(d) + " > " + fmt(tol)};
  }
  return {false, "trotter(r = " + std::to_string(r) + ") within " + fmt(d) +
                     " of exp(-iHt)"};
}

UnitCheck h2_prep_unit(ElectronAssignment prepared) {
  const ElectronAssignment intended = H2Config{}.assignment;
  const QuReg sys("sys", span_of(0, 4));
  QuantumState s(4);
  Executor(s).run(encode_classical(sys, prepared.occupation));
  const double p = read_int(s, sys)[intended.occupation];
  if (p < 1.0 - kUnitTol) {
    return {true, "prepared q0..q3 = " + prepared.bits() + ", expected " + intended.bits()};
  }
  return {false, "prepared the intended assignment"};
}

// ---- Catalog --------------------------------------------------------------

std::string always(const BenchmarkConfig&) { return ""; }

std::vector<BugSpec> build_catalog() {
  std::vector<BugSpec> c;
  BugSpec b;

  b = {};
  b.id = "shor.wrong-inverse-k0";
  b.taxonomy = TaxonomyClass::kClassicalInput;
  b.location = BugLocation::kClassicalParams;
  b.benchmark = BenchmarkId::kShor15;
  b.subroutine = "c_ua iteration 0";
  b.mutation = "a_inv: 13->12";
  b.in_suite = true;
  b.prevented_by[Defense::kDataTypes] =
      "ModulusContext rejects (a, a_inv) pairs with a * a_inv != 1 mod N; the bug is "
      "injected through ModulusContext::unchecked";
  b.check = [](const BenchmarkConfig& cfg) -> std::string {
    const auto sched = shor15_schedule(cfg.shor.guess, cfg.shor.bits);
    if (sched[0].second < 2) return "a_0 inverse is 1; no smaller wrong value";
    return "";
  };
  b.apply = [](const BenchmarkConfig& cfg, Mutations& m) {
    m.shor_inverse_k0 = shor15_schedule(cfg.shor.guess, cfg.shor.bits)[0].second - 1;
  };
  // A unit test exercises c_ua with its own correctly derived inverses.
  b.unit_test = [] { return c_ua_table({}); };
  c.push_back(b);

  b = {};
  b.id = "grover.missing-hadamard";
  b.taxonomy = TaxonomyClass::kInitialValue;
  b.location = BugLocation::kQubitAlloc;
  b.benchmark = BenchmarkId::kGrover;
  b.subroutine = "prepare";
  b.mutation = "skip H on q0";
  b.in_suite = true;
  b.check = always;
  b.apply = [](const BenchmarkConfig&, Mutations& m) { m.grover_skip_prep_h0 = true; };
  b.unit_test = [] {
    Mutations m;
    m.grover_skip_prep_h0 = true;
    return grover_prep_unit(m);
  };
  c.push_back(b);

  b = {};
  b.id = "shor.flipped-angle-crz";
  b.taxonomy = TaxonomyClass::kWrongOperation;
  b.location = BugLocation::kBasic;
  b.benchmark = BenchmarkId::kShor15;
  b.subroutine = "decompose_cRz";
  b.mutation = "angle sign flip";
  b.in_suite = true;
  b.prevented_by[Defense::kControlledOps] =
      "control_lift derives controlled rotations itself; the flipped ABC variant is "
      "selected below the meta-operation through LiftOptions";
  b.check = always;
  b.apply = [](const BenchmarkConfig&, Mutations& m) { m.abc = AbcVariant::kAnglesFlipped; };
  b.unit_test = [] { return crz_unit(AbcVariant::kAnglesFlipped); };
  c.push_back(b);

  b = {};
  b.id = "grover.too-few-iterations";
  b.taxonomy = TaxonomyClass::kInsufficientProgress;
  b.location = BugLocation::kIterate;
  b.benchmark = BenchmarkId::kGrover;
  b.subroutine = "grover iteration loop";
  b.mutation = "iterations: k->k-1";
  b.in_suite = true;
  b.check = [](const BenchmarkConfig& cfg) -> std::string {
    const int k = cfg.grover.iterations.value_or(
        grover_default_iterations(cfg.grover.n, cfg.grover.marked.size()));
    return k >= 1 ? "" : "iteration count is already 0";
  };
  b.apply = [](const BenchmarkConfig& cfg, Mutations& m) {
    m.grover_iterations = cfg.grover.iterations.value_or(
                              grover_default_iterations(cfg.grover.n, cfg.grover.marked.size())) -
                          1;
  };
  b.unit_test = [] {
    Mutations m;
    m.grover_iterations = grover_default_iterations(3, 1) - 1;
    return grover_search_unit(m);
  };
  c.push_back(b);

  b = {};
  b.id = "shor.mirror-iqft-swapped";
  b.taxonomy = TaxonomyClass::kWrongEncoding;
  b.location = BugLocation::kMirror;
  b.benchmark = BenchmarkId::kShor15;
  b.subroutine = "phi_add_mod";
  b.mutation = "second iqft/qft pair uses final swaps";
  b.in_suite = true;
  b.prevented_by[Defense::kDataTypes] =
      "QuReg carries endianness and basis tags; the swapped transform is applied "
      "without retagging the register";
  b.prevented_by[Defense::kReverseComp] =
      "the mirror would be generated by invert(); the mutant writes the undo by hand";
  b.check = always;
  b.apply = [](const BenchmarkConfig&, Mutations& m) { m.arith.mirror_iqft_swapped = true; };
  b.unit_test = [] {
    ArithOptions a;
    a.mirror_iqft_swapped = true;
    return phi_add_mod_table(a);
  };
  c.push_back(b);

  b = {};
  b.id = "grover.chain-wrong-control";
  b.taxonomy = TaxonomyClass::kWrongIndexing;
  b.location = BugLocation::kRecurse;
  b.benchmark = BenchmarkId::kGrover;
  b.subroutine = "diffusion toffoli chain";
  b.mutation = "first toffoli control q1->q2";
  b.in_suite = true;
  b.prevented_by[Defense::kControlledOps] =
      "Controlled{} lowers the multi-controlled Z with a generated chain; the mutant "
      "spells the chain out by hand";
  b.check = [](const BenchmarkConfig& cfg) -> std::string {
    return cfg.grover.n >= 3 ? "" : "the toffoli chain exists only for n >= 3";
  };
  b.apply = [](const BenchmarkConfig&, Mutations& m) { m.grover_chain_wrong_control = true; };
  b.unit_test = [] {
    Mutations m;
    m.grover_chain_wrong_control = true;
    return grover_diffusion_unit(m);
  };
  c.push_back(b);

  b = {};
  b.id = "shor.skip-uncompute";
  b.taxonomy = TaxonomyClass::kBadDeallocation;
  b.location = BugLocation::kDealloc;
  b.benchmark = BenchmarkId::kShor15;
  b.subroutine = "c_ua";
  b.mutation = "skip uncompute";
  b.in_suite = true;
  b.prevented_by[Defense::kReverseComp] =
      "the inverse multiplication comes from invert(cmult_mod); the mutant drops it";
  b.check = always;
  b.apply = [](const BenchmarkConfig&, Mutations& m) { m.arith.skip_uncompute = true; };
  b.unit_test = [] {
    ArithOptions a;
    a.skip_uncompute = true;
    return c_ua_table(a);
  };
  c.push_back(b);

  // Beyond the suite: one more per column, or a second benchmark per class.
  b = {};
  b.id = "h2.wrong-assignment";
  b.taxonomy = TaxonomyClass::kInitialValue;
  b.location = BugLocation::kQubitAlloc;
  b.benchmark = BenchmarkId::kH2;
  b.subroutine = "prepare";
  b.mutation = "assignment: G->E3";
  b.check = always;
  b.apply = [](const BenchmarkConfig& cfg, Mutations& m) {
    const auto& all = ElectronAssignment::all();
    const ElectronAssignment e3 = all.back().second;
    m.h2_assignment = cfg.h2.assignment.occupation == e3.occupation ? all.front().second : e3;
  };
  b.unit_test = [] { return h2_prep_unit(ElectronAssignment::parse("E3")); };
  c.push_back(b);

  b = {};
  b.id = "h2.coefficient-sign";
  b.taxonomy = TaxonomyClass::kClassicalInput;
  b.location = BugLocation::kClassicalParams;
  b.benchmark = BenchmarkId::kH2;
  b.subroutine = "hamiltonian";
  b.mutation = "term 1 coefficient sign flip";
  b.check = [](const BenchmarkConfig& cfg) -> std::string {
    const auto& terms = cfg.h2.hamiltonian.terms;
    if (terms.size() < 2 || terms[1].is_identity()) return "term 1 is missing or identity";
    return "";
  };
  b.apply = [](const BenchmarkConfig&, Mutations& m) { m.h2_flip_term = 1; };
  // The subroutines are correct; the wrong value is data they are handed.
  b.unit_test = [] { return pauli_exp_unit({}); };
  c.push_back(b);

  b = {};
  b.id = "h2.too-few-trotter-steps";
  b.taxonomy = TaxonomyClass::kInsufficientProgress;
  b.location = BugLocation::kIterate;
  b.benchmark = BenchmarkId::kH2;
  b.subroutine = "trotter";
  b.mutation = "r: 8->1";
  b.check = [](const BenchmarkConfig& cfg) -> std::string {
    return cfg.h2.r > 1 ? "" : "r is already 1";
  };
  b.apply = [](const BenchmarkConfig&, Mutations& m) { m.h2_trotter_steps = 1; };
  b.unit_test = [] { return trotter_unit(1); };
  c.push_back(b);

  b = {};
  b.id = "h2.y-basis-as-x";
  b.taxonomy = TaxonomyClass::kWrongOperation;
  b.location = BugLocation::kBasic;
  b.benchmark = BenchmarkId::kH2;
  b.subroutine = "pauli_exp";
  b.mutation = "Y basis change uses H only";
  b.check = [](const BenchmarkConfig& cfg) -> std::string {
    for (const PauliTerm& t : cfg.h2.hamiltonian.terms) {
      if (t.word.find('Y') != std::string::npos) return "";
    }
    return "hamiltonian has no Y terms";
  };
  b.apply = [](const BenchmarkConfig&, Mutations& m) { m.h2_y_as_x = true; };
  b.unit_test = [] {
    PauliOptions p;
    p.y_as_x = true;
    return pauli_exp_unit(p);
  };
  c.push_back(b);

  b = {};
  b.id = "shor.lsb-first-readout";
  b.taxonomy = TaxonomyClass::kWrongEncoding;
  b.location = BugLocation::kMirror;
  b.benchmark = BenchmarkId::kShor15;
  b.subroutine = "readout";
  b.mutation = "measured bit k -> output bit k";
  b.prevented_by[Defense::kDataTypes] =
      "the output register's Endianness tag fixes bit order; the mutant reorders raw bits";
  b.check = always;
  b.apply = [](const BenchmarkConfig&, Mutations& m) { m.shor_lsb_first = true; };
  c.push_back(b);

  b = {};
  b.id = "shor.adder-loop-bound";
  b.taxonomy = TaxonomyClass::kWrongIndexing;
  b.location = BugLocation::kIterate;
  b.benchmark = BenchmarkId::kShor15;
  b.subroutine = "phi_add";
  b.mutation = "loop bound -1";
  b.check = always;
  b.apply = [](const BenchmarkConfig&, Mutations& m) { m.arith.adder_loop_short = true; };
  b.unit_test = [] {
    ArithOptions a;
    a.adder_loop_short = true;
    return phi_add_table(a);
  };
  c.push_back(b);

  b = {};
  b.id = "grover.too-many-iterations";
  b.taxonomy = TaxonomyClass::kInsufficientProgress;
  b.location = BugLocation::kIterate;
  b.benchmark = BenchmarkId::kGrover;
  b.subroutine = "grover iteration loop";
  b.mutation = "iterations: k->2k";
  b.check = [](const BenchmarkConfig& cfg) -> std::string {
    const int k = cfg.grover.iterations.value_or(
        grover_default_iterations(cfg.grover.n, cfg.grover.marked.size()));
    return k >= 1 ? "" : "iteration count is 0";
  };
  b.apply = [](const BenchmarkConfig& cfg, Mutations& m) {
    m.grover_iterations = 2 * cfg.grover.iterations.value_or(grover_default_iterations(
                                  cfg.grover.n, cfg.grover.marked.size()));
  };
  b.unit_test = [] {
    Mutations m;
    m.grover_iterations = 2 * grover_default_iterations(3, 1);
    return grover_search_unit(m);
  };
  c.push_back(b);

  b = {};
  b.id = "grover.unmirrored-diffusion";
  b.taxonomy = TaxonomyClass::kBadDeallocation;
  b.location = BugLocation::kMirror;
  b.benchmark = BenchmarkId::kGrover;
  b.subroutine = "diffusion";
  b.mutation = "undo replays the layers unreversed";
  b.prevented_by[Defense::kReverseComp] =
      "compute_uncompute emits the mirrored layers; the mutant appends them by hand";
  b.check = always;
  b.apply = [](const BenchmarkConfig&, Mutations& m) { m.grover_unmirrored_diffusion = true; };
  b.unit_test = [] {
    Mutations m;
    m.grover_unmirrored_diffusion = true;
    return grover_diffusion_unit(m);
  };
  c.push_back(b);

  return c;
}

}  // namespace

const std::vector<BugSpec>& bug_catalog() {
  static const std::vector<BugSpec> k = build_catalog();
  return k;
}

std::vector<BugSpec> bug_suite() {
  std::vector<BugSpec> out;
  for (const BugSpec& b : bug_catalog()) {
    if (b.in_suite) out.push_back(b);
  }
  return out;
}

const BugSpec& find_bug(const std::string& id) {
  for (const BugSpec& b : bug_catalog()) {
    if (b.id == id) return b;
  }
  throw ArgumentError("unknown bug id '" + id + "'");
}

BenchmarkResult Program::run(RunOptions opts) const {
  opts.mutations = mutations;
  return run_benchmark(config, opts);
}

Program inject(const BenchmarkConfig& cfg, const BugSpec& bug) {
  if (bug.benchmark != cfg.id) {
    throw ValidationError("bug " + bug.id + " targets " + to_string(bug.benchmark) +
                          ", not " + to_string(cfg.id));
  }
  if (!bug.apply) throw ValidationError("bug " + bug.id + " has no mutation");
  if (bug.check) {
    const std::string why = bug.check(cfg);
    if (!why.empty()) throw ValidationError("bug " + bug.id + " does not apply: " + why);
  }
  Program p;
  p.bug = bug;
  p.config = cfg;
  bug.apply(cfg, p.mutations);
  p.site = std::string(to_string(bug.benchmark)) + "/" + bug.subroutine + ": " + bug.mutation;
  return p;
}

Verdict CoverageMatrix::at(Defense d, BugLocation l) const {
  const auto it = cells.find({d, l});
  return it == cells.end() ? Verdict::kNotApplicable : it->second;
}

namespace {

Stage stage_of(Defense d) {
  switch (d) {
    case Defense::kPreconditions: return Stage::kPre;
    case Defense::kProgress: return Stage::kProgress;
    default: return Stage::kPost;
  }
}

StageSet only(Stage s) {
  StageSet set;
  set.pre = s == Stage::kPre;
  set.progress = s == Stage::kProgress;
  set.post = s == Stage::kPost;
  return set;
}

const AssertReport* first_detection(const BenchmarkResult& r, Stage stage) {
  for (const AssertReport& rep : r.assert_reports) {
    if (rep.stage == stage && !rep.passed && rep.deviation >= kDetectionThreshold) {
      return &rep;
    }
  }
  return nullptr;
}

std::size_t count_stage(const BenchmarkResult& r, Stage stage) {
  return static_cast<std::size_t>(std::count_if(
      r.assert_reports.begin(), r.assert_reports.end(),
      [&](const AssertReport& rep) { return rep.stage == stage; }));
}

CellEvidence evaluate_cell(const BugSpec& bug, Defense d,
                           const std::vector<std::uint64_t>& seeds) {
  CellEvidence ev;
  ev.bug_id = bug.id;
  ev.defense = d;
  ev.location = bug.location;
  if (d == Defense::kUnitTesting) {
    if (!bug.unit_test) {
      ev.verdict = Verdict::kNotApplicable;
      ev.evidence = "no isolated subroutine to test";
      return ev;
    }
    const UnitCheck u = bug.unit_test();
    ev.verdict = u.mismatch ? Verdict::kDetected : Verdict::kMissed;
    ev.evidence = u.evidence;
    return ev;
  }
  if (is_constructive(d)) {
    const auto it = bug.prevented_by.find(d);
    if (it != bug.prevented_by.end()) {
      ev.verdict = Verdict::kNotApplicable;
      ev.evidence = "prevented: " + it->second;
    } else {
      ev.verdict = Verdict::kMissed;
      ev.evidence = "expressible through the typed interface";
    }
    return ev;
  }

  const Program prog = inject(BenchmarkConfig::defaults(bug.benchmark), bug);
  const Stage stage = stage_of(d);
  std::set<bool> outcomes;
  std::string detail;
  for (std::uint64_t seed : seeds) {
    RunOptions opts;
    opts.stages = only(stage);
    opts.seed = seed;
    const BenchmarkResult r = prog.run(opts);
    const AssertReport* hit = first_detection(r, stage);
    outcomes.insert(hit != nullptr);
    if (detail.empty()) {
      if (hit) {
        detail = hit->location + ": " + hit->message + " (deviation " + fmt(hit->deviation) + ")";
      } else {
        const std::size_t n = count_stage(r, stage);
        detail = n == 0 ? "no checks at this stage"
                        : std::to_string(n) + " checks passed";
      }
    }
  }
  ev.verdict = outcomes.count(true) ? Verdict::kDetected : Verdict::kMissed;
  ev.evidence = detail;
  if (outcomes.size() > 1) ev.evidence += " (seed-dependent)";
  return ev;
}

}  // namespace

CoverageMatrix evaluate_matrix(const std::vector<BugSpec>& bugs,
                               const std::vector<Defense>& defenses,
                               const std::vector<std::uint64_t>& seeds) {
  if (bugs.empty() || defenses.empty()) {
    throw ArgumentError("evaluate_matrix needs nonempty bug and defense suites");
  }
  CoverageMatrix m;
  m.seeds = seeds.empty() ? std::vector<std::uint64_t>{0} : seeds;

  for (const BugSpec& bug : bugs) {
    for (Defense d : defenses) m.evidence.push_back(evaluate_cell(bug, d, m.seeds));
  }
  for (const CellEvidence& ev : m.evidence) {
    const auto key = std::make_pair(ev.defense, ev.location);
    const auto it = m.cells.find(key);
    if (it == m.cells.end()) {
      m.cells[key] = ev.verdict;
    } else if (ev.verdict == Verdict::kDetected) {
      it->second = Verdict::kDetected;
    } else if (ev.verdict == Verdict::kMissed && it->second == Verdict::kNotApplicable) {
      it->second = Verdict::kMissed;
    }
  }

  // Unmutated runs: any detection is a false positive.
  std::set<BenchmarkId> benches;
  for (const BugSpec& b : bugs) benches.insert(b.benchmark);
  for (BenchmarkId id : benches) {
    const BenchmarkConfig cfg = BenchmarkConfig::defaults(id);
    for (Defense d : defenses) {
      if (is_constructive(d)) continue;
      const Stage stage = stage_of(d);
      for (std::uint64_t seed : m.seeds) {
        RunOptions opts;
        opts.stages = only(stage);
        opts.seed = seed;
        const BenchmarkResult r = run_benchmark(cfg, opts);
        for (const AssertReport& rep : r.assert_reports) {
          if (rep.stage == stage && !rep.passed) {
            m.false_positives.push_back(std::string(to_string(id)) + "/" + to_string(d) +
                                        " seed " + std::to_string(seed) + ": " +
                                        rep.location + ": " + rep.message);
          }
        }
      }
    }
  }
  return m;
}

}  // namespace qdb

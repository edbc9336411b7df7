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

// Dense state-vector simulator with dynamic qubit allocation.
//
// Basis ordering is little-endian: the active qubit with the i-th smallest id
// occupies bit i of the amplitude index. With ids 0..n-1 active, qubit i is
// bit i.

#ifndef QDB_STATEVEC_H_
#define QDB_STATEVEC_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qdb/errors.h"
#include "qdb/linalg.h"

namespace qdb {

struct QubitId {
  // Ids at or above this value are symbolic scratch placeholders that the
  // lowering pass binds to real qubits.
  static constexpr std::uint32_t kPlaceholderBase = 1u << 30;

  std::uint32_t index = 0;

  constexpr auto operator<=>(const QubitId&) const = default;
  constexpr bool is_placeholder() const { return index >= kPlaceholderBase; }
};

constexpr QubitId qubit(std::uint32_t index) { return QubitId{index}; }

using Qubits = std::vector<QubitId>;

std::string to_string(QubitId q);

// Probability distribution over the 2^num_bits values of a bit string.
class Distribution {
 public:
  Distribution() : num_bits_(0), probs_{1.0} {}
  Distribution(std::size_t num_bits, std::vector<double> probs);
  static Distribution point(std::size_t num_bits, std::uint64_t value);

  std::size_t num_bits() const { return num_bits_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::uint64_t value) const;
  const std::vector<double>& probs() const { return probs_; }

  double total() const;
  // Smallest value among the maximizers.
  std::uint64_t mode() const;
  // Values with probability above `cutoff`, ascending.
  std::vector<std::pair<std::uint64_t, double>> support(
      double cutoff = 0.0) const;
  double max_abs_diff(const Distribution& other) const;

 private:
  std::size_t num_bits_;
  std::vector<double> probs_;
};

enum class FreePolicy {
  kStrict,  // throw DeallocationError if not |0>
  kUnsafe,  // project onto |0>, renormalize, record the discarded mass
  kReport,  // leave a dirty qubit allocated and report; clean ones are freed
};

class DeallocationError : public Error {
 public:
  DeallocationError(Qubits qubits, Distribution residual, std::string location);
  const Qubits& qubits() const { return qubits_; }
  const Distribution& residual() const { return residual_; }
  const std::string& location() const { return location_; }

 private:
  Qubits qubits_;
  Distribution residual_;
  std::string location_;
};

struct FreeOutcome {
  bool clean = true;
  // Marginal distribution of the freed qubits at the time of the free.
  Distribution residual;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

class QuantumState {
 public:
  static constexpr std::size_t kMaxQubits = 20;
  static constexpr double kNormTolerance = 1e-10;

  // All-zero state on qubits 0..num_qubits-1.
  explicit QuantumState(std::size_t num_qubits);
  // Computational basis state |value> on qubits 0..num_qubits-1.
  static QuantumState basis(std::size_t num_qubits, std::uint64_t value);

  std::size_t num_qubits() const { return active_.size(); }
  const Qubits& qubits() const { return active_; }
  bool is_active(QubitId q) const;
  // Current bit position of an active qubit.
  std::size_t position(QubitId q) const;
  const std::vector<cx>& amplitudes() const { return amps_; }
  double norm() const;

  // Gate matrix index bit t corresponds to targets[t].
  void apply(const CMatrix& gate, std::span<const QubitId> targets);
  void apply_controlled(const CMatrix& gate, std::span<const QubitId> controls,
                        std::span<const QubitId> targets);

  // Unchecked kernels on bit positions. `ctrl_mask` selects basis states
  // whose masked bits are all 1.
  void apply_1q(const std::array<cx, 4>& m, std::size_t pos,
                std::uint64_t ctrl_mask);
  void apply_diag(cx d0, cx d1, std::size_t pos, std::uint64_t ctrl_mask);
  void apply_x(std::size_t pos, std::uint64_t ctrl_mask);
  void apply_swap(std::size_t pa, std::size_t pb, std::uint64_t ctrl_mask);

  // Joint distribution of `qs`; qs[i] is bit i of the reported value.
  Distribution probabilities(std::span<const QubitId> qs) const;
  std::uint64_t measure(std::span<const QubitId> qs, Rng& rng);
  // Projects `qs` onto `value` and renormalizes. Returns the probability of
  // that outcome before projection. Throws ArgumentError if it is zero.
  double postselect(std::span<const QubitId> qs, std::uint64_t value);
  // Tr(rho^2) of the reduced state on `qs`.
  double reduced_purity(std::span<const QubitId> qs) const;

  // Allocates k fresh qubits in |0>, reusing the smallest free ids first.
  Qubits allocate(std::size_t k);
  FreeOutcome free(std::span<const QubitId> qs,
                   FreePolicy policy = FreePolicy::kStrict, double eps = 1e-9,
                   const std::string& location = "");

 private:
  std::uint64_t mask_of(std::span<const QubitId> qs) const;
  void check_distinct_active(std::span<const QubitId> qs) const;
  void insert_qubit(QubitId q);
  void remove_qubit(QubitId q);

  Qubits active_;  // ascending
  std::vector<cx> amps_;
};

}  // namespace qdb

#endif  // QDB_STATEVEC_H_

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

#include "qdb/statevec.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qdb {

NoInverseError::NoInverseError(std::int64_t a, std::int64_t modulus,
                               std::int64_t gcd)
    : Error("no inverse of " + std::to_string(a) + " mod " +
            std::to_string(modulus) + " (gcd " + std::to_string(gcd) + ")"),
      gcd_(gcd) {}

ParseError::ParseError(int line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

CMatrix::CMatrix(std::size_t dim, std::vector<cx> data)
    : dim_(dim), data_(std::move(data)) {
  if (data_.size() != dim * dim) {
    throw ArgumentError("matrix data size does not match dimension");
  }
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

bool CMatrix::is_unitary(double tol) const {
  if (dim_ == 0) return false;
  return max_abs_diff(adjoint() * *this, identity(dim_)) <= tol;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.dim_ != b.dim_) throw ArgumentError("matrix dimension mismatch");
  const std::size_t n = a.dim_;
  CMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const cx v = a(r, k);
      if (v == cx(0.0)) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += v * b(k, c);
    }
  }
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw ArgumentError("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

double max_abs_diff_up_to_phase(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw ArgumentError("matrix dimension mismatch");
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    if (std::abs(a.data()[i]) > std::abs(a.data()[pivot])) pivot = i;
  }
  const cx pa = a.data()[pivot];
  const cx pb = b.data()[pivot];
  if (std::abs(pb) == 0.0) return max_abs_diff(a, b);
  // Multiply b by the unit phase that aligns its pivot with a's.
  const cx phase = (pa / std::abs(pa)) / (pb / std::abs(pb));
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - phase * b.data()[i]));
  }
  return worst;
}

std::string to_string(QubitId q) {
  if (q.is_placeholder()) {
    return "scratch" + std::to_string(q.index - QubitId::kPlaceholderBase);
  }
  return std::to_string(q.index);
}

// ---------------------------------------------------------------------------

Distribution::Distribution(std::size_t num_bits, std::vector<double> probs)
    : num_bits_(num_bits), probs_(std::move(probs)) {
  if (num_bits_ > 62 || probs_.size() != (std::size_t{1} << num_bits_)) {
    throw ArgumentError("distribution size must be 2^num_bits");
  }
}

Distribution Distribution::point(std::size_t num_bits, std::uint64_t value) {
  std::vector<double> p(std::size_t{1} << num_bits, 0.0);
  if (value >= p.size()) throw ArgumentError("value out of range");
  p[value] = 1.0;
  return Distribution(num_bits, std::move(p));
}

double Distribution::operator[](std::uint64_t value) const {
  return value < probs_.size() ? probs_[value] : 0.0;
}

double Distribution::total() const {
  return std::accumulate(probs_.begin(), probs_.end(), 0.0);
}

std::uint64_t Distribution::mode() const {
  return static_cast<std::uint64_t>(
      std::max_element(probs_.begin(), probs_.end()) - probs_.begin());
}

std::vector<std::pair<std::uint64_t, double>> Distribution::support(
    double cutoff) const {
  std::vector<std::pair<std::uint64_t, double>> out;
  for (std::size_t v = 0; v < probs_.size(); ++v) {
    if (probs_[v] > cutoff) out.emplace_back(v, probs_[v]);
  }
  return out;
}

double Distribution::max_abs_diff(const Distribution& other) const {
  const std::size_t n = std::max(size(), other.size());
  double worst = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    worst = std::max(worst, std::abs((*this)[v] - other[v]));
  }
  return worst;
}

DeallocationError::DeallocationError(Qubits qubits, Distribution residual,
                                     std::string location)
    : Error([&] {
        std::ostringstream os;
        os << "qubit(s)";
        for (QubitId q : qubits) os << ' ' << to_string(q);
        os << " not in |0> at free (P(nonzero) = " << 1.0 - residual[0]
           << ")";
        if (!location.empty()) os << " in " << location;
        return os.str();
      }()),
      qubits_(std::move(qubits)),
      residual_(std::move(residual)),
      location_(std::move(location)) {}

// ---------------------------------------------------------------------------


QuantumState::QuantumState(std::size_t num_qubits) {
  if (num_qubits > kMaxQubits) {
    throw CapacityError("state of " + std::to_string(num_qubits) +
                        " qubits exceeds the limit of " +
                        std::to_string(kMaxQubits));
  }
  for (std::size_t i = 0; i < num_qubits; ++i) {
    active_.push_back(qubit(static_cast<std::uint32_t>(i)));
  }
  amps_.assign(std::size_t{1} << num_qubits, cx(0.0));
  amps_[0] = 1.0;
}

QuantumState QuantumState::basis(std::size_t num_qubits, std::uint64_t value) {
  QuantumState s(num_qubits);
  if (value >= s.amps_.size()) throw ArgumentError("basis value out of range");
  s.amps_[0] = 0.0;
  s.amps_[value] = 1.0;
  return s;
}

bool QuantumState::is_active(QubitId q) const {
  return std::binary_search(active_.begin(), active_.end(), q);
}

std::size_t QuantumState::position(QubitId q) const {
  auto it = std::lower_bound(active_.begin(), active_.end(), q);
  if (it == active_.end() || *it != q) {
    throw ArgumentError("qubit " + to_string(q) + " is not allocated");
  }
  return static_cast<std::size_t>(it - active_.begin());
}

double QuantumState::norm() const {
  double s = 0.0;
  for (const cx& a : amps_) s += std::norm(a);
  return s;
}

std::uint64_t QuantumState::mask_of(std::span<const QubitId> qs) const {
  std::uint64_t m = 0;
  for (QubitId q : qs) m |= std::uint64_t{1} << position(q);
  return m;
}

void QuantumState::check_distinct_active(std::span<const QubitId> qs) const {
  for (std::size_t i = 0; i < qs.size(); ++i) {
    position(qs[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (qs[i] == qs[j]) {
        throw ArgumentError("qubit " + to_string(qs[i]) + " repeated");
      }
    }
  }
}

void QuantumState::apply(const CMatrix& gate, std::span<const QubitId> targets) {
  apply_controlled(gate, {}, targets);
}

void QuantumState::apply_controlled(const CMatrix& gate,
                                    std::span<const QubitId> controls,
                                    std::span<const QubitId> targets) {
  const std::size_t k = targets.size();
  if (k == 0 || gate.dim() != (std::size_t{1} << k)) {
    throw ValidationError("gate dimension does not match target count");
  }
  if (!gate.is_unitary(kNormTolerance)) {
    throw ValidationError("gate is not unitary within 1e-10");
  }
  Qubits all(controls.begin(), controls.end());
  all.insert(all.end(), targets.begin(), targets.end());
  check_distinct_active(all);

  const std::size_t dim = gate.dim();
  std::vector<std::uint64_t> offsets(dim, 0);
  std::uint64_t tmask = 0;
  for (std::size_t t = 0; t < k; ++t) {
    const std::uint64_t bit = std::uint64_t{1} << position(targets[t]);
    tmask |= bit;
    for (std::size_t j = 0; j < dim; ++j) {
      if (j & (std::size_t{1} << t)) offsets[j] |= bit;
    }
  }
  const std::uint64_t cmask = mask_of(controls);

  std::vector<cx> in(dim), out(dim);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & tmask) != 0 || (i & cmask) != cmask) continue;
    for (std::size_t j = 0; j < dim; ++j) in[j] = amps_[i | offsets[j]];
    for (std::size_t r = 0; r < dim; ++r) {
      cx acc = 0.0;
      for (std::size_t c = 0; c < dim; ++c) acc += gate(r, c) * in[c];
      out[r] = acc;
    }
    for (std::size_t j = 0; j < dim; ++j) amps_[i | offsets[j]] = out[j];
  }
}

void QuantumState::apply_1q(const std::array<cx, 4>& m, std::size_t pos,
                            std::uint64_t ctrl_mask) {
  const std::uint64_t bit = std::uint64_t{1} << pos;
  const std::uint64_t n = amps_.size();
  for (std::uint64_t i = 0; i < n; ++i) {
    if ((i & bit) || (i & ctrl_mask) != ctrl_mask) continue;
    const cx a0 = amps_[i];
    const cx a1 = amps_[i | bit];
    amps_[i] = m[0] * a0 + m[1] * a1;
    amps_[i | bit] = m[2] * a0 + m[3] * a1;
  }
}

void QuantumState::apply_diag(cx d0, cx d1, std::size_t pos,
                              std::uint64_t ctrl_mask) {
  const std::uint64_t bit = std::uint64_t{1} << pos;
  const std::uint64_t n = amps_.size();
  const bool skip0 = d0 == cx(1.0);
  for (std::uint64_t i = 0; i < n; ++i) {
    if ((i & ctrl_mask) != ctrl_mask) continue;
    if (i & bit) {
      amps_[i] *= d1;
    } else if (!skip0) {
      amps_[i] *= d0;
    }
  }
}

void QuantumState::apply_x(std::size_t pos, std::uint64_t ctrl_mask) {
  const std::uint64_t bit = std::uint64_t{1} << pos;
  const std::uint64_t n = amps_.size();
  for (std::uint64_t i = 0; i < n; ++i) {
    if ((i & bit) || (i & ctrl_mask) != ctrl_mask) continue;
    std::swap(amps_[i], amps_[i | bit]);
  }
}

void QuantumState::apply_swap(std::size_t pa, std::size_t pb,
                              std::uint64_t ctrl_mask) {
  const std::uint64_t ba = std::uint64_t{1} << pa;
  const std::uint64_t bb = std::uint64_t{1} << pb;
  const std::uint64_t n = amps_.size();
  for (std::uint64_t i = 0; i < n; ++i) {
    // Visit each |..1..0..> <-> |..0..1..> pair once.
    if (!(i & ba) || (i & bb) || (i & ctrl_mask) != ctrl_mask) continue;
    std::swap(amps_[i], amps_[(i & ~ba) | bb]);
  }
}

Distribution QuantumState::probabilities(std::span<const QubitId> qs) const {
  check_distinct_active(qs);
  std::vector<std::size_t> pos;
  for (QubitId q : qs) pos.push_back(position(q));
  std::vector<double> p(std::size_t{1} << qs.size(), 0.0);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    const double w = std::norm(amps_[i]);
    if (w == 0.0) continue;
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < pos.size(); ++b) v |= ((i >> pos[b]) & 1) << b;
    p[v] += w;
  }
  return Distribution(qs.size(), std::move(p));
}

std::uint64_t QuantumState::measure(std::span<const QubitId> qs, Rng& rng) {
  for (QubitId q : qs) {
    if (!is_active(q)) {
      throw LifecycleError("measure of unallocated qubit " + to_string(q));
    }
  }
  const Distribution d = probabilities(qs);
  const double u = rng.uniform() * d.total();
  double acc = 0.0;
  std::uint64_t outcome = d.mode();
  for (std::size_t v = 0; v < d.size(); ++v) {
    acc += d[v];
    if (d[v] > 0.0 && u < acc) {
      outcome = v;
      break;
    }
  }
  postselect(qs, outcome);
  return outcome;
}

double QuantumState::postselect(std::span<const QubitId> qs,
                                std::uint64_t value) {
  check_distinct_active(qs);
  std::uint64_t mask = 0, want = 0;
  for (std::size_t b = 0; b < qs.size(); ++b) {
    const std::uint64_t bit = std::uint64_t{1} << position(qs[b]);
    mask |= bit;
    if ((value >> b) & 1) want |= bit;
  }
  double p = 0.0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & mask) == want) {
      p += std::norm(amps_[i]);
    } else {
      amps_[i] = 0.0;
    }
  }
  if (p <= 0.0) throw ArgumentError("postselected outcome has probability 0");
  const double scale = 1.0 / std::sqrt(p);
  for (cx& a : amps_) a *= scale;
  return p;
}

double QuantumState::reduced_purity(std::span<const QubitId> qs) const {
  check_distinct_active(qs);
  if (qs.empty() || qs.size() >= active_.size()) {
    throw ArgumentError("reduced_purity needs a nonempty proper subset");
  }
  const std::uint64_t mask = mask_of(qs);
  const std::size_t k = qs.size();
  const std::size_t dim = std::size_t{1} << k;
  // Subsystem index j maps to bits of qs in the given order.
  std::vector<std::uint64_t> dep(dim, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t b = 0; b < k; ++b) {
      if ((j >> b) & 1) dep[j] |= std::uint64_t{1} << position(qs[b]);
    }
  }
  std::vector<cx> rho(dim * dim, cx(0.0));
  for (std::uint64_t rest = 0; rest < amps_.size(); ++rest) {
    if (rest & mask) continue;
    for (std::size_t a = 0; a < dim; ++a) {
      const cx va = amps_[rest | dep[a]];
      if (va == cx(0.0)) continue;
      for (std::size_t b = 0; b < dim; ++b) {
        rho[a * dim + b] += va * std::conj(amps_[rest | dep[b]]);
      }
    }
  }
  double purity = 0.0;
  for (const cx& v : rho) purity += std::norm(v);
  return purity;
}

void QuantumState::insert_qubit(QubitId q) {
  auto it = std::lower_bound(active_.begin(), active_.end(), q);
  const std::size_t p = static_cast<std::size_t>(it - active_.begin());
  active_.insert(it, q);
  std::vector<cx> next(amps_.size() * 2, cx(0.0));
  const std::uint64_t low_mask = (std::uint64_t{1} << p) - 1;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    next[(i & low_mask) | ((i & ~low_mask) << 1)] = amps_[i];
  }
  amps_ = std::move(next);
}

void QuantumState::remove_qubit(QubitId q) {
  const std::size_t p = position(q);
  active_.erase(active_.begin() + static_cast<std::ptrdiff_t>(p));
  std::vector<cx> next(amps_.size() / 2);
  const std::uint64_t low_mask = (std::uint64_t{1} << p) - 1;
  for (std::uint64_t i = 0; i < next.size(); ++i) {
    next[i] = amps_[(i & low_mask) | ((i & ~low_mask) << 1)];
  }
  amps_ = std::move(next);
}

Qubits QuantumState::allocate(std::size_t k) {
  if (active_.size() + k > kMaxQubits) {
    throw CapacityError("allocating " + std::to_string(k) +
                        " qubit(s) exceeds the limit of " +
                        std::to_string(kMaxQubits));
  }
  Qubits out;
  std::uint32_t candidate = 0;
  while (out.size() < k) {
    if (!is_active(qubit(candidate))) {
      insert_qubit(qubit(candidate));
      out.push_back(qubit(candidate));
    }
    ++candidate;
  }
  return out;
}

FreeOutcome QuantumState::free(std::span<const QubitId> qs, FreePolicy policy,
                               double eps, const std::string& location) {
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (!is_active(qs[i])) {
      throw LifecycleError("free of unallocated qubit " + to_string(qs[i]));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qs[i] == qs[j]) {
        throw LifecycleError("qubit " + to_string(qs[i]) + " freed twice");
      }
    }
  }
  FreeOutcome outcome;
  outcome.residual = probabilities(qs);
  const double dirty = 1.0 - outcome.residual[0];
  outcome.clean = dirty <= eps;
  if (!outcome.clean) {
    switch (policy) {
      case FreePolicy::kStrict:
        throw DeallocationError(Qubits(qs.begin(), qs.end()), outcome.residual,
                                location);
      case FreePolicy::kReport:
        return outcome;
      case FreePolicy::kUnsafe:
        if (outcome.residual[0] <= 0.0) {
          // Nothing to project onto; reset the most likely value instead.
          const std::uint64_t v = outcome.residual.mode();
          postselect(qs, v);
          for (std::size_t b = 0; b < qs.size(); ++b) {
            if ((v >> b) & 1) apply_x(position(qs[b]), 0);
          }
        }
        break;
    }
  }
  if (outcome.residual[0] > 0.0) postselect(qs, 0);
  Qubits sorted(qs.begin(), qs.end());
  std::sort(sorted.rbegin(), sorted.rend());
  for (QubitId q : sorted) remove_qubit(q);
  return outcome;
}

}  // namespace qdb

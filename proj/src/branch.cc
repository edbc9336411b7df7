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

#include "branch.h"

#include <algorithm>

#include "qdb/ir.h"

namespace qdb::detail {

void measure_and_reset(std::vector<Branch>& branches, QubitId q,
                       std::size_t pos, double cutoff) {
  std::vector<Branch> next;
  next.reserve(branches.size() * 2);
  const Qubits one{q};
  for (Branch& b : branches) {
    const Distribution d = b.state.probabilities(one);
    const bool both = d[0] > cutoff && d[1] > cutoff;
    for (std::uint64_t v = 0; v < 2; ++v) {
      if (d[v] <= cutoff) continue;
      Branch child{(both && v == 0) ? b.state : std::move(b.state), b.weight * d[v],
                   b.bits | (v << pos)};
      child.state.postselect(one, v);
      if (v == 1) apply_instruction(child.state, {gates::x(), {q}});
      next.push_back(std::move(child));
    }
  }
  branches = std::move(next);
}

std::vector<std::uint64_t> sample_counts(const Distribution& d,
                                         std::size_t shots, Rng& rng) {
  std::vector<double> cdf(d.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) cdf[i] = acc += d.probs()[i];
  std::vector<std::uint64_t> counts(d.size(), 0);
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t i = std::min<std::size_t>(it - cdf.begin(), d.size() - 1);
    ++counts[i];
  }
  return counts;
}

Distribution normalized(std::size_t bits, std::vector<double> weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (total > 0.0) {
    for (double& w : weights) w /= total;
  }
  return Distribution(bits, std::move(weights));
}

}  // namespace qdb::detail

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

// Exact enumeration of mid-circuit measurement outcomes.

#ifndef QDB_SRC_BRANCH_H_
#define QDB_SRC_BRANCH_H_

#include <cstdint>
#include <vector>

#include "qdb/statevec.h"

namespace qdb::detail {

struct Branch {
  QuantumState state;
  double weight = 1.0;
  std::uint64_t bits = 0;  // measured outcomes so far
};

// Splits every branch on the value of `q`, sets bit `pos` of Branch::bits,
// and resets `q` to |0>. Outcomes below `cutoff` are dropped.
void measure_and_reset(std::vector<Branch>& branches, QubitId q,
                       std::size_t pos, double cutoff = 1e-14);

// Histogram of `shots` draws from `d`.
std::vector<std::uint64_t> sample_counts(const Distribution& d,
                                         std::size_t shots, Rng& rng);

// Normalizes `weights` into a distribution.
Distribution normalized(std::size_t bits, std::vector<double> weights);

}  // namespace qdb::detail

#endif  // QDB_SRC_BRANCH_H_

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

#ifndef QDB_LINALG_H_
#define QDB_LINALG_H_

#include <complex>
#include <cstddef>
#include <vector>

namespace qdb {

using cx = std::complex<double>;

// Small dense square complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  CMatrix(std::size_t dim, std::vector<cx> data);

  static CMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  cx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }
  const std::vector<cx>& data() const { return data_; }

  CMatrix adjoint() const;
  bool is_unitary(double tol = 1e-10) const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<cx> data_;
};

// Largest entrywise |a - b|.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

// Largest entrywise difference after removing the relative global phase.
// The phase is taken from the largest-magnitude entry of `a`.
double max_abs_diff_up_to_phase(const CMatrix& a, const CMatrix& b);

}  // namespace qdb

#endif  // QDB_LINALG_H_

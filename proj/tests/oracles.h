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

// Independent dense-matrix reference constructions for tests. Nothing here
// calls into the simulator or the IR passes.

#ifndef QDB_TESTS_ORACLES_H_
#define QDB_TESTS_ORACLES_H_

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "qdb/linalg.h"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cd = std::complex<double>;

inline const double kPi = std::acos(-1.0);

inline Mat m2(cd a, cd b, cd c, cd d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

inline Mat I2() { return Mat::Identity(2, 2); }
inline Mat X() { return m2(0, 1, 1, 0); }
inline Mat Y() { return m2(0, cd(0, -1), cd(0, 1), 0); }
inline Mat Z() { return m2(1, 0, 0, -1); }
inline Mat H() { return m2(1, 1, 1, -1) / std::sqrt(2.0); }
inline Mat Phase(double t) { return m2(1, 0, 0, std::exp(cd(0, t))); }
inline Mat Rz(double t) {
  return m2(std::exp(cd(0, -t / 2)), 0, 0, std::exp(cd(0, t / 2)));
}
// exp(-i t P / 2) for a Pauli P
inline Mat rot(const Mat& pauli, double t) {
  return std::cos(t / 2) * I2() - cd(0, 1) * std::sin(t / 2) * pauli;
}
inline Mat Rx(double t) { return rot(X(), t); }
inline Mat Ry(double t) { return rot(Y(), t); }

// Operator on n qubits acting as `g` on `qubits`; g's index bit t belongs to
// qubits[t]. Qubit q is bit q of the basis index.
inline Mat embed(const Mat& g, const std::vector<int>& qubits, int n) {
  const long dim = 1L << n;
  long mask = 0;
  for (int q : qubits) mask |= 1L << q;
  auto sub = [&](long idx) {
    long v = 0;
    for (std::size_t t = 0; t < qubits.size(); ++t) {
      if ((idx >> qubits[t]) & 1) v |= 1L << t;
    }
    return v;
  };
  Mat out = Mat::Zero(dim, dim);
  for (long r = 0; r < dim; ++r) {
    for (long c = 0; c < dim; ++c) {
      if ((r & ~mask) != (c & ~mask)) continue;
      out(r, c) = g(sub(r), sub(c));
    }
  }
  return out;
}

// Acts as `u` (already an n-qubit operator) only where every control is 1.
inline Mat controlled(const Mat& u, const std::vector<int>& controls) {
  const long dim = u.rows();
  long cmask = 0;
  for (int c : controls) cmask |= 1L << c;
  Mat out = Mat::Identity(dim, dim);
  for (long r = 0; r < dim; ++r) {
    for (long c = 0; c < dim; ++c) {
      if ((r & cmask) == cmask && (c & cmask) == cmask) out(r, c) = u(r, c);
    }
  }
  return out;
}

inline Mat from(const qdb::CMatrix& m) {
  Mat out(m.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

inline Mat dft(int n) {
  const long dim = 1L << n;
  Mat out(dim, dim);
  for (long j = 0; j < dim; ++j) {
    for (long k = 0; k < dim; ++k) {
      out(j, k) = std::polar(1.0 / std::sqrt(double(dim)),
                             2 * kPi * double(j * k) / double(dim));
    }
  }
  return out;
}

// max |a - e^{i phi} b| with phi fixed by the largest entry of a.
inline double diff_up_to_phase(const Mat& a, const Mat& b) {
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  const cd pa = a(r, c), pb = b(r, c);
  if (std::abs(pb) < 1e-300) return (a - b).cwiseAbs().maxCoeff();
  const cd phase = (pa / std::abs(pa)) / (pb / std::abs(pb));
  return (a - phase * b).cwiseAbs().maxCoeff();
}

inline double diff(const Mat& a, const Mat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double op_norm(const Mat& a) {
  Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues()(0);
}

// Haar-ish random state (normalized complex Gaussian).
inline Vec random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec v(1L << n);
  for (long i = 0; i < v.size(); ++i) v(i) = cd(g(rng), g(rng));
  return v / v.norm();
}

// Dense Pauli word; character i acts on qubit i.
inline Mat pauli(const std::string& word) {
  const int n = static_cast<int>(word.size());
  Mat out = Mat::Identity(1L << n, 1L << n);
  for (int i = 0; i < n; ++i) {
    Mat g = word[i] == 'X' ? X() : word[i] == 'Y' ? Y() : word[i] == 'Z' ? Z() : I2();
    out = embed(g, {i}, n) * out;
  }
  return out;
}

// exp(-i t h) for Hermitian h through its eigendecomposition.
inline Mat expm_hermitian(const Mat& h, double t) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Vec phases(h.rows());
  for (long k = 0; k < h.rows(); ++k) {
    phases(k) = std::exp(cd(0, -t * es.eigenvalues()(k)));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace oracle

#endif  // QDB_TESTS_ORACLES_H_

// Copyright 2026 The tempctx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference computations. Nothing here calls into the symbolic
// layer: matrices are written out by hand, Kronecker products and matrix
// exponentials are computed from their definitions.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace tempctx::oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat id2() {
  Mat m(2, 2);
  m << 1, 0, 0, 1;
  return m;
}
inline Mat sx() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline Mat sy() {
  Mat m(2, 2);
  m << 0, C(0, -1), C(0, 1), 0;
  return m;
}
inline Mat sz() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

/// exp(A) by scaling and squaring with a Taylor series.
inline Mat expm(const Mat& a) {
  int squarings = 0;
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.5) {
    norm /= 2;
    ++squarings;
  }
  const Mat scaled = a / std::pow(2.0, squarings);
  Mat term = Mat::Identity(a.rows(), a.cols());
  Mat sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// Heisenberg operator exp(iHt) A exp(-iHt) with H = (omega/2) Z, hbar = 1.
inline Mat heisenberg(const Mat& a, double omega_t) {
  const Mat h = 0.5 * omega_t * sz();
  const Mat forward = expm(C(0, 1) * h);
  const Mat backward = expm(C(0, -1) * h);
  return forward * a * backward;
}

}  // namespace tempctx::oracle

// Copyright 2026 The Ternary Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference implementations written independently of the library:
// Kronecker products of literal 2x2 matrices and brute-force state vectors.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cd = std::complex<double>;

inline Eigen::Matrix2cd sigma(char c) {
  Eigen::Matrix2cd m;
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cd(0, -1), cd(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a,
                             const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// "XIZ" is sigma_x (x) 1 (x) sigma_z, leftmost character on qubit 0.
inline Eigen::MatrixXcd dense(const std::string& letters, cd phase = 1.0) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (char c : letters) m = kron(m, sigma(c));
  return phase * m;
}

inline Eigen::VectorXcd column(const std::vector<cd>& v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

// Shift and clock matrices written out entry by entry.
inline Eigen::MatrixXcd shift(int D) {
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(D, D);
  for (int d = 0; d < D; ++d) x((d + 1) % D, d) = 1;
  return x;
}

inline Eigen::MatrixXcd clock(int D) {
  const double pi = 3.14159265358979323846;
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(D, D);
  for (int d = 0; d < D; ++d) z(d, d) = std::polar(1.0, 2 * pi * d / D);
  return z;
}

inline Eigen::MatrixXcd power(const Eigen::MatrixXcd& m, int k) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace oracle

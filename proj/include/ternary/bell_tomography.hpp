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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ternary/pauli.hpp"
#include "ternary/state.hpp"

namespace ternary {

/// Eigenvalue of sigma^a (x) sigma^a on a Bell outcome.
///
///   outcome  xx  yy  zz
///   F+       +1  -1  +1
///   F-       -1  +1  +1
///   P+       +1  +1  -1
///   P-       -1  -1  -1
int outcome_eigenvalue(BellOutcome outcome, Letter letter);

/// Estimate of tr(rho sigma^{a_1}_{j_1} ... sigma^{a_k}_{j_k}).
struct RdmEstimate {
  std::vector<std::size_t> qubits;
  std::vector<Letter> letters;
  double value = 0;
  std::size_t num_shots = 0;
  double std_error = 0;

  /// Lower-case letter string, e.g. "xz".
  std::string letter_string() const;
};

/// Sufficient statistic for one element: the sum of the +-1 eigenvalue
/// products and the shot count. Merging partial tallies is exact.
struct ProductTally {
  long long sum = 0;
  std::size_t count = 0;

  ProductTally& merge(const ProductTally& other) {
    sum += other.sum;
    count += other.count;
    return *this;
  }
};

/// Tally over shots [begin, end) of a qubit shot stream.
ProductTally tally_products(const ShotStream& shots,
                            std::span<const std::size_t> qubits,
                            std::span<const Letter> letters, std::size_t begin,
                            std::size_t end);

/// sqrt(3)^k times the mean eigenvalue product, with the plug-in standard
/// error. Throws std::invalid_argument for an empty stream, mismatched or
/// empty index lists, repeated qubits or a non-qubit stream, and
/// std::out_of_range for a qubit beyond the stream's pairs.
RdmEstimate estimate_rdm_element(const ShotStream& shots,
                                 std::span<const std::size_t> qubits,
                                 std::span<const Letter> letters);

/// Every k-qubit element on n qubits from one stream: qubit subsets in
/// lexicographic order, letters x, y, z varying fastest on the last qubit.
/// C(n, k) * 3^k entries. Throws std::invalid_argument for k > n or k == 0.
std::vector<RdmEstimate> estimate_all_k_rdms(const ShotStream& shots,
                                             std::size_t k, std::size_t n);

/// Finishes an estimate from its tally.
RdmEstimate finish_estimate(std::vector<std::size_t> qubits,
                            std::vector<Letter> letters,
                            const ProductTally& tally);

/// sigma^0 xi sigma^0 / 2, sigma^z xi sigma^z / 2, sigma^x xi sigma^x / 2,
/// sigma^y xi sigma^y / 2, listed in F+, F-, P+, P- order.
std::array<Eigen::Matrix2cd, 4> sic_povm_elements();

/// The ancilla density matrix |xi><xi|.
Eigen::Matrix2cd xi_density();

/// Effective POVM the Bell measurement induces on the system qubit when the
/// ancilla is in `ancilla`, computed directly from the Bell-state amplitudes.
std::array<Eigen::Matrix2cd, 4> induced_povm(const DenseState& ancilla);

/// Single-qubit state from one pair's outcomes: Bloch components are
/// sqrt(3) times the mean eigenvalues, then eigenvalues are clipped to
/// [0, 1] and renormalized to unit trace.
Eigen::Matrix2cd reconstruct_state_1q(const ShotStream& shots,
                                      std::size_t pair = 0);

/// Unprojected Bloch vector estimate used by reconstruct_state_1q.
std::array<double, 3> estimate_bloch_vector(const ShotStream& shots,
                                            std::size_t pair = 0);

}  // namespace ternary

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

#include "ternary/bell_tomography.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace ternary {

namespace {

// kEigen[outcome][letter - 1].
constexpr int kEigen[4][3] = {
    {+1, -1, +1},  // F+
    {-1, +1, +1},  // F-
    {+1, +1, -1},  // P+
    {-1, -1, -1},  // P-
};

void validate_request(const ShotStream& shots,
                      std::span<const std::size_t> qubits,
                      std::span<const Letter> letters) {
  if (shots.local_dim != 2)
    throw std::invalid_argument("Bell tomography needs a qubit shot stream");
  if (qubits.empty() || qubits.size() != letters.size())
    throw std::invalid_argument(
        "need one letter per qubit and at least one qubit");
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] >= shots.num_pairs)
      throw std::out_of_range("qubit " + std::to_string(qubits[i]) +
                              " outside the " +
                              std::to_string(shots.num_pairs) +
                              "-pair stream");
    for (std::size_t j = 0; j < i; ++j)
      if (qubits[i] == qubits[j])
        throw std::invalid_argument("qubit " + std::to_string(qubits[i]) +
                                    " listed twice");
  }
}

}  // namespace

int outcome_eigenvalue(BellOutcome outcome, Letter letter) {
  return kEigen[static_cast<int>(outcome)][static_cast<int>(letter) - 1];
}

std::string RdmEstimate::letter_string() const {
  std::string out;
  for (Letter l : letters)
    out += static_cast<char>(std::tolower(letter_char(l)));
  return out;
}

ProductTally tally_products(const ShotStream& shots,
                            std::span<const std::size_t> qubits,
                            std::span<const Letter> letters, std::size_t begin,
                            std::size_t end) {
  ProductTally t;
  for (std::size_t s = begin; s < end; ++s) {
    int product = 1;
    for (std::size_t i = 0; i < qubits.size(); ++i)
      product *= outcome_eigenvalue(
          static_cast<BellOutcome>(shots.outcome(s, qubits[i])), letters[i]);
    t.sum += product;
  }
  t.count = end - begin;
  return t;
}

RdmEstimate finish_estimate(std::vector<std::size_t> qubits,
                            std::vector<Letter> letters,
                            const ProductTally& tally) {
  if (tally.count == 0)
    throw std::invalid_argument("cannot estimate from an empty shot stream");
  RdmEstimate e;
  const double n = static_cast<double>(tally.count);
  const double mean = static_cast<double>(tally.sum) / n;
  // Products are +-1, so the plug-in variance is 1 - mean^2.
  const double sd = std::sqrt(std::max(0.0, 1.0 - mean * mean));
  const double gain = std::pow(std::sqrt(3.0), static_cast<double>(qubits.size()));
  e.value = gain * mean;
  e.std_error = gain * sd / std::sqrt(n);
  e.num_shots = tally.count;
  e.qubits = std::move(qubits);
  e.letters = std::move(letters);
  return e;
}

RdmEstimate estimate_rdm_element(const ShotStream& shots,
                                 std::span<const std::size_t> qubits,
                                 std::span<const Letter> letters) {
  validate_request(shots, qubits, letters);
  if (shots.num_shots() == 0)
    throw std::invalid_argument("cannot estimate from an empty shot stream");
  return finish_estimate({qubits.begin(), qubits.end()},
                         {letters.begin(), letters.end()},
                         tally_products(shots, qubits, letters, 0,
                                        shots.num_shots()));
}

std::vector<RdmEstimate> estimate_all_k_rdms(const ShotStream& shots,
                                             std::size_t k, std::size_t n) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (k > n)
    throw std::invalid_argument("k = " + std::to_string(k) +
                                " exceeds n = " + std::to_string(n));
  if (n > shots.num_pairs)
    throw std::out_of_range("n exceeds the number of pairs in the stream");

  std::vector<RdmEstimate> out;
  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  std::size_t letter_combos = 1;
  for (std::size_t i = 0; i < k; ++i) letter_combos *= 3;

  while (true) {
    for (std::size_t code = 0; code < letter_combos; ++code) {
      std::vector<Letter> letters(k);
      std::size_t c = code;
      for (std::size_t i = k; i-- > 0;) {
        letters[i] = static_cast<Letter>(c % 3 + 1);
        c /= 3;
      }
      out.push_back(estimate_rdm_element(shots, subset, letters));
    }
    // Next k-subset of {0..n-1} in lexicographic order.
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return out;
}

Eigen::Matrix2cd xi_density() {
  const DenseState xi = prepare_xi();
  Eigen::Vector2cd v(xi.amplitudes[0], xi.amplitudes[1]);
  return v * v.adjoint();
}

std::array<Eigen::Matrix2cd, 4> sic_povm_elements() {
  const Eigen::Matrix2cd xi = xi_density();
  const Eigen::Matrix2cd sx = to_dense(PauliString::single(0, Letter::X), 1);
  const Eigen::Matrix2cd sy = to_dense(PauliString::single(0, Letter::Y), 1);
  const Eigen::Matrix2cd sz = to_dense(PauliString::single(0, Letter::Z), 1);
  return {xi / 2.0, sz * xi * sz / 2.0, sx * xi * sx / 2.0,
          sy * xi * sy / 2.0};
}

std::array<Eigen::Matrix2cd, 4> induced_povm(const DenseState& ancilla) {
  if (ancilla.local_dim != 2 || ancilla.num_sites != 1)
    throw std::invalid_argument("induced_povm: ancilla must be one qubit");
  std::array<Eigen::Matrix2cd, 4> out;
  for (std::uint8_t o = 0; o < 4; ++o) {
    const DenseState b = bell_state(static_cast<BellOutcome>(o));
    // p(b) = sum <b|i a> rho_ij xi_ac <j c|b> = tr(rho E).
    Eigen::Matrix2cd e = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int a = 0; a < 2; ++a)
          for (int c = 0; c < 2; ++c)
            e(j, i) += std::conj(b.amplitudes[i * 2 + a]) *
                       ancilla.amplitudes[a] *
                       std::conj(ancilla.amplitudes[c]) *
                       b.amplitudes[j * 2 + c];
    out[o] = e;
  }
  return out;
}

std::array<double, 3> estimate_bloch_vector(const ShotStream& shots,
                                            std::size_t pair) {
  std::array<double, 3> r{};
  const std::size_t qubit[1] = {pair};
  for (int a = 0; a < 3; ++a) {
    const Letter letter[1] = {static_cast<Letter>(a + 1)};
    r[a] = estimate_rdm_element(shots, qubit, letter).value;
  }
  return r;
}

Eigen::Matrix2cd reconstruct_state_1q(const ShotStream& shots,
                                      std::size_t pair) {
  const auto r = estimate_bloch_vector(shots, pair);
  Eigen::Matrix2cd rho;
  rho << cdouble(1 + r[2], 0), cdouble(r[0], -r[1]), cdouble(r[0], r[1]),
      cdouble(1 - r[2], 0);
  rho /= 2.0;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(rho);
  Eigen::Vector2d values = eig.eigenvalues();
  for (int i = 0; i < 2; ++i) values[i] = std::clamp(values[i], 0.0, 1.0);
  values /= values.sum();
  return eig.eigenvectors() * values.cast<cdouble>().asDiagonal() *
         eig.eigenvectors().adjoint();
}

}  // namespace ternary

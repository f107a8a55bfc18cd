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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ternary/pauli.hpp"
#include "ternary/rng.hpp"

namespace ternary {

using cdouble = std::complex<double>;

/// Largest register the simulator accepts, counted in amplitudes.
inline constexpr std::size_t kMaxAmplitudes = std::size_t{1} << 20;

/// Thrown when a register would exceed kMaxAmplitudes.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// D^num_sites, or CapacityError past kMaxAmplitudes.
std::size_t register_dimension(std::size_t local_dim, std::size_t num_sites);

/// Pure state of num_sites sites of dimension local_dim each. Site 0 is the
/// leftmost tensor factor, i.e. the most significant digit of the index,
/// matching to_dense for qubits.
struct DenseState {
  std::size_t local_dim = 2;
  std::size_t num_sites = 0;
  std::vector<cdouble> amplitudes;

  /// |0...0>.
  static DenseState zeros(std::size_t local_dim, std::size_t num_sites);
  /// Checks length and unit norm (1e-10).
  static DenseState from_amplitudes(std::size_t local_dim,
                                    std::size_t num_sites,
                                    std::vector<cdouble> amplitudes);

  std::size_t dimension() const { return amplitudes.size(); }
  /// Index step of one unit on the given site.
  std::size_t stride(std::size_t site) const;
  std::size_t digit(std::size_t index, std::size_t site) const {
    return (index / stride(site)) % local_dim;
  }
  double norm() const;
  void normalize();
};

/// Haar-random pure state drawn from complex Gaussian amplitudes.
DenseState random_state(std::size_t local_dim, std::size_t num_sites,
                        Rng& rng);

/// a (x) b; a's sites come first.
DenseState tensor(const DenseState& a, const DenseState& b);

/// Interleaves each system site with a copy of a one-site ancilla: system
/// site j moves to 2j and ancilla j' sits at 2j+1.
DenseState attach_ancillas(const DenseState& system, const DenseState& ancilla);

cdouble inner_product(const DenseState& a, const DenseState& b);

/// Applies a local_dim x local_dim matrix to one site in place.
void apply_local(DenseState& state, std::size_t site,
                 const Eigen::MatrixXcd& op);

/// Applies a Pauli string, phase included, to a qubit register in place.
void apply_pauli(DenseState& state, const PauliString& op);

/// <psi|P|psi> including the phase of P. Qubit registers only.
cdouble expectation_value(const DenseState& state, const PauliString& op);
/// Real expectation of a Hermitian Pauli string; throws
/// std::invalid_argument for phase +-i.
double expectation(const DenseState& state, const PauliString& op);

/// exp(-i theta sigma_x / 2) and exp(-i phi sigma_z / 2).
Eigen::Matrix2cd rx(double theta);
Eigen::Matrix2cd rz(double phi);

/// Ancilla state with <X> = <Y> = <Z> = 1/sqrt(3): Rx(arccos(1/sqrt 3)) then
/// Rz(3 pi / 4) applied to |0>.
DenseState prepare_xi();

/// exp(2 pi i k / D), exact at multiples of a quarter turn.
cdouble root_of_unity(std::size_t D, long long k);

/// X^f Z^g with X|d> = |d+1 mod D> and Z|d> = w^d |d>, w = exp(2 pi i / D).
/// Exponents are reduced mod D; throws std::invalid_argument for D < 2.
Eigen::MatrixXcd hw_operator(std::size_t D, long long f, long long g);

/// Two-qubit Bell-basis outcome. The numeric value is the generalized label
/// h * 2 + l of the corresponding |Phi_{hl}>.
enum class BellOutcome : std::uint8_t {
  PhiPlus = 0,
  PhiMinus = 1,
  PsiPlus = 2,
  PsiMinus = 3
};

/// "F+", "F-", "P+", "P-".
std::string_view bell_label(BellOutcome o);
BellOutcome parse_bell_label(std::string_view label);

/// (|00> +- |11>)/sqrt2 and (|01> +- |10>)/sqrt2.
DenseState bell_state(BellOutcome o);

/// |Phi_{hl}> = (X^h Z^l (x) 1) sum_d |dd> / sqrt(D), the common eigenbasis
/// of X^f Z^g (x) X^f Z^-g with eigenvalue exp(2 pi i (g h - f l) / D).
/// For D = 2 this is the qubit Bell basis up to global phase.
DenseState generalized_bell_state(std::size_t D, std::size_t h, std::size_t l);

/// One repetition: outcome index h * D + l for every (system, ancilla) pair.
using ShotRecord = std::vector<std::uint16_t>;

/// Outcomes of many repetitions, stored shot-major.
struct ShotStream {
  std::size_t local_dim = 2;
  std::size_t num_pairs = 0;
  std::vector<std::uint16_t> outcomes;

  std::size_t num_shots() const {
    return num_pairs == 0 ? 0 : outcomes.size() / num_pairs;
  }
  std::uint16_t outcome(std::size_t shot, std::size_t pair) const {
    return outcomes[shot * num_pairs + pair];
  }
  std::span<const std::uint16_t> record(std::size_t shot) const {
    return {outcomes.data() + shot * num_pairs, num_pairs};
  }
  void append(std::span<const std::uint16_t> record);
};

/// Measures every (2j, 2j+1) pair in the generalized Bell basis, pair 0
/// first, collapsing the state after each pair. Throws std::invalid_argument
/// for an odd number of sites.
ShotRecord bell_measure_all_pairs(DenseState& state, Rng& rng);

/// Amplitudes of the state in the product of per-pair generalized Bell
/// bases; pair j's label h sits on site 2j and l on site 2j+1.
DenseState to_bell_basis(const DenseState& state);

/// Repeated all-pairs Bell measurement on fresh copies of one state. The
/// joint outcome distribution is computed once; shot blocks of kShotBlock
/// draw from Rng(seed, block) so the stream is identical for any worker
/// count.
class BellSampler {
 public:
  static constexpr std::size_t kShotBlock = 4096;

  explicit BellSampler(const DenseState& state);

  ShotStream sample(std::size_t shots, std::uint64_t seed,
                    std::size_t workers = 1) const;

  /// Exact probability of each joint outcome, indexed like to_bell_basis.
  const std::vector<double>& probabilities() const { return probabilities_; }
  std::size_t num_pairs() const { return num_pairs_; }
  std::size_t local_dim() const { return local_dim_; }
  /// Per-pair outcome labels for a joint index.
  ShotRecord decode(std::size_t joint_index) const;

 private:
  void draw_block(std::size_t block, std::size_t count, std::uint64_t seed,
                  std::uint16_t* out) const;

  std::size_t local_dim_;
  std::size_t num_pairs_;
  std::vector<double> probabilities_;
  std::vector<double> cumulative_;
};

}  // namespace ternary

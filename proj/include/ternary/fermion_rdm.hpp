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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ternary/pauli.hpp"
#include "ternary/state.hpp"

namespace ternary {

/// coefficient * gamma_{u_1} ... gamma_{u_m} with 1-based, strictly
/// increasing Majorana indices.
struct MajoranaMonomial {
  std::vector<std::size_t> indices;
  cdouble coefficient{1.0, 0.0};

  /// Brings an arbitrary product into canonical order. Each transposition of
  /// distinct neighbours flips the sign and gamma_u gamma_u = 1 removes the
  /// pair. Throws std::invalid_argument for index 0.
  static MajoranaMonomial canonical(std::vector<std::size_t> raw,
                                    cdouble coefficient = 1.0);
};

/// i^{m(m-1)/2}: multiplying a product of m distinct Majoranas by this
/// makes it Hermitian.
cdouble hermitian_phase(std::size_t m);

/// Product, in index order, of the mapped Majorana operators. The
/// monomial's coefficient is not folded in. Throws std::out_of_range for an
/// index outside 1..table.size().
PauliString encode_monomial(const MajoranaMonomial& m,
                            std::span<const PauliString> table);

/// All strictly increasing m-subsets of {1..count} in lexicographic order.
std::vector<std::vector<std::size_t>> majorana_subsets(std::size_t count,
                                                       std::size_t m);

/// One fermionic RDM coefficient <gamma_{u_1} ... gamma_{u_2k}>.
struct FermionRdmEntry {
  std::vector<std::size_t> indices;
  /// Raw expectation of the ordered product; purely imaginary when
  /// 2k(2k-1)/2 is odd.
  cdouble value;
  /// hermitian_phase(2k) * value, real.
  double hermitian = 0;
  double std_error = 0;
  std::size_t num_shots = 0;
  /// Encoded operator, phase included.
  PauliString pauli;
  std::size_t weight = 0;
  /// sqrt(3)^weight, the factor the Bell scheme divides out.
  double attenuation = 1;
};

struct FermionRdmTable {
  std::size_t n_modes = 0;
  std::size_t k = 0;
  /// (2n+1)^k, the per-element attenuation ceiling for the ternary tree.
  double attenuation_bound = 1;
  std::vector<FermionRdmEntry> entries;
};

/// (2n+1)^k.
double attenuation_bound(std::size_t n_modes, std::size_t k);

/// Exact C(2n, 2k) table from the dense oracle. The state must live on the
/// qubits of `table` (n qubits for 2n Majoranas). Throws
/// std::invalid_argument for k == 0 or 2k > 2n.
FermionRdmTable exact_fermionic_rdm(const DenseState& state,
                                    std::span<const PauliString> table,
                                    std::size_t k);

/// Same table estimated from one Bell-basis shot stream on state (x) xi^n.
/// Each entry is i^phase * sqrt(3)^weight * mean eigenvalue product of its
/// encoded string. Throws CapacityError if 2n qubits exceed the simulator,
/// std::invalid_argument for zero shots.
FermionRdmTable sampled_fermionic_rdm(const DenseState& system,
                                      std::span<const PauliString> table,
                                      std::size_t k, std::size_t shots,
                                      std::uint64_t seed,
                                      std::size_t workers = 1);

/// Estimates a table from an existing shot stream of system (x) xi^n.
FermionRdmTable estimate_fermionic_rdm(const ShotStream& shots,
                                       std::span<const PauliString> table,
                                       std::size_t k);

/// Number of qubits spanned by a Majorana table.
std::size_t table_qubits(std::span<const PauliString> table);

/// The joint -1 eigenstate of every i gamma_{2j-1} gamma_{2j}, i.e. the
/// state with all encoded occupation numbers zero. Global phase is fixed by
/// making the largest amplitude real and positive.
DenseState encoded_vacuum(std::span<const PauliString> table);

/// c^dag_{j_1} ... c^dag_{j_r} |vac> for occupied modes j_1 < ... < j_r
/// (0-based), with c^dag_j = (gamma_{2j+1} - i gamma_{2j+2}) / 2.
DenseState encode_fock_state(std::span<const PauliString> table,
                             const std::vector<bool>& occupied);

}  // namespace ternary

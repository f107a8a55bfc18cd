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

#include "ternary/fermion_rdm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ternary/bell_tomography.hpp"

namespace ternary {

namespace {

void check_order(std::span<const PauliString> table, std::size_t k) {
  if (table.empty() || table.size() % 2 != 0)
    throw std::invalid_argument("Majorana table must hold 2n operators");
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (2 * k > table.size())
    throw std::invalid_argument("2k = " + std::to_string(2 * k) +
                                " exceeds the " +
                                std::to_string(table.size()) +
                                " Majorana operators");
}

FermionRdmEntry describe(std::vector<std::size_t> indices,
                         std::span<const PauliString> table) {
  FermionRdmEntry e;
  e.pauli = encode_monomial(MajoranaMonomial{indices}, table);
  e.weight = e.pauli.weight();
  e.attenuation = std::pow(std::sqrt(3.0), static_cast<double>(e.weight));
  e.indices = std::move(indices);
  return e;
}

// (1 - P) / 2 applied in place.
void project_minus(DenseState& s, const PauliString& p) {
  DenseState image = s;
  apply_pauli(image, p);
  for (std::size_t i = 0; i < s.dimension(); ++i)
    s.amplitudes[i] = 0.5 * (s.amplitudes[i] - image.amplitudes[i]);
}

}  // namespace

MajoranaMonomial MajoranaMonomial::canonical(std::vector<std::size_t> raw,
                                             cdouble coefficient) {
  for (std::size_t u : raw)
    if (u == 0)
      throw std::invalid_argument("Majorana indices are 1-based");
  // Bubble sort tracks the permutation sign; equal neighbours annihilate.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
      if (raw[i] > raw[i + 1]) {
        std::swap(raw[i], raw[i + 1]);
        coefficient = -coefficient;
        changed = true;
      } else if (raw[i] == raw[i + 1]) {
        raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(i),
                  raw.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return MajoranaMonomial{std::move(raw), coefficient};
}

cdouble hermitian_phase(std::size_t m) {
  static constexpr cdouble kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPowers[(m == 0 ? 0 : m * (m - 1) / 2) % 4];
}

PauliString encode_monomial(const MajoranaMonomial& m,
                            std::span<const PauliString> table) {
  PauliString out = PauliString::identity();
  for (std::size_t u : m.indices) {
    if (u < 1 || u > table.size())
      throw std::out_of_range("Majorana index " + std::to_string(u) +
                              " outside 1.." + std::to_string(table.size()));
    out = multiply(out, table[u - 1]);
  }
  return out;
}

std::vector<std::vector<std::size_t>> majorana_subsets(std::size_t count,
                                                       std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  if (m > count) return out;
  std::vector<std::size_t> s(m);
  for (std::size_t i = 0; i < m; ++i) s[i] = i + 1;
  while (true) {
    out.push_back(s);
    std::size_t i = m;
    while (i > 0 && s[i - 1] == count - m + i) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < m; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

double attenuation_bound(std::size_t n_modes, std::size_t k) {
  return std::pow(2.0 * static_cast<double>(n_modes) + 1.0,
                  static_cast<double>(k));
}

std::size_t table_qubits(std::span<const PauliString> table) {
  std::size_t q = 0;
  for (const auto& p : table) q = std::max(q, p.extent());
  return q;
}

FermionRdmTable exact_fermionic_rdm(const DenseState& state,
                                    std::span<const PauliString> table,
                                    std::size_t k) {
  check_order(table, k);
  if (state.local_dim != 2 || state.num_sites != table_qubits(table))
    throw std::invalid_argument(
        "state must be a qubit register matching the Majorana table");
  FermionRdmTable out;
  out.n_modes = table.size() / 2;
  out.k = k;
  out.attenuation_bound = attenuation_bound(out.n_modes, k);
  for (auto& idx : majorana_subsets(table.size(), 2 * k)) {
    FermionRdmEntry e = describe(std::move(idx), table);
    e.value = expectation_value(state, e.pauli);
    e.hermitian = (hermitian_phase(2 * k) * e.value).real();
    out.entries.push_back(std::move(e));
  }
  return out;
}

FermionRdmTable estimate_fermionic_rdm(const ShotStream& shots,
                                       std::span<const PauliString> table,
                                       std::size_t k) {
  check_order(table, k);
  if (shots.num_shots() == 0)
    throw std::invalid_argument("cannot estimate from an empty shot stream");
  if (shots.local_dim != 2 || shots.num_pairs < table_qubits(table))
    throw std::invalid_argument(
        "shot stream does not cover the qubits of the Majorana table");
  FermionRdmTable out;
  out.n_modes = table.size() / 2;
  out.k = k;
  out.attenuation_bound = attenuation_bound(out.n_modes, k);
  for (auto& idx : majorana_subsets(table.size(), 2 * k)) {
    FermionRdmEntry e = describe(std::move(idx), table);
    e.num_shots = shots.num_shots();
    double estimate = 1.0;
    if (e.weight > 0) {
      std::vector<std::size_t> qubits;
      std::vector<Letter> letters;
      for (const auto& f : e.pauli.factors()) {
        qubits.push_back(f.qubit);
        letters.push_back(f.letter);
      }
      const RdmEstimate r = estimate_rdm_element(shots, qubits, letters);
      estimate = r.value;
      e.std_error = r.std_error;
    }
    e.value = e.pauli.phase_factor() * estimate;
    e.hermitian = (hermitian_phase(2 * k) * e.value).real();
    out.entries.push_back(std::move(e));
  }
  return out;
}

FermionRdmTable sampled_fermionic_rdm(const DenseState& system,
                                      std::span<const PauliString> table,
                                      std::size_t k, std::size_t shots,
                                      std::uint64_t seed,
                                      std::size_t workers) {
  check_order(table, k);
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  if (system.local_dim != 2 || system.num_sites != table_qubits(table))
    throw std::invalid_argument(
        "state must be a qubit register matching the Majorana table");
  register_dimension(2, 2 * system.num_sites);
  const BellSampler sampler(attach_ancillas(system, prepare_xi()));
  return estimate_fermionic_rdm(sampler.sample(shots, seed, workers), table, k);
}

DenseState encoded_vacuum(std::span<const PauliString> table) {
  check_order(table, 1);
  const std::size_t n = table.size() / 2;
  const std::size_t qubits = table_qubits(table);
  std::vector<PauliString> occupation;
  for (std::size_t j = 0; j < n; ++j) {
    // i gamma_{2j+1} gamma_{2j+2} = 2 n_j - 1.
    const PauliString pair = multiply(table[2 * j], table[2 * j + 1]);
    occupation.push_back(pair.with_phase(pair.phase() + 1));
  }

  const std::size_t dim = register_dimension(2, qubits);
  for (std::size_t x = 0; x < dim; ++x) {
    DenseState s;
    s.local_dim = 2;
    s.num_sites = qubits;
    s.amplitudes.assign(dim, cdouble{});
    s.amplitudes[x] = 1.0;
    for (const auto& p : occupation) project_minus(s, p);
    if (s.norm() < 1e-6) continue;
    s.normalize();
    std::size_t top = 0;
    for (std::size_t i = 1; i < dim; ++i)
      if (std::abs(s.amplitudes[i]) > std::abs(s.amplitudes[top]) + 1e-12)
        top = i;
    const cdouble phase = std::abs(s.amplitudes[top]) / s.amplitudes[top];
    for (auto& a : s.amplitudes) a *= phase;
    return s;
  }
  throw std::domain_error(
      "Majorana table has no joint vacuum; operators are not independent");
}

DenseState encode_fock_state(std::span<const PauliString> table,
                             const std::vector<bool>& occupied) {
  DenseState s = encoded_vacuum(table);
  const std::size_t n = table.size() / 2;
  if (occupied.size() != n)
    throw std::invalid_argument("occupation list must have one entry per mode");
  for (std::size_t j = n; j-- > 0;) {
    if (!occupied[j]) continue;
    DenseState a = s, b = s;
    apply_pauli(a, table[2 * j]);
    apply_pauli(b, table[2 * j + 1]);
    for (std::size_t i = 0; i < s.dimension(); ++i)
      s.amplitudes[i] =
          0.5 * (a.amplitudes[i] - cdouble(0, 1) * b.amplitudes[i]);
  }
  s.normalize();
  return s;
}

}  // namespace ternary

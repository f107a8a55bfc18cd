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

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ternary/baseline.hpp"
#include "ternary/fermion_rdm.hpp"
#include "ternary/ternary_tree.hpp"

using namespace ternary;

namespace {

const Letter X = Letter::X, Y = Letter::Y, Z = Letter::Z;

std::vector<bool> bits(std::size_t n, std::size_t code) {
  std::vector<bool> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = (code >> j) & 1;
  return out;
}

}  // namespace

TEST_CASE("canonical ordering of Majorana products") {
  auto m = MajoranaMonomial::canonical({2, 1});
  CHECK(m.indices == std::vector<std::size_t>{1, 2});
  CHECK(m.coefficient == cdouble(-1, 0));
  m = MajoranaMonomial::canonical({1, 1});
  CHECK(m.indices.empty());
  CHECK(m.coefficient == cdouble(1, 0));
  m = MajoranaMonomial::canonical({1, 2, 1}, 2.0);
  CHECK(m.indices == std::vector<std::size_t>{2});
  CHECK(m.coefficient == cdouble(-2, 0));
  m = MajoranaMonomial::canonical({4, 3, 2, 1});
  CHECK(m.indices == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(m.coefficient == cdouble(1, 0));
  CHECK_THROWS_AS(MajoranaMonomial::canonical({0, 1}), std::invalid_argument);

  // Canonicalization agrees with the Pauli images.
  const auto table = build_mapping(3).majorana_table;
  const std::vector<std::size_t> raw{5, 2, 6, 2, 1};
  const auto c = MajoranaMonomial::canonical(raw);
  const PauliString direct = encode_monomial(MajoranaMonomial{raw}, table);
  const PauliString canon = encode_monomial(c, table);
  CHECK(direct.letters_only() == canon.letters_only());
  CHECK(direct.phase_factor() == c.coefficient * canon.phase_factor());
}

TEST_CASE("encoding monomials") {
  const auto t1 = build_mapping(1).majorana_table;
  CHECK(encode_monomial(MajoranaMonomial{{1, 2}}, t1) == PauliString({{0, Z}}, 1));
  CHECK(encode_monomial(MajoranaMonomial{}, t1) == PauliString::identity());
  CHECK_THROWS_AS(encode_monomial(MajoranaMonomial{{3}}, t1), std::out_of_range);

  const auto t4 = build_mapping(4).majorana_table;
  const PauliString p = encode_monomial(MajoranaMonomial{{1, 2, 3, 4}}, t4);
  CHECK(p.weight() <= 8);
  CHECK(PauliString::identity().with_phase(0).is_hermitian());
  // i^{m(m-1)/2} times any encoded product of m distinct Majoranas is Hermitian.
  for (MappingKind kind : kAllMappingKinds) {
    const auto t = majorana_table(kind, 3);
    for (std::size_t m = 1; m <= 6; ++m)
      for (const auto& idx : majorana_subsets(6, m)) {
        const PauliString e = encode_monomial(MajoranaMonomial{idx}, t);
        const cdouble h = hermitian_phase(m) * e.phase_factor();
        REQUIRE(std::abs(h.imag()) < 1e-15);
      }
  }
}

TEST_CASE("Hermitization phases") {
  CHECK(hermitian_phase(0) == cdouble(1, 0));
  CHECK(hermitian_phase(1) == cdouble(1, 0));
  CHECK(hermitian_phase(2) == cdouble(0, 1));
  CHECK(hermitian_phase(3) == cdouble(0, -1));
  CHECK(hermitian_phase(4) == cdouble(-1, 0));
}

TEST_CASE("subsets") {
  CHECK(majorana_subsets(4, 2).size() == 6);
  CHECK(majorana_subsets(6, 2).size() == 15);
  CHECK(majorana_subsets(8, 4).size() == 70);
  CHECK(majorana_subsets(4, 2).front() == std::vector<std::size_t>{1, 2});
  CHECK(majorana_subsets(4, 2).back() == std::vector<std::size_t>{3, 4});
  CHECK(majorana_subsets(2, 3).empty());
}

TEST_CASE("exact tables") {
  const auto jw = jordan_wigner(1);
  const auto t = exact_fermionic_rdm(DenseState::zeros(2, 1), jw, 1);
  REQUIRE(t.entries.size() == 1);
  // i gamma_1 gamma_2 = -Z_0 under Jordan-Wigner, so the empty mode gives -1.
  CHECK(t.entries[0].pauli == PauliString({{0, Z}}, 1));
  CHECK(std::abs(t.entries[0].value - cdouble(0, 1)) < 1e-15);
  CHECK(t.entries[0].hermitian == doctest::Approx(-1.0));

  Rng rng(3);
  const auto tt = build_mapping(3).majorana_table;
  for (int trial = 0; trial < 50; ++trial) {
    const DenseState s = random_state(2, 3, rng);
    const auto k1 = exact_fermionic_rdm(s, tt, 1);
    CHECK(k1.entries.size() == 15);
    for (const auto& e : k1.entries) {
      CHECK(std::abs(e.value.real()) < 1e-12);
      CHECK(std::abs(e.value) <= 1 + 1e-12);
      const PauliString reversed = encode_monomial(
          MajoranaMonomial{{e.indices[1], e.indices[0]}}, tt);
      CHECK(std::abs(expectation_value(s, reversed) + e.value) < 1e-12);
    }
    const auto k2 = exact_fermionic_rdm(s, tt, 2);
    CHECK(k2.entries.size() == 15);
    for (const auto& e : k2.entries)
      CHECK(std::abs((hermitian_phase(4) * e.value).imag()) < 1e-10);
    double norm = 0;
    for (const auto& p : tt) norm += std::pow(expectation(s, p), 2);
    CHECK(norm <= 1 + 1e-9);
  }
  CHECK_THROWS_AS(exact_fermionic_rdm(DenseState::zeros(2, 3), tt, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(exact_fermionic_rdm(DenseState::zeros(2, 3), tt, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(exact_fermionic_rdm(DenseState::zeros(2, 2), tt, 1),
                  std::invalid_argument);
}

TEST_CASE("Fock state encoding") {
  // Under Jordan-Wigner the encoded Fock states are computational basis
  // states with qubit j holding n_j.
  const auto jw = jordan_wigner(3);
  for (std::size_t code = 0; code < 8; ++code) {
    const auto occ = bits(3, code);
    const DenseState s = encode_fock_state(jw, occ);
    std::size_t index = 0;
    for (std::size_t j = 0; j < 3; ++j) index = 2 * index + occ[j];
    CHECK(std::abs(std::abs(s.amplitudes[index]) - 1.0) < 1e-12);
  }
  for (MappingKind kind : kAllMappingKinds) {
    const auto t = majorana_table(kind, 3);
    for (std::size_t code = 0; code < 8; ++code) {
      const auto occ = bits(3, code);
      const DenseState s = encode_fock_state(t, occ);
      for (std::size_t j = 0; j < 3; ++j) {
        PauliString number = multiply(t[2 * j], t[2 * j + 1]);
        number = number.with_phase(number.phase() + 1);
        CHECK(expectation(s, number) == doctest::Approx(occ[j] ? 1.0 : -1.0));
      }
    }
  }
  CHECK_THROWS_AS(encode_fock_state(jw, {true}), std::invalid_argument);
}

TEST_CASE("tables agree across encodings") {
  for (std::size_t n : {2u, 3u}) {
    const std::size_t states = std::size_t{1} << n;
    for (std::size_t code = 0; code < states; ++code)
      for (std::size_t k = 1; k <= 2; ++k) {
        std::vector<FermionRdmTable> tables;
        for (MappingKind kind : kAllMappingKinds) {
          const auto t = majorana_table(kind, n);
          tables.push_back(exact_fermionic_rdm(
              encode_fock_state(t, bits(n, code)), t, k));
        }
        for (std::size_t m = 1; m < tables.size(); ++m)
          for (std::size_t i = 0; i < tables[0].entries.size(); ++i)
            REQUIRE(std::abs(tables[m].entries[i].value -
                             tables[0].entries[i].value) < 1e-9);
      }
  }
  // A superposition of Fock states is also encoding independent.
  for (std::size_t k = 1; k <= 2; ++k) {
    std::vector<FermionRdmTable> tables;
    for (MappingKind kind : kAllMappingKinds) {
      const auto t = majorana_table(kind, 3);
      DenseState a = encode_fock_state(t, bits(3, 0b011));
      const DenseState b = encode_fock_state(t, bits(3, 0b110));
      for (std::size_t i = 0; i < a.dimension(); ++i)
        a.amplitudes[i] = (a.amplitudes[i] + cdouble(0, 1) * b.amplitudes[i]) /
                          std::sqrt(2.0);
      tables.push_back(exact_fermionic_rdm(a, t, k));
    }
    for (std::size_t m = 1; m < tables.size(); ++m)
      for (std::size_t i = 0; i < tables[0].entries.size(); ++i)
        CHECK(std::abs(tables[m].entries[i].value - tables[0].entries[i].value) <
              1e-9);
  }
}

TEST_CASE("sampled table matches the oracle") {
  Rng rng(5);
  const auto t = build_mapping(2).majorana_table;
  const DenseState s = random_state(2, 2, rng);
  const auto est = sampled_fermionic_rdm(s, t, 1, 100000, 5);
  const auto exact = exact_fermionic_rdm(s, t, 1);
  REQUIRE(est.entries.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& e = est.entries[i];
    CHECK(e.num_shots == 100000);
    CHECK(std::abs(e.value - exact.entries[i].value) <= 4 * e.std_error);
    CHECK(e.attenuation <= est.attenuation_bound);
  }
  CHECK(est.attenuation_bound == 5);
  CHECK_THROWS_AS(sampled_fermionic_rdm(s, t, 1, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(sampled_fermionic_rdm(DenseState::zeros(2, 11),
                                        majorana_table(MappingKind::JordanWigner, 11),
                                        1, 10, 1),
                  CapacityError);
}

TEST_CASE("attenuation per element") {
  const auto t4 = build_mapping(4).majorana_table;
  const auto k2 = exact_fermionic_rdm(DenseState::zeros(2, 4), t4, 2);
  CHECK(k2.attenuation_bound == 81);
  double worst = 0;
  for (const auto& e : k2.entries) worst = std::max(worst, e.attenuation);
  CHECK(worst <= 81 + 1e-9);

  auto worst_k1 = [](MappingKind kind) {
    const auto t = majorana_table(kind, 4);
    double w = 0;
    for (const auto& e : exact_fermionic_rdm(DenseState::zeros(2, 4), t, 1).entries)
      w = std::max(w, e.attenuation);
    return w;
  };
  CHECK(worst_k1(MappingKind::TernaryTree) <= 9 + 1e-9);
  CHECK(worst_k1(MappingKind::BravyiKitaev) <= 27 + 1e-9);
}

TEST_CASE("sampled estimates are unbiased") {
  Rng rng(6);
  const auto t = build_mapping(2).majorana_table;
  const DenseState s = random_state(2, 2, rng);
  const auto exact = exact_fermionic_rdm(s, t, 1);
  const BellSampler sampler(attach_ancillas(s, prepare_xi()));
  const std::size_t streams = 100;
  std::vector<cdouble> sum(6, 0.0);
  std::vector<double> var(6, 0.0);
  for (std::size_t r = 0; r < streams; ++r) {
    const auto est = estimate_fermionic_rdm(sampler.sample(2000, 100 + r), t, 1);
    for (std::size_t i = 0; i < 6; ++i) {
      sum[i] += est.entries[i].value;
      var[i] += std::pow(est.entries[i].std_error, 2);
    }
  }
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(std::abs(sum[i] / double(streams) - exact.entries[i].value) <=
          4 * std::sqrt(var[i]) / streams);
}

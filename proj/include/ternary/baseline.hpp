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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ternary/pauli.hpp"

namespace ternary {

enum class MappingKind { JordanWigner, BravyiKitaev, TernaryTree };

inline constexpr MappingKind kAllMappingKinds[] = {
    MappingKind::TernaryTree, MappingKind::JordanWigner,
    MappingKind::BravyiKitaev};

/// Short name used on the command line and in reports: "jw", "bk", "ternary".
std::string_view to_string(MappingKind kind);
/// Accepts the short names and "jordan-wigner", "bravyi-kitaev",
/// "ternary-tree". Throws std::invalid_argument.
MappingKind parse_mapping_kind(std::string_view name);

/// Jordan-Wigner: Majorana 2j-1 -> Z_0..Z_{j-2} X_{j-1} and
/// 2j -> Z_0..Z_{j-2} Y_{j-1} for modes j = 1..n.
std::vector<PauliString> jordan_wigner(std::size_t n_modes);

/// Bravyi-Kitaev on the Fenwick tree where qubit j stores the occupation
/// parity of modes (j & (j+1))..j. For mode j, Majorana 2j+1 is
/// X_{U(j)} X_j Z_{P(j)} and 2j+2 is X_{U(j)} Y_j Z_{R(j)}.
std::vector<PauliString> bravyi_kitaev(std::size_t n_modes);

/// Fenwick index sets behind bravyi_kitaev, each sorted ascending.
namespace fenwick {
std::vector<std::size_t> update_set(std::size_t j, std::size_t n);
std::vector<std::size_t> parity_set(std::size_t j);
std::vector<std::size_t> flip_set(std::size_t j);
std::vector<std::size_t> remainder_set(std::size_t j);
}  // namespace fenwick

/// ceil(log2 n) + 1, the weight cap asserted for bravyi_kitaev.
std::size_t bk_weight_cap(std::size_t n_modes);

/// The 2n-entry Majorana table of any supported mapping.
std::vector<PauliString> majorana_table(MappingKind kind, std::size_t n_modes);

struct WeightStats {
  double mean = 0;
  std::size_t max = 0;
  std::map<std::size_t, std::size_t> histogram;
};

/// Throws std::invalid_argument for an empty table.
WeightStats weight_stats(std::span<const PauliString> table);

}  // namespace ternary

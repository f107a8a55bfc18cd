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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ternary/pauli.hpp"

namespace ternary {

/// Root-to-leaf route through a ternary tree. Step 0, 1, 2 selects the left,
/// middle or right child and contributes an X, Y or Z letter respectively.
struct TreePath {
  std::vector<std::uint8_t> steps;

  std::size_t depth() const { return steps.size(); }
  std::string str() const;

  friend auto operator<=>(const TreePath&, const TreePath&) = default;
  friend bool operator==(const TreePath&, const TreePath&) = default;
};

/// Breadth-first label of the node reached after `level` steps along `path`.
/// The root is 0 and every level is numbered left to right after all
/// shallower levels. Throws std::out_of_range if level > path.depth().
std::size_t node_index(const TreePath& path, std::size_t level);

/// Pauli string for a root-to-leaf path: one letter per step, placed on the
/// qubit of the node the step leaves from. Throws std::invalid_argument for
/// an empty path or a step outside {0, 1, 2}.
PauliString path_operator(const TreePath& path);

/// 3^h as an integer. Throws std::overflow_error past 3^39.
std::size_t pow3(std::size_t h);

/// Ternary-tree fermion-to-qubit mapping for n fermionic modes.
///
/// The base tree is complete with height h, 3^h <= 2n+1 < 3^(h+1). When 2n+1
/// is not a power of three, the leftmost n - (3^h-1)/2 leaves receive an
/// extra qubit each and their path splits into X, Y, Z branches. Paths are
/// ranked lexicographically, the all-Z path is dropped and the remaining 2n
/// paths become Majorana operators 1..2n in rank order.
struct TernaryTreeMapping {
  std::size_t n_modes = 0;
  std::size_t base_height = 0;
  std::size_t num_qubits = 0;
  /// Depth-h leaves that carry an extra qubit, leftmost first.
  std::vector<TreePath> extended_leaves;
  /// paths[u-1] is the path of Majorana operator u.
  std::vector<TreePath> paths;
  /// majorana_table[u-1] is the Pauli image of Majorana operator u.
  std::vector<PauliString> majorana_table;
  TreePath dropped_path;

  bool is_complete() const { return extended_leaves.empty(); }
  /// 1-based access. Throws std::out_of_range.
  const PauliString& majorana(std::size_t u) const;
  PauliString dropped_operator() const { return path_operator(dropped_path); }
};

/// Deterministic construction; the same n always yields the same table.
/// Throws std::invalid_argument for n_modes == 0.
TernaryTreeMapping build_mapping(std::size_t n_modes);

/// ceil(log_3(2n+1)) computed in integers.
std::size_t optimal_max_weight(std::size_t n_modes);

/// log_3(2n), the lower bound on the mean Majorana weight of any mapping.
double weight_lower_bound(std::size_t n_modes);

/// Outcome of checking a Majorana table. Failures are recorded rather than
/// thrown, with Majorana indices 1-based.
struct VerificationReport {
  std::size_t num_operators = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<std::size_t, std::size_t>> commuting_pairs;
  std::vector<std::size_t> bad_squares;
  /// Entries whose phase is not +1.
  std::vector<std::size_t> phased_entries;
  /// Set when path data is available: the product of all path operators,
  /// dropped one included, carries no letters.
  std::optional<bool> identity_product;
  /// Set when path data is available: 2n+1 paths in total and
  /// n - (3^h-1)/2 extended leaves.
  std::optional<bool> path_count_ok;
  std::map<std::size_t, std::size_t> weight_histogram;

  bool passed() const;
  /// Combines reports over disjoint pair ranges of the same table.
  VerificationReport& merge(const VerificationReport& other);
};

/// Checks pairwise anticommutation, unit phase and P*P = +I on an arbitrary
/// table of operators. The pair loop is split by row across `workers`
/// threads; the merged report does not depend on the worker count.
VerificationReport verify_operators(std::span<const PauliString> table,
                                    std::size_t workers = 1);

/// verify_operators plus the tree-specific identity-product and path-count
/// checks.
VerificationReport verify_mapping(const TernaryTreeMapping& mapping);

}  // namespace ternary

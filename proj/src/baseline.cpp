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

#include "ternary/baseline.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ternary/ternary_tree.hpp"

namespace ternary {

std::string_view to_string(MappingKind kind) {
  switch (kind) {
    case MappingKind::JordanWigner:
      return "jw";
    case MappingKind::BravyiKitaev:
      return "bk";
    case MappingKind::TernaryTree:
      return "ternary";
  }
  return "unknown";
}

MappingKind parse_mapping_kind(std::string_view name) {
  if (name == "jw" || name == "jordan-wigner") return MappingKind::JordanWigner;
  if (name == "bk" || name == "bravyi-kitaev") return MappingKind::BravyiKitaev;
  if (name == "ternary" || name == "ternary-tree")
    return MappingKind::TernaryTree;
  throw std::invalid_argument("unknown mapping kind '" + std::string(name) +
                              "' (expected ternary, jw or bk)");
}

std::vector<PauliString> jordan_wigner(std::size_t n_modes) {
  if (n_modes == 0)
    throw std::invalid_argument("jordan_wigner: n_modes must be positive");
  std::vector<PauliString> out;
  out.reserve(2 * n_modes);
  for (std::size_t q = 0; q < n_modes; ++q) {
    std::vector<PauliFactor> prefix;
    for (std::size_t z = 0; z < q; ++z) prefix.push_back({z, Letter::Z});
    auto x = prefix, y = prefix;
    x.push_back({q, Letter::X});
    y.push_back({q, Letter::Y});
    out.emplace_back(std::move(x));
    out.emplace_back(std::move(y));
  }
  return out;
}

namespace fenwick {

std::vector<std::size_t> update_set(std::size_t j, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = j | (j + 1); i < n; i |= i + 1) out.push_back(i);
  return out;
}

std::vector<std::size_t> parity_set(std::size_t j) {
  std::vector<std::size_t> out;
  for (std::size_t i = j; i > 0;) {
    // Qubit i-1 covers modes ((i-1) & i)..i-1.
    out.push_back(i - 1);
    i = (i - 1) & i;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> flip_set(std::size_t j) {
  std::vector<std::size_t> out;
  const std::size_t low = j & (j + 1);
  for (std::size_t i = j; i > low;) {
    out.push_back(i - 1);
    i = (i - 1) & i;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> remainder_set(std::size_t j) {
  const auto parity = parity_set(j);
  const auto flip = flip_set(j);
  std::vector<std::size_t> out;
  std::set_difference(parity.begin(), parity.end(), flip.begin(), flip.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace fenwick

std::vector<PauliString> bravyi_kitaev(std::size_t n_modes) {
  if (n_modes == 0)
    throw std::invalid_argument("bravyi_kitaev: n_modes must be positive");
  std::vector<PauliString> out;
  out.reserve(2 * n_modes);
  for (std::size_t j = 0; j < n_modes; ++j) {
    std::vector<PauliFactor> upper;
    for (std::size_t u : fenwick::update_set(j, n_modes))
      upper.push_back({u, Letter::X});
    auto even = upper, odd = upper;
    even.push_back({j, Letter::X});
    for (std::size_t p : fenwick::parity_set(j)) even.push_back({p, Letter::Z});
    odd.push_back({j, Letter::Y});
    for (std::size_t r : fenwick::remainder_set(j))
      odd.push_back({r, Letter::Z});
    out.emplace_back(std::move(even));
    out.emplace_back(std::move(odd));
  }
  return out;
}

std::size_t bk_weight_cap(std::size_t n_modes) {
  if (n_modes == 0) throw std::invalid_argument("bk_weight_cap: n_modes == 0");
  const std::size_t ceil_log2 =
      n_modes == 1 ? 0 : std::bit_width(n_modes - 1);
  return ceil_log2 + 1;
}

std::vector<PauliString> majorana_table(MappingKind kind, std::size_t n_modes) {
  switch (kind) {
    case MappingKind::JordanWigner:
      return jordan_wigner(n_modes);
    case MappingKind::BravyiKitaev:
      return bravyi_kitaev(n_modes);
    case MappingKind::TernaryTree:
      return build_mapping(n_modes).majorana_table;
  }
  throw std::invalid_argument("unknown mapping kind");
}

WeightStats weight_stats(std::span<const PauliString> table) {
  if (table.empty())
    throw std::invalid_argument("weight_stats: empty operator table");
  WeightStats s;
  std::size_t total = 0;
  for (const auto& p : table) {
    total += p.weight();
    s.max = std::max(s.max, p.weight());
    ++s.histogram[p.weight()];
  }
  s.mean = static_cast<double>(total) / static_cast<double>(table.size());
  return s;
}

}  // namespace ternary

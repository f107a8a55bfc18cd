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

#include "ternary/ternary_tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace ternary {

namespace {

constexpr Letter kStepLetter[3] = {Letter::X, Letter::Y, Letter::Z};

// All 3^depth paths of the given depth in lexicographic order.
std::vector<TreePath> complete_paths(std::size_t depth) {
  std::vector<TreePath> out;
  out.reserve(pow3(depth));
  TreePath p{std::vector<std::uint8_t>(depth, 0)};
  while (true) {
    out.push_back(p);
    std::size_t pos = depth;
    while (pos > 0 && p.steps[pos - 1] == 2) p.steps[--pos] = 0;
    if (pos == 0) break;
    ++p.steps[pos - 1];
  }
  return out;
}

// Rows [begin, end) of the upper-triangular pair loop.
VerificationReport check_pairs(std::span<const PauliString> table,
                               std::size_t begin, std::size_t end) {
  VerificationReport r;
  r.num_operators = table.size();
  for (std::size_t i = begin; i < end; ++i) {
    for (std::size_t j = i + 1; j < table.size(); ++j) {
      ++r.pairs_checked;
      if (!anticommutes(table[i], table[j]))
        r.commuting_pairs.emplace_back(i + 1, j + 1);
    }
  }
  return r;
}

}  // namespace

std::string TreePath::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += ',';
    out += static_cast<char>('0' + steps[i]);
  }
  return out + ")";
}

std::size_t pow3(std::size_t h) {
  if (h > 39) throw std::overflow_error("3^h overflows for h > 39");
  std::size_t v = 1;
  for (std::size_t i = 0; i < h; ++i) v *= 3;
  return v;
}

std::size_t node_index(const TreePath& path, std::size_t level) {
  if (level > path.depth())
    throw std::out_of_range("node_index: level " + std::to_string(level) +
                            " beyond path depth " +
                            std::to_string(path.depth()));
  std::size_t index = (pow3(level) - 1) / 2;
  std::size_t offset = 0;
  for (std::size_t j = 0; j < level; ++j) offset = offset * 3 + path.steps[j];
  return index + offset;
}

PauliString path_operator(const TreePath& path) {
  if (path.steps.empty())
    throw std::invalid_argument("path_operator: empty path");
  std::vector<PauliFactor> factors;
  factors.reserve(path.depth());
  std::size_t offset = 0;
  for (std::size_t level = 0; level < path.depth(); ++level) {
    const std::uint8_t step = path.steps[level];
    if (step > 2)
      throw std::invalid_argument("path_operator: step " +
                                  std::to_string(step) + " is not 0, 1 or 2");
    factors.push_back({(pow3(level) - 1) / 2 + offset, kStepLetter[step]});
    offset = offset * 3 + step;
  }
  return PauliString(std::move(factors));
}

const PauliString& TernaryTreeMapping::majorana(std::size_t u) const {
  if (u < 1 || u > majorana_table.size())
    throw std::out_of_range("Majorana index " + std::to_string(u) +
                            " outside 1.." +
                            std::to_string(majorana_table.size()));
  return majorana_table[u - 1];
}

std::size_t optimal_max_weight(std::size_t n_modes) {
  const std::size_t target = 2 * n_modes + 1;
  std::size_t w = 0;
  while (pow3(w) < target) ++w;
  return w;
}

double weight_lower_bound(std::size_t n_modes) {
  return std::log(2.0 * static_cast<double>(n_modes)) / std::log(3.0);
}

TernaryTreeMapping build_mapping(std::size_t n_modes) {
  if (n_modes == 0)
    throw std::invalid_argument("build_mapping: n_modes must be positive");

  TernaryTreeMapping m;
  m.n_modes = n_modes;
  m.num_qubits = n_modes;
  const std::size_t target = 2 * n_modes + 1;
  std::size_t h = 0;
  while (pow3(h + 1) <= target) ++h;
  m.base_height = h;

  const std::size_t internal = (pow3(h) - 1) / 2;
  const std::size_t extensions = n_modes - internal;
  auto leaves = complete_paths(h);

  std::vector<TreePath> all;
  all.reserve(target);
  for (std::size_t r = 0; r < leaves.size(); ++r) {
    if (r < extensions) {
      m.extended_leaves.push_back(leaves[r]);
      for (std::uint8_t step = 0; step < 3; ++step) {
        TreePath child = leaves[r];
        child.steps.push_back(step);
        all.push_back(std::move(child));
      }
    } else {
      all.push_back(leaves[r]);
    }
  }
  // Children were emitted in place, so `all` is already lexicographic.
  m.dropped_path = TreePath{std::vector<std::uint8_t>(h, 2)};
  for (auto& p : all) {
    if (p == m.dropped_path) continue;
    m.majorana_table.push_back(path_operator(p));
    m.paths.push_back(std::move(p));
  }
  return m;
}

bool VerificationReport::passed() const {
  return commuting_pairs.empty() && bad_squares.empty() &&
         phased_entries.empty() && identity_product.value_or(true) &&
         path_count_ok.value_or(true);
}

VerificationReport& VerificationReport::merge(const VerificationReport& other) {
  num_operators = std::max(num_operators, other.num_operators);
  pairs_checked += other.pairs_checked;
  commuting_pairs.insert(commuting_pairs.end(), other.commuting_pairs.begin(),
                         other.commuting_pairs.end());
  bad_squares.insert(bad_squares.end(), other.bad_squares.begin(),
                     other.bad_squares.end());
  phased_entries.insert(phased_entries.end(), other.phased_entries.begin(),
                        other.phased_entries.end());
  if (other.identity_product) identity_product = other.identity_product;
  if (other.path_count_ok) path_count_ok = other.path_count_ok;
  for (const auto& [w, c] : other.weight_histogram) weight_histogram[w] += c;
  return *this;
}

VerificationReport verify_operators(std::span<const PauliString> table,
                                    std::size_t workers) {
  VerificationReport report;
  report.num_operators = table.size();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& p = table[i];
    ++report.weight_histogram[p.weight()];
    if (p.phase() != 0) report.phased_entries.push_back(i + 1);
    const PauliString square = multiply(p, p);
    if (!square.is_identity() || square.phase() != 0)
      report.bad_squares.push_back(i + 1);
  }

  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(
                                                    table.size(), 1));
  if (workers == 1) return report.merge(check_pairs(table, 0, table.size()));

  // Rows near the top carry more pairs; interleaved blocks balance the load
  // while keeping a fixed merge order.
  const std::size_t block = 16;
  const std::size_t num_blocks = (table.size() + block - 1) / block;
  std::vector<VerificationReport> parts(num_blocks);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t b = w; b < num_blocks; b += workers)
        parts[b] = check_pairs(table, b * block,
                               std::min(table.size(), (b + 1) * block));
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& part : parts) report.merge(part);
  return report;
}

VerificationReport verify_mapping(const TernaryTreeMapping& m) {
  VerificationReport report = verify_operators(m.majorana_table);

  PauliString product = PauliString::identity();
  for (const auto& p : m.paths) product = multiply(product, path_operator(p));
  product = multiply(product, path_operator(m.dropped_path));
  report.identity_product = product.is_identity();

  const std::size_t internal = (pow3(m.base_height) - 1) / 2;
  report.path_count_ok =
      m.paths.size() + 1 == 2 * m.n_modes + 1 &&
      m.majorana_table.size() == m.paths.size() &&
      m.extended_leaves.size() + internal == m.n_modes &&
      m.num_qubits == m.n_modes;
  return report;
}

}  // namespace ternary

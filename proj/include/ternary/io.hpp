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

// JSON and CSV formats shared by the CLI and tests. Parsers throw
// std::invalid_argument with a message naming the offending field.

#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ternary/baseline.hpp"
#include "ternary/bell_tomography.hpp"
#include "ternary/fermion_rdm.hpp"
#include "ternary/pauli.hpp"
#include "ternary/qudit_hw.hpp"
#include "ternary/state.hpp"
#include "ternary/ternary_tree.hpp"

namespace ternary::io {

using nlohmann::json;

struct MappingDocument {
  std::optional<MappingKind> kind;
  std::size_t n_modes = 0;
  std::size_t num_qubits = 0;
  std::optional<TreePath> dropped_path;
  std::vector<PauliString> table;
};

json mapping_to_json(const MappingDocument& doc);
MappingDocument mapping_from_json(const json& j);
MappingDocument document_for(MappingKind kind, std::size_t n_modes);

struct WeightRow {
  std::size_t n = 0;
  MappingKind kind = MappingKind::TernaryTree;
  WeightStats stats;
};

// Header "n,kind,mean_weight,max_weight" plus one line per row.
std::string weight_table_csv(std::span<const WeightRow> rows);

// One {shot_index, outcomes} object per line.
void write_shot_stream(std::ostream& out, const ShotStream& shots);
ShotStream read_shot_stream(std::istream& in, std::size_t local_dim);

// `exact` entries, when given, add an "exact" column.
json rdm_report_to_json(std::span<const RdmEstimate> estimates,
                        std::span<const double> exact = {});
std::string rdm_report_csv(std::span<const RdmEstimate> estimates,
                           std::span<const double> exact = {});

json fermion_table_to_json(const FermionRdmTable& table, MappingKind kind,
                           const FermionRdmTable* exact = nullptr);

json fiducial_to_json(const FiducialState& fid);
FiducialState fiducial_from_json(const json& j,
                                 double min_delta = kDefaultFiducialDelta);

// Shortest round-trip decimal form, used by the CSV writers.
std::string format_double(double x);

}  // namespace ternary::io

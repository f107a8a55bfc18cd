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

#include "ternary/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ternary::io {

namespace {

template <typename T>
T field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw std::invalid_argument(std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument(std::string("field '") + name +
                                "' has the wrong type");
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

json mapping_to_json(const MappingDocument& doc) {
  json j;
  if (doc.kind) j["kind"] = std::string(to_string(*doc.kind));
  j["n_modes"] = doc.n_modes;
  j["num_qubits"] = doc.num_qubits;
  if (doc.dropped_path) {
    json steps = json::array();
    for (auto s : doc.dropped_path->steps) steps.push_back(int{s});
    j["dropped_path"] = steps;
  } else {
    j["dropped_path"] = nullptr;
  }
  json table = json::array();
  for (std::size_t u = 0; u < doc.table.size(); ++u)
    table.push_back({{"majorana_index", u + 1}, {"pauli", doc.table[u].str()}});
  j["table"] = table;
  return j;
}

MappingDocument mapping_from_json(const json& j) {
  MappingDocument doc;
  if (j.is_object() && j.contains("kind"))
    doc.kind = parse_mapping_kind(field<std::string>(j, "kind"));
  doc.n_modes = field<std::size_t>(j, "n_modes");
  doc.num_qubits = field<std::size_t>(j, "num_qubits");
  if (j.contains("dropped_path") && !j["dropped_path"].is_null()) {
    TreePath p;
    for (int s : field<std::vector<int>>(j, "dropped_path")) {
      if (s < 0 || s > 2)
        throw std::invalid_argument("dropped_path step outside 0..2");
      p.steps.push_back(static_cast<std::uint8_t>(s));
    }
    doc.dropped_path = p;
  }
  const json table = field<json>(j, "table");
  if (!table.is_array())
    throw std::invalid_argument("field 'table' must be an array");
  doc.table.resize(table.size());
  std::vector<bool> seen(table.size(), false);
  for (const json& row : table) {
    const auto u = field<std::size_t>(row, "majorana_index");
    if (u < 1 || u > table.size() || seen[u - 1])
      throw std::invalid_argument("majorana_index " + std::to_string(u) +
                                  " is out of range or repeated");
    seen[u - 1] = true;
    doc.table[u - 1] = PauliString::parse(field<std::string>(row, "pauli"));
  }
  if (doc.table.size() != 2 * doc.n_modes)
    throw std::invalid_argument("table must hold 2 * n_modes entries");
  return doc;
}

MappingDocument document_for(MappingKind kind, std::size_t n_modes) {
  MappingDocument doc;
  doc.kind = kind;
  doc.n_modes = n_modes;
  if (kind == MappingKind::TernaryTree) {
    TernaryTreeMapping m = build_mapping(n_modes);
    doc.num_qubits = m.num_qubits;
    doc.dropped_path = m.dropped_path;
    doc.table = std::move(m.majorana_table);
  } else {
    doc.num_qubits = n_modes;
    doc.table = majorana_table(kind, n_modes);
  }
  return doc;
}

std::string weight_table_csv(std::span<const WeightRow> rows) {
  std::string out = "n,kind,mean_weight,max_weight\n";
  for (const auto& r : rows)
    out += std::to_string(r.n) + ',' + std::string(to_string(r.kind)) + ',' +
           format_double(r.stats.mean) + ',' + std::to_string(r.stats.max) +
           '\n';
  return out;
}

void write_shot_stream(std::ostream& out, const ShotStream& shots) {
  const auto d = static_cast<std::uint16_t>(shots.local_dim);
  for (std::size_t s = 0; s < shots.num_shots(); ++s) {
    json outcomes = json::array();
    for (std::uint16_t o : shots.record(s)) {
      if (d == 2)
        outcomes.push_back(std::string(bell_label(static_cast<BellOutcome>(o))));
      else
        outcomes.push_back({o / d, o % d});
    }
    out << json{{"shot_index", s}, {"outcomes", outcomes}}.dump() << '\n';
  }
}

ShotStream read_shot_stream(std::istream& in, std::size_t local_dim) {
  ShotStream shots;
  shots.local_dim = local_dim;
  std::string line;
  std::size_t expected = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw std::invalid_argument("shot line " + std::to_string(expected) +
                                  ": " + e.what());
    }
    if (field<std::size_t>(j, "shot_index") != expected)
      throw std::invalid_argument("shot_index out of sequence at " +
                                  std::to_string(expected));
    const json outcomes = field<json>(j, "outcomes");
    ShotRecord rec;
    for (const json& o : outcomes) {
      if (local_dim == 2) {
        if (!o.is_string())
          throw std::invalid_argument("qubit outcomes must be Bell labels");
        rec.push_back(static_cast<std::uint16_t>(
            parse_bell_label(o.get<std::string>())));
      } else {
        if (!o.is_array() || o.size() != 2)
          throw std::invalid_argument("qudit outcomes must be [h, l] pairs");
        const auto h = o[0].get<std::size_t>(), l = o[1].get<std::size_t>();
        if (h >= local_dim || l >= local_dim)
          throw std::invalid_argument("qudit outcome label out of range");
        rec.push_back(static_cast<std::uint16_t>(h * local_dim + l));
      }
    }
    if (expected == 0) shots.num_pairs = rec.size();
    if (rec.size() != shots.num_pairs || rec.empty())
      throw std::invalid_argument("shot " + std::to_string(expected) +
                                  " has the wrong number of outcomes");
    shots.append(rec);
    ++expected;
  }
  return shots;
}

json rdm_report_to_json(std::span<const RdmEstimate> estimates,
                        std::span<const double> exact) {
  json out = json::array();
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    const auto& e = estimates[i];
    json row = {{"qubits", e.qubits},
                {"letters", e.letter_string()},
                {"value", e.value},
                {"std_error", e.std_error},
                {"num_shots", e.num_shots}};
    if (i < exact.size()) row["exact"] = exact[i];
    out.push_back(row);
  }
  return out;
}

std::string rdm_report_csv(std::span<const RdmEstimate> estimates,
                           std::span<const double> exact) {
  std::string out = "qubits,letters,value,std_error,num_shots";
  out += exact.empty() ? "\n" : ",exact\n";
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    const auto& e = estimates[i];
    std::string qubits;
    for (std::size_t q = 0; q < e.qubits.size(); ++q)
      qubits += (q ? " " : "") + std::to_string(e.qubits[q]);
    out += qubits + ',' + e.letter_string() + ',' + format_double(e.value) +
           ',' + format_double(e.std_error) + ',' +
           std::to_string(e.num_shots);
    if (i < exact.size()) out += ',' + format_double(exact[i]);
    out += '\n';
  }
  return out;
}

json fermion_table_to_json(const FermionRdmTable& table, MappingKind kind,
                           const FermionRdmTable* exact) {
  json entries = json::array();
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    const auto& e = table.entries[i];
    json row = {{"indices", e.indices},
                {"value_re", e.value.real()},
                {"value_im", e.value.imag()},
                {"hermitian", e.hermitian},
                {"std_error", e.std_error},
                {"pauli", e.pauli.str()},
                {"weight", e.weight},
                {"attenuation", e.attenuation}};
    if (exact) {
      row["exact_re"] = exact->entries.at(i).value.real();
      row["exact_im"] = exact->entries.at(i).value.imag();
    }
    entries.push_back(row);
  }
  return {{"n_modes", table.n_modes},
          {"mapping_kind", std::string(to_string(kind))},
          {"k", table.k},
          {"attenuation_bound", table.attenuation_bound},
          {"entries", entries}};
}

json fiducial_to_json(const FiducialState& fid) {
  json amps = json::array();
  for (const auto& a : fid.amplitudes) amps.push_back({a.real(), a.imag()});
  return {{"dimension", fid.dimension}, {"amplitudes", amps}};
}

FiducialState fiducial_from_json(const json& j, double min_delta) {
  const auto d = field<std::size_t>(j, "dimension");
  const auto amps = field<std::vector<std::vector<double>>>(j, "amplitudes");
  if (amps.size() != d)
    throw std::invalid_argument("amplitudes must list 'dimension' entries");
  std::vector<cdouble> v;
  for (const auto& a : amps) {
    if (a.size() != 2)
      throw std::invalid_argument("each amplitude must be [re, im]");
    v.emplace_back(a[0], a[1]);
  }
  return FiducialState::from_amplitudes(std::move(v), min_delta);
}

}  // namespace ternary::io

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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ternary/baseline.hpp"
#include "ternary/bell_tomography.hpp"
#include "ternary/fermion_rdm.hpp"
#include "ternary/io.hpp"
#include "ternary/qudit_hw.hpp"
#include "ternary/state.hpp"
#include "ternary/ternary_tree.hpp"

namespace ternary::cli {

namespace {

using io::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Stream id used for drawing the input state, kept clear of the sampler's
// per-block streams.
constexpr std::uint64_t kStateStream = ~std::uint64_t{0};

struct Options {
  std::string kind = "ternary";
  std::size_t modes = 0;
  std::size_t min_modes = 1;
  std::size_t max_modes = 13;
  std::vector<std::string> kinds;
  std::string file;
  std::size_t qubits = 0;
  std::size_t k = 1;
  std::size_t shots = 10000;
  std::optional<std::uint64_t> seed;
  std::size_t workers = 1;
  std::string format = "json";
  std::string out_path;
  std::string shots_out;
  bool fermionic = false;
  std::string occupation;
  std::size_t dimension = 3;
  std::string fiducial;
  double delta = kDefaultFiducialDelta;
};

json meta(const std::string& command, json config,
          std::optional<std::uint64_t> seed = std::nullopt) {
  json m = {{"tool", "ternary-cli"},
            {"version", kToolVersion},
            {"command", command},
            {"config", std::move(config)}};
  if (seed) m["seed"] = *seed;
  return m;
}

// CSV outputs carry the metadata as leading '#' lines.
std::string csv_meta(const json& m) { return "# " + m.dump() + "\n"; }

MappingKind kind_arg(const std::string& s) {
  try {
    return parse_mapping_kind(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void emit(const Options& o, std::ostream& out, const std::string& payload) {
  if (o.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw UsageError("cannot open output file " + o.out_path);
  f << payload;
}

json report_json(const VerificationReport& r) {
  json pairs = json::array();
  for (const auto& [a, b] : r.commuting_pairs) pairs.push_back({a, b});
  json histogram = json::object();
  for (const auto& [w, c] : r.weight_histogram) histogram[std::to_string(w)] = c;
  json j = {{"passed", r.passed()},
            {"num_operators", r.num_operators},
            {"pairs_checked", r.pairs_checked},
            {"commuting_pairs", pairs},
            {"bad_squares", r.bad_squares},
            {"phased_entries", r.phased_entries},
            {"weight_histogram", histogram}};
  j["identity_product"] =
      r.identity_product ? json(*r.identity_product) : json(nullptr);
  j["path_count_ok"] = r.path_count_ok ? json(*r.path_count_ok) : json(nullptr);
  return j;
}

int cmd_map(const Options& o, std::ostream& out) {
  require(o.modes >= 1, "--modes must be at least 1");
  const MappingKind kind = kind_arg(o.kind);
  json j = io::mapping_to_json(io::document_for(kind, o.modes));
  j["meta"] = meta("map", {{"kind", o.kind}, {"modes", o.modes}});
  emit(o, out, j.dump(2) + "\n");
  return kOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
  require(o.min_modes >= 1 && o.min_modes <= o.max_modes,
          "need 1 <= --min-modes <= --max-modes");
  std::vector<MappingKind> kinds;
  if (o.kinds.empty())
    kinds.assign(std::begin(kAllMappingKinds), std::end(kAllMappingKinds));
  for (const auto& k : o.kinds) kinds.push_back(kind_arg(k));

  std::vector<io::WeightRow> rows;
  for (std::size_t n = o.min_modes; n <= o.max_modes; ++n)
    for (MappingKind k : kinds) {
      const auto table = majorana_table(k, n);
      rows.push_back({n, k, weight_stats(table)});
    }
  json kinds_echo = json::array();
  for (MappingKind k : kinds) kinds_echo.push_back(std::string(to_string(k)));
  const json m = meta("stats", {{"min_modes", o.min_modes},
                                {"max_modes", o.max_modes},
                                {"kinds", kinds_echo},
                                {"format", o.format}});
  if (o.format == "csv") {
    emit(o, out, csv_meta(m) + io::weight_table_csv(rows));
  } else {
    json table = json::array();
    for (const auto& r : rows)
      table.push_back({{"n", r.n},
                       {"kind", std::string(to_string(r.kind))},
                       {"mean_weight", r.stats.mean},
                       {"max_weight", r.stats.max}});
    emit(o, out, json{{"meta", m}, {"rows", table}}.dump(2) + "\n");
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  json config;
  VerificationReport report;
  std::optional<bool> max_weight_ok;
  if (!o.file.empty()) {
    config = {{"file", o.file}};
    std::ifstream f(o.file);
    if (!f) throw UsageError("cannot open mapping file " + o.file);
    io::MappingDocument doc;
    try {
      doc = io::mapping_from_json(json::parse(f));
    } catch (const std::exception& e) {
      // A file that does not even parse is a failed verification.
      err << "verify: " << e.what() << "\n";
      json j = {{"meta", meta("verify", config)},
                {"passed", false},
                {"error", e.what()}};
      emit(o, out, j.dump(2) + "\n");
      return kVerificationFailed;
    }
    report = verify_operators(doc.table);
    if (doc.dropped_path) {
      PauliString product = PauliString::identity();
      for (const auto& p : doc.table) product = multiply(product, p);
      product = multiply(product, path_operator(*doc.dropped_path));
      report.identity_product = product.weight() == 0;
    }
  } else {
    require(o.modes >= 1, "--modes must be at least 1");
    const MappingKind kind = kind_arg(o.kind);
    config = {{"kind", o.kind}, {"modes", o.modes}};
    if (kind == MappingKind::TernaryTree) {
      const TernaryTreeMapping m = build_mapping(o.modes);
      report = verify_mapping(m);
      max_weight_ok = weight_stats(m.majorana_table).max ==
                      optimal_max_weight(o.modes);
    } else {
      report = verify_operators(majorana_table(kind, o.modes));
    }
  }
  json j = report_json(report);
  if (max_weight_ok) j["max_weight_optimal"] = *max_weight_ok;
  const bool passed = report.passed() && max_weight_ok.value_or(true);
  j["passed"] = passed;
  j["meta"] = meta("verify", config);
  emit(o, out, j.dump(2) + "\n");
  return passed ? kOk : kVerificationFailed;
}

std::vector<bool> parse_occupation(const std::string& s, std::size_t modes,
                                   Rng& rng) {
  std::vector<bool> occ(modes);
  if (s.empty()) {
    for (std::size_t j = 0; j < modes; ++j) occ[j] = rng() & 1;
    return occ;
  }
  require(s.size() == modes, "--occupation needs one 0/1 digit per mode");
  for (std::size_t j = 0; j < modes; ++j) {
    require(s[j] == '0' || s[j] == '1', "--occupation digits must be 0 or 1");
    occ[j] = s[j] == '1';
  }
  return occ;
}

void write_shots(const Options& o, const ShotStream& shots) {
  if (o.shots_out.empty()) return;
  std::ofstream f(o.shots_out);
  if (!f) throw UsageError("cannot open shot output file " + o.shots_out);
  io::write_shot_stream(f, shots);
}

int cmd_tomograph(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.shots >= 1, "--shots must be positive");
  require(o.workers >= 1, "--workers must be positive");
  require(o.k >= 1, "--k must be at least 1");
  require(o.format == "json" || o.format == "csv",
          "--format must be json or csv");
  std::uint64_t seed;
  if (o.seed) {
    seed = *o.seed;
  } else {
    seed = (std::uint64_t{std::random_device{}()} << 32) ^
           std::random_device{}();
    err << "tomograph: no --seed given, using " << seed << "\n";
  }
  Rng state_rng(seed, kStateStream);

  if (o.fermionic) {
    require(o.modes >= 1, "--fermionic needs --modes >= 1");
    require(2 * o.k <= 2 * o.modes, "--k exceeds the number of modes");
    const MappingKind kind = kind_arg(o.kind);
    const auto table = majorana_table(kind, o.modes);
    register_dimension(2, 2 * table_qubits(table));
    const std::vector<bool> occ =
        parse_occupation(o.occupation, o.modes, state_rng);
    std::string occ_str;
    for (bool b : occ) occ_str += b ? '1' : '0';
    const DenseState state = encode_fock_state(table, occ);
    const BellSampler sampler(attach_ancillas(state, prepare_xi()));
    const ShotStream shots = sampler.sample(o.shots, seed, o.workers);
    write_shots(o, shots);
    const FermionRdmTable est = estimate_fermionic_rdm(shots, table, o.k);
    const FermionRdmTable exact = exact_fermionic_rdm(state, table, o.k);
    json j = io::fermion_table_to_json(est, kind, &exact);
    j["occupation"] = occ_str;
    j["meta"] = meta("tomograph",
                     {{"fermionic", true}, {"modes", o.modes},
                      {"kind", o.kind}, {"k", o.k}, {"shots", o.shots},
                      {"occupation", o.occupation}, {"workers", o.workers},
                      {"format", "json"}},
                     seed);
    emit(o, out, j.dump(2) + "\n");
    return kOk;
  }

  require(o.qubits >= 1, "--qubits must be at least 1");
  require(o.k <= o.qubits, "--k exceeds --qubits");
  register_dimension(2, 2 * o.qubits);
  const DenseState state = random_state(2, o.qubits, state_rng);
  const BellSampler sampler(attach_ancillas(state, prepare_xi()));
  const ShotStream shots = sampler.sample(o.shots, seed, o.workers);
  write_shots(o, shots);
  const auto estimates = estimate_all_k_rdms(shots, o.k, o.qubits);
  std::vector<double> exact;
  for (const auto& e : estimates) {
    std::vector<PauliFactor> factors;
    for (std::size_t i = 0; i < e.qubits.size(); ++i)
      factors.push_back({e.qubits[i], e.letters[i]});
    exact.push_back(expectation(state, PauliString(factors)));
  }
  const json m = meta("tomograph",
                      {{"fermionic", false}, {"qubits", o.qubits},
                       {"k", o.k}, {"shots", o.shots},
                       {"workers", o.workers}, {"format", o.format}},
                      seed);
  if (o.format == "csv")
    emit(o, out, csv_meta(m) + io::rdm_report_csv(estimates, exact));
  else
    emit(o, out,
         json{{"meta", m}, {"estimates", io::rdm_report_to_json(estimates, exact)}}
                 .dump(2) +
             "\n");
  return kOk;
}

int cmd_qudit_sic(const Options& o, std::ostream& out, std::ostream& err) {
  json config = {{"delta", o.delta}};
  FiducialState fid;
  try {
    if (!o.fiducial.empty()) {
      config["fiducial"] = o.fiducial;
      std::ifstream f(o.fiducial);
      if (!f) throw UsageError("cannot open fiducial file " + o.fiducial);
      fid = io::fiducial_from_json(json::parse(f), o.delta);
    } else {
      config["dimension"] = o.dimension;
      if (o.dimension == 2)
        fid = qubit_fiducial();
      else if (o.dimension == 3)
        fid = qutrit_fiducial();
      else
        throw UsageError("built-in fiducials exist for D = 2 and 3; pass "
                         "--fiducial for other dimensions");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    err << "qudit-sic: " << e.what() << "\n";
    json j = {{"meta", meta("qudit-sic", config)},
              {"valid", false},
              {"error", e.what()}};
    emit(o, out, j.dump(2) + "\n");
    return kVerificationFailed;
  }

  const Eigen::MatrixXd mags = overlap_magnitudes(fid);
  json overlaps = json::array();
  for (Eigen::Index f = 0; f < mags.rows(); ++f)
    for (Eigen::Index g = 0; g < mags.cols(); ++g)
      if (f || g) overlaps.push_back({{"f", f}, {"g", g}, {"magnitude", mags(f, g)}});

  const auto elements = hw_sic_elements(fid);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(mags.rows(), mags.cols());
  for (const auto& e : elements) sum += e;
  const double completeness =
      (sum - Eigen::MatrixXcd::Identity(mags.rows(), mags.cols())).norm();

  const Eigen::MatrixXd gram = sic_overlap_matrix(fid);
  json matrix = json::array();
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < gram.cols(); ++j) row.push_back(gram(i, j));
    matrix.push_back(row);
  }
  json j = io::fiducial_to_json(fid);
  j["meta"] = meta("qudit-sic", config);
  j["valid"] = true;
  j["exact_sic"] = fid.exact_sic;
  j["delta"] = fid.delta;
  j["target_overlap"] = 1.0 / std::sqrt(static_cast<double>(fid.dimension) + 1);
  j["overlaps"] = overlaps;
  j["completeness_error"] = completeness;
  j["sic_overlap_matrix"] = matrix;
  emit(o, out, j.dump(2) + "\n");
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Ternary-tree fermion encodings and Bell-basis tomography",
               "ternary-cli"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Options o;

  auto* map = app.add_subcommand("map", "Print a Majorana-to-Pauli table");
  map->add_option("--kind", o.kind, "ternary, jw or bk");
  map->add_option("--modes", o.modes, "Number of fermionic modes")->required();
  map->add_option("--out", o.out_path, "Write to a file instead of stdout");

  auto* stats = app.add_subcommand("stats", "Pauli weight table per mapping");
  stats->add_option("--min-modes", o.min_modes);
  stats->add_option("--max-modes", o.max_modes);
  stats->add_option("--kinds", o.kinds, "Subset of ternary, jw, bk");
  stats->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  stats->add_option("--out", o.out_path);

  auto* verify = app.add_subcommand("verify", "Check a Majorana table");
  verify->add_option("--kind", o.kind);
  verify->add_option("--modes", o.modes);
  verify->add_option("--file", o.file, "Mapping JSON to check");
  verify->add_option("--out", o.out_path);

  auto* tomo = app.add_subcommand("tomograph", "Simulate Bell-basis tomography");
  tomo->add_option("--qubits", o.qubits, "System qubits (random state)");
  tomo->add_option("--k", o.k, "RDM order");
  tomo->add_option("--shots", o.shots);
  tomo->add_option("--seed", o.seed);
  tomo->add_option("--workers", o.workers);
  tomo->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  tomo->add_option("--out", o.out_path);
  tomo->add_option("--shots-out", o.shots_out, "Write the shot stream (JSONL)");
  tomo->add_flag("--fermionic", o.fermionic, "Majorana RDM of a Fock state");
  tomo->add_option("--modes", o.modes);
  tomo->add_option("--kind", o.kind, "Mapping for --fermionic");
  tomo->add_option("--occupation", o.occupation, "e.g. 101; random if omitted");

  auto* sic = app.add_subcommand("qudit-sic", "Validate a fiducial state");
  sic->add_option("--dimension", o.dimension);
  sic->add_option("--fiducial", o.fiducial, "Fiducial JSON file");
  sic->add_option("--delta", o.delta, "Smallest admissible overlap");
  sic->add_option("--out", o.out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*map) return cmd_map(o, out);
    if (*stats) return cmd_stats(o, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*tomo) return cmd_tomograph(o, out, err);
    if (*sic) return cmd_qudit_sic(o, out, err);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kCapacityError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsageError;
}

}  // namespace ternary::cli

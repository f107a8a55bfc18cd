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

#include <Eigen/Dense>

#include "ternary/state.hpp"

namespace ternary {

inline constexpr double kDefaultFiducialDelta = 1e-6;

// Single-qudit ancilla state. `exact_sic` holds when every non-trivial
// overlap |tr(X^f Z^-g xi)| equals 1/sqrt(D+1); `delta` is the smallest one.
struct FiducialState {
  std::size_t dimension = 0;
  std::vector<cdouble> amplitudes;
  bool exact_sic = false;
  double delta = 0;

  // Normalizes nothing: throws std::invalid_argument unless the vector has
  // unit norm (1e-10), D >= 2 and delta >= min_delta.
  static FiducialState from_amplitudes(std::vector<cdouble> amplitudes,
                                       double min_delta = kDefaultFiducialDelta);

  DenseState state() const;
  Eigen::MatrixXcd density() const;
};

// The Bell-scheme ancilla for D = 2.
FiducialState qubit_fiducial();
// (0, 1, -1) / sqrt(2).
FiducialState qutrit_fiducial();

// tr(X^f Z^-g xi).
cdouble hw_overlap(const FiducialState& fid, long long f, long long g);

// |tr(X^f Z^-g xi)| for every (f, g), row f, column g.
Eigen::MatrixXd overlap_magnitudes(const FiducialState& fid);

struct HwTerm {
  long long f = 0;
  long long g = 0;
  std::size_t site = 0;
};

struct HwEstimate {
  std::vector<HwTerm> terms;
  cdouble value;
  double std_error = 0;
  std::size_t num_shots = 0;
};

// exp(2 pi i (g h - f l) / D) for outcome index h * D + l.
cdouble hw_outcome_phase(std::size_t D, long long f, long long g,
                         std::uint16_t outcome);

// tr(rho X^f1 Z^g1 (x) ... ) from a generalized Bell shot stream of
// rho (x) xi^n: the mean outcome phase product divided by the product of
// fiducial overlaps. Throws std::invalid_argument for (f, g) = (0, 0),
// repeated sites, a dimension mismatch, or an overlap below the fiducial's
// threshold; std::out_of_range for a site outside the stream.
HwEstimate estimate_hw_correlator(const ShotStream& shots,
                                  std::span<const HwTerm> terms,
                                  const FiducialState& fid,
                                  double min_delta = kDefaultFiducialDelta);

// E_hl = X^h Z^l xi Z^-l X^-h / D in outcome order h * D + l.
std::vector<Eigen::MatrixXcd> hw_sic_elements(const FiducialState& fid);

// |<psi_i|psi_j>|^2 between the D^2 orbit states X^h Z^l |xi>.
Eigen::MatrixXd sic_overlap_matrix(const FiducialState& fid);

}  // namespace ternary

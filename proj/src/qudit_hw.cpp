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

#include "ternary/qudit_hw.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ternary {

namespace {

Eigen::VectorXcd as_vector(const FiducialState& fid) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(fid.dimension));
  for (std::size_t i = 0; i < fid.dimension; ++i)
    v[static_cast<Eigen::Index>(i)] = fid.amplitudes[i];
  return v;
}

long long mod(long long a, long long d) { return ((a % d) + d) % d; }

}  // namespace

FiducialState FiducialState::from_amplitudes(std::vector<cdouble> amplitudes,
                                             double min_delta) {
  if (amplitudes.size() < 2)
    throw std::invalid_argument("fiducial dimension must be at least 2");
  double norm2 = 0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10)
    throw std::invalid_argument("fiducial vector must have unit norm");

  FiducialState fid;
  fid.dimension = amplitudes.size();
  fid.amplitudes = std::move(amplitudes);
  const Eigen::MatrixXd mags = overlap_magnitudes(fid);
  const double target = 1.0 / std::sqrt(static_cast<double>(fid.dimension) + 1);
  fid.delta = std::numeric_limits<double>::infinity();
  fid.exact_sic = true;
  for (Eigen::Index f = 0; f < mags.rows(); ++f)
    for (Eigen::Index g = 0; g < mags.cols(); ++g) {
      if (f == 0 && g == 0) continue;
      fid.delta = std::min(fid.delta, mags(f, g));
      if (std::abs(mags(f, g) - target) > 1e-10) fid.exact_sic = false;
    }
  if (fid.delta < min_delta)
    throw std::invalid_argument("fiducial overlap " + std::to_string(fid.delta) +
                                " is below the threshold " +
                                std::to_string(min_delta));
  return fid;
}

DenseState FiducialState::state() const {
  return DenseState::from_amplitudes(dimension, 1, amplitudes);
}

Eigen::MatrixXcd FiducialState::density() const {
  const Eigen::VectorXcd v = as_vector(*this);
  return v * v.adjoint();
}

FiducialState qubit_fiducial() {
  return FiducialState::from_amplitudes(prepare_xi().amplitudes);
}

FiducialState qutrit_fiducial() {
  const double r = 1.0 / std::sqrt(2.0);
  return FiducialState::from_amplitudes({0.0, r, -r});
}

cdouble hw_overlap(const FiducialState& fid, long long f, long long g) {
  return (hw_operator(fid.dimension, f, -g) * fid.density()).trace();
}

Eigen::MatrixXd overlap_magnitudes(const FiducialState& fid) {
  const auto d = static_cast<Eigen::Index>(fid.dimension);
  Eigen::MatrixXd out(d, d);
  for (Eigen::Index f = 0; f < d; ++f)
    for (Eigen::Index g = 0; g < d; ++g)
      out(f, g) = std::abs(hw_overlap(fid, f, g));
  return out;
}

cdouble hw_outcome_phase(std::size_t D, long long f, long long g,
                         std::uint16_t outcome) {
  const auto d = static_cast<long long>(D);
  const long long h = outcome / d, l = outcome % d;
  return root_of_unity(D, mod(g * h - f * l, d));
}

HwEstimate estimate_hw_correlator(const ShotStream& shots,
                                  std::span<const HwTerm> terms,
                                  const FiducialState& fid, double min_delta) {
  if (shots.local_dim != fid.dimension)
    throw std::invalid_argument("shot stream dimension " +
                                std::to_string(shots.local_dim) +
                                " does not match the fiducial's " +
                                std::to_string(fid.dimension));
  if (terms.empty()) throw std::invalid_argument("need at least one term");
  if (shots.num_shots() == 0)
    throw std::invalid_argument("cannot estimate from an empty shot stream");

  const auto d = static_cast<long long>(fid.dimension);
  cdouble denominator = 1.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const HwTerm& t = terms[i];
    if (mod(t.f, d) == 0 && mod(t.g, d) == 0)
      throw std::invalid_argument("term (f, g) = (0, 0) carries no information");
    if (t.site >= shots.num_pairs)
      throw std::out_of_range("site " + std::to_string(t.site) +
                              " outside the stream");
    for (std::size_t j = 0; j < i; ++j)
      if (terms[j].site == t.site)
        throw std::invalid_argument("site " + std::to_string(t.site) +
                                    " listed twice");
    const cdouble o = hw_overlap(fid, t.f, t.g);
    if (std::abs(o) < min_delta)
      throw std::invalid_argument("fiducial overlap vanishes for (f, g) = (" +
                                  std::to_string(t.f) + ", " +
                                  std::to_string(t.g) + ")");
    denominator *= o;
  }

  // Phases are sums of roots of unity; accumulate the exponent instead of
  // complex products so D = 2 sums stay exact.
  std::vector<std::size_t> histogram(fid.dimension, 0);
  for (std::size_t s = 0; s < shots.num_shots(); ++s) {
    long long k = 0;
    for (const HwTerm& t : terms) {
      const std::uint16_t o = shots.outcome(s, t.site);
      k += mod(t.g, d) * (o / d) - mod(t.f, d) * (o % d);
    }
    ++histogram[static_cast<std::size_t>(mod(k, d))];
  }
  cdouble sum = 0;
  for (std::size_t k = 0; k < fid.dimension; ++k)
    sum += static_cast<double>(histogram[k]) *
           root_of_unity(fid.dimension, static_cast<long long>(k));

  HwEstimate e;
  e.terms.assign(terms.begin(), terms.end());
  e.num_shots = shots.num_shots();
  const double n = static_cast<double>(e.num_shots);
  const cdouble mean = sum / n;
  e.value = mean / denominator;
  const double sd = std::sqrt(std::max(0.0, 1.0 - std::norm(mean)));
  e.std_error = sd / std::sqrt(n) / std::abs(denominator);
  return e;
}

std::vector<Eigen::MatrixXcd> hw_sic_elements(const FiducialState& fid) {
  const std::size_t D = fid.dimension;
  const Eigen::MatrixXcd xi = fid.density();
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(D * D);
  for (std::size_t h = 0; h < D; ++h)
    for (std::size_t l = 0; l < D; ++l) {
      const Eigen::MatrixXcd u = hw_operator(D, static_cast<long long>(h),
                                             static_cast<long long>(l));
      out.push_back(u * xi * u.adjoint() / static_cast<double>(D));
    }
  return out;
}

Eigen::MatrixXd sic_overlap_matrix(const FiducialState& fid) {
  const std::size_t D = fid.dimension;
  const Eigen::VectorXcd v = as_vector(fid);
  std::vector<Eigen::VectorXcd> orbit;
  for (std::size_t h = 0; h < D; ++h)
    for (std::size_t l = 0; l < D; ++l)
      orbit.push_back(hw_operator(D, static_cast<long long>(h),
                                  static_cast<long long>(l)) *
                      v);
  const auto m = static_cast<Eigen::Index>(orbit.size());
  Eigen::MatrixXd out(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      out(i, j) = std::norm(orbit[static_cast<std::size_t>(i)].dot(
          orbit[static_cast<std::size_t>(j)]));
  return out;
}

}  // namespace ternary

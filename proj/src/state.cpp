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

#include "ternary/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

namespace ternary {

namespace {

constexpr double kNormTolerance = 1e-10;

void require_qubits(const DenseState& s, const char* what) {
  if (s.local_dim != 2)
    throw std::invalid_argument(std::string(what) +
                                ": Pauli strings need a qubit register");
}

struct PauliMasks {
  std::size_t flip = 0;
  std::size_t sign = 0;
  cdouble base;
};

PauliMasks pauli_masks(const DenseState& s, const PauliString& op) {
  if (op.extent() > s.num_sites)
    throw std::out_of_range("Pauli string touches qubit " +
                            std::to_string(op.extent() - 1) + " of a " +
                            std::to_string(s.num_sites) + "-qubit register");
  PauliMasks m;
  int y_count = 0;
  for (const auto& f : op.factors()) {
    const std::size_t bit = s.stride(f.qubit);
    if (f.letter != Letter::Z) m.flip |= bit;
    if (f.letter != Letter::X) m.sign |= bit;
    if (f.letter == Letter::Y) ++y_count;
  }
  m.base = op.with_phase(op.phase() + y_count).phase_factor();
  return m;
}

// Calls fn(base) for every index whose digits on sites a and b are zero.
template <typename Fn>
void for_each_pair_base(const DenseState& s, std::size_t site_a,
                        std::size_t site_b, Fn&& fn) {
  const std::size_t sa = s.stride(site_a), sb = s.stride(site_b);
  const std::size_t D = s.local_dim;
  for (std::size_t base = 0; base < s.dimension(); ++base) {
    if ((base / sa) % D != 0 || (base / sb) % D != 0) continue;
    fn(base);
  }
}

// In place: amplitudes on sites (2j, 2j+1) go from computational digits
// (a, b) to Bell labels (h, l) and back.
void pair_to_bell(DenseState& s, std::size_t pair, bool inverse) {
  const std::size_t D = s.local_dim;
  const std::size_t sa = s.stride(2 * pair), sb = s.stride(2 * pair + 1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(D));
  std::vector<cdouble> in(D * D), out(D * D);
  for_each_pair_base(s, 2 * pair, 2 * pair + 1, [&](std::size_t base) {
    for (std::size_t a = 0; a < D; ++a)
      for (std::size_t b = 0; b < D; ++b)
        in[a * D + b] = s.amplitudes[base + a * sa + b * sb];
    std::fill(out.begin(), out.end(), cdouble{});
    if (!inverse) {
      // <Phi_hl|ab> is nonzero only for a = b + h, with value w^{-l b}.
      for (std::size_t h = 0; h < D; ++h)
        for (std::size_t l = 0; l < D; ++l) {
          cdouble acc{};
          for (std::size_t b = 0; b < D; ++b)
            acc += root_of_unity(D, -static_cast<long long>(l * b)) *
                   in[((b + h) % D) * D + b];
          out[h * D + l] = acc * scale;
        }
    } else {
      for (std::size_t a = 0; a < D; ++a)
        for (std::size_t b = 0; b < D; ++b) {
          const std::size_t h = (a + D - b) % D;
          cdouble acc{};
          for (std::size_t l = 0; l < D; ++l)
            acc += root_of_unity(D, static_cast<long long>(l * b)) *
                   in[h * D + l];
          out[a * D + b] = acc * scale;
        }
    }
    for (std::size_t a = 0; a < D; ++a)
      for (std::size_t b = 0; b < D; ++b)
        s.amplitudes[base + a * sa + b * sb] = out[a * D + b];
  });
}

void require_pairs(const DenseState& s) {
  if (s.num_sites % 2 != 0)
    throw std::invalid_argument(
        "Bell measurement needs (system, ancilla) pairs; register has " +
        std::to_string(s.num_sites) + " sites");
}

}  // namespace

std::size_t register_dimension(std::size_t local_dim, std::size_t num_sites) {
  if (local_dim < 2)
    throw std::invalid_argument("local dimension must be at least 2");
  std::size_t dim = 1;
  for (std::size_t i = 0; i < num_sites; ++i) {
    dim *= local_dim;
    if (dim > kMaxAmplitudes)
      throw CapacityError("register of " + std::to_string(num_sites) +
                          " sites of dimension " + std::to_string(local_dim) +
                          " exceeds " + std::to_string(kMaxAmplitudes) +
                          " amplitudes");
  }
  return dim;
}

DenseState DenseState::zeros(std::size_t local_dim, std::size_t num_sites) {
  DenseState s;
  s.local_dim = local_dim;
  s.num_sites = num_sites;
  s.amplitudes.assign(register_dimension(local_dim, num_sites), cdouble{});
  s.amplitudes[0] = 1.0;
  return s;
}

DenseState DenseState::from_amplitudes(std::size_t local_dim,
                                       std::size_t num_sites,
                                       std::vector<cdouble> amplitudes) {
  const std::size_t dim = register_dimension(local_dim, num_sites);
  if (amplitudes.size() != dim)
    throw std::invalid_argument("expected " + std::to_string(dim) +
                                " amplitudes, got " +
                                std::to_string(amplitudes.size()));
  DenseState s{local_dim, num_sites, std::move(amplitudes)};
  if (std::abs(s.norm() - 1.0) > kNormTolerance)
    throw std::invalid_argument("state is not normalized (norm " +
                                std::to_string(s.norm()) + ")");
  return s;
}

std::size_t DenseState::stride(std::size_t site) const {
  if (site >= num_sites)
    throw std::out_of_range("site " + std::to_string(site) + " outside a " +
                            std::to_string(num_sites) + "-site register");
  std::size_t st = 1;
  for (std::size_t i = site + 1; i < num_sites; ++i) st *= local_dim;
  return st;
}

double DenseState::norm() const {
  double acc = 0;
  for (const auto& a : amplitudes) acc += std::norm(a);
  return std::sqrt(acc);
}

void DenseState::normalize() {
  const double n = norm();
  if (n == 0) throw std::domain_error("cannot normalize the zero vector");
  for (auto& a : amplitudes) a /= n;
}

DenseState random_state(std::size_t local_dim, std::size_t num_sites,
                        Rng& rng) {
  DenseState s;
  s.local_dim = local_dim;
  s.num_sites = num_sites;
  s.amplitudes.resize(register_dimension(local_dim, num_sites));
  std::normal_distribution<double> normal;
  for (auto& a : s.amplitudes) {
    const double re = normal(rng);
    const double im = normal(rng);
    a = {re, im};
  }
  s.normalize();
  return s;
}

DenseState tensor(const DenseState& a, const DenseState& b) {
  if (a.local_dim != b.local_dim)
    throw std::invalid_argument("tensor: local dimensions differ");
  DenseState out;
  out.local_dim = a.local_dim;
  out.num_sites = a.num_sites + b.num_sites;
  out.amplitudes.resize(register_dimension(out.local_dim, out.num_sites));
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < b.dimension(); ++j)
      out.amplitudes[i * b.dimension() + j] = a.amplitudes[i] * b.amplitudes[j];
  return out;
}

DenseState attach_ancillas(const DenseState& system,
                           const DenseState& ancilla) {
  if (ancilla.num_sites != 1 || ancilla.local_dim != system.local_dim)
    throw std::invalid_argument(
        "attach_ancillas: ancilla must be one site of the system dimension");
  const std::size_t D = system.local_dim;
  const std::size_t n = system.num_sites;
  DenseState out;
  out.local_dim = D;
  out.num_sites = 2 * n;
  out.amplitudes.assign(register_dimension(D, 2 * n), cdouble{});
  for (std::size_t idx = 0; idx < out.dimension(); ++idx) {
    std::size_t sys_index = 0;
    cdouble amp = 1.0;
    std::size_t rest = idx;
    // Digits from the least significant site (2n-1) upwards.
    std::size_t sys_stride = 1;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t anc_digit = rest % D;
      rest /= D;
      const std::size_t sys_digit = rest % D;
      rest /= D;
      amp *= ancilla.amplitudes[anc_digit];
      sys_index += sys_digit * sys_stride;
      sys_stride *= D;
    }
    out.amplitudes[idx] = amp * system.amplitudes[sys_index];
  }
  return out;
}

cdouble inner_product(const DenseState& a, const DenseState& b) {
  if (a.amplitudes.size() != b.amplitudes.size())
    throw std::invalid_argument("inner_product: dimensions differ");
  cdouble acc{};
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return acc;
}

void apply_local(DenseState& state, std::size_t site,
                 const Eigen::MatrixXcd& op) {
  const std::size_t D = state.local_dim;
  if (static_cast<std::size_t>(op.rows()) != D ||
      static_cast<std::size_t>(op.cols()) != D)
    throw std::invalid_argument("apply_local: operator is not D x D");
  const std::size_t st = state.stride(site);
  std::vector<cdouble> in(D);
  for (std::size_t base = 0; base < state.dimension(); ++base) {
    if ((base / st) % D != 0) continue;
    for (std::size_t d = 0; d < D; ++d) in[d] = state.amplitudes[base + d * st];
    for (std::size_t r = 0; r < D; ++r) {
      cdouble acc{};
      for (std::size_t c = 0; c < D; ++c) acc += op(r, c) * in[c];
      state.amplitudes[base + r * st] = acc;
    }
  }
}

void apply_pauli(DenseState& state, const PauliString& op) {
  require_qubits(state, "apply_pauli");
  const auto m = pauli_masks(state, op);
  std::vector<cdouble> out(state.dimension());
  for (std::size_t x = 0; x < state.dimension(); ++x) {
    const bool negative = std::popcount(x & m.sign) & 1;
    out[x ^ m.flip] = (negative ? -m.base : m.base) * state.amplitudes[x];
  }
  state.amplitudes = std::move(out);
}

cdouble expectation_value(const DenseState& state, const PauliString& op) {
  require_qubits(state, "expectation_value");
  const auto m = pauli_masks(state, op);
  cdouble acc{};
  for (std::size_t x = 0; x < state.dimension(); ++x) {
    const bool negative = std::popcount(x & m.sign) & 1;
    const cdouble term = std::conj(state.amplitudes[x ^ m.flip]) *
                         state.amplitudes[x];
    acc += negative ? -term : term;
  }
  return m.base * acc;
}

double expectation(const DenseState& state, const PauliString& op) {
  if (!op.is_hermitian())
    throw std::invalid_argument("expectation: " + op.str() +
                                " is not Hermitian");
  return expectation_value(state, op).real();
}

Eigen::Matrix2cd rx(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Eigen::Matrix2cd m;
  m << c, cdouble(0, -s), cdouble(0, -s), c;
  return m;
}

Eigen::Matrix2cd rz(double phi) {
  Eigen::Matrix2cd m;
  m << std::polar(1.0, -phi / 2), 0, 0, std::polar(1.0, phi / 2);
  return m;
}

DenseState prepare_xi() {
  const double theta = std::acos(1.0 / std::sqrt(3.0));
  const double phi = 3.0 * std::numbers::pi / 4.0;
  DenseState s = DenseState::zeros(2, 1);
  apply_local(s, 0, rx(theta));
  apply_local(s, 0, rz(phi));
  return s;
}

cdouble root_of_unity(std::size_t D, long long k) {
  const long long d = static_cast<long long>(D);
  k = ((k % d) + d) % d;
  if (k == 0) return 1.0;
  if (2 * k == d) return -1.0;
  if (4 * k == d) return {0.0, 1.0};
  if (4 * k == 3 * d) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(d));
}

Eigen::MatrixXcd hw_operator(std::size_t D, long long f, long long g) {
  if (D < 2) throw std::invalid_argument("hw_operator: D must be at least 2");
  const long long d = static_cast<long long>(D);
  const std::size_t shift = static_cast<std::size_t>(((f % d) + d) % d);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(D, D);
  // X^f Z^g |c> = w^{g c} |c + f>.
  for (std::size_t c = 0; c < D; ++c)
    m((c + shift) % D, c) = root_of_unity(D, g * static_cast<long long>(c));
  return m;
}

std::string_view bell_label(BellOutcome o) {
  switch (o) {
    case BellOutcome::PhiPlus:
      return "F+";
    case BellOutcome::PhiMinus:
      return "F-";
    case BellOutcome::PsiPlus:
      return "P+";
    case BellOutcome::PsiMinus:
      return "P-";
  }
  throw std::invalid_argument("invalid Bell outcome");
}

BellOutcome parse_bell_label(std::string_view label) {
  for (std::uint8_t v = 0; v < 4; ++v) {
    const auto o = static_cast<BellOutcome>(v);
    if (bell_label(o) == label) return o;
  }
  throw std::invalid_argument("invalid Bell outcome label '" +
                              std::string(label) + "'");
}

DenseState bell_state(BellOutcome o) {
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<cdouble> amps(4, cdouble{});
  switch (o) {
    case BellOutcome::PhiPlus:
      amps[0] = r, amps[3] = r;
      break;
    case BellOutcome::PhiMinus:
      amps[0] = r, amps[3] = -r;
      break;
    case BellOutcome::PsiPlus:
      amps[1] = r, amps[2] = r;
      break;
    case BellOutcome::PsiMinus:
      amps[1] = r, amps[2] = -r;
      break;
  }
  return DenseState{2, 2, std::move(amps)};
}

DenseState generalized_bell_state(std::size_t D, std::size_t h,
                                  std::size_t l) {
  if (D < 2) throw std::invalid_argument("generalized Bell state: D < 2");
  if (h >= D || l >= D)
    throw std::out_of_range("generalized Bell state: labels must be < D");
  DenseState s;
  s.local_dim = D;
  s.num_sites = 2;
  s.amplitudes.assign(D * D, cdouble{});
  const double scale = 1.0 / std::sqrt(static_cast<double>(D));
  for (std::size_t b = 0; b < D; ++b)
    s.amplitudes[((b + h) % D) * D + b] =
        scale * root_of_unity(D, static_cast<long long>(l * b));
  return s;
}

void ShotStream::append(std::span<const std::uint16_t> record) {
  if (record.size() != num_pairs)
    throw std::invalid_argument("shot record has " +
                                std::to_string(record.size()) +
                                " outcomes, stream expects " +
                                std::to_string(num_pairs));
  outcomes.insert(outcomes.end(), record.begin(), record.end());
}

DenseState to_bell_basis(const DenseState& state) {
  require_pairs(state);
  DenseState out = state;
  for (std::size_t p = 0; p < state.num_sites / 2; ++p)
    pair_to_bell(out, p, false);
  return out;
}

ShotRecord bell_measure_all_pairs(DenseState& state, Rng& rng) {
  require_pairs(state);
  const std::size_t D = state.local_dim;
  const std::size_t pairs = state.num_sites / 2;
  ShotRecord record(pairs);
  std::vector<double> probs(D * D);
  for (std::size_t p = 0; p < pairs; ++p) {
    pair_to_bell(state, p, false);
    const std::size_t sa = state.stride(2 * p), sb = state.stride(2 * p + 1);
    std::fill(probs.begin(), probs.end(), 0.0);
    for (std::size_t i = 0; i < state.dimension(); ++i)
      probs[state.digit(i, 2 * p) * D + state.digit(i, 2 * p + 1)] +=
          std::norm(state.amplitudes[i]);

    double total = 0;
    for (double v : probs) total += v;
    const double u = rng.uniform() * total;
    std::size_t chosen = 0;
    double acc = 0;
    for (; chosen + 1 < probs.size(); ++chosen) {
      acc += probs[chosen];
      if (u < acc) break;
    }
    // Skip zero-probability labels that rounding might land on.
    while (probs[chosen] == 0.0 && chosen > 0) --chosen;
    record[p] = static_cast<std::uint16_t>(chosen);

    const double scale = 1.0 / std::sqrt(probs[chosen]);
    const std::size_t h = chosen / D, l = chosen % D;
    for_each_pair_base(state, 2 * p, 2 * p + 1, [&](std::size_t base) {
      for (std::size_t a = 0; a < D; ++a)
        for (std::size_t b = 0; b < D; ++b) {
          auto& amp = state.amplitudes[base + a * sa + b * sb];
          amp = (a == h && b == l) ? amp * scale : cdouble{};
        }
    });
    pair_to_bell(state, p, true);
  }
  return record;
}

BellSampler::BellSampler(const DenseState& state)
    : local_dim_(state.local_dim), num_pairs_(state.num_sites / 2) {
  const DenseState rotated = to_bell_basis(state);
  probabilities_.resize(rotated.dimension());
  cumulative_.resize(rotated.dimension());
  double acc = 0;
  for (std::size_t i = 0; i < rotated.dimension(); ++i) {
    probabilities_[i] = std::norm(rotated.amplitudes[i]);
    acc += probabilities_[i];
    cumulative_[i] = acc;
  }
}

ShotRecord BellSampler::decode(std::size_t joint_index) const {
  ShotRecord out(num_pairs_);
  const std::size_t D = local_dim_;
  for (std::size_t p = num_pairs_; p-- > 0;) {
    const std::size_t l = joint_index % D;
    joint_index /= D;
    const std::size_t h = joint_index % D;
    joint_index /= D;
    out[p] = static_cast<std::uint16_t>(h * D + l);
  }
  return out;
}

void BellSampler::draw_block(std::size_t block, std::size_t count,
                             std::uint64_t seed, std::uint16_t* out) const {
  Rng rng(seed, block);
  const double total = cumulative_.back();
  for (std::size_t s = 0; s < count; ++s) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    std::size_t index = static_cast<std::size_t>(it - cumulative_.begin());
    index = std::min(index, cumulative_.size() - 1);
    while (probabilities_[index] == 0.0 && index > 0) --index;
    const ShotRecord rec = decode(index);
    std::copy(rec.begin(), rec.end(), out + s * num_pairs_);
  }
}

ShotStream BellSampler::sample(std::size_t shots, std::uint64_t seed,
                               std::size_t workers) const {
  ShotStream stream;
  stream.local_dim = local_dim_;
  stream.num_pairs = num_pairs_;
  stream.outcomes.resize(shots * num_pairs_);
  const std::size_t blocks = (shots + kShotBlock - 1) / kShotBlock;
  auto run = [&](std::size_t first, std::size_t step) {
    for (std::size_t b = first; b < blocks; b += step) {
      const std::size_t begin = b * kShotBlock;
      const std::size_t count = std::min(kShotBlock, shots - begin);
      draw_block(b, count, seed, stream.outcomes.data() + begin * num_pairs_);
    }
  };
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(blocks, 1));
  if (workers == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
    for (auto& t : pool) t.join();
  }
  return stream;
}

}  // namespace ternary

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

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace ternary {

/// Single-qubit Pauli letter. Identity is represented by absence.
enum class Letter : std::uint8_t { X = 1, Y = 2, Z = 3 };

char letter_char(Letter l);
Letter letter_from_char(char c);

/// One non-identity factor of a Pauli string.
struct PauliFactor {
  std::size_t qubit;
  Letter letter;

  friend bool operator==(const PauliFactor&, const PauliFactor&) = default;
};

/**
 * A phase-tracked tensor product of single-qubit Pauli letters,
 *
 *   P = i^phase * prod_q sigma^{letter_q}_q.
 *
 * The factors are kept sorted by qubit index with no identity entries, so
 * two equal operators always have equal representations. Qubit indices are
 * unbounded; a register width only enters when the string is densified.
 */
class PauliString {
 public:
  PauliString() = default;

  /// Builds a string from (qubit, letter) pairs in any order. Throws
  /// std::invalid_argument if a qubit index repeats.
  explicit PauliString(std::vector<PauliFactor> factors, int phase = 0);
  PauliString(std::initializer_list<PauliFactor> factors, int phase = 0)
      : PauliString(std::vector<PauliFactor>(factors), phase) {}

  static PauliString identity() { return {}; }
  static PauliString single(std::size_t qubit, Letter l) {
    return PauliString({PauliFactor{qubit, l}});
  }

  /// Power of i in [0, 4).
  int phase() const { return phase_; }
  const std::vector<PauliFactor>& factors() const { return factors_; }
  std::size_t weight() const { return factors_.size(); }
  bool is_identity() const { return factors_.empty(); }
  /// Hermitian iff the phase is real (+1 or -1).
  bool is_hermitian() const { return phase_ % 2 == 0; }

  /// Letter code (1=X, 2=Y, 3=Z) on a qubit, 0 for identity.
  std::uint8_t letter_code(std::size_t qubit) const;
  /// One past the largest qubit index touched (0 for identity).
  std::size_t extent() const {
    return factors_.empty() ? 0 : factors_.back().qubit + 1;
  }

  PauliString with_phase(int phase) const;
  /// Same letters, phase reset to +1.
  PauliString letters_only() const { return with_phase(0); }

  std::complex<double> phase_factor() const;

  /// Text form: phase token then factor tokens, e.g. "+i X0 Z3 Y7" or "+ I".
  std::string str() const;
  static PauliString parse(std::string_view text);

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int phase_ = 0;
  std::vector<PauliFactor> factors_;

  friend PauliString multiply(const PauliString& a, const PauliString& b);
};

/// Product a*b with exact phase bookkeeping; linear in the two weights.
PauliString multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) {
  return multiply(a, b);
}

/// True iff a*b == -b*a, i.e. the number of shared qubits carrying different
/// letters is odd.
bool anticommutes(const PauliString& a, const PauliString& b);
inline bool commutes(const PauliString& a, const PauliString& b) {
  return !anticommutes(a, b);
}

/// Largest register width accepted by to_dense.
inline constexpr std::size_t kMaxDenseQubits = 14;

/// Dense matrix of p on num_qubits qubits. Qubit 0 is the leftmost tensor
/// factor (most significant bit of the row index).
Eigen::MatrixXcd to_dense(const PauliString& p, std::size_t num_qubits);

std::ostream& operator<<(std::ostream& os, const PauliString& p);

}  // namespace ternary

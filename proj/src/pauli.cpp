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

#include "ternary/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace ternary {

namespace {

int mod4(int v) { return ((v % 4) + 4) % 4; }

// Product of two non-identity letters: returns (letter code of the result,
// power of i). XY = iZ, YZ = iX, ZX = iY and the reversed orders pick up -i.
std::pair<std::uint8_t, int> letter_product(std::uint8_t a, std::uint8_t b) {
  if (a == b) return {0, 0};
  const auto c = static_cast<std::uint8_t>(a ^ b);
  const int cyclic = ((b - a) % 3 + 3) % 3 == 1;
  return {c, cyclic ? 1 : 3};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

char letter_char(Letter l) {
  switch (l) {
    case Letter::X:
      return 'X';
    case Letter::Y:
      return 'Y';
    case Letter::Z:
      return 'Z';
  }
  throw std::invalid_argument("invalid Pauli letter");
}

Letter letter_from_char(char c) {
  switch (c) {
    case 'X':
    case 'x':
      return Letter::X;
    case 'Y':
    case 'y':
      return Letter::Y;
    case 'Z':
    case 'z':
      return Letter::Z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") + c +
                                  "'");
  }
}

PauliString::PauliString(std::vector<PauliFactor> factors, int phase)
    : phase_(mod4(phase)), factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const PauliFactor& a, const PauliFactor& b) {
              return a.qubit < b.qubit;
            });
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto code = static_cast<std::uint8_t>(factors_[i].letter);
    if (code < 1 || code > 3)
      throw std::invalid_argument("Pauli factor with invalid letter");
    if (i > 0 && factors_[i].qubit == factors_[i - 1].qubit)
      throw std::invalid_argument("qubit " + std::to_string(factors_[i].qubit) +
                                  " appears twice in Pauli string");
  }
}

std::uint8_t PauliString::letter_code(std::size_t qubit) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), qubit,
      [](const PauliFactor& f, std::size_t q) { return f.qubit < q; });
  if (it == factors_.end() || it->qubit != qubit) return 0;
  return static_cast<std::uint8_t>(it->letter);
}

PauliString PauliString::with_phase(int phase) const {
  PauliString out = *this;
  out.phase_ = mod4(phase);
  return out;
}

std::complex<double> PauliString::phase_factor() const {
  static constexpr std::complex<double> kPowers[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPowers[phase_];
}

std::string PauliString::str() const {
  static constexpr const char* kPhase[4] = {"+", "+i", "-", "-i"};
  std::string out = kPhase[phase_];
  if (factors_.empty()) return out + " I";
  for (const auto& f : factors_) {
    out += ' ';
    out += letter_char(f.letter);
    out += std::to_string(f.qubit);
  }
  return out;
}

PauliString PauliString::parse(std::string_view text) {
  std::istringstream in{std::string(trim(text))};
  std::string token;
  std::vector<std::string> tokens;
  while (in >> token) tokens.push_back(token);
  if (tokens.empty()) throw std::invalid_argument("empty Pauli string");

  int phase = 0;
  std::size_t start = 0;
  if (tokens[0] == "+") {
    start = 1;
  } else if (tokens[0] == "-") {
    phase = 2, start = 1;
  } else if (tokens[0] == "+i") {
    phase = 1, start = 1;
  } else if (tokens[0] == "-i") {
    phase = 3, start = 1;
  }

  std::vector<PauliFactor> factors;
  bool saw_identity = false;
  for (std::size_t t = start; t < tokens.size(); ++t) {
    const std::string& tok = tokens[t];
    if (tok == "I") {
      saw_identity = true;
      continue;
    }
    if (tok.size() < 2)
      throw std::invalid_argument("malformed Pauli token '" + tok + "'");
    const Letter l = letter_from_char(tok[0]);
    std::size_t qubit = 0;
    auto [ptr, ec] =
        std::from_chars(tok.data() + 1, tok.data() + tok.size(), qubit);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed qubit index in '" + tok + "'");
    factors.push_back({qubit, l});
  }
  if (saw_identity && !factors.empty())
    throw std::invalid_argument("identity token mixed with Pauli factors");
  return PauliString(std::move(factors), phase);
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  PauliString out;
  int phase = a.phase_ + b.phase_;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() ||
        (ia != a.factors_.end() && ia->qubit < ib->qubit)) {
      out.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->qubit < ia->qubit) {
      out.factors_.push_back(*ib++);
    } else {
      auto [code, p] = letter_product(static_cast<std::uint8_t>(ia->letter),
                                      static_cast<std::uint8_t>(ib->letter));
      phase += p;
      if (code != 0)
        out.factors_.push_back({ia->qubit, static_cast<Letter>(code)});
      ++ia, ++ib;
    }
  }
  out.phase_ = mod4(phase);
  return out;
}

bool anticommutes(const PauliString& a, const PauliString& b) {
  bool odd = false;
  auto ia = a.factors().begin();
  auto ib = b.factors().begin();
  while (ia != a.factors().end() && ib != b.factors().end()) {
    if (ia->qubit < ib->qubit) {
      ++ia;
    } else if (ib->qubit < ia->qubit) {
      ++ib;
    } else {
      if (ia->letter != ib->letter) odd = !odd;
      ++ia, ++ib;
    }
  }
  return odd;
}

Eigen::MatrixXcd to_dense(const PauliString& p, std::size_t num_qubits) {
  if (num_qubits > kMaxDenseQubits)
    throw std::length_error("to_dense: " + std::to_string(num_qubits) +
                            " qubits exceeds the dense limit of " +
                            std::to_string(kMaxDenseQubits));
  if (p.extent() > num_qubits)
    throw std::out_of_range("to_dense: Pauli string touches qubit " +
                            std::to_string(p.extent() - 1) + " of a " +
                            std::to_string(num_qubits) + "-qubit register");

  // Every Pauli string is a monomial matrix: column x maps to row x ^ flip.
  std::size_t flip = 0, sign_mask = 0;
  int y_count = 0;
  for (const auto& f : p.factors()) {
    const std::size_t bit = std::size_t{1} << (num_qubits - 1 - f.qubit);
    if (f.letter != Letter::Z) flip |= bit;
    if (f.letter != Letter::X) sign_mask |= bit;
    if (f.letter == Letter::Y) ++y_count;
  }
  const std::complex<double> base = p.with_phase(p.phase() + y_count)
                                        .phase_factor();
  const std::size_t dim = std::size_t{1} << num_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const bool negative = std::popcount(col & sign_mask) & 1;
    m(col ^ flip, col) = negative ? -base : base;
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const PauliString& p) {
  return os << p.str();
}

}  // namespace ternary

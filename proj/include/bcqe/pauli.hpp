// Copyright 2026 The bcqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Pauli-string algebra on up to 64 qubits.
//
// A word is stored as two bit masks: bit q of `x` / `z` marks an X / Z factor
// on qubit q, and Y is the case x = z = 1. Words render big-end first: the
// leftmost character is qubit n-1 and the rightmost qubit 0, matching the
// computational-basis bitstrings used by basis_state().

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bcqe/tensor.hpp"

namespace bcqe {

struct PauliWord {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  bool is_identity() const noexcept { return (x | z) == 0; }
  /// Number of Y factors.
  int y_count() const noexcept;
  /// 'I', 'X', 'Y' or 'Z' acting on `qubit`.
  char letter(int qubit) const noexcept;
  std::string to_string(int n_qubits) const;
  static PauliWord parse(std::string_view text);

  friend bool operator==(const PauliWord&, const PauliWord&) = default;
};

/// Lexicographic order of the rendered strings (I < X < Y < Z, qubit n-1
/// first). Independent of n as long as both words fit in n qubits.
bool word_less(const PauliWord& a, const PauliWord& b) noexcept;

struct PauliWordHash {
  std::size_t operator()(const PauliWord& w) const noexcept;
};

/// a * b = phase * word; phase is one of {1, i, -1, -i}.
struct WordProduct {
  cplx phase;
  PauliWord word;
};
WordProduct multiply(const PauliWord& a, const PauliWord& b) noexcept;

/// True if the two words commute.
bool commutes(const PauliWord& a, const PauliWord& b) noexcept;

struct PauliTerm {
  cplx coefficient;
  PauliWord word;
};

/// Complex-weighted sum of Pauli words over a fixed qubit count. Always kept
/// simplified: each word appears once, terms with |c| <= kDropThreshold are
/// removed and terms are sorted by word_less.
class PauliSum {
 public:
  static constexpr double kDropThreshold = 1e-14;

  explicit PauliSum(int n_qubits = 0);
  PauliSum(int n_qubits, std::vector<PauliTerm> terms);

  static PauliSum identity(int n_qubits, cplx coefficient = 1.0);
  /// coefficient * P on `qubit`, letter in {I, X, Y, Z}.
  static PauliSum single(int n_qubits, int qubit, char letter, cplx coefficient = 1.0);

  int num_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Coefficient of `word`, zero if absent.
  cplx coefficient(const PauliWord& word) const;

  PauliSum adjoint() const;
  /// Coefficients real (anti-Hermitian: purely imaginary) within `tol`.
  bool is_hermitian(double tol = 1e-12) const;
  bool is_antihermitian(double tol = 1e-12) const;
  /// Largest |coefficient|, 0 for the empty sum.
  double max_abs_coefficient() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(cplx scalar);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, cplx s) { return a *= s; }
  friend PauliSum operator*(cplx s, PauliSum a) { return a *= s; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  /// One term per line: "<sign>(<re>,<im>) <WORD>". The sign is that of the
  /// first nonzero component and the pair holds coefficient / sign.
  std::string to_text() const;
  /// Inverse of to_text; the qubit count is taken from the word length.
  static PauliSum from_text(std::string_view text);

 private:
  int n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

/// [a, b] = ab - ba.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// Names the mismatch when two operands disagree on qubit count.
void require_same_qubits(int expected, int actual, const char* where);

}  // namespace bcqe

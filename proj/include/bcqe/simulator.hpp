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

// Dense statevector simulation: Pauli application, exact and shot-sampled
// expectation values, Trotterized evolution and a stochastic noise proxy.

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "bcqe/pauli.hpp"
#include "bcqe/tensor.hpp"

namespace bcqe {

/// Amplitudes indexed by basis integer; bit q of the index is qubit q.
class StateVector {
 public:
  static constexpr int kMaxQubits = 24;

  /// |0...0>.
  explicit StateVector(int n_qubits = 0);
  /// Takes ownership; size must be a power of two.
  explicit StateVector(std::vector<cplx> amplitudes);

  static StateVector basis(int n_qubits, std::uint64_t index);

  int num_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const noexcept { return amps_; }
  std::vector<cplx>& amplitudes() noexcept { return amps_; }
  cplx operator[](std::size_t i) const { return amps_[i]; }
  cplx& operator[](std::size_t i) { return amps_[i]; }

  double norm() const;
  /// Throws NumericalConsistencyError on a zero vector.
  void normalize();
  cplx inner(const StateVector& other) const;  // <this|other>

 private:
  int n_qubits_ = 0;
  std::vector<cplx> amps_;
};

struct ShotConfig {
  std::uint64_t shots = 8192;
  std::uint64_t seed = 0;
};

/// Seed for an independent stream, mixed with splitmix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) noexcept;

/// coefficient * P |state>. Not normalized.
StateVector apply_pauli_term(const StateVector& state, const PauliTerm& term);
StateVector apply(const StateVector& state, const PauliSum& op);

/// <P> for a single word; real because every word is Hermitian.
double word_expectation(const StateVector& state, const PauliWord& word);

struct ExpectationOptions {
  /// Spread words over worker threads. Each word is still reduced serially,
  /// and results are summed in term order, so the answer is bit-identical.
  bool parallel = false;
};

/// <P_k> for each word, in order.
std::vector<double> word_expectations(const StateVector& state, std::span<const PauliWord> words,
                                      const ExpectationOptions& options = {});

/// <state|op|state>.
cplx expectation_exact(const StateVector& state, const PauliSum& op,
                       const ExpectationOptions& options = {});

/// Sample mean of `shots` +-1 outcomes for each word. Word k draws from its
/// own stream seeded by derive_seed(cfg.seed, k). Identity words are exact.
std::vector<double> sampled_word_expectations(const StateVector& state,
                                              std::span<const PauliWord> words,
                                              const ShotConfig& cfg);

/// Binomial shot estimates for observables with the given exact +-1
/// expectations; entry k uses stream derive_seed(cfg.seed, k).
std::vector<double> sample_expectations(std::span<const double> exact, const ShotConfig& cfg);

/// Coefficient-weighted sum of sampled word means. op must be Hermitian.
double expectation_sampled(const StateVector& state, const PauliSum& op, const ShotConfig& cfg);

/// First-order Trotter step of exp(epsilon * A) for anti-Hermitian A. Terms
/// i theta_k P_k are applied in canonical order as exact rotations
/// cos(epsilon theta_k) + i sin(epsilon theta_k) P_k.
StateVector evolve(const StateVector& state, const PauliSum& a_op, double epsilon);

/// One stochastic trajectory of the single-qubit depolarizing channel: each
/// qubit independently, with probability `strength`, gets a uniformly drawn
/// Pauli from {I, X, Y, Z}. Strength 1 therefore fully depolarizes.
StateVector depolarize(const StateVector& state, double strength, std::uint64_t seed);

/// Little-endian 2 x float64 per amplitude, index order.
void dump_amplitudes(const StateVector& state, const std::filesystem::path& path);
StateVector load_amplitudes(const std::filesystem::path& path);

}  // namespace bcqe

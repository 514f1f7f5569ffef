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

// Contracted quantum eigensolver: measures the 2-RDM and the ACSE residual
// on the encoded state, builds the anti-Hermitian two-body generator from
// the residual and takes a Trotterized step along it.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bcqe/encoding.hpp"
#include "bcqe/model.hpp"
#include "bcqe/simulator.hpp"
#include "bcqe/tensor.hpp"

namespace bcqe {

struct TwoRDM {
  ComplexTensor4 elements;
  bool calibrated = true;

  int n_orbitals() const noexcept { return elements.dim(); }
  cplx trace() const;
};

struct ResidualTensor {
  ComplexTensor4 elements;

  double frobenius_norm() const;
};

struct CQEConfig {
  double epsilon = 0.10;
  int max_iterations = 50;
  double energy_tol = 1e-8;
  double residual_tol = 1e-6;
  /// Sampled measurements when set, exact expectations otherwise.
  std::optional<ShotConfig> shots;
  /// Per-iteration depolarizing strength of the measured circuit.
  std::optional<double> noise_strength;
  /// Noisy executions averaged per measurement.
  int noise_trajectories = 64;
  std::uint64_t noise_seed = 0;
  bool calibration = true;
  /// Empty selects every boson in orbital 1.
  std::string initial;
  bool symmetrize_initial = false;
  EncodingOptions encoding;
  /// Halve epsilon while a step fails to lower the (measured) energy by at
  /// least sufficient_decrease * epsilon * |dE/deps|. Zero halves only on an
  /// actual increase.
  bool step_halving = true;
  double sufficient_decrease = 0.1;
  int max_halvings = 30;
  /// Basis length scale override; natural-orbital gamma when unset.
  std::optional<double> gamma;
  bool parallel = false;
};

/// Throws InvalidArgument naming the offending field.
void validate(const CQEConfig& cfg);

/// Bitstring with every boson in orbital 1, e.g. "0101" for N = R = 2.
std::string ground_guess(const QubitLayout& layout);

/// Encoded operators shared by every iteration of one run. Gamma_k and H are
/// already multiplied by the calibration factor, so <Gamma_k> is the 2-RDM
/// element and every word that any Gamma_k or [Gamma_k, H] needs is measured
/// once per iteration.
class CQEContext {
 public:
  CQEContext(ReducedHamiltonian k, const EncodingOptions& encoding, bool calibration);

  const QubitLayout& layout() const noexcept { return layout_; }
  const ReducedHamiltonian& hamiltonian_tensor() const noexcept { return k_; }
  const PauliSum& hamiltonian() const noexcept { return h_; }
  const std::vector<PauliSum>& gammas() const noexcept { return gammas_; }
  const std::vector<PauliSum>& commutators() const noexcept { return commutators_; }
  const std::vector<PauliWord>& words() const noexcept { return words_; }
  double calibration() const noexcept { return calibration_; }
  bool calibrated() const noexcept { return calibrated_; }

  TwoRDM rdm_from(const std::vector<double>& word_values) const;
  ResidualTensor residual_from(const std::vector<double>& word_values) const;

 private:
  struct Indexed {
    std::vector<std::pair<std::size_t, cplx>> terms;  // (word index, coefficient)
  };
  cplx contract(const Indexed& op, const std::vector<double>& values) const;

  ReducedHamiltonian k_;
  QubitLayout layout_;
  double calibration_ = 1.0;
  bool calibrated_ = true;
  std::vector<PauliSum> gammas_;
  PauliSum h_;
  std::vector<PauliSum> commutators_;
  std::vector<PauliWord> words_;
  std::vector<Indexed> gamma_index_;
  std::vector<Indexed> commutator_index_;
};

/// Word expectations for a context, exact or sampled per cfg. `stream`
/// separates the random streams of successive measurements; `depth` is the
/// number of noisy layers the measured circuit has passed through.
std::vector<double> measure_words(const StateVector& state, const CQEContext& ctx, const CQEConfig& cfg,
                                  std::uint64_t stream = 0, int depth = 1);

TwoRDM measure_rdm2(const StateVector& state, const QubitLayout& layout, const CQEConfig& cfg);
TwoRDM measure_rdm2(const StateVector& state, const CQEContext& ctx, const CQEConfig& cfg);

/// Tr[2K 2D]. Throws NumericalConsistencyError if |Im| > 1e-10.
double energy(const TwoRDM& d, const ReducedHamiltonian& k);

/// R^{pq}_{st} = <[Gamma^{pq}_{st}, H]>.
ResidualTensor acse_residual(const StateVector& state, const ReducedHamiltonian& k,
                             const QubitLayout& layout, const CQEConfig& cfg);
ResidualTensor acse_residual(const StateVector& state, const CQEContext& ctx, const CQEConfig& cfg);

/// Removes the part of `a` violating A^{pq}_{st} = -conj(A^{st}_{pq}).
ComplexTensor4 project_antihermitian(const ComplexTensor4& a);

struct NextA {
  ComplexTensor4 elements;
  /// Pairing defect of the input before projection.
  double defect = 0.0;
  std::optional<std::string> warning;
};

/// 2A = conj(R), projected onto the anti-Hermitian pairing. Along
/// exp(eps A) the energy changes by dE/deps = -sum A R, so this is the
/// steepest-descent direction; for real R it equals R.
NextA next_a_operator(const ResidualTensor& residual);

struct IterationRecord {
  int iteration = 0;
  double energy = 0.0;
  double residual_norm = 0.0;
  double err_vs_fci = 0.0;
  double err_vs_exact = 0.0;
  double wall_ms = 0.0;
  double epsilon = 0.0;  // step taken to reach this iterate, 0 at the start
};

struct ConvergenceTrace {
  std::vector<IterationRecord> records;

  /// Columns iter, energy, residual_norm, err_vs_fci, err_vs_exact, wall_ms.
  void write_csv(std::ostream& out) const;
};

struct CQEResult {
  ConvergenceTrace trace;
  TwoRDM rdm;
  double energy = 0.0;
  bool converged = false;
  std::string stop_reason;
  /// Eigenvalue the run is compared against (nearest level in the start
  /// state's exchange-symmetry sector).
  double fci_reference = 0.0;
  double exact_energy = 0.0;
  double gamma = 0.0;
  std::vector<std::string> warnings;
  StateVector final_state;

  int iterations() const noexcept {
    return trace.records.empty() ? 0 : trace.records.back().iteration;
  }
};

CQEResult run(const ModelSpec& spec, const CQEConfig& cfg);

/// Energy of the state after one Trotter step exp(epsilon A) with exact
/// expectations; shared by the gradient tests.
double energy_after_step(const StateVector& state, const CQEContext& ctx, const ComplexTensor4& a,
                         double epsilon);

}  // namespace bcqe

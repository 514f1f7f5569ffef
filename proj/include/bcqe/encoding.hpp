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

// Boson-to-qubit mapping. Boson j in orbital r occupies qubit R(j-1)+(r-1);
// a physical state has exactly one set qubit per boson row. Single-boson
// ladder operators are b = (X+iY)/2 and b+ = (X-iY)/2 on one qubit.
//
// Orbital and boson labels in this header are 1-based. Tensors indexed by
// orbital (ReducedHamiltonian, ComplexTensor4) are 0-based storage.

#include <string_view>
#include <vector>

#include "bcqe/model.hpp"
#include "bcqe/pauli.hpp"
#include "bcqe/simulator.hpp"
#include "bcqe/tensor.hpp"

namespace bcqe {

struct QubitLayout {
  int n_bosons = 2;
  int n_orbitals = 2;

  int n_qubits() const noexcept { return n_bosons * n_orbitals; }
  static QubitLayout of(const ModelSpec& spec) { return {spec.n_bosons, spec.n_orbitals}; }
  friend bool operator==(const QubitLayout&, const QubitLayout&) = default;
};

/// R(j-1) + (r-1). Throws IndexError when j or r is out of range.
int qubit_index(const QubitLayout& layout, int j, int r);

PauliSum single_annihilator(const QubitLayout& layout, int j, int r);
PauliSum single_creator(const QubitLayout& layout, int j, int r);

/// c sum_j b_{j,r}; c <= 0 selects the default 1/sqrt(N).
PauliSum collective_annihilator(const QubitLayout& layout, int r, double c = 0.0);
PauliSum collective_creator(const QubitLayout& layout, int r, double c = 0.0);

enum class Encoding {
  /// Product of collective operators in the order b+_p b+_q b_t b_s.
  kCollective,
  /// sum_{i<j} b+_{i,p} b_{i,s} b+_{j,q} b_{j,t}: one pair of distinct boson
  /// rows per term, so the one-hot subspace is preserved.
  kPairResolved,
};

struct EncodingOptions {
  Encoding kind = Encoding::kPairResolved;
  /// Collective normalization c; <= 0 selects 1/sqrt(N).
  double normalization = 0.0;
};

const char* to_string(Encoding e) noexcept;
Encoding parse_encoding(std::string_view name);

/// Encoded Gamma^{pq}_{st} (1-based orbitals).
PauliSum excitation_operator(const QubitLayout& layout, int p, int q, int s, int t,
                             const EncodingOptions& options = {});

/// All R^4 operators, flat index ((p R + q) R + s) R + t over 0-based labels.
std::vector<PauliSum> excitation_operators(const QubitLayout& layout,
                                           const EncodingOptions& options = {});

/// sum 2K^{pq}_{st} Gamma^{pq}_{st}, uncalibrated.
PauliSum qubit_hamiltonian(const ReducedHamiltonian& k, const QubitLayout& layout,
                           const EncodingOptions& options = {});

/// Same, reusing prebuilt operators from excitation_operators().
PauliSum qubit_hamiltonian(const ReducedHamiltonian& k, const std::vector<PauliSum>& gammas,
                           int n_qubits);

/// Largest |A^{pq}_{st} + conj(A^{st}_{pq})|.
double antihermitian_defect(const ComplexTensor4& a);

/// sum 2A^{pq}_{st} Gamma^{pq}_{st}. Throws ContractViolation unless
/// 2A^{pq}_{st} = -conj(2A^{st}_{pq}) within `tol`.
PauliSum a_operator(const ComplexTensor4& a, const QubitLayout& layout,
                    const EncodingOptions& options = {}, double tol = 1e-10);
PauliSum a_operator(const ComplexTensor4& a, const std::vector<PauliSum>& gammas, int n_qubits,
                    double tol = 1e-10);

/// Computational basis state from a bitstring whose leftmost character is
/// qubit N*R-1. With `symmetrize`, averages over all boson-row permutations
/// and normalizes ("1001" -> ("1001" + "0110")/sqrt 2).
StateVector basis_state(const QubitLayout& layout, std::string_view bitstring,
                        bool symmetrize = false);

/// Multiplier mapping an encoded Gamma expectation on a symmetric physical
/// state to the bosonic 2-RDM element. Pair-resolved: 2 for every N.
/// Collective: 1/(2c^4), i.e. N^2/2 at the default c.
double calibration_factor(int n_bosons, const EncodingOptions& options = {});

/// True if every boson row of `index` has exactly one set bit.
bool is_physical(const QubitLayout& layout, std::uint64_t index) noexcept;

/// Projects onto the one-hot subspace; returns the retained weight. When the
/// weight is zero the state is left unchanged.
double project_physical(StateVector& state, const QubitLayout& layout);

/// Permutes boson rows: row j of the result holds row perm[j] of the input.
std::uint64_t permute_rows(const QubitLayout& layout, std::uint64_t index,
                           const std::vector<int>& perm) noexcept;

}  // namespace bcqe

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

// Classical reference solvers: bosonic Fock-space full CI, a
// distinguishable-particle product-basis CI, natural occupations and the
// N/Z scans.

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "bcqe/encoding.hpp"
#include "bcqe/model.hpp"

namespace bcqe {

using Occupation = std::vector<int>;

/// Occupation vectors with sum N in descending lexicographic order, so
/// (N, 0, ..., 0) comes first.
struct FockBasis {
  int n_bosons = 0;
  int n_orbitals = 0;
  std::vector<Occupation> states;

  std::size_t size() const noexcept { return states.size(); }
  /// Position of `occ`, or throws IndexError.
  std::size_t index_of(const Occupation& occ) const;
};

FockBasis fock_basis(int n_bosons, int n_orbitals);

/// C(N+R-1, R-1).
std::size_t fock_dimension(int n_bosons, int n_orbitals);

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  Eigen::MatrixXd eigenvectors;     // column k belongs to eigenvalues[k]
  ModelSpec model;
  FockBasis basis;                  // empty for product_basis_ci
};

/// Matrix of b+_p b+_q b_t b_s in the Fock basis by occupation arithmetic.
Eigen::MatrixXd fock_operator_matrix(const FockBasis& basis, int p, int q, int s, int t);

/// Hamiltonian sum 2K Gamma in the Fock basis.
Eigen::MatrixXd fock_hamiltonian(const ReducedHamiltonian& k);

SpectrumResult full_ci(const ReducedHamiltonian& k);

/// Same pair Hamiltonian for N distinguishable particles in the R^N product
/// basis (index sum_j r_j R^j). Its spectrum holds the bosonic levels plus
/// the other exchange symmetries; a non-symmetric start such as "1001"
/// converges to one of those.
SpectrumResult product_basis_ci(const ReducedHamiltonian& k);

/// Largest R^N accepted by product_basis_ci.
inline constexpr std::size_t kMaxProductDimension = 4096;

/// 1-RDM eigenvalues of eigenvector `which`, divided by N, descending.
std::vector<double> natural_occupations(const SpectrumResult& result, std::size_t which = 0);

/// Projects the dense qubit Hamiltonian onto symmetrized one-hot states
/// (ordered like fock_basis) and diagonalizes. With `calibrated`, scales by
/// calibration_factor. Requires N*R <= 12.
SpectrumResult encoded_subspace_diag(const ReducedHamiltonian& k, const QubitLayout& layout,
                                     bool calibrated = true, const EncodingOptions& options = {});

inline constexpr int kMaxEncodedQubits = 12;

/// Symmetrized one-hot encoding of a Fock state, normalized.
StateVector encode_fock_state(const QubitLayout& layout, const Occupation& occ);

struct ScanRow {
  int n_bosons = 0;
  double force_constant = 0.0;
  double n_over_z = 0.0;
  double mean_field = 0.0;
  double full_ci = 0.0;
  double exact = 0.0;
  std::vector<double> occupations;
};

/// 0.05, 0.10, ..., 0.95, 0.99.
std::vector<double> default_scan_grid();

/// One row per (N, N/Z) in input order; Z = N / (N/Z).
std::vector<ScanRow> scan(const std::vector<int>& n_list, const std::vector<double>& grid, int n_orbitals);

/// Columns N, Z, N_over_Z, E_MF, E_FCI, E_exact, occ_0..occ_{R-1}.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows, int n_orbitals);

}  // namespace bcqe

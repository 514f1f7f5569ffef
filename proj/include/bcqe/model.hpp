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

// Closed-form physics of N harmonic oscillators with pairwise quadratic
// repulsion:  H = sum_i (-d^2/dx_i^2 + Z x_i^2) - sum_{i<j} (x_i - x_j)^2.
// Units: hbar = 1, kinetic term exactly -d^2/dx^2.

#include <vector>

#include "bcqe/tensor.hpp"

namespace bcqe {

struct ModelSpec {
  int n_bosons = 2;             // N
  double force_constant = 10.;  // Z
  int n_orbitals = 2;           // R, Hermite-basis truncation
};

/// Throws InvalidArgument for N < 2 or R < 1, UnboundSystemError for Z <= N.
void validate(const ModelSpec& spec);

/// sqrt(Z) + (N-1) sqrt(Z-N). Requires Z > N.
double exact_energy(const ModelSpec& spec);

/// N sqrt(Z-N+1). Requires Z > N-1 only.
double mean_field_energy(const ModelSpec& spec);

/// Force constants of the decoupled normal modes: [Z, Z-N, ..., Z-N].
std::vector<double> normal_mode_constants(const ModelSpec& spec);

/// One-particle density kernel rho(x,x') ~ exp(-(alpha/2)(x^2+x'^2) + beta x x').
/// Its eigenfunctions are Hermite functions of length scale
/// gamma = (alpha^2 - beta^2)^(1/4).
struct GaussianRDM {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Marginal of the Gaussian ground state whose frequency matrix is
/// M = w_rel I + ((w_com - w_rel)/N) J over N-1 coordinates.
GaussianRDM gaussian_rdm(double w_com, double w_rel, int n_bosons);

/// Natural-orbital scaling of the exact ground state. Requires Z > N.
GaussianRDM gamma_scaling(const ModelSpec& spec);

/// <m|x|n> in the gamma-scaled Hermite basis, R x R.
SquareMatrix position_matrix(double gamma, int n_orbitals);

/// <m|x^2|n>, exact (not the truncated product of position_matrix).
SquareMatrix position_squared_matrix(double gamma, int n_orbitals);

/// <m|-d^2/dx^2 + Z x^2|n>.
SquareMatrix one_body_matrix(double gamma, double force_constant, int n_orbitals);

/// <pq|u|st> for u(1,2) = -(x_1 - x_2)^2; particle 1 p->s, particle 2 q->t.
RealTensor4 two_body_tensor(double gamma, int n_orbitals);

/// Reduced Hamiltonian 2K with H = sum_{pqst} 2K^{pq}_{st} b+_p b+_q b_t b_s,
/// i.e. 2K = 1/2 <pq| h(1)/(N-1) + h(2)/(N-1) + u(1,2) |st>. The 1/2 accounts
/// for the ordered pair sum, so E = Tr[2K 2D] with Tr 2D = N(N-1).
struct ReducedHamiltonian {
  RealTensor4 elements;
  ModelSpec model;
  double gamma = 0.0;

  int n_orbitals() const noexcept { return elements.dim(); }
  double operator()(int p, int q, int s, int t) const { return elements(p, q, s, t); }
};

/// Uses gamma from gamma_scaling.
ReducedHamiltonian reduced_hamiltonian(const ModelSpec& spec);

/// Explicit basis length scale, for reproducing runs done in another basis.
ReducedHamiltonian reduced_hamiltonian(const ModelSpec& spec, double gamma);

}  // namespace bcqe

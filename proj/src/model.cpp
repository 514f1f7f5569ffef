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

#include "bcqe/model.hpp"

#include <cmath>
#include <sstream>

namespace bcqe {
namespace {

[[noreturn]] void throw_unbound(const char* what, int n, double z) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "unbound system: " << what << " (N=" << n << ", Z=" << z << ")";
  throw UnboundSystemError(msg.str());
}

void require_bound(const ModelSpec& spec) {
  if (!(spec.force_constant > spec.n_bosons)) {
    throw_unbound("Z must exceed N", spec.n_bosons, spec.force_constant);
  }
}

void require_positive_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidArgument("basis length scale gamma must be positive and finite");
  }
}

void require_orbitals(int n_orbitals) {
  if (n_orbitals < 1) throw InvalidArgument("n_orbitals must be >= 1");
}

}  // namespace

void validate(const ModelSpec& spec) {
  if (spec.n_bosons < 2) {
    throw InvalidArgument("n_bosons must be >= 2 (got " + std::to_string(spec.n_bosons) + ")");
  }
  require_orbitals(spec.n_orbitals);
  require_bound(spec);
}

double exact_energy(const ModelSpec& spec) {
  require_bound(spec);
  const double n = spec.n_bosons;
  const double z = spec.force_constant;
  return std::sqrt(z) + (n - 1.0) * std::sqrt(z - n);
}

double mean_field_energy(const ModelSpec& spec) {
  const double n = spec.n_bosons;
  const double z = spec.force_constant;
  if (!(z > n - 1.0)) throw_unbound("Z must exceed N-1", spec.n_bosons, z);
  return n * std::sqrt(z - n + 1.0);
}

std::vector<double> normal_mode_constants(const ModelSpec& spec) {
  validate(spec);
  const double z = spec.force_constant;
  std::vector<double> k(static_cast<std::size_t>(spec.n_bosons), z - spec.n_bosons);
  k.front() = z;
  return k;
}

GaussianRDM gaussian_rdm(double w_com, double w_rel, int n_bosons) {
  if (n_bosons < 2) throw InvalidArgument("gaussian_rdm: n_bosons must be >= 2");
  if (!(w_com > 0.0) || !(w_rel > 0.0)) {
    throw InvalidArgument("gaussian_rdm: frequencies must be positive");
  }
  const double n = n_bosons;
  const double off = (w_com - w_rel) / n;  // off-diagonal entry of M
  const double m11 = w_rel + off;
  // M_BB = w_rel I + off J on N-1 coordinates, so by Sherman-Morrison
  // M_BB^{-1} 1 = 1 / (w_rel + off (N-1)) and kappa = m_1B M_BB^{-1} m_B1.
  const double kappa = off * off * (n - 1.0) / (w_rel + off * (n - 1.0));
  GaussianRDM rdm;
  rdm.alpha = m11 - 0.5 * kappa;
  rdm.beta = 0.5 * kappa;
  rdm.gamma = std::pow(rdm.alpha * rdm.alpha - rdm.beta * rdm.beta, 0.25);
  return rdm;
}

GaussianRDM gamma_scaling(const ModelSpec& spec) {
  require_bound(spec);
  return gaussian_rdm(std::sqrt(spec.force_constant),
                      std::sqrt(spec.force_constant - spec.n_bosons), spec.n_bosons);
}

SquareMatrix position_matrix(double gamma, int n_orbitals) {
  require_positive_gamma(gamma);
  require_orbitals(n_orbitals);
  SquareMatrix x(n_orbitals);
  const double scale = 1.0 / (gamma * std::sqrt(2.0));
  for (int n = 0; n + 1 < n_orbitals; ++n) {
    x(n + 1, n) = x(n, n + 1) = scale * std::sqrt(n + 1.0);
  }
  return x;
}

namespace {

// <m|u^2|n> and <m|p^2|n> in dimensionless Hermite units (u = gamma x).
double u2_element(int m, int n) {
  if (m == n) return (2.0 * n + 1.0) / 2.0;
  if (m == n + 2) return std::sqrt((n + 1.0) * (n + 2.0)) / 2.0;
  if (n == m + 2) return std::sqrt((m + 1.0) * (m + 2.0)) / 2.0;
  return 0.0;
}

double p2_element(int m, int n) {
  if (m == n) return (2.0 * n + 1.0) / 2.0;
  if (m == n + 2) return -std::sqrt((n + 1.0) * (n + 2.0)) / 2.0;
  if (n == m + 2) return -std::sqrt((m + 1.0) * (m + 2.0)) / 2.0;
  return 0.0;
}

}  // namespace

SquareMatrix position_squared_matrix(double gamma, int n_orbitals) {
  require_positive_gamma(gamma);
  require_orbitals(n_orbitals);
  SquareMatrix x2(n_orbitals);
  const double scale = 1.0 / (gamma * gamma);
  for (int m = 0; m < n_orbitals; ++m) {
    for (int n = 0; n < n_orbitals; ++n) x2(m, n) = scale * u2_element(m, n);
  }
  return x2;
}

SquareMatrix one_body_matrix(double gamma, double force_constant, int n_orbitals) {
  require_positive_gamma(gamma);
  require_orbitals(n_orbitals);
  SquareMatrix h(n_orbitals);
  const double g2 = gamma * gamma;
  for (int m = 0; m < n_orbitals; ++m) {
    for (int n = 0; n < n_orbitals; ++n) {
      h(m, n) = g2 * p2_element(m, n) + (force_constant / g2) * u2_element(m, n);
    }
  }
  return h;
}

RealTensor4 two_body_tensor(double gamma, int n_orbitals) {
  const SquareMatrix x = position_matrix(gamma, n_orbitals);
  const SquareMatrix x2 = position_squared_matrix(gamma, n_orbitals);
  const int r = n_orbitals;
  RealTensor4 u(r);
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q)
      for (int s = 0; s < r; ++s)
        for (int t = 0; t < r; ++t) {
          double v = 2.0 * x(p, s) * x(q, t);
          if (q == t) v -= x2(p, s);
          if (p == s) v -= x2(q, t);
          u(p, q, s, t) = v;
        }
  return u;
}

ReducedHamiltonian reduced_hamiltonian(const ModelSpec& spec) {
  validate(spec);
  return reduced_hamiltonian(spec, gamma_scaling(spec).gamma);
}

ReducedHamiltonian reduced_hamiltonian(const ModelSpec& spec, double gamma) {
  validate(spec);
  const int r = spec.n_orbitals;
  const SquareMatrix h = one_body_matrix(gamma, spec.force_constant, r);
  const RealTensor4 u = two_body_tensor(gamma, r);
  const double inv = 1.0 / (spec.n_bosons - 1.0);

  ReducedHamiltonian k{RealTensor4(r), spec, gamma};
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q)
      for (int s = 0; s < r; ++s)
        for (int t = 0; t < r; ++t) {
          double v = u(p, q, s, t);
          if (p == s) v += inv * h(q, t);
          if (q == t) v += inv * h(p, s);
          k.elements(p, q, s, t) = 0.5 * v;
        }
  return k;
}

}  // namespace bcqe

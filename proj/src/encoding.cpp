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

#include "bcqe/encoding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "bcqe/error.hpp"

namespace bcqe {
namespace {

void check_orbital(const QubitLayout& layout, int r) {
  if (r < 1 || r > layout.n_orbitals) {
    throw IndexError("orbital " + std::to_string(r) + " outside [1, " +
                     std::to_string(layout.n_orbitals) + "]");
  }
}

void check_layout(const QubitLayout& layout) {
  if (layout.n_bosons < 1 || layout.n_orbitals < 1) throw InvalidArgument("empty qubit layout");
  if (layout.n_qubits() > 64) throw CapacityError("layout needs more than 64 qubits");
}

double resolve_c(const QubitLayout& layout, double c) {
  return c > 0.0 ? c : 1.0 / std::sqrt(static_cast<double>(layout.n_bosons));
}

// |p><s| on boson row j.
PauliSum transition(const QubitLayout& layout, int j, int p, int s) {
  return single_creator(layout, j, p) * single_annihilator(layout, j, s);
}

std::uint64_t row_mask(const QubitLayout& layout) {
  return (std::uint64_t{1} << layout.n_orbitals) - 1;
}

}  // namespace

int qubit_index(const QubitLayout& layout, int j, int r) {
  if (j < 1 || j > layout.n_bosons) {
    throw IndexError("boson " + std::to_string(j) + " outside [1, " + std::to_string(layout.n_bosons) + "]");
  }
  check_orbital(layout, r);
  return layout.n_orbitals * (j - 1) + (r - 1);
}

PauliSum single_annihilator(const QubitLayout& layout, int j, int r) {
  check_layout(layout);
  const int n = layout.n_qubits();
  const int q = qubit_index(layout, j, r);
  return PauliSum::single(n, q, 'X', 0.5) + PauliSum::single(n, q, 'Y', cplx(0.0, 0.5));
}

PauliSum single_creator(const QubitLayout& layout, int j, int r) {
  return single_annihilator(layout, j, r).adjoint();
}

PauliSum collective_annihilator(const QubitLayout& layout, int r, double c) {
  check_layout(layout);
  PauliSum out(layout.n_qubits());
  for (int j = 1; j <= layout.n_bosons; ++j) out += single_annihilator(layout, j, r);
  return out * cplx(resolve_c(layout, c));
}

PauliSum collective_creator(const QubitLayout& layout, int r, double c) {
  return collective_annihilator(layout, r, c).adjoint();
}

const char* to_string(Encoding e) noexcept {
  return e == Encoding::kCollective ? "collective" : "pair";
}

Encoding parse_encoding(std::string_view name) {
  if (name == "collective") return Encoding::kCollective;
  if (name == "pair") return Encoding::kPairResolved;
  throw ParseError("unknown encoding '" + std::string(name) + "' (expected pair or collective)");
}

PauliSum excitation_operator(const QubitLayout& layout, int p, int q, int s, int t,
                             const EncodingOptions& options) {
  check_layout(layout);
  for (int r : {p, q, s, t}) check_orbital(layout, r);
  if (options.kind == Encoding::kCollective) {
    const double c = options.normalization;
    return collective_creator(layout, p, c) * collective_creator(layout, q, c) *
           collective_annihilator(layout, t, c) * collective_annihilator(layout, s, c);
  }
  PauliSum out(layout.n_qubits());
  for (int i = 1; i <= layout.n_bosons; ++i) {
    const PauliSum left = transition(layout, i, p, s);
    for (int j = i + 1; j <= layout.n_bosons; ++j) out += left * transition(layout, j, q, t);
  }
  return out;
}

std::vector<PauliSum> excitation_operators(const QubitLayout& layout, const EncodingOptions& options) {
  const int r = layout.n_orbitals;
  std::vector<PauliSum> out;
  out.reserve(static_cast<std::size_t>(r * r * r * r));
  for (int p = 1; p <= r; ++p)
    for (int q = 1; q <= r; ++q)
      for (int s = 1; s <= r; ++s)
        for (int t = 1; t <= r; ++t) out.push_back(excitation_operator(layout, p, q, s, t, options));
  return out;
}

PauliSum qubit_hamiltonian(const ReducedHamiltonian& k, const std::vector<PauliSum>& gammas,
                           int n_qubits) {
  if (gammas.size() != k.elements.size()) {
    throw ShapeError("qubit_hamiltonian: operator set does not match 2K dimension");
  }
  PauliSum h(n_qubits);
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    const double v = k.elements.data()[i];
    if (v != 0.0) h += gammas[i] * cplx(v);
  }
  return h;
}

PauliSum qubit_hamiltonian(const ReducedHamiltonian& k, const QubitLayout& layout,
                           const EncodingOptions& options) {
  if (k.n_orbitals() != layout.n_orbitals || k.model.n_bosons != layout.n_bosons) {
    throw ShapeError("qubit_hamiltonian: 2K built for N=" + std::to_string(k.model.n_bosons) +
                     ", R=" + std::to_string(k.n_orbitals()) + " but layout has N=" +
                     std::to_string(layout.n_bosons) + ", R=" + std::to_string(layout.n_orbitals));
  }
  return qubit_hamiltonian(k, excitation_operators(layout, options), layout.n_qubits());
}

double antihermitian_defect(const ComplexTensor4& a) {
  const int r = a.dim();
  double worst = 0.0;
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q)
      for (int s = 0; s < r; ++s)
        for (int t = 0; t < r; ++t)
          worst = std::max(worst, std::abs(a(p, q, s, t) + std::conj(a(s, t, p, q))));
  return worst;
}

PauliSum a_operator(const ComplexTensor4& a, const std::vector<PauliSum>& gammas, int n_qubits,
                    double tol) {
  if (gammas.size() != a.size()) throw ShapeError("a_operator: operator set does not match 2A dimension");
  const double defect = antihermitian_defect(a);
  if (defect > tol) {
    throw ContractViolation("a_operator: 2A is not anti-Hermitian (defect " + std::to_string(defect) + ")");
  }
  PauliSum out(n_qubits);
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    const cplx v = a.data()[i];
    if (v != cplx(0.0)) out += gammas[i] * v;
  }
  // Drop the Hermitian residue left by rounding so evolve() accepts it.
  std::vector<PauliTerm> terms;
  terms.reserve(out.size());
  for (const auto& t : out.terms()) terms.push_back({cplx(0.0, t.coefficient.imag()), t.word});
  return PauliSum(n_qubits, std::move(terms));
}

PauliSum a_operator(const ComplexTensor4& a, const QubitLayout& layout, const EncodingOptions& options,
                    double tol) {
  if (a.dim() != layout.n_orbitals) throw ShapeError("a_operator: 2A orbital count mismatch");
  return a_operator(a, excitation_operators(layout, options), layout.n_qubits(), tol);
}

bool is_physical(const QubitLayout& layout, std::uint64_t index) noexcept {
  const std::uint64_t mask = row_mask(layout);
  for (int j = 0; j < layout.n_bosons; ++j) {
    if (std::popcount((index >> (layout.n_orbitals * j)) & mask) != 1) return false;
  }
  return (index >> layout.n_qubits()) == 0;
}

std::uint64_t permute_rows(const QubitLayout& layout, std::uint64_t index,
                           const std::vector<int>& perm) noexcept {
  const std::uint64_t mask = row_mask(layout);
  std::uint64_t out = 0;
  for (int j = 0; j < layout.n_bosons; ++j) {
    const std::uint64_t row = (index >> (layout.n_orbitals * perm[static_cast<std::size_t>(j)])) & mask;
    out |= row << (layout.n_orbitals * j);
  }
  return out;
}

StateVector basis_state(const QubitLayout& layout, std::string_view bitstring, bool symmetrize) {
  check_layout(layout);
  const auto n = static_cast<std::size_t>(layout.n_qubits());
  if (bitstring.size() != n) {
    throw ParseError("bitstring '" + std::string(bitstring) + "' has length " +
                     std::to_string(bitstring.size()) + ", expected " + std::to_string(n));
  }
  std::uint64_t index = 0;
  for (char ch : bitstring) {
    if (ch != '0' && ch != '1') throw ParseError("bitstring '" + std::string(bitstring) + "' is not binary");
    index = (index << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  if (!symmetrize) return StateVector::basis(layout.n_qubits(), index);
  StateVector s(layout.n_qubits());
  s[0] = 0.0;
  std::vector<int> perm(static_cast<std::size_t>(layout.n_bosons));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    s[permute_rows(layout, index, perm)] += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  s.normalize();
  return s;
}

double calibration_factor(int n_bosons, const EncodingOptions& options) {
  if (n_bosons < 2) throw InvalidArgument("calibration_factor needs N >= 2");
  if (options.kind == Encoding::kPairResolved) return 2.0;
  const double c = options.normalization > 0.0 ? options.normalization
                                               : 1.0 / std::sqrt(static_cast<double>(n_bosons));
  return 1.0 / (2.0 * std::pow(c, 4));
}

double project_physical(StateVector& state, const QubitLayout& layout) {
  if (state.num_qubits() != layout.n_qubits()) throw ShapeError("project_physical: qubit count mismatch");
  double kept = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if (is_physical(layout, i)) kept += std::norm(state[i]);
  }
  if (kept == 0.0) return 0.0;
  const double scale = 1.0 / std::sqrt(kept);
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    state[i] = is_physical(layout, i) ? state[i] * scale : cplx(0.0);
  }
  return kept;
}

}  // namespace bcqe

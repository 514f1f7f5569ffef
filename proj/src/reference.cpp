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

#include "bcqe/reference.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>

#include "bcqe/error.hpp"

namespace bcqe {
namespace {

SpectrumResult diagonalize(const Eigen::MatrixXd& h, const ModelSpec& model) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) throw NumericalConsistencyError("eigensolver failed");
  SpectrumResult out;
  out.model = model;
  out.eigenvalues.assign(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + solver.eigenvalues().size());
  out.eigenvectors = solver.eigenvectors();
  return out;
}

// a_r |occ>: returns the amplitude and updates occ; 0 if empty.
double lower(Occupation& occ, int r) {
  auto& n = occ[static_cast<std::size_t>(r)];
  if (n == 0) return 0.0;
  const double amp = std::sqrt(static_cast<double>(n));
  --n;
  return amp;
}

double raise(Occupation& occ, int r) {
  auto& n = occ[static_cast<std::size_t>(r)];
  ++n;
  return std::sqrt(static_cast<double>(n));
}

}  // namespace

std::size_t FockBasis::index_of(const Occupation& occ) const {
  const auto it = std::lower_bound(states.begin(), states.end(), occ, std::greater<>());
  if (it == states.end() || *it != occ) throw IndexError("occupation vector not in the Fock basis");
  return static_cast<std::size_t>(it - states.begin());
}

std::size_t fock_dimension(int n_bosons, int n_orbitals) {
  // C(N+R-1, R-1), computed incrementally so each step is exact.
  std::size_t c = 1;
  for (int i = 1; i < n_orbitals; ++i) {
    c = c * static_cast<std::size_t>(n_bosons + i) / static_cast<std::size_t>(i);
  }
  return c;
}

FockBasis fock_basis(int n_bosons, int n_orbitals) {
  if (n_bosons < 1 || n_orbitals < 1) throw InvalidArgument("fock_basis needs N >= 1 and R >= 1");
  FockBasis basis{n_bosons, n_orbitals, {}};
  Occupation occ(static_cast<std::size_t>(n_orbitals), 0);
  std::function<void(int, int)> fill = [&](int r, int left) {
    if (r == n_orbitals - 1) {
      occ[static_cast<std::size_t>(r)] = left;
      basis.states.push_back(occ);
      return;
    }
    for (int n = left; n >= 0; --n) {
      occ[static_cast<std::size_t>(r)] = n;
      fill(r + 1, left - n);
    }
  };
  fill(0, n_bosons);
  return basis;
}

Eigen::MatrixXd fock_operator_matrix(const FockBasis& basis, int p, int q, int s, int t) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Occupation occ = basis.states[static_cast<std::size_t>(col)];
    double amp = lower(occ, s);
    if (amp != 0.0) amp *= lower(occ, t);
    if (amp == 0.0) continue;
    amp *= raise(occ, q);
    amp *= raise(occ, p);
    m(static_cast<Eigen::Index>(basis.index_of(occ)), col) += amp;
  }
  return m;
}

Eigen::MatrixXd fock_hamiltonian(const ReducedHamiltonian& k) {
  const int r = k.n_orbitals();
  const FockBasis basis = fock_basis(k.model.n_bosons, r);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q)
      for (int s = 0; s < r; ++s)
        for (int t = 0; t < r; ++t) {
          const double v = k(p, q, s, t);
          if (v != 0.0) h += v * fock_operator_matrix(basis, p, q, s, t);
        }
  return 0.5 * (h + h.transpose());
}

SpectrumResult full_ci(const ReducedHamiltonian& k) {
  SpectrumResult out = diagonalize(fock_hamiltonian(k), k.model);
  out.basis = fock_basis(k.model.n_bosons, k.n_orbitals());
  return out;
}

SpectrumResult product_basis_ci(const ReducedHamiltonian& k) {
  const int n = k.model.n_bosons;
  const int r = k.n_orbitals();
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= static_cast<std::size_t>(r);
    if (dim > kMaxProductDimension) {
      throw CapacityError("product_basis_ci: R^N exceeds " + std::to_string(kMaxProductDimension));
    }
  }
  std::vector<std::size_t> stride(static_cast<std::size_t>(n));
  for (int i = 0, s = 1; i < n; ++i, s *= r) stride[static_cast<std::size_t>(i)] = static_cast<std::size_t>(s);
  const auto digit = [&](std::size_t idx, int i) {
    return static_cast<int>((idx / stride[static_cast<std::size_t>(i)]) % static_cast<std::size_t>(r));
  };
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  // H = sum_{i != j} 2K^{pq}_{st} |p><s|_i |q><t|_j.
  for (std::size_t col = 0; col < dim; ++col) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const int s = digit(col, i);
        const int t = digit(col, j);
        const std::size_t base = col - static_cast<std::size_t>(s) * stride[static_cast<std::size_t>(i)] -
                                 static_cast<std::size_t>(t) * stride[static_cast<std::size_t>(j)];
        for (int p = 0; p < r; ++p)
          for (int q = 0; q < r; ++q) {
            const double v = k(p, q, s, t);
            if (v == 0.0) continue;
            const std::size_t row = base + static_cast<std::size_t>(p) * stride[static_cast<std::size_t>(i)] +
                                    static_cast<std::size_t>(q) * stride[static_cast<std::size_t>(j)];
            h(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += v;
          }
      }
    }
  }
  return diagonalize(0.5 * (h + h.transpose()), k.model);
}

std::vector<double> natural_occupations(const SpectrumResult& result, std::size_t which) {
  if (result.basis.size() == 0) throw InvalidArgument("natural_occupations needs a Fock-basis spectrum");
  if (which >= result.eigenvalues.size()) {
    throw IndexError("state " + std::to_string(which) + " outside spectrum of size " +
                     std::to_string(result.eigenvalues.size()));
  }
  const FockBasis& basis = result.basis;
  const int r = basis.n_orbitals;
  const Eigen::VectorXd c = result.eigenvectors.col(static_cast<Eigen::Index>(which));
  Eigen::MatrixXd d1 = Eigen::MatrixXd::Zero(r, r);
  // 1D_{pq} = <b+_p b_q>.
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const double ccol = c(static_cast<Eigen::Index>(col));
    if (ccol == 0.0) continue;
    for (int p = 0; p < r; ++p)
      for (int q = 0; q < r; ++q) {
        Occupation occ = basis.states[col];
        double amp = lower(occ, q);
        if (amp == 0.0) continue;
        amp *= raise(occ, p);
        d1(p, q) += c(static_cast<Eigen::Index>(basis.index_of(occ))) * amp * ccol;
      }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (d1 + d1.transpose()));
  std::vector<double> occ(solver.eigenvalues().data(), solver.eigenvalues().data() + r);
  for (auto& v : occ) v /= static_cast<double>(basis.n_bosons);
  std::sort(occ.begin(), occ.end(), std::greater<>());
  return occ;
}

StateVector encode_fock_state(const QubitLayout& layout, const Occupation& occ) {
  std::string bits(static_cast<std::size_t>(layout.n_qubits()), '0');
  int j = 0;
  for (int r = 0; r < layout.n_orbitals; ++r) {
    for (int c = 0; c < occ[static_cast<std::size_t>(r)]; ++c, ++j) {
      const int qubit = layout.n_orbitals * j + r;
      bits[bits.size() - 1 - static_cast<std::size_t>(qubit)] = '1';
    }
  }
  if (j != layout.n_bosons) throw InvalidArgument("occupation does not hold N bosons");
  return basis_state(layout, bits, /*symmetrize=*/true);
}

SpectrumResult encoded_subspace_diag(const ReducedHamiltonian& k, const QubitLayout& layout,
                                     bool calibrated, const EncodingOptions& options) {
  if (layout.n_qubits() > kMaxEncodedQubits) {
    throw CapacityError("encoded_subspace_diag: " + std::to_string(layout.n_qubits()) +
                        " qubits exceed the dense limit of " + std::to_string(kMaxEncodedQubits));
  }
  const PauliSum hq = qubit_hamiltonian(k, layout, options);
  const FockBasis basis = fock_basis(layout.n_bosons, layout.n_orbitals);
  std::vector<StateVector> vecs;
  vecs.reserve(basis.size());
  for (const auto& occ : basis.states) vecs.push_back(encode_fock_state(layout, occ));
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd h(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const StateVector hb = apply(vecs[static_cast<std::size_t>(b)], hq);
    for (Eigen::Index a = 0; a < dim; ++a) {
      const cplx v = vecs[static_cast<std::size_t>(a)].inner(hb);
      if (std::abs(v.imag()) > 1e-10) {
        throw NumericalConsistencyError("encoded Hamiltonian has complex physical matrix elements");
      }
      h(a, b) = v.real();
    }
  }
  if (calibrated) h *= calibration_factor(layout.n_bosons, options);
  SpectrumResult out = diagonalize(0.5 * (h + h.transpose()), k.model);
  out.basis = basis;
  return out;
}

std::vector<double> default_scan_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
  grid.push_back(0.99);
  return grid;
}

std::vector<ScanRow> scan(const std::vector<int>& n_list, const std::vector<double>& grid, int n_orbitals) {
  for (double g : grid) {
    if (!(g > 0.0)) throw InvalidArgument("scan grid values must be positive (got " + std::to_string(g) + ")");
    if (g >= 1.0) {
      throw UnboundSystemError("unbound system: N/Z = " + std::to_string(g) + " means Z <= N");
    }
  }
  std::vector<ScanRow> rows;
  rows.reserve(n_list.size() * grid.size());
  for (int n : n_list) {
    for (double g : grid) {
      ModelSpec spec{n, n / g, n_orbitals};
      validate(spec);
      const SpectrumResult fci = full_ci(reduced_hamiltonian(spec));
      rows.push_back({n, spec.force_constant, g, mean_field_energy(spec), fci.eigenvalues.front(),
                      exact_energy(spec), natural_occupations(fci, 0)});
    }
  }
  return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows, int n_orbitals) {
  out << "N,Z,N_over_Z,E_MF,E_FCI,E_exact";
  for (int r = 0; r < n_orbitals; ++r) out << ",occ_" << r;
  out << '\n';
  const auto old_flags = out.flags();
  const auto old_prec = out.precision();
  out << std::setprecision(12);
  for (const auto& row : rows) {
    out << row.n_bosons << ',' << row.force_constant << ',' << row.n_over_z << ',' << row.mean_field << ','
        << row.full_ci << ',' << row.exact;
    for (double o : row.occupations) out << ',' << o;
    out << '\n';
  }
  out.flags(old_flags);
  out.precision(old_prec);
}

}  // namespace bcqe

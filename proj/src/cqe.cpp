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

#include "bcqe/cqe.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "bcqe/error.hpp"
#include "bcqe/reference.hpp"

namespace bcqe {
namespace {

constexpr int kMaxPostselectAttempts = 1000;

void check_state(const StateVector& state, const CQEContext& ctx) {
  if (state.num_qubits() != ctx.layout().n_qubits()) {
    throw ShapeError("state has " + std::to_string(state.num_qubits()) + " qubits, layout needs " +
                     std::to_string(ctx.layout().n_qubits()));
  }
}

// One noisy execution: `depth` rounds of depolarization, then postselection
// onto the one-hot subspace. Trajectories with no physical weight are redrawn.
StateVector noisy_trajectory(const StateVector& state, const QubitLayout& layout, double strength,
                             int depth, std::uint64_t seed) {
  for (int attempt = 0; attempt < kMaxPostselectAttempts; ++attempt) {
    StateVector s = state;
    for (int layer = 0; layer < depth; ++layer) {
      s = depolarize(s, strength, derive_seed(seed, static_cast<std::uint64_t>(layer),
                                              static_cast<std::uint64_t>(attempt)));
    }
    if (project_physical(s, layout) > 1e-12) return s;
  }
  throw NumericalConsistencyError("postselection rejected every noisy trajectory");
}

bool exchange_symmetric(const StateVector& state, const QubitLayout& layout) {
  if (layout.n_bosons < 2) return true;
  // Adjacent transpositions generate the symmetric group.
  for (int j = 0; j + 1 < layout.n_bosons; ++j) {
    std::vector<int> perm(static_cast<std::size_t>(layout.n_bosons));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<std::size_t>(j)], perm[static_cast<std::size_t>(j + 1)]);
    for (std::size_t i = 0; i < state.dimension(); ++i) {
      if (std::abs(state[i] - state[permute_rows(layout, i, perm)]) > 1e-12) return false;
    }
  }
  return true;
}

double nearest(const std::vector<double>& levels, double e) {
  return *std::min_element(levels.begin(), levels.end(),
                           [e](double a, double b) { return std::abs(a - e) < std::abs(b - e); });
}

}  // namespace

cplx TwoRDM::trace() const {
  cplx acc = 0.0;
  const int r = n_orbitals();
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q) acc += elements(p, q, p, q);
  return acc;
}

double ResidualTensor::frobenius_norm() const {
  double acc = 0.0;
  for (const auto& v : elements) acc += std::norm(v);
  return std::sqrt(acc);
}

void validate(const CQEConfig& cfg) {
  if (!(cfg.epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  if (cfg.max_iterations < 0) throw InvalidArgument("max_iterations must be non-negative");
  if (!(cfg.energy_tol > 0.0)) throw InvalidArgument("energy_tol must be positive");
  if (!(cfg.residual_tol > 0.0)) throw InvalidArgument("residual_tol must be positive");
  if (cfg.shots && cfg.shots->shots == 0) throw InvalidArgument("shots must be positive");
  if (cfg.noise_strength && !(*cfg.noise_strength >= 0.0 && *cfg.noise_strength <= 1.0)) {
    throw InvalidArgument("noise strength must lie in [0, 1]");
  }
  if (cfg.noise_trajectories < 1) throw InvalidArgument("noise_trajectories must be positive");
  if (cfg.max_halvings < 0) throw InvalidArgument("max_halvings must be non-negative");
  if (!(cfg.sufficient_decrease >= 0.0 && cfg.sufficient_decrease < 1.0)) {
    throw InvalidArgument("sufficient_decrease must lie in [0, 1)");
  }
  if (cfg.gamma && !(*cfg.gamma > 0.0)) throw InvalidArgument("gamma must be positive");
}

std::string ground_guess(const QubitLayout& layout) {
  std::string bits(static_cast<std::size_t>(layout.n_qubits()), '0');
  for (int j = 0; j < layout.n_bosons; ++j) {
    bits[bits.size() - 1 - static_cast<std::size_t>(layout.n_orbitals * j)] = '1';
  }
  return bits;
}

CQEContext::CQEContext(ReducedHamiltonian k, const EncodingOptions& encoding, bool calibration)
    : k_(std::move(k)), layout_(QubitLayout::of(k_.model)), calibrated_(calibration) {
  const int n = layout_.n_qubits();
  calibration_ = calibration ? calibration_factor(layout_.n_bosons, encoding) : 1.0;
  gammas_ = excitation_operators(layout_, encoding);
  for (auto& g : gammas_) g *= calibration_;
  h_ = qubit_hamiltonian(k_, gammas_, n);
  commutators_.reserve(gammas_.size());
  for (const auto& g : gammas_) commutators_.push_back(commutator(g, h_));

  std::unordered_map<PauliWord, std::size_t, PauliWordHash> slot;
  const auto index = [&](const PauliSum& op) {
    Indexed out;
    out.terms.reserve(op.size());
    for (const auto& t : op.terms()) {
      auto [it, fresh] = slot.try_emplace(t.word, words_.size());
      if (fresh) words_.push_back(t.word);
      out.terms.emplace_back(it->second, t.coefficient);
    }
    return out;
  };
  gamma_index_.reserve(gammas_.size());
  for (const auto& g : gammas_) gamma_index_.push_back(index(g));
  commutator_index_.reserve(commutators_.size());
  for (const auto& c : commutators_) commutator_index_.push_back(index(c));
}

cplx CQEContext::contract(const Indexed& op, const std::vector<double>& values) const {
  cplx acc = 0.0;
  for (const auto& [w, c] : op.terms) acc += c * values[w];
  return acc;
}

TwoRDM CQEContext::rdm_from(const std::vector<double>& word_values) const {
  if (word_values.size() != words_.size()) throw ShapeError("word table size mismatch");
  TwoRDM d{ComplexTensor4(layout_.n_orbitals, cplx(0.0)), calibrated_};
  for (std::size_t i = 0; i < gamma_index_.size(); ++i) d.elements.data()[i] = contract(gamma_index_[i], word_values);
  return d;
}

ResidualTensor CQEContext::residual_from(const std::vector<double>& word_values) const {
  if (word_values.size() != words_.size()) throw ShapeError("word table size mismatch");
  ResidualTensor r{ComplexTensor4(layout_.n_orbitals, cplx(0.0))};
  for (std::size_t i = 0; i < commutator_index_.size(); ++i) {
    r.elements.data()[i] = contract(commutator_index_[i], word_values);
  }
  return r;
}

std::vector<double> measure_words(const StateVector& state, const CQEContext& ctx, const CQEConfig& cfg,
                                  std::uint64_t stream, int depth) {
  check_state(state, ctx);
  const ExpectationOptions eopt{cfg.parallel};
  std::vector<double> values;
  if (cfg.noise_strength && *cfg.noise_strength > 0.0) {
    values.assign(ctx.words().size(), 0.0);
    for (int t = 0; t < cfg.noise_trajectories; ++t) {
      const StateVector s = noisy_trajectory(state, ctx.layout(), *cfg.noise_strength, std::max(depth, 1),
                                             derive_seed(cfg.noise_seed, stream, static_cast<std::uint64_t>(t)));
      const auto v = word_expectations(s, ctx.words(), eopt);
      for (std::size_t k = 0; k < v.size(); ++k) values[k] += v[k];
    }
    for (auto& v : values) v /= static_cast<double>(cfg.noise_trajectories);
  } else {
    values = word_expectations(state, ctx.words(), eopt);
  }
  if (cfg.shots) {
    values = sample_expectations(values, ShotConfig{cfg.shots->shots, derive_seed(cfg.shots->seed, stream)});
  }
  return values;
}

TwoRDM measure_rdm2(const StateVector& state, const CQEContext& ctx, const CQEConfig& cfg) {
  return ctx.rdm_from(measure_words(state, ctx, cfg));
}

TwoRDM measure_rdm2(const StateVector& state, const QubitLayout& layout, const CQEConfig& cfg) {
  ModelSpec spec{layout.n_bosons, static_cast<double>(layout.n_bosons) + 1.0, layout.n_orbitals};
  // The 2-RDM does not depend on 2K; any valid model of the right shape will do.
  const CQEContext ctx(reduced_hamiltonian(spec), cfg.encoding, cfg.calibration);
  return measure_rdm2(state, ctx, cfg);
}

double energy(const TwoRDM& d, const ReducedHamiltonian& k) {
  if (d.n_orbitals() != k.n_orbitals()) {
    throw ShapeError("energy: 2-RDM has " + std::to_string(d.n_orbitals()) + " orbitals, 2K has " +
                     std::to_string(k.n_orbitals()));
  }
  cplx acc = 0.0;
  for (std::size_t i = 0; i < d.elements.size(); ++i) acc += k.elements.data()[i] * d.elements.data()[i];
  if (std::abs(acc.imag()) > 1e-10) {
    throw NumericalConsistencyError("energy has imaginary part " + std::to_string(acc.imag()));
  }
  return acc.real();
}

ResidualTensor acse_residual(const StateVector& state, const CQEContext& ctx, const CQEConfig& cfg) {
  return ctx.residual_from(measure_words(state, ctx, cfg));
}

ResidualTensor acse_residual(const StateVector& state, const ReducedHamiltonian& k,
                             const QubitLayout& layout, const CQEConfig& cfg) {
  if (QubitLayout::of(k.model) != layout) throw ShapeError("acse_residual: 2K and layout disagree");
  return acse_residual(state, CQEContext(k, cfg.encoding, cfg.calibration), cfg);
}

ComplexTensor4 project_antihermitian(const ComplexTensor4& a) {
  const int r = a.dim();
  ComplexTensor4 out(r, cplx(0.0));
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q)
      for (int s = 0; s < r; ++s)
        for (int t = 0; t < r; ++t) out(p, q, s, t) = 0.5 * (a(p, q, s, t) - std::conj(a(s, t, p, q)));
  return out;
}

NextA next_a_operator(const ResidualTensor& residual) {
  ComplexTensor4 a(residual.elements.dim(), cplx(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) a.data()[i] = std::conj(residual.elements.data()[i]);
  NextA out{project_antihermitian(a), antihermitian_defect(a), std::nullopt};
  if (out.defect > 1e-6) {
    std::ostringstream msg;
    msg << "residual pairing defect " << out.defect << " projected out";
    out.warning = msg.str();
  }
  return out;
}

double energy_after_step(const StateVector& state, const CQEContext& ctx, const ComplexTensor4& a,
                         double epsilon) {
  const PauliSum a_op = a_operator(a, ctx.gammas(), ctx.layout().n_qubits());
  const StateVector next = evolve(state, a_op, epsilon);
  return expectation_exact(next, ctx.hamiltonian()).real();
}

void ConvergenceTrace::write_csv(std::ostream& out) const {
  const auto old_flags = out.flags();
  const auto old_prec = out.precision();
  out << "iter,energy,residual_norm,err_vs_fci,err_vs_exact,wall_ms\n" << std::setprecision(15);
  for (const auto& r : records) {
    out << r.iteration << ',' << r.energy << ',' << r.residual_norm << ',' << r.err_vs_fci << ','
        << r.err_vs_exact << ',' << r.wall_ms << '\n';
  }
  out.flags(old_flags);
  out.precision(old_prec);
}

CQEResult run(const ModelSpec& spec, const CQEConfig& cfg) {
  validate(spec);
  validate(cfg);
  const auto t_start = std::chrono::steady_clock::now();
  const auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start).count();
  };

  ReducedHamiltonian k = cfg.gamma ? reduced_hamiltonian(spec, *cfg.gamma) : reduced_hamiltonian(spec);
  const double gamma = k.gamma;
  const CQEContext ctx(std::move(k), cfg.encoding, cfg.calibration);
  const QubitLayout& layout = ctx.layout();
  const std::string initial = cfg.initial.empty() ? ground_guess(layout) : cfg.initial;
  StateVector state = basis_state(layout, initial, cfg.symmetrize_initial);

  std::vector<double> levels;
  const std::size_t product_dim = static_cast<std::size_t>(std::pow(spec.n_orbitals, spec.n_bosons));
  if (!exchange_symmetric(state, layout) && product_dim <= kMaxProductDimension) {
    levels = product_basis_ci(ctx.hamiltonian_tensor()).eigenvalues;
  } else {
    levels = full_ci(ctx.hamiltonian_tensor()).eigenvalues;
  }
  if (!cfg.calibration) {
    // Strict mode sees the uncalibrated Hamiltonian; compare like with like.
    const double f = 1.0 / calibration_factor(spec.n_bosons, cfg.encoding);
    for (auto& l : levels) l *= f;
  }

  CQEResult result;
  double physical_weight = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if (is_physical(layout, i)) physical_weight += std::norm(state[i]);
  }
  if (physical_weight < 1.0 - 1e-12) {
    result.warnings.push_back("initial state '" + initial + "' is outside the one-hot physical subspace");
  }
  result.gamma = gamma;
  result.exact_energy = exact_energy(spec);

  const auto measure = [&](const StateVector& s, std::uint64_t stream, int depth) {
    const auto values = measure_words(s, ctx, cfg, stream, depth);
    TwoRDM d = ctx.rdm_from(values);
    ResidualTensor r = ctx.residual_from(values);
    const double e = energy(d, ctx.hamiltonian_tensor());
    return std::tuple{std::move(d), std::move(r), e};
  };

  auto [rdm, residual, e] = measure(state, 0, 1);
  std::vector<IterationRecord> records;
  records.push_back({0, e, residual.frobenius_norm(), 0.0, 0.0, elapsed_ms(), 0.0});

  // Measured runs judge steps on their measured energies; nothing peeks at the ideal state.
  const bool allow_halving = cfg.step_halving;
  const bool measured = cfg.shots || (cfg.noise_strength && *cfg.noise_strength > 0.0);
  std::string reason = "max_iterations";
  bool converged = false;
  if (records.back().residual_norm < cfg.residual_tol) {
    converged = true;
    reason = "residual_tol";
  }
  for (int it = 1; it <= cfg.max_iterations && !converged; ++it) {
    NextA next = next_a_operator(residual);
    if (next.warning) result.warnings.push_back("iteration " + std::to_string(it) + ": " + *next.warning);
    const PauliSum a_op = a_operator(next.elements, ctx.gammas(), layout.n_qubits(), 1e-9);

    // dE/deps at eps = 0 is -sum A R, known before stepping.
    double slope = 0.0;
    for (std::size_t i = 0; i < next.elements.size(); ++i) {
      slope -= (next.elements.data()[i] * residual.elements.data()[i]).real();
    }
    slope = std::min(slope, 0.0);
    // Every trial step of an iteration shares one noise stream, and a measured
    // run re-measures the current state on it. Halving then selects epsilon,
    // never a lucky noise draw.
    const auto stream = static_cast<std::uint64_t>(it);
    const double e_ref = allow_halving && measured ? std::get<2>(measure(state, stream, it + 1)) : e;
    double eps = cfg.epsilon;
    for (int halvings = 0;; ++halvings) {
      StateVector trial = evolve(state, a_op, eps);
      auto [d_new, r_new, e_new] = measure(trial, stream, it + 1);
      if (allow_halving && e_new > e_ref + cfg.sufficient_decrease * eps * slope && halvings < cfg.max_halvings) {
        eps *= 0.5;
        continue;
      }
      state = std::move(trial);
      rdm = std::move(d_new);
      residual = std::move(r_new);
      const double de = e_new - e;
      e = e_new;
      records.push_back({it, e, residual.frobenius_norm(), 0.0, 0.0, elapsed_ms(), eps});
      if (std::abs(de) < cfg.energy_tol) {
        converged = true;
        reason = "energy_tol";
      } else if (records.back().residual_norm < cfg.residual_tol) {
        converged = true;
        reason = "residual_tol";
      }
      break;
    }
  }

  result.fci_reference = nearest(levels, e);
  for (auto& r : records) {
    r.err_vs_fci = std::abs(r.energy - result.fci_reference);
    r.err_vs_exact = std::abs(r.energy - result.exact_energy);
  }
  result.trace.records = std::move(records);
  result.rdm = std::move(rdm);
  result.energy = e;
  result.converged = converged;
  result.stop_reason = reason;
  result.final_state = std::move(state);
  return result;
}

}  // namespace bcqe

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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "bcqe/cqe.hpp"
#include "bcqe/error.hpp"
#include "bcqe/reference.hpp"

namespace bcqe {
namespace {

ComplexTensor4 random_tensor(int r, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexTensor4 x(r);
  for (auto& v : x) v = cplx(g(rng), g(rng));
  return x;
}

// Pair-symmetric anti-Hermitian generator; keeps exchange symmetry.
ComplexTensor4 random_generator(int r, std::mt19937_64& rng, double scale) {
  const ComplexTensor4 x = random_tensor(r, rng);
  ComplexTensor4 s(r);
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q)
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) s(p, q, a, b) = scale * (x(p, q, a, b) + x(q, p, b, a));
  return project_antihermitian(s);
}

StateVector random_state(const CQEContext& ctx, std::mt19937_64& rng) {
  const StateVector start = basis_state(ctx.layout(), ground_guess(ctx.layout()));
  const ComplexTensor4 a = random_generator(ctx.layout().n_orbitals, rng, 0.3);
  return evolve(start, a_operator(a, ctx.gammas(), ctx.layout().n_qubits()), 1.0);
}

// Random real superposition of encoded Fock states: physical and symmetric.
StateVector random_symmetric_state(const QubitLayout& l, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> amps(std::size_t{1} << l.n_qubits());
  for (const auto& occ : fock_basis(l.n_bosons, l.n_orbitals).states) {
    const StateVector f = encode_fock_state(l, occ);
    const cplx c(g(rng), g(rng));
    for (std::size_t b = 0; b < amps.size(); ++b) amps[b] += c * f[b];
  }
  StateVector s(amps);
  s.normalize();
  return s;
}

CQEContext context(const ModelSpec& spec, bool calibrated = true) {
  return CQEContext(reduced_hamiltonian(spec), {}, calibrated);
}

TEST(Rdm, ReferenceProductState) {
  const QubitLayout l{2, 2};
  const TwoRDM d = measure_rdm2(basis_state(l, "0101"), l, {});
  EXPECT_NEAR(d.elements(0, 0, 0, 0).real(), 2.0, 1e-12);
  EXPECT_NEAR(d.trace().real(), 2.0, 1e-12);
  EXPECT_NEAR(std::abs(d.elements(1, 1, 1, 1)), 0.0, 1e-12);
  const TwoRDM raw = measure_rdm2(basis_state(l, "0101"), CQEContext(reduced_hamiltonian({2, 10.0, 2}), {}, false), {});
  EXPECT_NEAR(raw.elements(0, 0, 0, 0).real(), 1.0, 1e-12);
  EXPECT_FALSE(raw.calibrated);
}

TEST(Rdm, HermitianExchangeSymmetricAndTraced) {
  std::mt19937_64 rng(11);
  for (const ModelSpec& spec : {ModelSpec{2, 10.0, 2}, ModelSpec{3, 4.0, 2}, ModelSpec{2, 2.2, 3}}) {
    const CQEContext ctx = context(spec);
    for (int trial = 0; trial < 5; ++trial) {
      const StateVector psi = random_symmetric_state(ctx.layout(), rng);
      const TwoRDM d = measure_rdm2(psi, ctx, {});
      const int r = spec.n_orbitals;
      for (int p = 0; p < r; ++p)
        for (int q = 0; q < r; ++q)
          for (int s = 0; s < r; ++s)
            for (int t = 0; t < r; ++t) {
              EXPECT_NEAR(std::abs(d.elements(p, q, s, t) - std::conj(d.elements(s, t, p, q))), 0.0, 1e-10);
              EXPECT_NEAR(std::abs(d.elements(p, q, s, t) - d.elements(q, p, t, s)), 0.0, 1e-10);
            }
      EXPECT_NEAR(d.trace().real(), spec.n_bosons * (spec.n_bosons - 1.0), 1e-10);
    }
  }
}

TEST(Energy, TwoPathsAgree) {
  std::mt19937_64 rng(5);
  for (const ModelSpec& spec : {ModelSpec{2, 5.0, 2}, ModelSpec{4, 5.0, 2}, ModelSpec{2, 2.2, 3}}) {
    for (bool calibrated : {true, false}) {
      const CQEContext ctx = context(spec, calibrated);
      for (int trial = 0; trial < 3; ++trial) {
        const StateVector psi = random_state(ctx, rng);
        const double via_rdm = energy(measure_rdm2(psi, ctx, {}), ctx.hamiltonian_tensor());
        EXPECT_NEAR(via_rdm, expectation_exact(psi, ctx.hamiltonian()).real(), 1e-10);
      }
    }
  }
}

TEST(Energy, EdgeCases) {
  const ReducedHamiltonian k = reduced_hamiltonian({2, 10.0, 2});
  EXPECT_EQ(energy(TwoRDM{ComplexTensor4(2), true}, k), 0.0);
  TwoRDM bad{ComplexTensor4(2), true};
  bad.elements(0, 1, 0, 1) = cplx(0.0, 1.0);
  bad.elements(1, 0, 1, 0) = cplx(0.0, 1.0);
  EXPECT_THROW(energy(bad, k), NumericalConsistencyError);
  EXPECT_THROW(energy(TwoRDM{ComplexTensor4(3), true}, k), ShapeError);
}

TEST(Residual, VanishesOnEigenstates) {
  for (const ModelSpec& spec : {ModelSpec{2, 10.0, 2}, ModelSpec{3, 4.0, 2}, ModelSpec{2, 2.2, 3}}) {
    const ReducedHamiltonian k = reduced_hamiltonian(spec);
    const SpectrumResult fci = full_ci(k);
    const QubitLayout l = QubitLayout::of(spec);
    for (Eigen::Index level : {Eigen::Index{0}, Eigen::Index{1}}) {
      std::vector<cplx> amps(std::size_t{1} << l.n_qubits());
      for (std::size_t i = 0; i < fci.basis.size(); ++i) {
        const StateVector f = encode_fock_state(l, fci.basis.states[i]);
        for (std::size_t b = 0; b < amps.size(); ++b) amps[b] += fci.eigenvectors(static_cast<Eigen::Index>(i), level) * f[b];
      }
      const StateVector psi(amps);
      EXPECT_LT(acse_residual(psi, k, l, {}).frobenius_norm(), 1e-9);
    }
  }
}

TEST(Residual, AntiHermitianPairingAndLinearity) {
  std::mt19937_64 rng(17);
  const ModelSpec spec{2, 5.0, 3};
  const CQEContext ctx = context(spec);
  ReducedHamiltonian scaled = reduced_hamiltonian(spec);
  for (auto& v : scaled.elements) v *= 3.0;
  const CQEContext ctx3(scaled, {}, true);
  for (int trial = 0; trial < 4; ++trial) {
    const StateVector psi = random_state(ctx, rng);
    const ResidualTensor r = acse_residual(psi, ctx, {});
    EXPECT_GT(r.frobenius_norm(), 1e-3);
    EXPECT_LT(antihermitian_defect(r.elements), 1e-10);
    const ResidualTensor r3 = acse_residual(psi, ctx3, {});
    EXPECT_NEAR(r3.frobenius_norm(), 3.0 * r.frobenius_norm(), 1e-9 * r.frobenius_norm());
    for (std::size_t i = 0; i < r.elements.size(); ++i) {
      EXPECT_NEAR(std::abs(r3.elements.data()[i] - 3.0 * r.elements.data()[i]), 0.0, 1e-9);
    }
  }
}

TEST(Gradient, MatchesFiniteDifference) {
  std::mt19937_64 rng(23);
  for (const ModelSpec& spec : {ModelSpec{2, 5.0, 2}, ModelSpec{3, 4.0, 2}, ModelSpec{2, 2.2, 3}}) {
    for (bool calibrated : {true, false}) {
      const CQEContext ctx = context(spec, calibrated);
      for (int trial = 0; trial < 7; ++trial) {
        const StateVector psi = random_state(ctx, rng);
        const ResidualTensor r = acse_residual(psi, ctx, {});
        const ComplexTensor4 a = trial % 2 == 0 ? next_a_operator(r).elements
                                                : random_generator(spec.n_orbitals, rng, 0.1);
        double analytic = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) analytic -= (a.data()[i] * r.elements.data()[i]).real();
        const double h = 1e-4;
        const double fd = (energy_after_step(psi, ctx, a, h) - energy_after_step(psi, ctx, a, -h)) / (2 * h);
        // Central differences carry an h^2 E''' error; generators here are large.
        EXPECT_NEAR(fd, analytic, 1e-4 * std::max(1.0, std::abs(analytic)));
      }
    }
  }
}

TEST(NextA, ProjectionAndDescent) {
  const NextA zero = next_a_operator(ResidualTensor{ComplexTensor4(2)});
  for (const auto& v : zero.elements) EXPECT_EQ(v, cplx{});
  EXPECT_FALSE(zero.warning);

  std::mt19937_64 rng(3);
  const ComplexTensor4 x = random_tensor(3, rng);
  const ComplexTensor4 once = project_antihermitian(x);
  const ComplexTensor4 twice = project_antihermitian(once);
  for (std::size_t i = 0; i < once.size(); ++i) EXPECT_NEAR(std::abs(once.data()[i] - twice.data()[i]), 0.0, 1e-15);
  EXPECT_LT(antihermitian_defect(once), 1e-15);
  EXPECT_TRUE(next_a_operator(ResidualTensor{x}).warning);

  const CQEContext ctx = context({2, 10.0, 2});
  const StateVector start = basis_state(ctx.layout(), "0101");
  const ResidualTensor r = acse_residual(start, ctx, {});
  const ComplexTensor4 a = next_a_operator(r).elements;
  const double e0 = expectation_exact(start, ctx.hamiltonian()).real();
  EXPECT_LT(energy_after_step(start, ctx, a, 0.01), e0);
}

TEST(Run, ReproducesReferenceGroundStates) {
  struct Case {
    ModelSpec spec;
    double tol;
  };
  for (const Case& c : {Case{{2, 10.0, 2}, 1e-6}, Case{{2, 5.0, 2}, 1e-6}, Case{{2, 2.2, 2}, 1e-6}}) {
    const CQEResult res = run(c.spec, {});
    EXPECT_TRUE(res.converged);
    EXPECT_NEAR(res.energy, full_ci(reduced_hamiltonian(c.spec)).eigenvalues[0], c.tol);
    EXPECT_NEAR(res.energy, res.fci_reference, c.tol);
    EXPECT_LE(res.iterations(), 50);
    EXPECT_NEAR(res.rdm.trace().real(), 2.0, 1e-10);
    EXPECT_TRUE(res.warnings.empty());
  }
}

TEST(Run, ExcitedStateFromAntisymmetricStart) {
  CQEConfig cfg;
  cfg.initial = "1001";
  const CQEResult res = run({2, 5.0, 2}, cfg);
  EXPECT_TRUE(res.converged);
  EXPECT_NEAR(res.energy, 7.492909, 1e-5);
  EXPECT_NEAR(res.fci_reference, product_basis_ci(reduced_hamiltonian({2, 5.0, 2})).eigenvalues[1], 1e-12);
}

TEST(Run, TraceInvariants) {
  const CQEResult res = run({2, 2.2, 3}, {});
  const auto& recs = res.trace.records;
  ASSERT_GE(recs.size(), 2u);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_EQ(recs[i].iteration, static_cast<int>(i));
    EXPECT_EQ(recs[i].wall_ms >= 0.0, true);
    EXPECT_NEAR(recs[i].err_vs_exact, std::abs(recs[i].energy - res.exact_energy), 1e-15);
    if (i > 0) {
      EXPECT_LE(recs[i].energy, recs[i - 1].energy + 1e-12);
      EXPECT_GT(recs[i].epsilon, 0.0);
      EXPECT_LE(recs[i].epsilon, 0.1);
    }
  }
  EXPECT_EQ(recs.front().epsilon, 0.0);
  EXPECT_NEAR(res.energy - res.exact_energy, full_ci(reduced_hamiltonian({2, 2.2, 3})).eigenvalues[0] - res.exact_energy, 1e-6);
}

TEST(Run, UncalibratedConvergesToScaledLevel) {
  CQEConfig cfg;
  cfg.calibration = false;
  const CQEResult res = run({2, 10.0, 2}, cfg);
  EXPECT_NEAR(res.energy, 0.5 * full_ci(reduced_hamiltonian({2, 10.0, 2})).eigenvalues[0], 1e-6);
  EXPECT_NEAR(res.rdm.trace().real(), 1.0, 1e-10);
}

TEST(Run, ZeroIterationsAndStopReasons) {
  CQEConfig cfg;
  cfg.max_iterations = 0;
  const CQEResult res = run({2, 10.0, 2}, cfg);
  EXPECT_EQ(res.iterations(), 0);
  EXPECT_FALSE(res.converged);
  EXPECT_EQ(res.stop_reason, "max_iterations");
  const ReducedHamiltonian k = reduced_hamiltonian({2, 10.0, 2});
  EXPECT_NEAR(res.energy, fock_hamiltonian(k)(0, 0), 1e-10);
  EXPECT_GE(res.energy, mean_field_energy({2, 10.0, 2}) - 1e-12);
  const CQEResult done = run({2, 10.0, 2}, {});
  EXPECT_TRUE(done.stop_reason == "energy_tol" || done.stop_reason == "residual_tol");
}

TEST(Run, NonPhysicalStartWarns) {
  CQEConfig cfg;
  cfg.initial = "0011";
  cfg.max_iterations = 1;
  EXPECT_FALSE(run({2, 10.0, 2}, cfg).warnings.empty());
}

std::string untimed_csv(CQEResult res) {
  for (auto& r : res.trace.records) r.wall_ms = 0.0;
  std::ostringstream out;
  res.trace.write_csv(out);
  return out.str();
}

TEST(Sampling, DeterministicForSeed) {
  CQEConfig cfg;
  cfg.shots = ShotConfig{8192, 7};
  cfg.max_iterations = 8;
  const std::string a = untimed_csv(run({2, 5.0, 2}, cfg));
  EXPECT_EQ(a, untimed_csv(run({2, 5.0, 2}, cfg)));
  cfg.shots->seed = 8;
  EXPECT_NE(a, untimed_csv(run({2, 5.0, 2}, cfg)));
}

TEST(Sampling, PlateauSpread) {
  CQEConfig cfg;
  cfg.shots = ShotConfig{8192, 1};
  cfg.max_iterations = 30;
  cfg.energy_tol = 1e-300;
  cfg.residual_tol = 1e-300;
  const CQEResult res = run({2, 10.0, 2}, cfg);
  const auto& recs = res.trace.records;
  ASSERT_EQ(recs.size(), 31u);
  double mean = 0.0, sq = 0.0;
  const std::size_t from = 21;
  for (std::size_t i = from; i < recs.size(); ++i) mean += recs[i].energy;
  mean /= static_cast<double>(recs.size() - from);
  for (std::size_t i = from; i < recs.size(); ++i) sq += std::pow(recs[i].energy - mean, 2);
  const double sd = std::sqrt(sq / static_cast<double>(recs.size() - from - 1));
  EXPECT_LE(sd, 0.02);
  EXPECT_NEAR(mean, 5.990719, 0.05);
}

TEST(Noise, BiasesEnergyUpward) {
  CQEConfig cfg;
  cfg.noise_strength = 0.01;
  cfg.noise_seed = 3;
  cfg.max_iterations = 20;
  cfg.energy_tol = 1e-300;
  cfg.residual_tol = 1e-300;
  const CQEResult noisy = run({2, 10.0, 2}, cfg);
  const double fci = full_ci(reduced_hamiltonian({2, 10.0, 2})).eigenvalues[0];
  ASSERT_EQ(noisy.iterations(), 20);
  for (std::size_t i = 16; i <= 20; ++i) EXPECT_GT(noisy.trace.records[i].energy, fci + 1e-4);
  cfg = CQEConfig{};
  cfg.noise_strength = 0.0;
  EXPECT_NEAR(run({2, 10.0, 2}, cfg).energy, fci, 1e-6);
}

TEST(Config, Validation) {
  const auto bad = [](auto mutate) {
    CQEConfig cfg;
    mutate(cfg);
    return cfg;
  };
  EXPECT_THROW(validate(bad([](CQEConfig& c) { c.epsilon = 0.0; })), InvalidArgument);
  EXPECT_THROW(validate(bad([](CQEConfig& c) { c.max_iterations = -1; })), InvalidArgument);
  EXPECT_THROW(validate(bad([](CQEConfig& c) { c.energy_tol = -1.0; })), InvalidArgument);
  EXPECT_THROW(validate(bad([](CQEConfig& c) { c.shots = ShotConfig{0, 0}; })), InvalidArgument);
  EXPECT_THROW(validate(bad([](CQEConfig& c) { c.noise_strength = 1.5; })), InvalidArgument);
  EXPECT_THROW(validate(bad([](CQEConfig& c) { c.gamma = -1.0; })), InvalidArgument);
  EXPECT_NO_THROW(validate(CQEConfig{}));
  EXPECT_THROW(run({2, 1.5, 2}, {}), UnboundSystemError);
  CQEConfig wrong;
  wrong.initial = "01";
  EXPECT_THROW(run({2, 10.0, 2}, wrong), ParseError);
}

TEST(Csv, Columns) {
  CQEConfig cfg;
  cfg.max_iterations = 2;
  std::ostringstream out;
  run({2, 10.0, 2}, cfg).trace.write_csv(out);
  std::istringstream in(out.str());
  std::string header, row;
  std::getline(in, header);
  EXPECT_EQ(header, "iter,energy,residual_norm,err_vs_fci,err_vs_exact,wall_ms");
  int rows = 0;
  while (std::getline(in, row)) {
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), 5);
    ++rows;
  }
  EXPECT_EQ(rows, 3);
}

}  // namespace
}  // namespace bcqe

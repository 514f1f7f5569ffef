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

#include <filesystem>
#include <random>

#include "bcqe/encoding.hpp"
#include "bcqe/error.hpp"
#include "bcqe/simulator.hpp"
#include "oracle.hpp"

namespace bcqe {
namespace {

using oracle::Mat;

Eigen::VectorXcd vec(const StateVector& s) {
  return Eigen::Map<const Eigen::VectorXcd>(s.amplitudes().data(), static_cast<Eigen::Index>(s.dimension()));
}

StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> a(std::size_t{1} << n);
  for (auto& v : a) v = cplx(g(rng), g(rng));
  StateVector s(std::move(a));
  s.normalize();
  return s;
}

PauliSum random_antihermitian(int n, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << n) - 1);
  std::normal_distribution<double> g;
  std::vector<PauliTerm> t;
  for (int i = 0; i < terms; ++i) t.push_back({cplx(0.0, g(rng)), PauliWord{bits(rng), bits(rng)}});
  return PauliSum(n, t);
}

TEST(StateVector, Construction) {
  const StateVector s(3);
  EXPECT_EQ(s.dimension(), 8u);
  EXPECT_EQ(s[0], cplx(1.0));
  EXPECT_THROW(StateVector(std::vector<cplx>(6)), ShapeError);
  EXPECT_THROW(StateVector(StateVector::kMaxQubits + 1), CapacityError);
  EXPECT_THROW(StateVector::basis(2, 4), IndexError);
  StateVector z(std::vector<cplx>(4, cplx(0.0)));
  EXPECT_THROW(z.normalize(), NumericalConsistencyError);
}

TEST(ApplyPauli, BasicActions) {
  const StateVector zero(3);
  const StateVector x0 = apply_pauli_term(zero, {1.0, PauliWord::parse("IIX")});
  EXPECT_EQ(x0[1], cplx(1.0));
  const StateVector g = basis_state({2, 2}, "0101");
  EXPECT_NEAR(expectation_exact(g, PauliSum::single(4, 0, 'Z')).real(), -1.0, 1e-15);
  EXPECT_NEAR(expectation_exact(g, PauliSum::single(4, 1, 'Z')).real(), 1.0, 1e-15);
  const StateVector y = apply_pauli_term(StateVector::basis(1, 1), {1.0, PauliWord::parse("Y")});
  EXPECT_EQ(y[0], cplx(0, -1));
  EXPECT_THROW(apply_pauli_term(zero, {1.0, PauliWord::parse("XIII")}), ShapeError);
}

TEST(ApplyPauli, MatchesDenseMatrix) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::uint64_t> bits(0, 15);
  for (int rep = 0; rep < 20; ++rep) {
    const StateVector s = random_state(4, rng);
    const PauliTerm t{cplx(0.3, -1.1), PauliWord{bits(rng), bits(rng)}};
    const Mat m = t.coefficient * oracle::dense_word(t.word.to_string(4));
    EXPECT_LT((vec(apply_pauli_term(s, t)) - m * vec(s)).norm(), 1e-12);
  }
}

TEST(Expectation, ExactProperties) {
  std::mt19937_64 rng(4);
  const StateVector s = random_state(4, rng);
  EXPECT_NEAR(std::abs(expectation_exact(s, PauliSum::identity(4)) - cplx(1.0)), 0.0, 1e-14);
  const PauliSum p(4, {{1.0, PauliWord::parse("XYZI")}});
  const PauliSum q(4, {{1.0, PauliWord::parse("ZZXY")}, {0.5, PauliWord::parse("IIIX")}});
  const cplx a(0.7, 0.2), b(-1.3, 0.4);
  const cplx lhs = expectation_exact(s, a * p + b * q);
  const cplx rhs = a * expectation_exact(s, p) + b * expectation_exact(s, q);
  EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
  const PauliSum h = q + q.adjoint();
  EXPECT_NEAR(expectation_exact(s, h).imag(), 0.0, 1e-12);
  const Mat dh = oracle::dense(h);
  EXPECT_NEAR(std::abs(expectation_exact(s, h) - vec(s).dot(dh * vec(s))), 0.0, 1e-12);
}

TEST(Expectation, ParallelEqualsSerial) {
  std::mt19937_64 rng(8);
  const StateVector s = random_state(8, rng);
  std::uniform_int_distribution<std::uint64_t> bits(0, 255);
  std::vector<PauliTerm> terms;
  for (int i = 0; i < 300; ++i) terms.push_back({cplx(1.0 / (i + 1), 0.0), PauliWord{bits(rng), bits(rng)}});
  const PauliSum op(8, terms);
  const cplx serial = expectation_exact(s, op);
  const cplx parallel = expectation_exact(s, op, {true});
  EXPECT_EQ(serial, parallel);
}

TEST(Sampling, ConvergesWithinFiveSigma) {
  std::mt19937_64 rng(9);
  const StateVector s = random_state(3, rng);
  for (const char* w : {"XIZ", "YYI", "ZXY"}) {
    const PauliSum op(3, {{1.0, PauliWord::parse(w)}});
    const double exact = expectation_exact(s, op).real();
    const double est = expectation_sampled(s, op, {100000, 17});
    const double sigma = std::sqrt((1.0 - exact * exact) / 100000.0);
    EXPECT_LE(std::abs(est - exact), 5.0 * sigma) << w;
  }
}

TEST(Sampling, EigenstateHasNoVariance) {
  const StateVector g = basis_state({2, 2}, "0101");
  const PauliSum op(4, {{2.0, PauliWord::parse("ZZZZ")}, {-1.0, PauliWord::parse("IIIZ")}, {3.0, PauliWord{}}});
  EXPECT_DOUBLE_EQ(expectation_sampled(g, op, {7, 1}), expectation_exact(g, op).real());
}

TEST(Sampling, Deterministic) {
  std::mt19937_64 rng(10);
  const StateVector s = random_state(4, rng);
  const PauliSum op(4, {{1.0, PauliWord::parse("XXYZ")}, {0.5, PauliWord::parse("ZIIX")}});
  EXPECT_EQ(expectation_sampled(s, op, {8192, 7}), expectation_sampled(s, op, {8192, 7}));
  EXPECT_NE(expectation_sampled(s, op, {8192, 7}), expectation_sampled(s, op, {8192, 8}));
  EXPECT_THROW(expectation_sampled(s, op * cplx(0, 1), {10, 1}), ContractViolation);
  EXPECT_THROW(expectation_sampled(s, op, {0, 1}), InvalidArgument);
}

TEST(Evolve, ZeroGeneratorIsIdentity) {
  std::mt19937_64 rng(12);
  const StateVector s = random_state(4, rng);
  EXPECT_EQ(evolve(s, PauliSum(4), 0.3).amplitudes(), s.amplitudes());
  EXPECT_THROW(evolve(s, PauliSum::single(4, 0, 'X'), 0.1), ContractViolation);
}

TEST(Evolve, SingleTermIsExact) {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 5; ++rep) {
    const StateVector s = random_state(4, rng);
    const PauliSum a = random_antihermitian(4, 1, rng);
    const Mat u = (0.37 * oracle::dense(a)).exp();
    EXPECT_LT((vec(evolve(s, a, 0.37)) - u * vec(s)).norm(), 1e-12);
  }
}

TEST(Evolve, TrotterErrorIsSecondOrder) {
  std::mt19937_64 rng(14);
  const StateVector s = random_state(4, rng);
  const PauliSum a = random_antihermitian(4, 6, rng);
  const Mat da = oracle::dense(a);
  std::vector<double> logs, errs;
  for (double eps : {0.2, 0.1, 0.05}) {
    const double err = (vec(evolve(s, a, eps)) - (eps * da).exp() * vec(s)).norm();
    logs.push_back(std::log(eps));
    errs.push_back(std::log(err));
  }
  // Least-squares slope on log-log axes.
  const double mx = (logs[0] + logs[1] + logs[2]) / 3.0, my = (errs[0] + errs[1] + errs[2]) / 3.0;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 3; ++i) {
    num += (logs[i] - mx) * (errs[i] - my);
    den += (logs[i] - mx) * (logs[i] - mx);
  }
  EXPECT_NEAR(num / den, 2.0, 0.2);
}

TEST(Evolve, PreservesNorm) {
  std::mt19937_64 rng(15);
  StateVector s = random_state(6, rng);
  for (int step = 0; step < 20; ++step) {
    s = evolve(s, random_antihermitian(6, 15, rng), 0.3);
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  }
}

TEST(Depolarize, ZeroStrengthIsIdentity) {
  std::mt19937_64 rng(16);
  const StateVector s = random_state(3, rng);
  EXPECT_EQ(depolarize(s, 0.0, 5).amplitudes(), s.amplitudes());
  EXPECT_THROW(depolarize(s, 1.5, 5), InvalidArgument);
  EXPECT_THROW(depolarize(s, -0.1, 5), InvalidArgument);
}

TEST(Depolarize, FullStrengthMixesOneQubit) {
  std::mt19937_64 rng(17);
  const StateVector s = random_state(1, rng);
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    const Eigen::Vector2cd v = vec(depolarize(s, 1.0, static_cast<std::uint64_t>(t)));
    rho += v * v.adjoint();
  }
  rho /= trials;
  const Eigen::Matrix2cd diff = rho - 0.5 * Eigen::Matrix2cd::Identity();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(diff);
  const double trace_distance = 0.5 * es.eigenvalues().cwiseAbs().sum();
  EXPECT_LE(trace_distance, 0.02);
}

TEST(Depolarize, SeededAndNormPreserving) {
  std::mt19937_64 rng(18);
  const StateVector s = random_state(5, rng);
  EXPECT_EQ(depolarize(s, 0.5, 3).amplitudes(), depolarize(s, 0.5, 3).amplitudes());
  EXPECT_NEAR(depolarize(s, 0.5, 3).norm(), 1.0, 1e-12);
}

TEST(AmplitudeDump, RoundTrip) {
  std::mt19937_64 rng(19);
  const StateVector s = random_state(3, rng);
  const auto path = std::filesystem::temp_directory_path() / "bcqe_dump_test.bin";
  dump_amplitudes(s, path);
  EXPECT_EQ(std::filesystem::file_size(path), 8u * 16u);
  EXPECT_EQ(load_amplitudes(path).amplitudes(), s.amplitudes());
  std::filesystem::remove(path);
  EXPECT_THROW(dump_amplitudes(s, "/nonexistent-dir/x.bin"), IoError);
}

}  // namespace
}  // namespace bcqe

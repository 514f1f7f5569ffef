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

#include "bcqe/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <random>
#include <thread>

#include "bcqe/error.hpp"

namespace bcqe {
namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_word(const StateVector& state, const PauliWord& word, const char* where) {
  const int n = state.num_qubits();
  const std::uint64_t mask = n == 64 ? ~0ull : ((std::uint64_t{1} << n) - 1);
  if (((word.x | word.z) & ~mask) != 0) {
    throw ShapeError(std::string(where) + ": Pauli word exceeds " + std::to_string(n) + " qubits");
  }
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

StateVector::StateVector(int n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw CapacityError("StateVector: qubit count " + std::to_string(n_qubits) + " outside [0, " +
                        std::to_string(kMaxQubits) + "]");
  }
  n_qubits_ = n_qubits;
  amps_.assign(std::size_t{1} << n_qubits, cplx(0.0));
  amps_[0] = 1.0;
}

StateVector::StateVector(std::vector<cplx> amplitudes) {
  if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
    throw ShapeError("StateVector: amplitude count must be a power of two");
  }
  n_qubits_ = std::countr_zero(amplitudes.size());
  if (n_qubits_ > kMaxQubits) throw CapacityError("StateVector: too many qubits");
  amps_ = std::move(amplitudes);
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dimension()) throw IndexError("basis index outside the Hilbert space");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw NumericalConsistencyError("cannot normalize a zero state");
  for (auto& a : amps_) a /= n;
}

cplx StateVector::inner(const StateVector& other) const {
  if (other.dimension() != dimension()) throw ShapeError("inner product: dimension mismatch");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
  return acc;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept {
  return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ (b * 0xD1B54A32D192ED03ull));
}

StateVector apply_pauli_term(const StateVector& state, const PauliTerm& term) {
  check_word(state, term.word, "apply_pauli_term");
  const auto& in = state.amplitudes();
  std::vector<cplx> out(in.size());
  const cplx base = term.coefficient * kIPow[term.word.y_count() & 3];
  for (std::size_t i = 0; i < in.size(); ++i) {
    const double sign = (std::popcount(i & term.word.z) & 1) ? -1.0 : 1.0;
    out[i ^ term.word.x] = base * sign * in[i];
  }
  return StateVector(std::move(out));
}

StateVector apply(const StateVector& state, const PauliSum& op) {
  std::vector<cplx> out(state.dimension(), cplx(0.0));
  for (const auto& t : op.terms()) {
    const auto part = apply_pauli_term(state, t);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += part[i];
  }
  return StateVector(std::move(out));
}

double word_expectation(const StateVector& state, const PauliWord& word) {
  check_word(state, word, "word_expectation");
  const auto& a = state.amplitudes();
  // <psi|P|psi> = i^y sum_i conj(psi[i^x]) (-1)^{|i&z|} psi[i].
  cplx acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const cplx v = std::conj(a[i ^ word.x]) * a[i];
    acc += (std::popcount(i & word.z) & 1) ? -v : v;
  }
  return (acc * kIPow[word.y_count() & 3]).real();
}

std::vector<double> word_expectations(const StateVector& state, std::span<const PauliWord> words,
                                      const ExpectationOptions& options) {
  std::vector<double> out(words.size());
  const unsigned workers =
      options.parallel ? std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                         static_cast<unsigned>(words.size())))
                       : 1u;
  if (workers <= 1) {
    for (std::size_t k = 0; k < words.size(); ++k) out[k] = word_expectation(state, words[k]);
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < words.size(); k += workers) out[k] = word_expectation(state, words[k]);
    });
  }
  pool.clear();
  return out;
}

cplx expectation_exact(const StateVector& state, const PauliSum& op,
                       const ExpectationOptions& options) {
  require_same_qubits(state.num_qubits(), op.num_qubits(), "expectation_exact");
  std::vector<PauliWord> words;
  words.reserve(op.size());
  for (const auto& t : op.terms()) words.push_back(t.word);
  const auto values = word_expectations(state, words, options);
  cplx acc = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) acc += op.terms()[k].coefficient * values[k];
  return acc;
}

std::vector<double> sample_expectations(std::span<const double> exact, const ShotConfig& cfg) {
  if (cfg.shots == 0) throw InvalidArgument("shot count must be positive");
  std::vector<double> out(exact.size());
  const double shots = static_cast<double>(cfg.shots);
  for (std::size_t k = 0; k < exact.size(); ++k) {
    const double p_plus = std::clamp(0.5 * (1.0 + exact[k]), 0.0, 1.0);
    std::mt19937_64 rng(derive_seed(cfg.seed, k));
    std::binomial_distribution<std::uint64_t> draw(cfg.shots, p_plus);
    out[k] = 2.0 * static_cast<double>(draw(rng)) / shots - 1.0;
  }
  return out;
}

std::vector<double> sampled_word_expectations(const StateVector& state,
                                              std::span<const PauliWord> words,
                                              const ShotConfig& cfg) {
  std::vector<double> exact(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) {
    exact[k] = words[k].is_identity() ? 1.0 : word_expectation(state, words[k]);
  }
  return sample_expectations(exact, cfg);
}

double expectation_sampled(const StateVector& state, const PauliSum& op, const ShotConfig& cfg) {
  require_same_qubits(state.num_qubits(), op.num_qubits(), "expectation_sampled");
  if (!op.is_hermitian()) throw ContractViolation("expectation_sampled: operator is not Hermitian");
  std::vector<PauliWord> words;
  words.reserve(op.size());
  for (const auto& t : op.terms()) words.push_back(t.word);
  const auto values = sampled_word_expectations(state, words, cfg);
  double acc = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) acc += op.terms()[k].coefficient.real() * values[k];
  return acc;
}

StateVector evolve(const StateVector& state, const PauliSum& a_op, double epsilon) {
  require_same_qubits(state.num_qubits(), a_op.num_qubits(), "evolve");
  if (!a_op.is_antihermitian()) throw ContractViolation("evolve: generator is not anti-Hermitian");
  std::vector<cplx> psi = state.amplitudes();
  std::vector<cplx> tmp(psi.size());
  for (const auto& t : a_op.terms()) {
    const double angle = epsilon * t.coefficient.imag();
    const double c = std::cos(angle);
    const cplx is = cplx(0.0, std::sin(angle)) * kIPow[t.word.y_count() & 3];
    for (std::size_t i = 0; i < psi.size(); ++i) {
      const double sign = (std::popcount(i & t.word.z) & 1) ? -1.0 : 1.0;
      tmp[i ^ t.word.x] = is * sign * psi[i];
    }
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = c * psi[i] + tmp[i];
  }
  return StateVector(std::move(psi));
}

StateVector depolarize(const StateVector& state, double strength, std::uint64_t seed) {
  if (!(strength >= 0.0 && strength <= 1.0)) {
    throw InvalidArgument("depolarizing strength must lie in [0, 1]");
  }
  if (strength == 0.0) return state;
  std::mt19937_64 rng(derive_seed(seed, 0xDE90));
  std::bernoulli_distribution hit(strength);
  std::uniform_int_distribution<int> pick(0, 3);
  PauliWord word;
  for (int q = 0; q < state.num_qubits(); ++q) {
    if (!hit(rng)) continue;
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (pick(rng)) {
      case 1: word.x |= bit; break;
      case 2: word.x |= bit; word.z |= bit; break;
      case 3: word.z |= bit; break;
      default: break;
    }
  }
  if (word.is_identity()) return state;
  return apply_pauli_term(state, {1.0, word});
}

void dump_amplitudes(const StateVector& state, const std::filesystem::path& path) {
  static_assert(std::endian::native == std::endian::little, "amplitude dump assumes little-endian");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const auto& a : state.amplitudes()) {
    const double pair[2] = {a.real(), a.imag()};
    out.write(reinterpret_cast<const char*>(pair), sizeof(pair));
  }
  if (!out) throw IoError("failed writing " + path.string());
}

StateVector load_amplitudes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<cplx> amps;
  double pair[2];
  while (in.read(reinterpret_cast<char*>(pair), sizeof(pair))) amps.emplace_back(pair[0], pair[1]);
  return StateVector(std::move(amps));
}

}  // namespace bcqe

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

#include "bcqe/pauli.hpp"

#include "bcqe/error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <unordered_map>

namespace bcqe {
namespace {

constexpr cplx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int letter_code(const PauliWord& w, int q) noexcept {
  const bool x = (w.x >> q) & 1u;
  const bool z = (w.z >> q) & 1u;
  if (x) return z ? 2 : 1;
  return z ? 3 : 0;
}

using Accumulator = std::unordered_map<PauliWord, cplx, PauliWordHash>;

std::vector<PauliTerm> finish(const Accumulator& acc) {
  std::vector<PauliTerm> out;
  out.reserve(acc.size());
  for (const auto& [w, c] : acc) {
    if (std::abs(c) > PauliSum::kDropThreshold) out.push_back({c, w});
  }
  std::sort(out.begin(), out.end(),
            [](const PauliTerm& a, const PauliTerm& b) { return word_less(a.word, b.word); });
  return out;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError("invalid number '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

int PauliWord::y_count() const noexcept { return std::popcount(x & z); }

char PauliWord::letter(int qubit) const noexcept { return "IXYZ"[letter_code(*this, qubit)]; }

std::string PauliWord::to_string(int n_qubits) const {
  std::string s(static_cast<std::size_t>(n_qubits), 'I');
  for (int q = 0; q < n_qubits; ++q) s[static_cast<std::size_t>(n_qubits - 1 - q)] = letter(q);
  return s;
}

PauliWord PauliWord::parse(std::string_view text) {
  if (text.size() > 64) throw ParseError("Pauli word longer than 64 qubits");
  PauliWord w;
  const int n = static_cast<int>(text.size());
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - i);
    switch (text[static_cast<std::size_t>(i)]) {
      case 'I': break;
      case 'X': w.x |= bit; break;
      case 'Y': w.x |= bit; w.z |= bit; break;
      case 'Z': w.z |= bit; break;
      default:
        throw ParseError("invalid Pauli letter in '" + std::string(text) + "'");
    }
  }
  return w;
}

bool word_less(const PauliWord& a, const PauliWord& b) noexcept {
  const std::uint64_t diff = (a.x ^ b.x) | (a.z ^ b.z);
  if (diff == 0) return false;
  const int q = 63 - std::countl_zero(diff);
  return letter_code(a, q) < letter_code(b, q);
}

std::size_t PauliWordHash::operator()(const PauliWord& w) const noexcept {
  std::uint64_t h = w.x * 0x9E3779B97F4A7C15ull;
  h ^= w.z + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

WordProduct multiply(const PauliWord& a, const PauliWord& b) noexcept {
  // P = i^{y} X^x Z^z; moving Z^{z_a} past X^{x_b} costs (-1)^{|z_a & x_b|}.
  PauliWord w{a.x ^ b.x, a.z ^ b.z};
  const int k = a.y_count() + b.y_count() - w.y_count() + 2 * std::popcount(a.z & b.x);
  return {kPhase[((k % 4) + 4) % 4], w};
}

bool commutes(const PauliWord& a, const PauliWord& b) noexcept {
  return ((std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1) == 0;
}

void require_same_qubits(int expected, int actual, const char* where) {
  if (expected != actual) {
    throw ShapeError(std::string(where) + ": qubit count mismatch (" + std::to_string(expected) +
                     " vs " + std::to_string(actual) + ")");
  }
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > 64) throw InvalidArgument("PauliSum: qubit count must be in [0, 64]");
}

PauliSum::PauliSum(int n_qubits, std::vector<PauliTerm> terms) : PauliSum(n_qubits) {
  const std::uint64_t mask = n_qubits == 64 ? ~0ull : ((std::uint64_t{1} << n_qubits) - 1);
  Accumulator acc;
  for (const auto& t : terms) {
    if (((t.word.x | t.word.z) & ~mask) != 0) {
      throw ShapeError("PauliSum: word acts outside the qubit range");
    }
    acc[t.word] += t.coefficient;
  }
  terms_ = finish(acc);
}

PauliSum PauliSum::identity(int n_qubits, cplx coefficient) {
  return PauliSum(n_qubits, {{coefficient, PauliWord{}}});
}

PauliSum PauliSum::single(int n_qubits, int qubit, char letter, cplx coefficient) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw IndexError("qubit " + std::to_string(qubit) + " outside [0, " + std::to_string(n_qubits) + ")");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  PauliWord w;
  switch (letter) {
    case 'I': break;
    case 'X': w.x = bit; break;
    case 'Y': w.x = bit; w.z = bit; break;
    case 'Z': w.z = bit; break;
    default: throw ParseError(std::string("invalid Pauli letter '") + letter + "'");
  }
  return PauliSum(n_qubits, {{coefficient, w}});
}

cplx PauliSum::coefficient(const PauliWord& word) const {
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), word,
      [](const PauliTerm& t, const PauliWord& w) { return word_less(t.word, w); });
  if (it != terms_.end() && it->word == word) return it->coefficient;
  return 0.0;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_qubits_);
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coefficient = std::conj(t.coefficient);
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [tol](const PauliTerm& t) { return std::abs(t.coefficient.imag()) <= tol; });
}

bool PauliSum::is_antihermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [tol](const PauliTerm& t) { return std::abs(t.coefficient.real()) <= tol; });
}

double PauliSum::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coefficient));
  return m;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  require_same_qubits(n_qubits_, other.n_qubits_, "PauliSum::operator+=");
  std::vector<PauliTerm> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  const auto push = [&merged](const PauliTerm& t) {
    if (std::abs(t.coefficient) > kDropThreshold) merged.push_back(t);
  };
  while (a != terms_.end() && b != other.terms_.end()) {
    if (word_less(a->word, b->word)) {
      push(*a++);
    } else if (word_less(b->word, a->word)) {
      push(*b++);
    } else {
      push({a->coefficient + b->coefficient, a->word});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) push(*a);
  for (; b != other.terms_.end(); ++b) push(*b);
  terms_ = std::move(merged);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) { return *this += other * cplx(-1.0); }

PauliSum& PauliSum::operator*=(cplx scalar) {
  for (auto& t : terms_) t.coefficient *= scalar;
  std::erase_if(terms_, [](const PauliTerm& t) { return std::abs(t.coefficient) <= kDropThreshold; });
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  require_same_qubits(a.num_qubits(), b.num_qubits(), "PauliSum product");
  Accumulator acc;
  acc.reserve(a.size() * b.size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      const WordProduct p = multiply(ta.word, tb.word);
      acc[p.word] += ta.coefficient * tb.coefficient * p.phase;
    }
  }
  PauliSum out(a.num_qubits());
  out.terms_ = finish(acc);
  return out;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  require_same_qubits(a.num_qubits(), b.num_qubits(), "commutator");
  // Commuting word pairs cancel; anticommuting ones contribute 2ab.
  Accumulator acc;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      if (commutes(ta.word, tb.word)) continue;
      const WordProduct p = multiply(ta.word, tb.word);
      acc[p.word] += 2.0 * ta.coefficient * tb.coefficient * p.phase;
    }
  }
  return PauliSum(a.num_qubits(), [&] {
    std::vector<PauliTerm> v;
    v.reserve(acc.size());
    for (const auto& [w, c] : acc) v.push_back({c, w});
    return v;
  }());
}

std::string PauliSum::to_text() const {
  std::ostringstream out;
  for (const auto& t : terms_) {
    cplx c = t.coefficient;
    const double lead = c.real() != 0.0 ? c.real() : c.imag();
    char sign = '+';
    if (lead < 0.0) {
      sign = '-';
      c = -c;
    }
    out << sign << '(' << format_double(c.real() + 0.0) << ',' << format_double(c.imag() + 0.0) << ") "
        << t.word.to_string(n_qubits_) << '\n';
  }
  return out.str();
}

PauliSum PauliSum::from_text(std::string_view text) {
  std::vector<PauliTerm> terms;
  int n_qubits = -1;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    const auto fail = [&](const char* why) {
      throw ParseError("PauliSum line " + std::to_string(line_no) + ": " + why);
    };
    if (line.size() < 2 || (line[0] != '+' && line[0] != '-') || line[1] != '(') fail("expected '+(' or '-('");
    const auto comma = line.find(',');
    const auto close = line.find(')');
    if (comma == std::string_view::npos || close == std::string_view::npos || comma > close) {
      fail("malformed coefficient");
    }
    const double re = parse_double(line.substr(2, comma - 2));
    const double im = parse_double(line.substr(comma + 1, close - comma - 1));
    const std::string_view word = trim(line.substr(close + 1));
    if (word.empty()) fail("missing Pauli word");
    if (n_qubits < 0) {
      n_qubits = static_cast<int>(word.size());
    } else if (static_cast<int>(word.size()) != n_qubits) {
      fail("inconsistent word length");
    }
    const double sign = line[0] == '-' ? -1.0 : 1.0;
    terms.push_back({sign * cplx(re, im), PauliWord::parse(word)});
  }
  return PauliSum(std::max(n_qubits, 0), std::move(terms));
}

}  // namespace bcqe

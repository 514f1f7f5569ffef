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

#include <stdexcept>
#include <string>

namespace bcqe {

// All library errors derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Z too small for the requested quantity (imaginary mode frequency).
class UnboundSystemError : public Error {
 public:
  using Error::Error;
};

// Invalid model or solver parameter (N < 2, R < 1, epsilon <= 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// Operand sizes disagree (qubit counts, orbital counts).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Operator-level precondition violated, e.g. non-anti-Hermitian generator.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NumericalConsistencyError : public Error {
 public:
  using Error::Error;
};

// Dense method asked to handle more qubits than it supports.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace bcqe

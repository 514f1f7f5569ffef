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

#include <complex>
#include <cstddef>
#include <vector>

#include "bcqe/error.hpp"

namespace bcqe {

using cplx = std::complex<double>;

/// Dense rank-4 tensor T(p, q, s, t) over an orbital range [0, dim).
///
/// Index layout follows the two-particle convention T^{pq}_{st}: (p, q) are
/// the upper (creation) indices and (s, t) the lower (annihilation) ones.
template <typename T>
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int dim, T fill = T{})
      : dim_(dim), data_(static_cast<std::size_t>(dim) * dim * dim * dim, fill) {
    if (dim < 0) throw InvalidArgument("Tensor4: negative dimension");
  }

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return data_.size(); }

  T& operator()(int p, int q, int s, int t) { return data_[offset(p, q, s, t)]; }
  const T& operator()(int p, int q, int s, int t) const {
    return data_[offset(p, q, s, t)];
  }

  std::vector<T>& data() noexcept { return data_; }
  const std::vector<T>& data() const noexcept { return data_; }

  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

 private:
  std::size_t offset(int p, int q, int s, int t) const noexcept {
    const auto d = static_cast<std::size_t>(dim_);
    return ((static_cast<std::size_t>(p) * d + q) * d + s) * d + t;
  }

  int dim_ = 0;
  std::vector<T> data_;
};

using RealTensor4 = Tensor4<double>;
using ComplexTensor4 = Tensor4<cplx>;

/// Dense row-major square matrix; enough for R x R integral blocks.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim, 0.0) {}

  int dim() const noexcept { return dim_; }
  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * dim_ + c]; }
  double operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * dim_ + c];
  }

 private:
  int dim_ = 0;
  std::vector<double> data_;
};

}  // namespace bcqe

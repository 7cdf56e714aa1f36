// Copyright 2026 The catgd Authors
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

#include <array>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "catgd/errors.hpp"

namespace catgd {

using Complex = std::complex<double>;

/// Largest qubit count for which 4^k tensors are materialized.
inline constexpr int kMaxTensorQubits = 10;

/// sigma_axis(row, col); axes 0..3 = identity, x, y, z.
Complex pauli_entry(int axis, int row, int col);

/// Ordered Pauli axes (alpha_1, ..., alpha_k). alpha_1 is the most
/// significant digit of the flat base-4 encoding, matching the qubit
/// ordering of the computational-basis index (qubit 1 = most significant
/// bit).
class MultiIndex {
 public:
  MultiIndex(std::initializer_list<int> axes);
  explicit MultiIndex(const std::vector<int>& axes);
  static MultiIndex from_flat(std::uint64_t flat, int k);

  int size() const { return k_; }
  int operator[](int i) const { return axes_[static_cast<std::size_t>(i)]; }
  std::uint64_t flat() const;

  /// Bit i (counting from the most significant side, qubit 0 = top bit)
  /// is set when that qubit carries sigma_x or sigma_y.
  std::uint64_t flip_mask() const;

  /// Number of axes equal to sigma_x or sigma_y.
  int xy_count() const;

 private:
  MultiIndex() = default;
  void check_range() const;

  std::array<std::uint8_t, kMaxTensorQubits> axes_{};
  int k_ = 0;
};

/// Product over qubits j of sigma_{alpha_j}(row_j, col_j) with
/// row = col ^ flip_mask; the only nonzero column entry of the Pauli string.
Complex pauli_column_factor(const MultiIndex& idx, std::uint64_t col);

}  // namespace catgd

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

#include "catgd/pauli.hpp"

#include <string>

namespace catgd {

namespace {
constexpr Complex kI(0.0, 1.0);
// [axis][row][col]
const Complex kPauli[4][2][2] = {
    {{1.0, 0.0}, {0.0, 1.0}},    // identity
    {{0.0, 1.0}, {1.0, 0.0}},    // x
    {{0.0, -kI}, {kI, 0.0}},     // y
    {{1.0, 0.0}, {0.0, -1.0}},   // z
};
}  // namespace

Complex pauli_entry(int axis, int row, int col) {
  if (axis < 0 || axis > 3 || row < 0 || row > 1 || col < 0 || col > 1) {
    throw DimensionError("pauli_entry: axis/row/col out of range");
  }
  return kPauli[axis][row][col];
}

MultiIndex::MultiIndex(std::initializer_list<int> axes) {
  if (axes.size() == 0 || axes.size() > static_cast<std::size_t>(kMaxTensorQubits)) {
    throw DimensionError("MultiIndex: length must be in [1, " +
                         std::to_string(kMaxTensorQubits) + "]");
  }
  k_ = static_cast<int>(axes.size());
  int i = 0;
  for (int a : axes) axes_[static_cast<std::size_t>(i++)] = static_cast<std::uint8_t>(a);
  check_range();
}

MultiIndex::MultiIndex(const std::vector<int>& axes) {
  if (axes.empty() || axes.size() > static_cast<std::size_t>(kMaxTensorQubits)) {
    throw DimensionError("MultiIndex: length must be in [1, " +
                         std::to_string(kMaxTensorQubits) + "]");
  }
  k_ = static_cast<int>(axes.size());
  for (std::size_t i = 0; i < axes.size(); ++i) {
    axes_[i] = static_cast<std::uint8_t>(axes[i]);
  }
  check_range();
}

void MultiIndex::check_range() const {
  for (int i = 0; i < k_; ++i) {
    if (axes_[static_cast<std::size_t>(i)] > 3) {
      throw DimensionError("MultiIndex: axis values must be in 0..3");
    }
  }
}

MultiIndex MultiIndex::from_flat(std::uint64_t flat, int k) {
  if (k < 1 || k > kMaxTensorQubits) {
    throw DimensionError("MultiIndex::from_flat: bad length");
  }
  if (flat >> (2 * k)) {
    throw DimensionError("MultiIndex::from_flat: flat index out of range");
  }
  MultiIndex idx;
  idx.k_ = k;
  for (int j = 0; j < k; ++j) {
    idx.axes_[static_cast<std::size_t>(j)] =
        static_cast<std::uint8_t>((flat >> (2 * (k - 1 - j))) & 3u);
  }
  return idx;
}

std::uint64_t MultiIndex::flat() const {
  std::uint64_t f = 0;
  for (int j = 0; j < k_; ++j) {
    f = (f << 2) | axes_[static_cast<std::size_t>(j)];
  }
  return f;
}

std::uint64_t MultiIndex::flip_mask() const {
  std::uint64_t m = 0;
  for (int j = 0; j < k_; ++j) {
    const int a = axes_[static_cast<std::size_t>(j)];
    if (a == 1 || a == 2) m |= std::uint64_t{1} << (k_ - 1 - j);
  }
  return m;
}

int MultiIndex::xy_count() const {
  int c = 0;
  for (int j = 0; j < k_; ++j) {
    const int a = axes_[static_cast<std::size_t>(j)];
    if (a == 1 || a == 2) ++c;
  }
  return c;
}

Complex pauli_column_factor(const MultiIndex& idx, std::uint64_t col) {
  Complex f(1.0, 0.0);
  const int k = idx.size();
  for (int j = 0; j < k; ++j) {
    const int a = idx[j];
    const int col_bit = static_cast<int>((col >> (k - 1 - j)) & 1u);
    const int row_bit = (a == 1 || a == 2) ? 1 - col_bit : col_bit;
    f *= kPauli[a][row_bit][col_bit];
  }
  return f;
}

}  // namespace catgd

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

#include <cstdint>
#include <vector>

#include "catgd/cat_state.hpp"
#include "catgd/pauli.hpp"

namespace catgd {

/// full_tensor / reconstruct_density operate element-by-element and are
/// bounded at 4^k * 2^k cost.
inline constexpr int kMaxDirectTensorQubits = 8;

/// The 4^k real coefficients T_{alpha_1...alpha_k} of a k-qubit state over
/// Pauli strings, normalized as T = Tr(rho sigma_{alpha_1} x ... x
/// sigma_{alpha_k}) so that rho = 2^{-k} sum T sigma x ... x sigma.
/// Stored flat with alpha_1 as the most significant base-4 digit.
class CorrelationTensor {
 public:
  CorrelationTensor(int k, std::vector<double> values);
  static CorrelationTensor zeros(int k);

  int qubits() const { return k_; }
  std::uint64_t size() const { return values_.size(); }

  double at(const MultiIndex& idx) const;
  double operator[](std::uint64_t flat) const { return values_[flat]; }
  double& operator[](std::uint64_t flat) { return values_[flat]; }
  const std::vector<double>& values() const { return values_; }

 private:
  int k_;
  std::vector<double> values_;
};

/// The four (k-1)-qubit operator blocks of rho over the last qubit:
/// rho = sum_{r,s} block(r,s) x |r><s|.
struct BlockFamily {
  Eigen::MatrixXcd b00, b01, b10, b11;

  const Eigen::MatrixXcd& block(int r, int s) const;
};

/// Tr(rho sigma_{alpha_1} x ... x sigma_{alpha_k}). The imaginary residue
/// must stay below 1e-12 (guaranteed for Hermitian input); it is checked,
/// then dropped.
double tensor_element(const DensityMatrix& rho, const MultiIndex& idx);

/// All 4^k elements via tensor_element. Throws SizeLimit for
/// k > kMaxDirectTensorQubits.
CorrelationTensor full_tensor(const DensityMatrix& rho);

/// Block decomposition over the last qubit; requires k >= 2.
BlockFamily block_decompose(const DensityMatrix& rho);

/// Correlation tensor of reduced_density(spec, k) built by recursion over
/// the last qubit: the four blocks of the k-qubit state are expanded in
/// their own (k-1)-qubit tensors T^{rs} and combined as
///   T_{...0} = T^{00} + T^{11},   T_{...3} = T^{00} - T^{11},
///   T_{...1} = T^{01} + T^{10},   T_{...2} = i (T^{01} - T^{10}),
/// down to single-qubit Bloch vectors. Off-diagonal blocks contribute
/// complex intermediates; the assembled tensor is checked to be real
/// (residue <= 1e-12) and equals full_tensor(reduced_density(spec, k)).
CorrelationTensor recursive_tensor(const CatSpec& spec, int k);

/// rho = 2^{-k} sum T sigma x ... x sigma; inverse of full_tensor.
DensityMatrix reconstruct_density(const CorrelationTensor& t);

namespace detail {
/// Pauli-string assembly shared by reconstruct_density and the classical
/// state builder; `values` has length 4^k.
Eigen::MatrixXcd matrix_from_tensor_values(const std::vector<double>& values,
                                           int k);
}  // namespace detail

}  // namespace catgd

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

#include "catgd/fano_bloch.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace catgd {

namespace {
constexpr Complex kI(0.0, 1.0);
constexpr double kImagResidueTol = 1e-12;
}  // namespace

CorrelationTensor::CorrelationTensor(int k, std::vector<double> values)
    : k_(k), values_(std::move(values)) {
  if (k < 1 || k > kMaxTensorQubits) {
    throw DimensionError("CorrelationTensor: k must be in [1, " +
                         std::to_string(kMaxTensorQubits) + "]");
  }
  if (values_.size() != (std::uint64_t{1} << (2 * k))) {
    throw DimensionError("CorrelationTensor: need 4^k values");
  }
}

CorrelationTensor CorrelationTensor::zeros(int k) {
  if (k < 1 || k > kMaxTensorQubits) {
    throw DimensionError("CorrelationTensor::zeros: bad k");
  }
  return CorrelationTensor(k,
                           std::vector<double>(std::uint64_t{1} << (2 * k), 0.0));
}

double CorrelationTensor::at(const MultiIndex& idx) const {
  if (idx.size() != k_) {
    throw DimensionError("CorrelationTensor::at: index length mismatch");
  }
  return values_[idx.flat()];
}

const Eigen::MatrixXcd& BlockFamily::block(int r, int s) const {
  if (r == 0) return s == 0 ? b00 : b01;
  return s == 0 ? b10 : b11;
}

double tensor_element(const DensityMatrix& rho, const MultiIndex& idx) {
  if (idx.size() != rho.qubits()) {
    throw DimensionError("tensor_element: index length != qubit count");
  }
  const std::uint64_t dim = std::uint64_t{1} << rho.qubits();
  const std::uint64_t flip = idx.flip_mask();
  Complex acc(0.0, 0.0);
  for (std::uint64_t r = 0; r < dim; ++r) {
    // Tr(rho P) = sum_r rho(r, r ^ flip) P(r ^ flip, r); the Pauli string P
    // has exactly one nonzero entry per column.
    acc += rho.matrix()(static_cast<Eigen::Index>(r),
                        static_cast<Eigen::Index>(r ^ flip)) *
           pauli_column_factor(idx, r);
  }
  if (std::abs(acc.imag()) > kImagResidueTol) {
    throw InvariantViolation("tensor_element: imaginary residue " +
                             std::to_string(acc.imag()));
  }
  return acc.real();
}

CorrelationTensor full_tensor(const DensityMatrix& rho) {
  const int k = rho.qubits();
  if (k > kMaxDirectTensorQubits) {
    throw SizeLimit("full_tensor: k exceeds " +
                    std::to_string(kMaxDirectTensorQubits));
  }
  const std::uint64_t count = std::uint64_t{1} << (2 * k);
  std::vector<double> values(count);
  for (std::uint64_t flat = 0; flat < count; ++flat) {
    values[flat] = tensor_element(rho, MultiIndex::from_flat(flat, k));
  }
  if (std::abs(values[0] - 1.0) > kImagResidueTol) {
    throw InvariantViolation("full_tensor: T at (0,...,0) differs from 1");
  }
  return CorrelationTensor(k, std::move(values));
}

BlockFamily block_decompose(const DensityMatrix& rho) {
  const int k = rho.qubits();
  if (k < 2) throw DimensionError("block_decompose: need k >= 2");
  const Eigen::Index half = Eigen::Index{1} << (k - 1);
  BlockFamily fam;
  Eigen::MatrixXcd* blocks[2][2] = {{&fam.b00, &fam.b01}, {&fam.b10, &fam.b11}};
  for (int r = 0; r < 2; ++r) {
    for (int s = 0; s < 2; ++s) {
      Eigen::MatrixXcd& b = *blocks[r][s];
      b.resize(half, half);
      for (Eigen::Index i = 0; i < half; ++i) {
        for (Eigen::Index j = 0; j < half; ++j) {
          // The last qubit is the least significant bit of the basis index.
          b(i, j) = rho.matrix()(2 * i + r, 2 * j + s);
        }
      }
    }
  }
  return fam;
}

namespace {

// Coefficients of an operator on the two-dimensional span of |eta>^j and
// |-eta>^j: O = sum_{u,v} c(u,v) |u eta^j><v eta^j| with u, v in {+, -}
// (index 0 = +). Every block of a cat reduction stays in this family, which
// is what makes the last-qubit recursion O(4^k).
using DyadCoeffs = Eigen::Matrix2cd;

// Single-qubit amplitude of |u eta> at basis value `bit`.
double dyad_amp(int u, int bit, double ap, double am) {
  if (bit == 0) return ap;
  return u == 0 ? am : -am;
}

// Tensor (length 4^j, complex) of the operator described by `c`.
std::vector<Complex> dyad_tensor(const DyadCoeffs& c, int j, double ap,
                                 double am, double p) {
  if (j == 1) {
    // Bloch components from the dyad brackets <v eta| sigma |u eta>.
    const double s = 2.0 * ap * am;
    std::vector<Complex> t(4);
    t[0] = c(0, 0) + c(1, 1) + p * (c(0, 1) + c(1, 0));
    t[1] = s * (c(0, 0) - c(1, 1));
    t[2] = kI * s * (c(1, 0) - c(0, 1));
    t[3] = p * (c(0, 0) + c(1, 1)) + c(0, 1) + c(1, 0);
    return t;
  }

  std::vector<Complex> child[2][2];
  for (int r = 0; r < 2; ++r) {
    for (int s = 0; s < 2; ++s) {
      DyadCoeffs crs;
      for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
          crs(u, v) = c(u, v) * dyad_amp(u, r, ap, am) * dyad_amp(v, s, ap, am);
        }
      }
      child[r][s] = dyad_tensor(crs, j - 1, ap, am, p);
    }
  }

  const std::uint64_t stride = std::uint64_t{1} << (2 * (j - 1));
  std::vector<Complex> out(stride * 4);
  for (std::uint64_t idx = 0; idx < stride; ++idx) {
    const Complex t00 = child[0][0][idx];
    const Complex t01 = child[0][1][idx];
    const Complex t10 = child[1][0][idx];
    const Complex t11 = child[1][1][idx];
    out[idx * 4 + 0] = t00 + t11;
    out[idx * 4 + 1] = t01 + t10;
    out[idx * 4 + 2] = kI * (t01 - t10);
    out[idx * 4 + 3] = t00 - t11;
  }
  return out;
}

}  // namespace

CorrelationTensor recursive_tensor(const CatSpec& spec, int k) {
  if (k < 1 || k > spec.n()) {
    throw DimensionError("recursive_tensor: k must be in [1, n]");
  }
  if (k > kMaxTensorQubits) {
    throw SizeLimit("recursive_tensor: k exceeds " +
                    std::to_string(kMaxTensorQubits));
  }
  const double qc = spec.q(k) * spec.parity_sign();
  const double n2 = spec.norm_sq();
  DyadCoeffs c;
  c << n2, n2 * qc, n2 * qc, n2;

  const std::vector<Complex> raw =
      dyad_tensor(c, k, spec.a_plus(), spec.a_minus(), spec.p());
  std::vector<double> values(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (std::abs(raw[i].imag()) > kImagResidueTol) {
      throw InvariantViolation("recursive_tensor: imaginary residue at flat " +
                               std::to_string(i));
    }
    values[i] = raw[i].real();
  }
  if (std::abs(values[0] - 1.0) > kImagResidueTol) {
    throw InvariantViolation("recursive_tensor: T at (0,...,0) differs from 1");
  }
  return CorrelationTensor(k, std::move(values));
}

namespace detail {

Eigen::MatrixXcd matrix_from_tensor_values(const std::vector<double>& values,
                                           int k) {
  if (k < 1 || k > kMaxDirectTensorQubits) {
    throw SizeLimit("matrix_from_tensor_values: k exceeds " +
                    std::to_string(kMaxDirectTensorQubits));
  }
  if (values.size() != (std::uint64_t{1} << (2 * k))) {
    throw DimensionError("matrix_from_tensor_values: need 4^k values");
  }
  const std::uint64_t dim = std::uint64_t{1} << k;
  const double scale = 1.0 / static_cast<double>(dim);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (std::uint64_t flat = 0; flat < values.size(); ++flat) {
    const double coeff = values[flat];
    if (coeff == 0.0) continue;
    const MultiIndex idx = MultiIndex::from_flat(flat, k);
    const std::uint64_t flip = idx.flip_mask();
    for (std::uint64_t col = 0; col < dim; ++col) {
      m(static_cast<Eigen::Index>(col ^ flip), static_cast<Eigen::Index>(col)) +=
          scale * coeff * pauli_column_factor(idx, col);
    }
  }
  return m;
}

}  // namespace detail

DensityMatrix reconstruct_density(const CorrelationTensor& t) {
  return DensityMatrix(t.qubits(),
                       detail::matrix_from_tensor_values(t.values(), t.qubits()));
}

}  // namespace catgd

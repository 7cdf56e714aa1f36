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

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "catgd/errors.hpp"
#include "catgd/numeric.hpp"

namespace catgd {

/// |1 + p^n cos(m pi)| at or below this is rejected as singular.
inline constexpr double kSingularEps = 1e-9;
/// Default entrywise comparison / invariant tolerance.
inline constexpr double kEntryTol = 1e-12;
/// Full 2^n state vectors are only materialized up to this qubit count.
inline constexpr int kMaxVectorQubits = 14;

/// Parity of the superposition phase e^{i m pi}: Even keeps the symmetric
/// combination, Odd the antisymmetric one.
enum class Parity : int { Even = 0, Odd = 1 };

/// cos(m pi): +1 for even, -1 for odd.
constexpr double parity_sign(Parity m) { return m == Parity::Even ? 1.0 : -1.0; }

/// Parameters of an n-qubit cat state: a balanced superposition of the two
/// product states |eta>^n and |-eta>^n with single-qubit overlap p and
/// relative phase cos(m pi).
///
/// All closed forms depend on eta only through the real overlap p, so the
/// state is parameterized by p directly; a complex eta may be supplied as a
/// convenience and fixes p = (1 - |eta|^2)/(1 + |eta|^2). The single-qubit
/// embedding is |+-eta> = a+ |0> +- a- |1> with a+- = sqrt((1 +- p)/2),
/// which keeps every matrix entry real.
class CatSpec {
 public:
  /// Throws InvariantViolation for n < 1 or p outside (-1, 1], and
  /// SingularNormalization when |1 + p^n cos(m pi)| <= kSingularEps.
  CatSpec(int n, double p, Parity parity);
  static CatSpec from_eta(int n, std::complex<double> eta, Parity parity);

  int n() const { return n_; }
  double p() const { return p_; }
  Parity parity() const { return parity_; }
  const std::optional<std::complex<double>>& eta() const { return eta_; }

  double parity_sign() const { return catgd::parity_sign(parity_); }
  double a_plus() const;   // sqrt((1 + p) / 2)
  double a_minus() const;  // sqrt((1 - p) / 2)
  double norm_sq() const;  // N^2 = 1 / (2 (1 + p^n cos(m pi)))
  double q(int k) const;   // p^(n - k)

 private:
  int n_;
  double p_;
  Parity parity_;
  std::optional<std::complex<double>> eta_;
};

/// Overlap <eta|-eta> = (1 - |eta|^2) / (1 + |eta|^2), in (-1, 1].
double overlap_from_eta(std::complex<double> eta);

/// Amplitudes of the symmetric product state |eta>^n over the Dicke basis
/// |n,k>, k = 0..n: (1 + |eta|^2)^{-n/2} sqrt(C(n,k)) eta^k.
std::vector<std::complex<double>> coherent_dicke_coefficients(
    int n, std::complex<double> eta);

/// Unit vector of n qubits, big-endian computational basis (qubit 0 is the
/// most significant bit of the index).
struct PureStateVector {
  int n;
  Eigen::VectorXcd amplitudes;

  /// Checks dimension 2^n and unit norm (1e-12).
  PureStateVector(int n_qubits, Eigen::VectorXcd amps);
};

/// Dense 2^k x 2^k state. Construction checks Hermiticity and unit trace
/// (1e-12 each); positivity is checked on demand (min_eigenvalue) since an
/// eigensolve on every construction is too costly for large k.
class DensityMatrix {
 public:
  DensityMatrix(int k, Eigen::MatrixXcd entries);

  int qubits() const { return k_; }
  Eigen::Index dim() const { return mat_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return mat_; }

  double purity() const;                 // Tr rho^2
  Eigen::VectorXd eigenvalues() const;   // ascending
  double min_eigenvalue() const;

 private:
  int k_;
  Eigen::MatrixXcd mat_;
};

/// N (|eta>^n + cos(m pi) |-eta>^n) as a full 2^n vector.
/// Throws SizeLimit for n > kMaxVectorQubits.
PureStateVector cat_state_vector(const CatSpec& spec);

/// Closed-form k-qubit reduction of the cat state (any n - k qubits traced
/// out; they are all equivalent by exchange symmetry). Entry (r, c) is
/// 2 N^2 (1 +- q_k cos(m pi)) a+^{2k-w_r-w_c} a-^{w_r+w_c} when the index
/// weights w_r, w_c have equal parity (+ for even w_r), zero otherwise,
/// with q_k = p^{n-k}. Rank <= 2.
DensityMatrix reduced_density(const CatSpec& spec, int k);

/// Standard partial trace keeping the listed qubits (0-based, order taken
/// as the output qubit order). Throws DimensionError on invalid indices.
DensityMatrix partial_trace(const PureStateVector& state,
                            const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

}  // namespace catgd

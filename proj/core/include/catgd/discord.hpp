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
#include <optional>

#include "catgd/fano_bloch.hpp"

namespace catgd {

/// Brute-force minimization is bounded at 2^6-dimensional states.
inline constexpr int kMaxBruteForceQubits = 6;
/// Default node count of the golden-angle sphere grid.
inline constexpr int kBruteForceGridNodes = 2000;

/// Eigenvalues of a real symmetric 3x3 matrix, ascending. Closed-form
/// trigonometric roots of the characteristic cubic plus a Newton polish.
Eigen::Vector3d symmetric3x3_eigenvalues(const Eigen::Matrix3d& m);

/// K = x x^t + T T^t where x = (0, 0, T_{30...0}) and T is the
/// 3 x (4^{k-1} - 1) matrix of rows T_{i alpha_2...alpha_k},
/// (alpha_2...alpha_k) != 0. Its spectrum determines the geometric discord;
/// for cat reductions K is diagonal.
class KMatrix {
 public:
  explicit KMatrix(Eigen::Matrix3d m);  // checks symmetry (1e-14)

  const Eigen::Matrix3d& matrix() const { return m_; }
  Eigen::Vector3d eigenvalues() const;  // ascending

 private:
  Eigen::Matrix3d m_;
};

KMatrix build_K(const CorrelationTensor& t);

/// Closed-form K eigenvalues (k1, k2, k3) for k = 2, 3, 4, in the axis
/// order (x, y, z). Throws Unsupported for other k; the K-matrix route
/// serves the general case.
std::array<double, 3> closed_form_eigs(const CatSpec& spec, int k);

enum class DiscordMethod { ClosedForm, KMatrixRoute };

/// D_g = 2^{-k} (k1 + k2 + k3 - max), the squared Hilbert-Schmidt distance
/// from the k-qubit reduction to the nearest zero-discord state for the
/// 1 | (2...k) split.
double geometric_discord(const CatSpec& spec, int k,
                         DiscordMethod method = DiscordMethod::KMatrixRoute);

/// Parameters of a zero-discord state chi = 2^{-k} [ 1 + sum_i t e_i
/// sigma_i x 1 + sum_a (s+)_a 1 x sigma_a + sum_{i,a} e_i (s-)_a
/// sigma_i x sigma_a ] with measurement axis e on qubit 1.
struct ClassicalStateSpec {
  int k = 0;
  Eigen::Vector3d axis = Eigen::Vector3d::Zero();
  double t = 0.0;             // weight difference p1 - p2
  Eigen::VectorXd s_plus;     // flat (alpha_2..alpha_k) != 0, 4^{k-1}-1 entries
  Eigen::VectorXd s_minus;
};

/// Stationary (t, s+, s-) of the Hilbert-Schmidt distance at fixed unit e:
/// t = sum_i e_i T_{i0...0}, (s+)_a = T_{0a}, (s-)_a = sum_i e_i T_{ia}.
ClassicalStateSpec optimal_classical_params(const CorrelationTensor& t,
                                            const Eigen::Vector3d& e);

/// Assembles chi from its parameters. Hermitian with unit trace by
/// construction; positivity is not guaranteed and is reported, not fixed.
Eigen::MatrixXcd classical_state_matrix(const ClassicalStateSpec& params,
                                        int k);

/// Tr[(a - b)^dag (a - b)].
double hs_distance_sq(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Deterministic golden-angle spiral covering of the unit sphere.
std::vector<Eigen::Vector3d> golden_spiral_nodes(int count);

struct BruteForceResult {
  double distance_sq = 0.0;
  ClassicalStateSpec argmin;
};

/// Independent oracle: minimizes hs_distance_sq(rho, chi(e)) over the
/// sphere grid with stationary inner parameters, then refines the best
/// nodes by alternating golden-section searches on the spherical angles
/// (1e-10 bracket convergence). The reported minimum is re-evaluated as an
/// explicit matrix distance at the argmin. Deterministic and derivative
/// free; ties resolve to the lowest node index.
BruteForceResult brute_force_discord(const DensityMatrix& rho,
                                     int grid_nodes = kBruteForceGridNodes);

/// Axis of the largest K eigenvalue with the deterministic tie-break:
/// among eigenvalues within tie_tol of the maximum, the largest axis index
/// wins (z preferred over y over x).
Eigen::Vector3d preferred_max_axis(const KMatrix& k_matrix,
                                   double tie_tol = 1e-12);

/// Cross-method summary for one (spec, k) point.
struct DiscordReport {
  int n = 0;
  double p = 0.0;
  Parity parity = Parity::Even;
  int k = 0;
  double k1 = 0.0, k2 = 0.0, k3 = 0.0;   // K diagonal, axis order (x, y, z)
  double dg_recursive = 0.0;             // K-matrix route
  double dg_encoded = 0.0;               // two-logical-qubit route
  std::optional<double> dg_brute;
  double max_method_diff = 0.0;
  // Closest classical state at the deterministic axis; NaN when k > 8.
  Eigen::Vector3d axis = Eigen::Vector3d::Zero();
  double chi_min_eig = 0.0;
  double chi_distance_check = 0.0;       // hs_distance_sq(rho, chi)
};

}  // namespace catgd

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

#include "catgd/discord.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

namespace catgd {

namespace {

double sq(double x) { return x * x; }

// One Newton step per root on the characteristic cubic tightens the
// trigonometric closed form to ~1e-15 relative.
void polish_roots(const Eigen::Matrix3d& a, Eigen::Vector3d& eig) {
  const double c2 = a.trace();
  const double c1 = a(0, 0) * a(1, 1) + a(0, 0) * a(2, 2) + a(1, 1) * a(2, 2) -
                    sq(a(0, 1)) - sq(a(0, 2)) - sq(a(1, 2));
  const double c0 = a.determinant();
  const double scale = std::max(1.0, eig.cwiseAbs().maxCoeff());
  for (int i = 0; i < 3; ++i) {
    for (int it = 0; it < 2; ++it) {
      const double x = eig(i);
      const double f = ((x - c2) * x + c1) * x - c0;
      const double df = (3.0 * x - 2.0 * c2) * x + c1;
      if (std::abs(df) < 1e-10 * scale * scale) break;  // (near-)degenerate root
      eig(i) = x - f / df;
    }
  }
}

}  // namespace

Eigen::Vector3d symmetric3x3_eigenvalues(const Eigen::Matrix3d& a) {
  Eigen::Vector3d eig;
  const double off = sq(a(0, 1)) + sq(a(0, 2)) + sq(a(1, 2));
  if (off == 0.0) {
    eig = a.diagonal();
  } else {
    const double q = a.trace() / 3.0;
    const double p2 =
        sq(a(0, 0) - q) + sq(a(1, 1) - q) + sq(a(2, 2) - q) + 2.0 * off;
    const double p = std::sqrt(p2 / 6.0);
    const Eigen::Matrix3d b = (a - q * Eigen::Matrix3d::Identity()) / p;
    const double r = std::clamp(b.determinant() / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double two_pi_3 = 2.0 * std::numbers::pi / 3.0;
    eig(2) = q + 2.0 * p * std::cos(phi);
    eig(0) = q + 2.0 * p * std::cos(phi + two_pi_3);
    eig(1) = 3.0 * q - eig(0) - eig(2);
    polish_roots(a, eig);
  }
  std::sort(eig.data(), eig.data() + 3);
  return eig;
}

KMatrix::KMatrix(Eigen::Matrix3d m) : m_(std::move(m)) {
  const double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-14) {
    throw InvariantViolation("KMatrix: not symmetric (residual " +
                             std::to_string(asym) + ")");
  }
}

Eigen::Vector3d KMatrix::eigenvalues() const {
  return symmetric3x3_eigenvalues(m_);
}

KMatrix build_K(const CorrelationTensor& t) {
  const int k = t.qubits();
  if (k < 2) throw DimensionError("build_K: need k >= 2");
  const std::uint64_t stride = std::uint64_t{1} << (2 * (k - 1));

  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  const double x3 = t[3 * stride];  // x = (0, 0, T_{30...0})
  m(2, 2) += sq(x3);
  for (std::uint64_t rest = 1; rest < stride; ++rest) {
    const double row[3] = {t[1 * stride + rest], t[2 * stride + rest],
                           t[3 * stride + rest]};
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) m(i, j) += row[i] * row[j];
    }
  }
  m(1, 0) = m(0, 1);
  m(2, 0) = m(0, 2);
  m(2, 1) = m(1, 2);
  return KMatrix(m);
}

std::array<double, 3> closed_form_eigs(const CatSpec& spec, int k) {
  if (k < 2 || k > spec.n()) {
    throw DimensionError("closed_form_eigs: k must be in [2, n]");
  }
  if (k < 2 || k > 4) {
    throw Unsupported("closed_form_eigs: explicit forms cover k = 2, 3, 4");
  }
  const double p = spec.p();
  const double c = spec.parity_sign();
  const double pn_c = spec.q(0) * c;          // p^n cos(m pi)
  const double d = 2.0 * spec.norm_sq();      // 1 / (1 + p^n cos(m pi))
  const double d2 = sq(d);
  const double one_m_p2 = 1.0 - sq(p);

  double k1 = 0.0, k2 = 0.0, k3 = 0.0;
  switch (k) {
    case 2:
      k1 = sq(one_m_p2) * d2;
      k2 = k1 * int_pow(p, 2 * (spec.n() - 2));
      k3 = d2 * ((sq(p) + int_pow(p, 2 * (spec.n() - 2))) * (1.0 + sq(p)) +
                 4.0 * pn_c);
      break;
    case 3:
      k1 = 2.0 * sq(one_m_p2) * (1.0 + sq(p)) * d2;
      k2 = k1 * int_pow(p, 2 * (spec.n() - 3));
      k3 = 2.0 * d2 *
           ((sq(p) + int_pow(p, 2 * (spec.n() - 3))) * (1.0 + int_pow(p, 4)) +
            4.0 * pn_c);
      break;
    case 4:
      k1 = 4.0 * one_m_p2 * (1.0 - int_pow(p, 6)) * d2;
      k2 = k1 * int_pow(p, 2 * (spec.n() - 4));
      k3 = 4.0 * d2 *
           ((1.0 + int_pow(p, 6)) * (sq(p) + int_pow(p, 2 * (spec.n() - 4))) +
            4.0 * pn_c);
      break;
    default:
      break;
  }
  return {k1, k2, k3};
}

namespace {

double discord_from_eigs(double k1, double k2, double k3, int k) {
  const double sum = k1 + k2 + k3;
  const double mx = std::max({k1, k2, k3});
  const double d = (sum - mx) / static_cast<double>(std::uint64_t{1} << k);
  if (d < -1e-12) {
    throw InvariantViolation("geometric discord came out negative: " +
                             std::to_string(d));
  }
  return std::max(d, 0.0);
}

}  // namespace

double geometric_discord(const CatSpec& spec, int k, DiscordMethod method) {
  if (k < 2 || k > spec.n()) {
    throw DimensionError("geometric_discord: k must be in [2, n]");
  }
  if (method == DiscordMethod::ClosedForm) {
    const std::array<double, 3> e = closed_form_eigs(spec, k);
    return discord_from_eigs(e[0], e[1], e[2], k);
  }
  const KMatrix km = build_K(recursive_tensor(spec, k));
  const Eigen::Vector3d eig = km.eigenvalues();
  return discord_from_eigs(eig(0), eig(1), eig(2), k);
}

ClassicalStateSpec optimal_classical_params(const CorrelationTensor& t,
                                            const Eigen::Vector3d& e) {
  const int k = t.qubits();
  if (k < 2) throw DimensionError("optimal_classical_params: need k >= 2");
  if (std::abs(e.norm() - 1.0) > kEntryTol) {
    throw InvariantViolation("optimal_classical_params: |e| must be 1");
  }
  const std::uint64_t stride = std::uint64_t{1} << (2 * (k - 1));

  ClassicalStateSpec out;
  out.k = k;
  out.axis = e;
  out.t = e(0) * t[stride] + e(1) * t[2 * stride] + e(2) * t[3 * stride];
  out.s_plus.resize(static_cast<Eigen::Index>(stride - 1));
  out.s_minus.resize(static_cast<Eigen::Index>(stride - 1));
  for (std::uint64_t rest = 1; rest < stride; ++rest) {
    out.s_plus(static_cast<Eigen::Index>(rest - 1)) = t[rest];
    out.s_minus(static_cast<Eigen::Index>(rest - 1)) =
        e(0) * t[stride + rest] + e(1) * t[2 * stride + rest] +
        e(2) * t[3 * stride + rest];
  }
  return out;
}

Eigen::MatrixXcd classical_state_matrix(const ClassicalStateSpec& params,
                                        int k) {
  if (k != params.k) {
    throw DimensionError("classical_state_matrix: k mismatch with params");
  }
  const std::uint64_t stride = std::uint64_t{1} << (2 * (k - 1));
  if (params.s_plus.size() != static_cast<Eigen::Index>(stride - 1) ||
      params.s_minus.size() != static_cast<Eigen::Index>(stride - 1)) {
    throw DimensionError("classical_state_matrix: conditional tensors have wrong length");
  }
  std::vector<double> values(stride * 4, 0.0);
  values[0] = 1.0;
  for (int i = 0; i < 3; ++i) {
    values[(static_cast<std::uint64_t>(i) + 1) * stride] = params.t * params.axis(i);
  }
  for (std::uint64_t rest = 1; rest < stride; ++rest) {
    values[rest] = params.s_plus(static_cast<Eigen::Index>(rest - 1));
    const double sm = params.s_minus(static_cast<Eigen::Index>(rest - 1));
    for (int i = 0; i < 3; ++i) {
      values[(static_cast<std::uint64_t>(i) + 1) * stride + rest] =
          params.axis(i) * sm;
    }
  }
  return detail::matrix_from_tensor_values(values, k);
}

double hs_distance_sq(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_distance_sq: shape mismatch");
  }
  return (a - b).squaredNorm();
}

std::vector<Eigen::Vector3d> golden_spiral_nodes(int count) {
  if (count < 1) throw DimensionError("golden_spiral_nodes: count must be >= 1");
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Eigen::Vector3d> nodes;
  nodes.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * i;
    nodes.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return nodes;
}

namespace {

// Tensor-space view of the distance to the optimal chi at fixed axis e:
//   d(e) = 2^{-k} (|v|^2 + |T|^2 - (e.v)^2 - |T^t e|^2)
// with v = (T_{10..0}, T_{20..0}, T_{30..0}) and T the 3 x (4^{k-1}-1)
// block of remaining first-axis rows. Equivalent to the matrix distance by
// the Pauli-Parseval identity; the reported minimum is re-evaluated on
// matrices at the argmin.
struct DistanceObjective {
  double scale = 0.0;
  double base = 0.0;
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  Eigen::Matrix3Xd rows;

  explicit DistanceObjective(const CorrelationTensor& t) {
    const int k = t.qubits();
    const std::uint64_t stride = std::uint64_t{1} << (2 * (k - 1));
    scale = 1.0 / static_cast<double>(std::uint64_t{1} << k);
    v = Eigen::Vector3d(t[stride], t[2 * stride], t[3 * stride]);
    rows.resize(3, static_cast<Eigen::Index>(stride - 1));
    for (std::uint64_t rest = 1; rest < stride; ++rest) {
      for (int i = 0; i < 3; ++i) {
        rows(i, static_cast<Eigen::Index>(rest - 1)) =
            t[(static_cast<std::uint64_t>(i) + 1) * stride + rest];
      }
    }
    base = v.squaredNorm() + rows.squaredNorm();
  }

  double operator()(const Eigen::Vector3d& e) const {
    return scale * (base - sq(e.dot(v)) - (rows.transpose() * e).squaredNorm());
  }
};

Eigen::Vector3d sphere_point(double theta, double phi) {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

// Golden-section minimization on [lo, hi] down to bracket width `tol`.
template <typename F>
double golden_section_min(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

struct RefinedPoint {
  double value = std::numeric_limits<double>::infinity();
  Eigen::Vector3d e = Eigen::Vector3d::UnitZ();
};

RefinedPoint refine_axis(const DistanceObjective& obj, const Eigen::Vector3d& start) {
  double theta = std::acos(std::clamp(start(2), -1.0, 1.0));
  double phi = std::atan2(start(1), start(0));
  double half_width = 0.15;
  for (int round = 0; round < 4; ++round) {
    theta = golden_section_min(
        [&](double t) { return obj(sphere_point(t, phi)); }, theta - half_width,
        theta + half_width, 1e-10);
    phi = golden_section_min(
        [&](double t) { return obj(sphere_point(theta, t)); }, phi - half_width,
        phi + half_width, 1e-10);
    half_width *= 0.35;
  }
  RefinedPoint out;
  out.e = sphere_point(theta, phi);
  out.value = obj(out.e);
  return out;
}

}  // namespace

BruteForceResult brute_force_discord(const DensityMatrix& rho, int grid_nodes) {
  const int k = rho.qubits();
  if (k < 2) throw DimensionError("brute_force_discord: need k >= 2");
  if (k > kMaxBruteForceQubits) {
    throw SizeLimit("brute_force_discord: k exceeds " +
                    std::to_string(kMaxBruteForceQubits));
  }
  if (grid_nodes < 12) {
    throw DimensionError("brute_force_discord: grid too coarse");
  }

  const CorrelationTensor t = full_tensor(rho);
  const DistanceObjective obj(t);

  const std::vector<Eigen::Vector3d> grid = golden_spiral_nodes(grid_nodes);
  // Best three grid nodes seed the local refinements.
  constexpr int kStarts = 3;
  std::array<std::pair<double, int>, kStarts> best;
  best.fill({std::numeric_limits<double>::infinity(), -1});
  for (int i = 0; i < static_cast<int>(grid.size()); ++i) {
    const double val = obj(grid[static_cast<std::size_t>(i)]);
    for (int s = 0; s < kStarts; ++s) {
      if (val < best[static_cast<std::size_t>(s)].first) {
        for (int j = kStarts - 1; j > s; --j) {
          best[static_cast<std::size_t>(j)] = best[static_cast<std::size_t>(j - 1)];
        }
        best[static_cast<std::size_t>(s)] = {val, i};
        break;
      }
    }
  }

  RefinedPoint winner;
  for (const auto& [val, node] : best) {
    if (node < 0) continue;
    const RefinedPoint r = refine_axis(obj, grid[static_cast<std::size_t>(node)]);
    if (r.value < winner.value) winner = r;
  }

  BruteForceResult result;
  result.argmin = optimal_classical_params(t, winner.e);
  const Eigen::MatrixXcd chi = classical_state_matrix(result.argmin, k);
  result.distance_sq = hs_distance_sq(rho.matrix(), chi);
  return result;
}

Eigen::Vector3d preferred_max_axis(const KMatrix& k_matrix, double tie_tol) {
  const Eigen::Matrix3d& m = k_matrix.matrix();
  const double off =
      std::max({std::abs(m(0, 1)), std::abs(m(0, 2)), std::abs(m(1, 2))});
  if (off <= tie_tol) {
    // Diagonal: coordinate axes are the eigendirections; ties resolve to
    // the largest axis index (z preferred).
    const double mx = std::max({m(0, 0), m(1, 1), m(2, 2)});
    int pick = 0;
    for (int i = 0; i < 3; ++i) {
      if (m(i, i) >= mx - tie_tol) pick = i;
    }
    return Eigen::Vector3d::Unit(pick);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(m);
  Eigen::Vector3d e = solver.eigenvectors().col(2);
  // Canonical sign: largest-magnitude component made positive.
  int arg = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(e(i)) > std::abs(e(arg))) arg = i;
  }
  if (e(arg) < 0.0) e = -e;
  return e;
}

}  // namespace catgd

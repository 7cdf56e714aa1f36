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

#include "catgd/cat_state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace catgd {

namespace {

int weight(std::uint64_t x) { return std::popcount(x); }

void check_abs_residual(double value, double tol, const char* what) {
  if (std::abs(value) > tol) {
    throw InvariantViolation(std::string(what) + " residual " +
                             std::to_string(value) + " exceeds tolerance");
  }
}

}  // namespace

CatSpec::CatSpec(int n, double p, Parity parity)
    : n_(n), p_(p), parity_(parity) {
  if (n < 1) throw InvariantViolation("CatSpec: n must be >= 1");
  if (!(p > -1.0 && p <= 1.0)) {
    throw InvariantViolation("CatSpec: overlap p must lie in (-1, 1]");
  }
  const double denom = 1.0 + int_pow(p, n) * parity_sign();
  if (std::abs(denom) <= kSingularEps) {
    throw SingularNormalization(
        "CatSpec: |1 + p^n cos(m pi)| <= " + std::to_string(kSingularEps) +
        " (n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
  }
}

CatSpec CatSpec::from_eta(int n, std::complex<double> eta, Parity parity) {
  CatSpec spec(n, overlap_from_eta(eta), parity);
  spec.eta_ = eta;
  return spec;
}

double CatSpec::a_plus() const { return std::sqrt((1.0 + p_) / 2.0); }

double CatSpec::a_minus() const { return std::sqrt((1.0 - p_) / 2.0); }

double CatSpec::norm_sq() const {
  return 1.0 / (2.0 * (1.0 + int_pow(p_, n_) * parity_sign()));
}

double CatSpec::q(int k) const {
  if (k < 0 || k > n_) throw DimensionError("CatSpec::q: k out of range");
  return int_pow(p_, n_ - k);
}

double overlap_from_eta(std::complex<double> eta) {
  const double a = std::norm(eta);
  return (1.0 - a) / (1.0 + a);
}

std::vector<std::complex<double>> coherent_dicke_coefficients(
    int n, std::complex<double> eta) {
  if (n < 1) throw DimensionError("coherent_dicke_coefficients: n must be >= 1");
  const double scale = std::pow(1.0 + std::norm(eta), -0.5 * n);
  std::vector<std::complex<double>> c(static_cast<std::size_t>(n) + 1);
  std::complex<double> eta_pow(1.0, 0.0);
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(k)] = scale * std::sqrt(binomial(n, k)) * eta_pow;
    eta_pow *= eta;
  }
  return c;
}

PureStateVector::PureStateVector(int n_qubits, Eigen::VectorXcd amps)
    : n(n_qubits), amplitudes(std::move(amps)) {
  if (n < 1 || amplitudes.size() != (Eigen::Index{1} << n)) {
    throw DimensionError("PureStateVector: amplitude count must be 2^n");
  }
  check_abs_residual(amplitudes.squaredNorm() - 1.0, kEntryTol,
                     "PureStateVector norm");
}

DensityMatrix::DensityMatrix(int k, Eigen::MatrixXcd entries)
    : k_(k), mat_(std::move(entries)) {
  const Eigen::Index dim = Eigen::Index{1} << k;
  if (k < 1 || mat_.rows() != dim || mat_.cols() != dim) {
    throw DimensionError("DensityMatrix: entries must be 2^k x 2^k");
  }
  const double herm = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kEntryTol) {
    throw InvariantViolation("DensityMatrix: not Hermitian (residual " +
                             std::to_string(herm) + ")");
  }
  const Complex tr = mat_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kEntryTol) {
    throw InvariantViolation("DensityMatrix: trace differs from 1");
  }
}

double DensityMatrix::purity() const {
  // Tr rho^2 equals the squared Frobenius norm for Hermitian rho.
  return mat_.squaredNorm();
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat_,
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double DensityMatrix::min_eigenvalue() const { return eigenvalues()(0); }

PureStateVector cat_state_vector(const CatSpec& spec) {
  const int n = spec.n();
  if (n > kMaxVectorQubits) {
    throw SizeLimit("cat_state_vector: n exceeds " +
                    std::to_string(kMaxVectorQubits));
  }
  const double ap = spec.a_plus();
  const double am = spec.a_minus();
  const double c = spec.parity_sign();
  const double norm = std::sqrt(spec.norm_sq());
  const std::uint64_t dim = std::uint64_t{1} << n;

  Eigen::VectorXcd amps(static_cast<Eigen::Index>(dim));
  for (std::uint64_t x = 0; x < dim; ++x) {
    const int w = weight(x);
    const double sign = (w % 2 == 0) ? 1.0 : -1.0;
    amps(static_cast<Eigen::Index>(x)) =
        norm * int_pow(ap, n - w) * int_pow(am, w) * (1.0 + c * sign);
  }
  return PureStateVector(n, std::move(amps));
}

DensityMatrix reduced_density(const CatSpec& spec, int k) {
  if (k < 1 || k > spec.n()) {
    throw DimensionError("reduced_density: k must be in [1, n]");
  }
  const double ap = spec.a_plus();
  const double am = spec.a_minus();
  const double qc = spec.q(k) * spec.parity_sign();
  const double scale = 2.0 * spec.norm_sq();
  const double q_even = scale * (1.0 + qc);
  const double q_odd = scale * (1.0 - qc);
  const std::uint64_t dim = std::uint64_t{1} << k;

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
  for (std::uint64_t r = 0; r < dim; ++r) {
    const int wr = weight(r);
    for (std::uint64_t col = 0; col < dim; ++col) {
      const int wc = weight(col);
      if (((wr ^ wc) & 1) != 0) continue;  // opposite weight parity: exact zero
      const double prefactor = (wr % 2 == 0) ? q_even : q_odd;
      rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) =
          prefactor * int_pow(ap, 2 * k - wr - wc) * int_pow(am, wr + wc);
    }
  }
  return DensityMatrix(k, std::move(rho));
}

namespace {

// keep[i] is the source qubit whose value becomes bit i (from the most
// significant side) of the reduced index.
void check_keep(const std::vector<int>& keep, int n) {
  if (keep.empty()) throw DimensionError("partial_trace: keep set is empty");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int q : keep) {
    if (q < 0 || q >= n) throw DimensionError("partial_trace: qubit index out of range");
    if (seen[static_cast<std::size_t>(q)]) {
      throw DimensionError("partial_trace: duplicate qubit index");
    }
    seen[static_cast<std::size_t>(q)] = true;
  }
}

// Full-index contribution of each reduced-index bit and each traced bit.
struct TraceLayout {
  std::vector<std::uint64_t> keep_bit;   // size k
  std::vector<std::uint64_t> trace_bit;  // size n - k
};

TraceLayout trace_layout(const std::vector<int>& keep, int n) {
  TraceLayout layout;
  const int k = static_cast<int>(keep.size());
  layout.keep_bit.resize(static_cast<std::size_t>(k));
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (int i = 0; i < k; ++i) {
    layout.keep_bit[static_cast<std::size_t>(i)] =
        std::uint64_t{1} << (n - 1 - keep[static_cast<std::size_t>(i)]);
    kept[static_cast<std::size_t>(keep[static_cast<std::size_t>(i)])] = true;
  }
  for (int q = 0; q < n; ++q) {
    if (!kept[static_cast<std::size_t>(q)]) {
      layout.trace_bit.push_back(std::uint64_t{1} << (n - 1 - q));
    }
  }
  return layout;
}

std::uint64_t compose(const std::vector<std::uint64_t>& bits, std::uint64_t pattern) {
  std::uint64_t x = 0;
  const int m = static_cast<int>(bits.size());
  for (int i = 0; i < m; ++i) {
    if ((pattern >> (m - 1 - i)) & 1u) x |= bits[static_cast<std::size_t>(i)];
  }
  return x;
}

}  // namespace

DensityMatrix partial_trace(const PureStateVector& state,
                            const std::vector<int>& keep) {
  check_keep(keep, state.n);
  const int k = static_cast<int>(keep.size());
  const int traced = state.n - k;
  const TraceLayout layout = trace_layout(keep, state.n);
  const std::uint64_t red_dim = std::uint64_t{1} << k;
  const std::uint64_t env_dim = std::uint64_t{1} << traced;

  Eigen::MatrixXcd rho =
      Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(red_dim),
                             static_cast<Eigen::Index>(red_dim));
  std::vector<std::uint64_t> addr(static_cast<std::size_t>(red_dim));
  for (std::uint64_t t = 0; t < env_dim; ++t) {
    const std::uint64_t env = compose(layout.trace_bit, t);
    for (std::uint64_t r = 0; r < red_dim; ++r) {
      addr[static_cast<std::size_t>(r)] = compose(layout.keep_bit, r) | env;
    }
    for (std::uint64_t r = 0; r < red_dim; ++r) {
      const Complex ar =
          state.amplitudes(static_cast<Eigen::Index>(addr[static_cast<std::size_t>(r)]));
      if (ar == Complex(0.0, 0.0)) continue;
      for (std::uint64_t col = 0; col < red_dim; ++col) {
        rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) +=
            ar * std::conj(state.amplitudes(
                     static_cast<Eigen::Index>(addr[static_cast<std::size_t>(col)])));
      }
    }
  }
  return DensityMatrix(k, std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep) {
  check_keep(keep, rho.qubits());
  const int k = static_cast<int>(keep.size());
  const int traced = rho.qubits() - k;
  const TraceLayout layout = trace_layout(keep, rho.qubits());
  const std::uint64_t red_dim = std::uint64_t{1} << k;
  const std::uint64_t env_dim = std::uint64_t{1} << traced;

  Eigen::MatrixXcd out =
      Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(red_dim),
                             static_cast<Eigen::Index>(red_dim));
  std::vector<std::uint64_t> addr(static_cast<std::size_t>(red_dim));
  for (std::uint64_t t = 0; t < env_dim; ++t) {
    const std::uint64_t env = compose(layout.trace_bit, t);
    for (std::uint64_t r = 0; r < red_dim; ++r) {
      addr[static_cast<std::size_t>(r)] = compose(layout.keep_bit, r) | env;
    }
    for (std::uint64_t r = 0; r < red_dim; ++r) {
      for (std::uint64_t col = 0; col < red_dim; ++col) {
        out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) +=
            rho.matrix()(static_cast<Eigen::Index>(addr[static_cast<std::size_t>(r)]),
                         static_cast<Eigen::Index>(addr[static_cast<std::size_t>(col)]));
      }
    }
  }
  return DensityMatrix(k, std::move(out));
}

}  // namespace catgd

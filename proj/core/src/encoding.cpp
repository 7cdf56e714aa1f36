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

#include "catgd/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace catgd {

namespace {

void check_k(const CatSpec& spec, int k, const char* who) {
  if (k < 2 || k > spec.n()) {
    throw DimensionError(std::string(who) + ": k must be in [2, n]");
  }
}

}  // namespace

EncodedState encode(const CatSpec& spec, int k) {
  check_k(spec, k, "encode");
  const double p = spec.p();
  const double ap = spec.a_plus();
  const double am = spec.a_minus();
  const double bp = std::sqrt((1.0 + int_pow(p, k - 1)) / 2.0);
  const double bm = std::sqrt((1.0 - int_pow(p, k - 1)) / 2.0);
  const double qc = spec.q(k) * spec.parity_sign();
  const double scale = 2.0 * spec.norm_sq();
  const double even = scale * (1.0 + qc);
  const double odd = scale * (1.0 - qc);

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m(0, 0) = even * ap * ap * bp * bp;
  m(1, 1) = odd * ap * ap * bm * bm;
  m(2, 2) = odd * am * am * bp * bp;
  m(3, 3) = even * am * am * bm * bm;
  m(0, 3) = m(3, 0) = even * ap * am * bp * bm;
  m(1, 2) = m(2, 1) = odd * ap * am * bp * bm;

  return EncodedState{spec.n(), p, spec.parity(), k, bp, bm,
                      DensityMatrix(2, std::move(m))};
}

RTensor r_tensor(const CatSpec& spec, int k) {
  check_k(spec, k, "r_tensor");
  const double p = spec.p();
  const double c = spec.parity_sign();
  const double scale = 2.0 * spec.norm_sq();

  RTensor r;
  r.r00 = 1.0;
  r.r11 = scale * std::sqrt((1.0 - p * p) * (1.0 - int_pow(p, 2 * (k - 1))));
  r.r22 = -r.r11 * spec.q(k) * c;
  r.r33 = scale * (int_pow(p, k) + spec.q(k) * c);
  r.r03 = scale * (int_pow(p, k - 1) + int_pow(p, spec.n() - k + 1) * c);
  r.r30 = scale * (p + int_pow(p, spec.n() - 1) * c);
  return r;
}

double discord_encoded(const CatSpec& spec, int k) {
  const RTensor r = r_tensor(spec, k);
  const double l1 = r.r11 * r.r11;
  const double l2 = r.r22 * r.r22;
  const double l3 = r.r30 * r.r30 + r.r33 * r.r33;
  return 0.25 * std::min({l1 + l2, l1 + l3, l2 + l3});
}

SchemeEquivalenceReport scheme_equivalence_report(const CatSpec& spec, int k,
                                                  double tol) {
  if (k > kMaxBruteForceQubits) {
    throw SizeLimit("scheme_equivalence_report: k exceeds the brute-force bound");
  }
  SchemeEquivalenceReport rep;
  rep.d_recursive = geometric_discord(spec, k, DiscordMethod::KMatrixRoute);
  rep.d_encoded = discord_encoded(spec, k);
  rep.d_brute = brute_force_discord(reduced_density(spec, k)).distance_sq;

  const double pow2 = static_cast<double>(std::uint64_t{1} << (k - 2));
  if (rep.d_encoded > 1e-12) {
    rep.ratio = rep.d_recursive / rep.d_encoded;
    rep.ratio_defined = true;
    rep.ratio_matches_unity = std::abs(rep.ratio - 1.0) <= tol;
    rep.ratio_matches_pow2 = std::abs(rep.ratio - pow2) <= tol;
  } else {
    rep.ratio = std::numeric_limits<double>::quiet_NaN();
  }
  rep.brute_matches_recursive = std::abs(rep.d_brute - rep.d_recursive) <= tol;
  rep.brute_matches_encoded = std::abs(rep.d_brute - rep.d_encoded) <= tol;
  return rep;
}

DiscordReport discord_report(const CatSpec& spec, int k, bool with_brute) {
  if (k < 2 || k > spec.n()) {
    throw DimensionError("discord_report: k must be in [2, n]");
  }
  DiscordReport rep;
  rep.n = spec.n();
  rep.p = spec.p();
  rep.parity = spec.parity();
  rep.k = k;

  const CorrelationTensor t = recursive_tensor(spec, k);
  const KMatrix km = build_K(t);
  rep.k1 = km.matrix()(0, 0);
  rep.k2 = km.matrix()(1, 1);
  rep.k3 = km.matrix()(2, 2);
  const Eigen::Vector3d eig = km.eigenvalues();
  const double sum = eig.sum();
  rep.dg_recursive =
      std::max(0.0, (sum - eig(2)) / static_cast<double>(std::uint64_t{1} << k));
  rep.dg_encoded = discord_encoded(spec, k);

  if (with_brute && k <= kMaxBruteForceQubits) {
    rep.dg_brute = brute_force_discord(reduced_density(spec, k)).distance_sq;
  }
  double diff = std::abs(rep.dg_recursive - rep.dg_encoded);
  if (rep.dg_brute) {
    diff = std::max({diff, std::abs(*rep.dg_brute - rep.dg_recursive),
                     std::abs(*rep.dg_brute - rep.dg_encoded)});
  }
  rep.max_method_diff = diff;

  if (k <= kMaxDirectTensorQubits) {
    rep.axis = preferred_max_axis(km);
    const ClassicalStateSpec params = optimal_classical_params(t, rep.axis);
    const Eigen::MatrixXcd chi = classical_state_matrix(params, k);
    const DensityMatrix rho = reduced_density(spec, k);
    rep.chi_distance_check = hs_distance_sq(rho.matrix(), chi);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(chi,
                                                           Eigen::EigenvaluesOnly);
    rep.chi_min_eig = solver.eigenvalues()(0);
  } else {
    rep.axis = Eigen::Vector3d::Constant(std::numeric_limits<double>::quiet_NaN());
    rep.chi_min_eig = std::numeric_limits<double>::quiet_NaN();
    rep.chi_distance_check = std::numeric_limits<double>::quiet_NaN();
  }
  return rep;
}

}  // namespace catgd

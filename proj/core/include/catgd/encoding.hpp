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

#include "catgd/discord.hpp"

namespace catgd {

/// The (k-1)-qubit party of the reduction lives in the two-dimensional
/// span of |eta>^{k-1} and |-eta>^{k-1}; mapping that span onto one
/// logical qubit via |+-eta>^{k-1} = b+ |0_L> +- b- |1_L>,
/// b+- = sqrt((1 +- p^{k-1}) / 2), turns the whole state into a 4x4
/// two-qubit X state.
struct EncodedState {
  int n;
  double p;
  Parity parity;
  int k;
  double b_plus, b_minus;
  DensityMatrix state;  // 2-qubit, X-shaped
};

EncodedState encode(const CatSpec& spec, int k);

/// Nonzero Pauli coefficients of the encoded 4x4 state.
struct RTensor {
  double r00 = 1.0;
  double r11 = 0.0;
  double r22 = 0.0;
  double r33 = 0.0;
  double r03 = 0.0;
  double r30 = 0.0;
};

/// Closed forms, equal to full_tensor(encode(spec, k)) at the matching
/// indices:
///   R11 = 2 N^2 sqrt((1 - p^2)(1 - p^{2(k-1)}))
///   R22 = -R11 p^{n-k} cos(m pi)
///   R33 = 2 N^2 (p^k + p^{n-k} cos(m pi))
///   R03 = 2 N^2 (p^{k-1} + p^{n-k+1} cos(m pi))
///   R30 = 2 N^2 (p + p^{n-1} cos(m pi))
RTensor r_tensor(const CatSpec& spec, int k);

/// Two-qubit formula on the encoded state: with l1 = R11^2, l2 = R22^2,
/// l3 = R30^2 + R33^2, returns (1/4) min(l1+l2, l1+l3, l2+l3).
double discord_encoded(const CatSpec& spec, int k);

/// The two bipartition routes computed independently, with the brute-force
/// value as arbiter of which scaling relation between them holds.
struct SchemeEquivalenceReport {
  double d_recursive = 0.0;
  double d_encoded = 0.0;
  double d_brute = 0.0;
  double ratio = 0.0;          // d_recursive / d_encoded; NaN when both ~ 0
  bool ratio_defined = false;
  bool ratio_matches_unity = false;
  bool ratio_matches_pow2 = false;  // 2^{k-2}
  bool brute_matches_recursive = false;
  bool brute_matches_encoded = false;
};

/// Requires k <= kMaxBruteForceQubits (the brute-force bound).
SchemeEquivalenceReport scheme_equivalence_report(const CatSpec& spec, int k,
                                                  double tol = 1e-8);

/// Full cross-method report for one point. Brute force runs only when
/// requested and k <= kMaxBruteForceQubits; closest-state columns are
/// filled for k <= kMaxDirectTensorQubits.
DiscordReport discord_report(const CatSpec& spec, int k, bool with_brute);

}  // namespace catgd

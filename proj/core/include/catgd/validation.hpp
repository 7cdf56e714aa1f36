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
#include <string>
#include <vector>

#include "catgd/encoding.hpp"

namespace catgd {

struct ValidationOptions {
  int max_n = 6;            // grid upper bound, capped at 10
  double tol = 1e-12;       // entrywise / algebraic comparison tolerance
  std::uint64_t seed = 12345;  // for the random p draws added to the grid
  // Test hook: perturbs one recursively built tensor entry so the
  // recursion-vs-direct check must fail.
  bool inject_fault = false;
};

struct CheckResult {
  std::string name;
  long long points = 0;     // individual comparisons performed
  double worst = 0.0;       // largest violation measure seen (err - tol cap)
  double tol = 0.0;
  bool passed = true;
  std::vector<std::string> violations;  // first few failing points
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  long long total_points = 0;
  bool all_passed = true;

  /// First `limit` violations across all checks.
  std::vector<std::string> first_violations(std::size_t limit = 10) const;
};

/// Runs every library invariant over the (n, k, p, parity) grid:
/// partial-trace oracle, exchange and parity symmetry, rank-2 structure,
/// recursion vs direct tensors, tensor algebra identities, closed-form
/// spectra, brute-force agreement, classical-state fixed points, and the
/// encoding equivalences.
ValidationReport run_validation(const ValidationOptions& opts);

}  // namespace catgd

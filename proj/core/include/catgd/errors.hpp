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

#include <stdexcept>
#include <string>

namespace catgd {

/// The superposition normalization 1 + p^n cos(m pi) fell below the
/// singularity threshold (W-type limits p -> 1 with odd parity, and
/// p -> -1 with matching n parity).
class SingularNormalization : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Mismatched or out-of-range dimensions / qubit indices.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a hard size bound (memory or cost).
class SizeLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// No closed form is available for the requested parameters.
class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A runtime invariant check failed (trace drift, imaginary residue, ...).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace catgd

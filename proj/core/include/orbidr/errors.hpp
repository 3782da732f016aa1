// Copyright 2026 The OrbiDR Authors
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

namespace orbidr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Extra interpolation samples disagree with the fitted polynomial, or the
// sampled r-range is below the working bound.
struct NotPolynomial : Error {
  using Error::Error;
};

// A rational lift does not match the age of its sector.
struct NotAdmissible : Error {
  using Error::Error;
};

// 2g - 2 + n <= 0, or a psi-integral query outside the stability range.
struct Unstable : Error {
  using Error::Error;
};

// The age sum at a vertex of a decoration is not an integer; indicates a
// decoration-validity bug upstream.
struct NonIntegralOffset : Error {
  using Error::Error;
};

// Classes over different (g, n, m) ambient data were combined.
struct AmbientMismatch : Error {
  using Error::Error;
};

// Formal division by (psi+ + psi-) left a remainder.
struct NotDivisible : Error {
  using Error::Error;
};

// exp() of a series with a nonzero degree-0 part.
struct NonNilpotentInput : Error {
  using Error::Error;
};

struct UnbalancedContacts : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct DegreeOutOfRange : Error {
  using Error::Error;
};

}  // namespace orbidr

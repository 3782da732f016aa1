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

#include <iosfwd>
#include <string>
#include <vector>

namespace orbidr::cli {

// Exit codes: 0 success, 2 input/validation failure, 3 polynomiality guard
// tripped (sampled r range too low), 1 internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNotPolynomial = 3;

/// Entry point shared by the binary and the test harness. args excludes the
/// program name. Human diagnostics go to err; payloads to out or --out files.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbidr::cli

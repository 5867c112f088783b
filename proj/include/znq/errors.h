// Copyright 2026 The znq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace znq {

/// Bad input: malformed arguments, out-of-range parameters, grid violations.
/// The CLI maps this to exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numerical or structural invariant failed (non-Hermitian matrix, broken
/// symmetry, non-orthonormal sector basis). The CLI maps this to exit code 3.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace znq

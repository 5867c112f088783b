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

#include <cmath>
#include <span>

namespace znq {

/// A value with its standard error (0 in expectation-value mode).
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Sample mean and standard error of the mean.
inline Estimate mean_estimate(std::span<const double> samples) {
    Estimate e;
    if (samples.empty()) return e;
    double n = static_cast<double>(samples.size());
    double sum = 0;
    for (double x : samples) sum += x;
    e.value = sum / n;
    if (samples.size() > 1) {
        double ss = 0;
        for (double x : samples) ss += (x - e.value) * (x - e.value);
        e.std_error = std::sqrt(ss / (n - 1) / n);
    }
    return e;
}

}  // namespace znq

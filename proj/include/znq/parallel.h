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

#include <cstddef>
#include <cstdint>
#include <functional>

namespace znq {

/// Process-wide cap on worker threads; 0 means hardware concurrency.
void set_thread_cap(unsigned threads);
unsigned thread_cap();

/// Runs fn(i) for i in [0, n) on up to thread_cap() workers. Indices are
/// handed out dynamically; fn must write results only to slot i. The first
/// exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn);

std::uint64_t splitmix64(std::uint64_t x);

/// Independent seed for stream `index` derived from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace znq

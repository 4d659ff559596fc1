// Copyright 2026 The causal-switch-teleport Authors
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

#ifndef CST_PARALLEL_HPP
#define CST_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace cst {

/// Hardware concurrency, capped by the CST_THREADS environment variable when it
/// holds a positive integer.
std::size_t default_thread_count();

/// Runs body(0) .. body(count - 1) on up to `threads` workers. Indices are
/// handed out in contiguous blocks; the first exception thrown is rethrown.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace cst

#endif  // CST_PARALLEL_HPP

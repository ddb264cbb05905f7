// Copyright 2026 The Spirit Search Authors
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

#ifndef SPIRIT_PARALLEL_H_
#define SPIRIT_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace spirit {

// Worker count: SPIRIT_THREADS when set to a positive integer, otherwise
// std::thread::hardware_concurrency() (at least 1).
std::size_t worker_count();

// Runs fn(0..n-1) across worker_count() threads. Each index runs exactly
// once; callers write results into pre-sized slots, so output order never
// depends on scheduling. The first exception thrown is rethrown here.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace spirit

#endif  // SPIRIT_PARALLEL_H_

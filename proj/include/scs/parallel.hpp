// Copyright 2026 The SCS Projection Authors. All Rights Reserved.
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

#include <functional>

namespace scs {

/// Worker threads used by the renderers: SCS_WORKERS when set to a positive
/// integer, otherwise the hardware concurrency.
int worker_count();

/// Runs body(i) for i in [0, count), statically partitioned into contiguous
/// blocks. Each index is processed exactly once, so per-index pure bodies give
/// schedule-independent results.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace scs

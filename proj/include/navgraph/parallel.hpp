// Copyright 2026-present the navgraph authors
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

namespace navgraph {

/// Sets the worker count for all parallel loops. t <= 0 means hardware
/// parallelism. Results never depend on this value; it only changes speed.
void set_threads(int t);

int max_threads();

/// Resolution order: NAVGRAPH_THREADS env var, then `requested` (0 = auto),
/// then hardware parallelism.
int resolve_threads(int requested);

}  // namespace navgraph

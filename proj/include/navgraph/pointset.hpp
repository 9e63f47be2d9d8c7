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

#include <span>
#include <vector>

#include "navgraph/types.hpp"

namespace navgraph {

enum class PointKind {
  general,
  sign,  // every coordinate is exactly -1.0 or +1.0
};

/// n points in R^d, stored row-major as 64-bit floats. Immutable once built;
/// safe for concurrent reads.
struct PointSet {
  int n = 0;
  int d = 0;
  PointKind kind = PointKind::general;
  std::vector<double> data;

  std::span<const double> row(NodeId i) const {
    return {data.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(d),
            static_cast<std::size_t>(d)};
  }
};

/// Throws bad_format if sizes are inconsistent, an entry is non-finite, or a
/// kind=sign entry is not exactly +/-1.
void validate(const PointSet& ps);

/// n x d i.i.d. uniform +/-1 entries. Entry (i, j) is drawn from the
/// SplitMix64 counter stream at position i*d + j, so the result is
/// bit-identical for a given (n, d, seed) regardless of thread count.
PointSet gen_random_sign_points(int n, int d, Seed seed);

/// n points in dimension n-1: x_i = e_i for i < n-1 and x_{n-1} = 0. The
/// last point is every other point's unique nearest neighbor (distance 1
/// against sqrt(2) for all other pairs).
PointSet gen_hub_instance(int n);

/// True iff no two rows are identical.
bool check_distinct(const PointSet& ps);

/// True iff every entry is exactly +/-1 (usable to promote a general set
/// read from disk to kind=sign).
bool all_sign_entries(const PointSet& ps);

}  // namespace navgraph

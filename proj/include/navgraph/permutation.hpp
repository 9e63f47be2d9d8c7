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

#include <cstdint>
#include <span>
#include <vector>

#include "navgraph/distance.hpp"
#include "navgraph/types.hpp"

namespace navgraph {

/// For every node i, the ordering of all nodes by non-decreasing distance
/// from x_i, ties broken by node id. Row i starts with i itself (distance 0).
/// `rank` is the row-wise inverse: rank_of(i, perm(i, k)) == k. Positions are
/// zero-based; a "k-th nearest" statement with 1-based k maps to position
/// k-1.
struct PermutationTable {
  int n = 0;
  std::vector<std::int32_t> perm;  // n*n
  std::vector<std::int32_t> rank;  // n*n

  std::span<const std::int32_t> row(NodeId i) const {
    return {perm.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n),
            static_cast<std::size_t>(n)};
  }
  std::int32_t rank_of(NodeId i, NodeId j) const {
    return rank[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(j)];
  }
};

/// Sorts all n rows by (distance, id). Throws duplicate_points if the point
/// set has identical rows, non_finite_distance if the oracle ever yields
/// NaN/inf. Deterministic; row construction parallelizes over i.
PermutationTable build_permutations(const PointSet& ps, const DistanceOracle& oracle);

/// The m nearest nodes to i (including i), in rank order. 1 <= m <= n.
std::vector<NodeId> nearest_m(const PermutationTable& pt, NodeId i, int m);

}  // namespace navgraph

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

#include "navgraph/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "parallel_for.hpp"

namespace navgraph {

PermutationTable build_permutations(const PointSet& ps, const DistanceOracle& oracle) {
  require(&oracle.points() == &ps, errc::size_mismatch,
          "oracle was built over a different point set");
  require(check_distinct(ps), errc::duplicate_points,
          "point set has identical rows; distance-based permutations are undefined");
  const int n = ps.n;
  PermutationTable pt;
  pt.n = n;
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  pt.perm.resize(nn);
  pt.rank.resize(nn);

  detail::parallel_for(n, [&](std::int64_t i) {
    std::vector<double> dist(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) dist[j] = oracle.between(static_cast<NodeId>(i), j);
    std::int32_t* row = pt.perm.data() + static_cast<std::size_t>(i) * n;
    std::iota(row, row + n, 0);
    // Exact (distance, id) key; no epsilons, the tie rule is id-based.
    std::sort(row, row + n, [&](std::int32_t a, std::int32_t b) {
      if (dist[a] != dist[b]) return dist[a] < dist[b];
      return a < b;
    });
    std::int32_t* rk = pt.rank.data() + static_cast<std::size_t>(i) * n;
    for (int k = 0; k < n; ++k) rk[row[k]] = k;
  });
  return pt;
}

std::vector<NodeId> nearest_m(const PermutationTable& pt, NodeId i, int m) {
  require(i >= 0 && i < pt.n, errc::out_of_range, "node id outside table");
  require(m >= 1 && m <= pt.n, errc::out_of_range, "m must be in [1, n]");
  auto row = pt.row(i);
  return {row.begin(), row.begin() + m};
}

}  // namespace navgraph

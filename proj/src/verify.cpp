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

#include "navgraph/verify.hpp"

#include <atomic>

#include "parallel_for.hpp"

namespace navgraph {

bool verify_property(const DirectedGraph& g, const PermutationTable& pt) {
  require(g.n == pt.n, errc::size_mismatch, "graph and permutation table disagree on n");
  const int n = g.n;
  std::atomic<bool> holds{true};
  detail::parallel_for(n, [&](std::int64_t t) {
    if (!holds.load(std::memory_order_relaxed)) return;
    // Node u at position rank_of(t, u) needs an out-edge to a smaller rank.
    for (int u = 0; u < n; ++u) {
      if (u == t) continue;
      const std::int32_t pos = pt.rank_of(static_cast<NodeId>(t), u);
      bool ok = false;
      for (NodeId v : g.adj[u]) {
        if (pt.rank_of(static_cast<NodeId>(t), v) < pos) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        holds.store(false, std::memory_order_relaxed);
        return;
      }
    }
  });
  return holds.load();
}

ExhaustiveResult verify_exhaustive(const DirectedGraph& g, const DistanceOracle& oracle) {
  RoutingResult routes = route_all_pairs(g, oracle);
  return {routes.all_ok, routes.max_moves, routes.first_failure};
}

bool audit_claim5(const DirectedGraph& g, const NearNeighborhoodSet& hoods) {
  require(g.n == hoods.n, errc::size_mismatch, "graph and neighborhoods disagree on n");
  const int n = g.n;
  std::atomic<bool> ok{true};
  detail::parallel_for(n, [&](std::int64_t j) {
    if (!ok.load(std::memory_order_relaxed)) return;
    const int size = hoods.hood_size(static_cast<NodeId>(j));
    if (size <= 1) return;
    std::int64_t internal = 0;
    for (int u = 0; u < n; ++u) {
      if (!hoods.contains(static_cast<NodeId>(j), u)) continue;
      for (NodeId v : g.adj[u])
        internal += hoods.contains(static_cast<NodeId>(j), v);
      if (internal >= size - 1) return;
    }
    ok.store(false, std::memory_order_relaxed);
  });
  return ok.load();
}

}  // namespace navgraph

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

#include "navgraph/graph.hpp"

#include <algorithm>
#include <limits>

#include "parallel_for.hpp"

namespace navgraph {

void DirectedGraph::add_edge(NodeId from, NodeId to) {
  require(from >= 0 && from < n && to >= 0 && to < n, errc::out_of_range,
          "edge endpoint outside graph");
  if (from == to) return;
  auto& row = adj[from];
  auto it = std::lower_bound(row.begin(), row.end(), to);
  if (it == row.end() || *it != to) row.insert(it, to);
}

void DirectedGraph::normalize() {
  require(adj.size() == static_cast<std::size_t>(n), errc::size_mismatch,
          "adjacency rows do not match n");
  for (int i = 0; i < n; ++i) {
    auto& row = adj[i];
    for (NodeId v : row)
      require(v >= 0 && v < n, errc::out_of_range, "edge endpoint outside graph");
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    auto self = std::lower_bound(row.begin(), row.end(), static_cast<NodeId>(i));
    if (self != row.end() && *self == i) row.erase(self);
  }
}

std::size_t DirectedGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adj) total += row.size();
  return total;
}

DirectedGraph complete_graph(int n) {
  DirectedGraph g(n);
  for (int i = 0; i < n; ++i) {
    g.adj[i].reserve(n - 1);
    for (int j = 0; j < n; ++j)
      if (j != i) g.adj[i].push_back(j);
  }
  return g;
}

DegreeStats degree_stats(const DirectedGraph& g) {
  DegreeStats s;
  for (const auto& row : g.adj) {
    s.edge_count += row.size();
    s.max_out_degree = std::max(s.max_out_degree, static_cast<int>(row.size()));
  }
  s.avg_degree = g.n == 0 ? 0.0 : static_cast<double>(s.edge_count) / g.n;
  return s;
}

const char* stop_reason_name(StopReason r) {
  return r == StopReason::empty_neighborhood ? "empty_neighborhood"
                                             : "reached_no_improvement";
}

namespace {

// One step of the greedy walk: the lowest-id nearest out-neighbor, taken
// when it beats the current node on (distance, id). Scanning the ascending
// adjacency list with a strict '<' keeps the first (lowest-id) minimizer.
template <class DistFn>
RouteTrace greedy_core(const DirectedGraph& g, NodeId start, DistFn&& dist_to_query,
                       NodeId stop_early_at = -1) {
  require(start >= 0 && start < g.n, errc::out_of_range, "start node outside graph");
  RouteTrace tr;
  NodeId cur = start;
  double cur_dist = dist_to_query(cur);
  tr.path.push_back(cur);
  while (true) {
    const auto& nb = g.adj[cur];
    if (nb.empty()) {
      tr.reason = StopReason::empty_neighborhood;
      break;
    }
    if (cur == stop_early_at) break;  // at the target: no neighbor can beat distance 0
    NodeId best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (NodeId i : nb) {
      const double di = dist_to_query(i);
      if (di < best_dist) {
        best_dist = di;
        best = i;
      }
    }
    if (best_dist < cur_dist || (best_dist == cur_dist && best < cur)) {
      cur = best;
      cur_dist = best_dist;
      tr.path.push_back(cur);
      // The walk strictly descends in (distance, id), so it can visit each
      // node at most once; anything longer is a tie-rule bug.
      require(tr.path.size() <= static_cast<std::size_t>(g.n), errc::out_of_range,
              "greedy walk exceeded n nodes");
    } else {
      break;
    }
  }
  tr.terminal = cur;
  tr.moves = static_cast<int>(tr.path.size()) - 1;
  return tr;
}

}  // namespace

RouteTrace greedy_search(const DirectedGraph& g, const DistanceOracle& oracle,
                         NodeId start, std::span<const double> query) {
  require(g.n == oracle.n(), errc::size_mismatch, "graph and point set disagree on n");
  return greedy_core(g, start, [&](NodeId i) { return oracle.to_point(query, i); });
}

RouteTrace greedy_search_to(const DirectedGraph& g, const DistanceOracle& oracle,
                            NodeId start, NodeId target) {
  require(g.n == oracle.n(), errc::size_mismatch, "graph and point set disagree on n");
  require(target >= 0 && target < g.n, errc::out_of_range, "target node outside graph");
  // With distinct points the walk cannot leave the target once reached, so
  // stopping there early changes nothing observable.
  return greedy_core(
      g, start, [&](NodeId i) { return oracle.between(target, i); }, target);
}

RoutingResult route_all_pairs(const DirectedGraph& g, const DistanceOracle& oracle) {
  require(g.n == oracle.n(), errc::size_mismatch, "graph and point set disagree on n");
  const int n = g.n;
  RoutingResult res;
  res.n = n;
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  res.success.assign(nn, 0);
  res.moves.assign(nn, 0);
  std::vector<NodeId> stuck(nn, -1);

  detail::parallel_for(n, [&](std::int64_t s) {
    const std::size_t base = static_cast<std::size_t>(s) * n;
    for (int t = 0; t < n; ++t) {
      RouteTrace tr = greedy_search_to(g, oracle, static_cast<NodeId>(s), t);
      res.moves[base + t] = tr.moves;
      if (tr.terminal == t) {
        res.success[base + t] = 1;
      } else {
        stuck[base + t] = tr.terminal;
      }
    }
  });

  for (std::size_t k = 0; k < nn; ++k) {
    res.max_moves = std::max(res.max_moves, static_cast<int>(res.moves[k]));
    if (!res.success[k] && res.all_ok) {
      res.all_ok = false;
      res.first_failure = PairFailure{static_cast<NodeId>(k / n),
                                      static_cast<NodeId>(k % n), stuck[k]};
    }
  }
  return res;
}

}  // namespace navgraph

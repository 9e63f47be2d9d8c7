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
#include <optional>
#include <vector>

#include "navgraph/distance.hpp"
#include "navgraph/types.hpp"

namespace navgraph {

/// Directed graph over node ids 0..n-1. Adjacency lists are kept sorted
/// ascending with no duplicates and no self-loops, so "minimum-id argmin"
/// falls out of a single left-to-right scan.
struct DirectedGraph {
  int n = 0;
  std::vector<std::vector<NodeId>> adj;

  DirectedGraph() = default;
  explicit DirectedGraph(int n_) : n(n_), adj(static_cast<std::size_t>(n_)) {}

  /// Sorted insert; duplicates collapse, self-loops are dropped.
  void add_edge(NodeId from, NodeId to);

  /// Sorts rows, removes duplicates and self-loops, range-checks ids.
  /// Builders push unsorted then call this once.
  void normalize();

  std::size_t edge_count() const;
};

DirectedGraph complete_graph(int n);

struct DegreeStats {
  std::size_t edge_count = 0;
  double avg_degree = 0.0;
  int max_out_degree = 0;
};

DegreeStats degree_stats(const DirectedGraph& g);

enum class StopReason {
  reached_no_improvement,
  empty_neighborhood,
};

const char* stop_reason_name(StopReason r);

struct RouteTrace {
  std::vector<NodeId> path;  // starting node first; no repeats
  int moves = 0;             // |path| - 1
  NodeId terminal = -1;
  StopReason reason = StopReason::reached_no_improvement;
};

/// Greedy search from `start` toward an arbitrary query point: repeatedly
/// move to the out-neighbor h minimizing D(query, x_h) (lowest id on ties),
/// accepting the move when h is strictly closer than the current node, or
/// equally close with a smaller id. Stops otherwise, or immediately on an
/// empty out-neighborhood.
RouteTrace greedy_search(const DirectedGraph& g, const DistanceOracle& oracle,
                         NodeId start, std::span<const double> query);

/// Same search with query = x_target (uses the oracle's node-pair path).
RouteTrace greedy_search_to(const DirectedGraph& g, const DistanceOracle& oracle,
                            NodeId start, NodeId target);

struct PairFailure {
  NodeId s = -1;
  NodeId t = -1;
  NodeId stuck_at = -1;
};

/// Result of routing every ordered (s, t) pair with query x_t.
struct RoutingResult {
  int n = 0;
  std::vector<std::uint8_t> success;  // n*n, [s*n + t]
  std::vector<std::int32_t> moves;    // n*n
  int max_moves = 0;                  // measured small-world parameter
  bool all_ok = true;
  std::optional<PairFailure> first_failure;  // lexicographically smallest (s, t)

  bool pair_ok(NodeId s, NodeId t) const {
    return success[static_cast<std::size_t>(s) * n + t] != 0;
  }
};

RoutingResult route_all_pairs(const DirectedGraph& g, const DistanceOracle& oracle);

}  // namespace navgraph

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

#include "navgraph/graph.hpp"
#include "navgraph/pointset.hpp"
#include "navgraph/types.hpp"

namespace navgraph {

/// Fixed-radius near-neighborhoods over a sign point set: O_j is the set of
/// nodes i with <x_i, x_j> >= tau, tau = c_h * sqrt(d ln n). Stored as one
/// bitset per node. Membership is symmetric and j is always in O_j for
/// calibrated c_h (since <x_j, x_j> = d).
struct NearNeighborhoodSet {
  int n = 0;
  int words = 0;            // 64-bit words per row
  double threshold = 0.0;   // tau, inner-product units
  double c_h = 0.0;
  double max_pair_inner = 0.0;  // max over i != j of <x_i, x_j>, from the build

  std::vector<std::uint64_t> hoods;  // n * words; bit i of row j <=> i in O_j

  std::span<const std::uint64_t> row(NodeId j) const {
    return {hoods.data() + static_cast<std::size_t>(j) * static_cast<std::size_t>(words),
            static_cast<std::size_t>(words)};
  }
  std::span<std::uint64_t> row(NodeId j) {
    return {hoods.data() + static_cast<std::size_t>(j) * static_cast<std::size_t>(words),
            static_cast<std::size_t>(words)};
  }
  bool contains(NodeId j, NodeId i) const {
    return (row(j)[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(NodeId j, NodeId i) { row(j)[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63); }
  int hood_size(NodeId j) const;
};

/// The value c in [1/3, 1] solving exp(-c^2 ln n) / sqrt(ln n) = 1 / sqrt(n),
/// i.e. c = sqrt(1/2 - ln ln n / (2 ln n)); clamped to [1/3, 1] with a
/// stderr warning if the closed form ever leaves the interval. Natural log.
/// Requires n >= 3.
double calibrate_ch(std::int64_t n);

/// Builds all neighborhoods with tau = c_h * sqrt(d ln n). Inner products
/// are computed exactly (XOR popcounts on packed bits); the comparison is
/// >= against the float tau. Requires kind == sign and c_h in (0, 1].
NearNeighborhoodSet build_hoods(const PointSet& ps, double c_h);

struct OverlapStats {
  int max_overlap = 0;
  std::vector<std::uint64_t> histogram;  // histogram[k] = #unordered pairs with |O_i ^ O_j| = k
};

/// Pairwise intersection sizes over all unordered pairs, via bitset popcounts.
OverlapStats overlap_stats(const NearNeighborhoodSet& hoods);

/// Certified floor on the edge count of ANY navigable graph for this point
/// set: every O_j forces |O_j| - 1 edges inside O_j x O_j, and a single edge
/// (u, v) can satisfy at most w_{u,v} = |O_u ^ O_v| <= max_overlap of those
/// demands, so |E| >= ceil(sum_j (|O_j| - 1) / max_overlap).
struct LowerBoundReport {
  double c_h = 0.0;
  double threshold = 0.0;
  int min_hood = 0;
  double mean_hood = 0.0;
  int max_hood = 0;
  int max_overlap = 0;
  std::uint64_t sum_required = 0;
  std::uint64_t certified_lb = 0;
  double max_pair_inner = 0.0;
};

LowerBoundReport certified_lower_bound(const NearNeighborhoodSet& hoods);

/// Consistency check against a graph the caller has verified navigable:
/// edge_count >= certified_lb and sum over edges of |O_u ^ O_v| >=
/// sum_required. A false return indicates an implementation bug.
bool cross_check_lb(const NearNeighborhoodSet& hoods, const DirectedGraph& g,
                    bool verified_navigable);

/// Exact P(B - t/2 <= -x sqrt(t)/2) for B ~ Binomial(t, 1/2), by direct
/// summation (long double term recurrence for t <= 10^4, log-space lgamma
/// summation of the smaller tail above that). 0 <= t <= 10^6.
double binom_tail_exact(std::int64_t t, double x);

/// Max over i != j of <x_i, x_j>, exact. Requires kind == sign and n >= 2.
double max_inner_product(const PointSet& ps);

/// For the hub instance (basis vectors + origin): checks that the hub's
/// out-degree in g is exactly n-1, and that deleting any single hub->i edge
/// from the complete graph strands greedy search from the hub toward x_i.
bool hub_degree_audit(const PointSet& ps, const DirectedGraph& g);

}  // namespace navgraph

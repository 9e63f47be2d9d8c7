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

#include <utility>
#include <vector>

#include "navgraph/graph.hpp"
#include "navgraph/permutation.hpp"
#include "navgraph/types.hpp"

namespace navgraph {

enum class BuildMethod { randomized, setcover, knn };

const char* build_method_name(BuildMethod m);

/// m = auto sentinel: randomized picks min(n-1, ceil(sqrt(3 n ln n))),
/// setcover picks min(n-1, ceil(sqrt(n ln n))). Natural log throughout.
inline constexpr int kAutoM = 0;

int auto_m_randomized(int n);
int auto_m_setcover(int n);

struct BuildReport {
  BuildMethod method = BuildMethod::randomized;
  int n = 0;
  int m = 0;
  int random_edges_per_node = 0;  // randomized only: ceil(3 n ln n / m)
  std::vector<NodeId> hubs;       // setcover only, in selection order
  std::size_t edge_count = 0;     // post-dedup
  double avg_degree = 0.0;
};

/// Near-neighbor back edges N_l(i) -> i for 1 < l <= m, plus
/// ceil(3 n ln n / m) random out-edges per node, sampled without replacement
/// from all other nodes by a per-node substream of `seed` (so the build is
/// reproducible bit-for-bit and independent of thread scheduling). If the
/// sample size reaches n-1, the node simply connects to all others.
std::pair<DirectedGraph, BuildReport> build_randomized(const PermutationTable& pt,
                                                       Seed seed, int m = kAutoM);

/// Same back edges, then a greedy set cover: repeatedly pick the node
/// contained in the most still-uncovered near-neighborhoods N_m(i) (smallest
/// id on ties) until every neighborhood holds a hub, and connect every node
/// to every hub. Fully deterministic; |hubs| <= 1 + n ln n / m.
std::pair<DirectedGraph, BuildReport> build_setcover(const PermutationTable& pt,
                                                     int m = kAutoM);

/// Baseline: exactly k out-edges per node, to its k nearest other nodes.
DirectedGraph build_knn_baseline(const PermutationTable& pt, int k);

}  // namespace navgraph

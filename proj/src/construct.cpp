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

#include "navgraph/construct.hpp"

#include <algorithm>
#include <cmath>

#include "navgraph/rng.hpp"
#include "parallel_for.hpp"

namespace navgraph {

namespace {

constexpr std::uint64_t kTagRandomEdges = 0x72616e642d656467ULL;  // call-site tag

int ceil_to_int(double v) { return static_cast<int>(std::ceil(v)); }

// ceil(3 n ln n / m); at n = 1 the log vanishes and no random edges are needed.
int random_edges_formula(int n, int m) {
  return ceil_to_int(3.0 * n * std::log(static_cast<double>(n)) / m);
}

void check_m(int n, int m) {
  require(m >= 1 && m <= n, errc::out_of_range, "m must be in [1, n]");
}

// N_l(i) -> i for 1 < l <= m (positions 1..m-1 of row i).
void add_back_edges(const PermutationTable& pt, int m, DirectedGraph& g) {
  for (int i = 0; i < pt.n; ++i) {
    auto row = pt.row(i);
    for (int l = 1; l < m; ++l) g.adj[row[l]].push_back(i);
  }
}

}  // namespace

const char* build_method_name(BuildMethod m) {
  switch (m) {
    case BuildMethod::randomized: return "randomized";
    case BuildMethod::setcover: return "setcover";
    case BuildMethod::knn: return "knn";
  }
  return "?";
}

int auto_m_randomized(int n) {
  return std::min(n - 1, ceil_to_int(std::sqrt(3.0 * n * std::log(static_cast<double>(n)))));
}

int auto_m_setcover(int n) {
  return std::min(n - 1, ceil_to_int(std::sqrt(n * std::log(static_cast<double>(n)))));
}

std::pair<DirectedGraph, BuildReport> build_randomized(const PermutationTable& pt,
                                                       Seed seed, int m) {
  const int n = pt.n;
  require(n >= 2, errc::too_few_nodes, "randomized construction needs n >= 2");
  if (m == kAutoM) m = auto_m_randomized(n);
  check_m(n, m);

  DirectedGraph g(n);
  add_back_edges(pt, m, g);

  const int per_node = random_edges_formula(n, m);
  const int sample = std::min(per_node, n - 1);

  // Partial Fisher-Yates over {0..n-1} \ {i}, driven by a per-node substream
  // so the output is independent of scheduling.
  detail::parallel_for(n, [&](std::int64_t i) {
    std::vector<NodeId> pool;
    pool.reserve(n - 1);
    for (int j = 0; j < n; ++j)
      if (j != i) pool.push_back(j);
    SplitMix64 rng(substream_seed(seed, kTagRandomEdges, static_cast<std::uint64_t>(i)));
    auto& row = g.adj[i];
    for (int k = 0; k < sample; ++k) {
      const std::size_t pick =
          k + static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(pool.size() - k)));
      std::swap(pool[k], pool[pick]);
      row.push_back(pool[k]);
    }
  });

  g.normalize();
  BuildReport rep;
  rep.method = BuildMethod::randomized;
  rep.n = n;
  rep.m = m;
  rep.random_edges_per_node = per_node;
  rep.edge_count = g.edge_count();
  rep.avg_degree = static_cast<double>(rep.edge_count) / n;
  return {std::move(g), rep};
}

std::pair<DirectedGraph, BuildReport> build_setcover(const PermutationTable& pt, int m) {
  const int n = pt.n;
  require(n >= 2, errc::too_few_nodes, "set-cover construction needs n >= 2");
  if (m == kAutoM) m = auto_m_setcover(n);
  check_m(n, m);

  DirectedGraph g(n);
  add_back_edges(pt, m, g);

  // members[k] = all i whose near-neighborhood N_m(i) contains k.
  std::vector<std::vector<NodeId>> members(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto row = pt.row(i);
    for (int l = 0; l < m; ++l) members[row[l]].push_back(i);
  }

  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  int uncovered = n;
  std::vector<NodeId> hubs;
  while (uncovered > 0) {
    // Max-coverage candidate; the scan order makes ties go to the lowest id.
    int best = -1, best_count = 0;
    for (int k = 0; k < n; ++k) {
      int count = 0;
      for (NodeId i : members[k]) count += !covered[i];
      if (count > best_count) {
        best_count = count;
        best = k;
      }
    }
    // Every uncovered i sits in its own N_m(i), so a positive count exists.
    require(best >= 0, errc::out_of_range, "set cover made no progress");
    hubs.push_back(best);
    for (NodeId i : members[best]) {
      if (!covered[i]) {
        covered[i] = 1;
        --uncovered;
      }
    }
  }

  for (int j = 0; j < n; ++j)
    for (NodeId k : hubs)
      if (k != j) g.adj[j].push_back(k);

  g.normalize();
  BuildReport rep;
  rep.method = BuildMethod::setcover;
  rep.n = n;
  rep.m = m;
  rep.hubs = std::move(hubs);
  rep.edge_count = g.edge_count();
  rep.avg_degree = static_cast<double>(rep.edge_count) / n;
  return {std::move(g), rep};
}

DirectedGraph build_knn_baseline(const PermutationTable& pt, int k) {
  const int n = pt.n;
  require(k >= 1 && k <= n - 1, errc::out_of_range, "k must be in [1, n-1]");
  DirectedGraph g(n);
  for (int i = 0; i < n; ++i) {
    auto row = pt.row(i);
    g.adj[i].assign(row.begin() + 1, row.begin() + 1 + k);
  }
  g.normalize();
  return g;
}

}  // namespace navgraph

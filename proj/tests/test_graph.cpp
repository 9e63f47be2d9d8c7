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

#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "navgraph/construct.hpp"
#include "navgraph/graph.hpp"
#include "navgraph/permutation.hpp"
#include "test_util.hpp"

using namespace navgraph;
using namespace navgraph::testfix;

TEST_CASE("degree stats") {
  const DegreeStats s = degree_stats(five_graph());
  CHECK(s.edge_count == 9);
  CHECK(s.avg_degree == doctest::Approx(1.8));
  CHECK(s.max_out_degree == 2);

  const DegreeStats empty = degree_stats(DirectedGraph(6));
  CHECK(empty.edge_count == 0);
  CHECK(empty.avg_degree == 0.0);
  CHECK(empty.max_out_degree == 0);

  const DegreeStats full = degree_stats(complete_graph(7));
  CHECK(full.edge_count == 42);
  CHECK(full.avg_degree == doctest::Approx(6.0));
  CHECK(full.max_out_degree == 6);
}

TEST_CASE("add_edge collapses duplicates and drops self-loops; normalize checks ranges") {
  DirectedGraph g(3);
  g.add_edge(0, 2);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 0);
  CHECK(g.adj[0] == std::vector<NodeId>{1, 2});

  DirectedGraph raw(3);
  raw.adj[1] = {2, 0, 2, 1};
  raw.normalize();
  CHECK(raw.adj[1] == std::vector<NodeId>{0, 2});

  DirectedGraph bad(2);
  bad.adj[0] = {5};
  CHECK(thrown_code([&] { bad.normalize(); }) == errc::out_of_range);
}

TEST_CASE("hand-traced greedy walks on the five-point graph") {
  const PointSet ps = five_points();
  const DistanceOracle oracle(ps);
  const DirectedGraph g = five_graph();

  const RouteTrace a = greedy_search_to(g, oracle, 2, 1);
  CHECK(a.path == std::vector<NodeId>{2, 0, 1});
  CHECK(a.moves == 2);
  CHECK(a.terminal == 1);
  CHECK(a.reason == StopReason::reached_no_improvement);

  const RouteTrace b = greedy_search(g, oracle, 1, ps.row(3));
  CHECK(b.path == std::vector<NodeId>{1, 0, 3});
  CHECK(b.terminal == 3);

  for (NodeId t = 0; t < 5; ++t) {
    const RouteTrace self = greedy_search_to(g, oracle, t, t);
    CHECK(self.path == std::vector<NodeId>{t});
    CHECK(self.moves == 0);
  }
}

TEST_CASE("empty neighborhood stops immediately") {
  const PointSet ps = five_points();
  const DistanceOracle oracle(ps);
  const DirectedGraph g(5);
  const RouteTrace tr = greedy_search_to(g, oracle, 0, 1);
  CHECK(tr.path == std::vector<NodeId>{0});
  CHECK(tr.reason == StopReason::empty_neighborhood);
  CHECK(tr.terminal == 0);
}

TEST_CASE("greedy argument validation") {
  const PointSet ps = five_points();
  const DistanceOracle oracle(ps);
  const DirectedGraph g = five_graph();
  CHECK(thrown_code([&] { greedy_search_to(g, oracle, 7, 0); }) == errc::out_of_range);
  CHECK(thrown_code([&] { greedy_search_to(g, oracle, 0, -1); }) == errc::out_of_range);
  const DirectedGraph wrong(4);
  CHECK(thrown_code([&] { greedy_search_to(wrong, oracle, 0, 1); }) == errc::size_mismatch);
}

TEST_CASE("route_all_pairs on the fixture succeeds for all 25 pairs") {
  const PointSet ps = five_points();
  const DistanceOracle oracle(ps);
  const RoutingResult r = route_all_pairs(five_graph(), oracle);
  CHECK(r.all_ok);
  CHECK(r.max_moves <= 4);
  for (NodeId s = 0; s < 5; ++s)
    for (NodeId t = 0; t < 5; ++t) CHECK(r.pair_ok(s, t));
}

TEST_CASE("removing edge 3->4 strands routing toward node 4") {
  const PointSet ps = five_points();
  const DistanceOracle oracle(ps);
  DirectedGraph g = five_graph();
  g.adj[3] = {2};  // drop 3 -> 4

  const RouteTrace tr = greedy_search_to(g, oracle, 2, 4);
  CHECK(tr.terminal == 3);

  const RoutingResult r = route_all_pairs(g, oracle);
  CHECK_FALSE(r.all_ok);
  REQUIRE(r.first_failure.has_value());
  CHECK(r.first_failure->s == 0);
  CHECK(r.first_failure->t == 4);
  CHECK(r.first_failure->stuck_at == 3);
  CHECK_FALSE(r.pair_ok(2, 4));
}

TEST_CASE("complete graph routes every pair in at most one move") {
  const PointSet ps = gen_random_sign_points(24, 32, 9);
  REQUIRE(check_distinct(ps));
  const DistanceOracle oracle(ps);
  const RoutingResult r = route_all_pairs(complete_graph(24), oracle);
  CHECK(r.all_ok);
  CHECK(r.max_moves <= 1);
}

TEST_CASE("traces strictly descend in (distance, id) toward the query") {
  const PointSet ps = gen_random_sign_points(60, 24, 21);
  REQUIRE(check_distinct(ps));
  const DistanceOracle oracle(ps);
  const PermutationTable pt = build_permutations(ps, oracle);
  const DirectedGraph g = build_knn_baseline(pt, 4);
  for (NodeId s = 0; s < ps.n; s += 7) {
    for (NodeId t = 0; t < ps.n; t += 5) {
      const RouteTrace tr = greedy_search_to(g, oracle, s, t);
      CHECK(tr.path.size() <= static_cast<std::size_t>(ps.n));
      CHECK(tr.moves == static_cast<int>(tr.path.size()) - 1);
      for (std::size_t k = 1; k < tr.path.size(); ++k) {
        const double prev = oracle.between(t, tr.path[k - 1]);
        const double cur = oracle.between(t, tr.path[k]);
        const bool descends =
            cur < prev || (cur == prev && tr.path[k] < tr.path[k - 1]);
        CHECK(descends);
      }
    }
  }
}

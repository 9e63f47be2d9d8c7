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

#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "navgraph/construct.hpp"
#include "navgraph/parallel.hpp"
#include "navgraph/verify.hpp"
#include "test_util.hpp"

using namespace navgraph;
using namespace navgraph::testfix;

namespace {

PermutationTable table_for(const PointSet& ps) {
  const DistanceOracle oracle(ps);
  return build_permutations(ps, oracle);
}

}  // namespace

TEST_CASE("auto m and the per-node random edge count at n = 100") {
  CHECK(auto_m_randomized(100) == 38);
  CHECK(auto_m_setcover(100) == 22);

  const PointSet ps = gen_random_sign_points(100, 32, 4);
  const auto [g, rep] = build_randomized(table_for(ps), 1);
  CHECK(rep.m == 38);
  CHECK(rep.random_edges_per_node == 37);  // ceil(300 ln 100 / 38)
  (void)g;
}

TEST_CASE("n = 2, m = 1 randomized build degenerates to the complete digraph") {
  const PointSet ps = gen_random_sign_points(2, 8, 19);
  REQUIRE(check_distinct(ps));
  const auto [g, rep] = build_randomized(table_for(ps), 5, 1);
  CHECK(g.adj[0] == std::vector<NodeId>{1});
  CHECK(g.adj[1] == std::vector<NodeId>{0});
  CHECK(rep.edge_count == 2);
}

TEST_CASE("randomized build is reproducible and seed-sensitive") {
  const PointSet ps = gen_random_sign_points(120, 24, 8);
  const PermutationTable pt = table_for(ps);
  set_threads(1);
  const auto [g1, r1] = build_randomized(pt, 42);
  set_threads(0);
  const auto [g2, r2] = build_randomized(pt, 42);
  CHECK(g1.adj == g2.adj);
  CHECK(r1.edge_count == r2.edge_count);
  const auto [g3, r3] = build_randomized(pt, 43);
  CHECK(g1.adj != g3.adj);
}

TEST_CASE("randomized: per-node sample is without replacement and excludes self") {
  const PointSet ps = gen_random_sign_points(50, 16, 31);
  const PermutationTable pt = table_for(ps);
  const auto [g, rep] = build_randomized(pt, 11, 10);
  for (NodeId i = 0; i < g.n; ++i) {
    for (std::size_t k = 0; k + 1 < g.adj[i].size(); ++k)
      CHECK(g.adj[i][k] < g.adj[i][k + 1]);
    for (NodeId v : g.adj[i]) CHECK(v != i);
  }
  CHECK(rep.random_edges_per_node == static_cast<int>(
            std::ceil(3.0 * 50 * std::log(50.0) / 10)));
}

TEST_CASE("set cover: m = n needs exactly one hub") {
  const PointSet ps = gen_random_sign_points(30, 16, 6);
  const PermutationTable pt = table_for(ps);
  const auto [g, rep] = build_setcover(pt, 30);
  CHECK(rep.hubs == std::vector<NodeId>{0});
  (void)g;
}

TEST_CASE("set cover: hub count bound and deterministic navigability") {
  for (int n : {50, 100, 128}) {
    const PointSet ps = gen_random_sign_points(n, 32, n);
    REQUIRE(check_distinct(ps));
    const DistanceOracle oracle(ps);
    const PermutationTable pt = build_permutations(ps, oracle);
    const auto [g, rep] = build_setcover(pt);
    const double bound = 1.0 + n * std::log(static_cast<double>(n)) / rep.m;
    CHECK(static_cast<double>(rep.hubs.size()) <= bound);
    CHECK(verify_property(g, pt));
    const ExhaustiveResult ex = verify_exhaustive(g, oracle);
    CHECK(ex.ok);
    CHECK(ex.max_moves <= 2);
  }
}

TEST_CASE("set cover covers the hub instance too") {
  const PointSet ps = gen_hub_instance(64);
  const DistanceOracle oracle(ps);
  const PermutationTable pt = build_permutations(ps, oracle);
  const auto [g, rep] = build_setcover(pt);
  CHECK(verify_property(g, pt));
  (void)rep;
}

TEST_CASE("edge-count ceilings at auto m") {
  for (int n : {100, 200}) {
    const PointSet ps = gen_random_sign_points(n, 48, 3 * n + 1);
    REQUIRE(check_distinct(ps));
    const PermutationTable pt = table_for(ps);
    const double root = std::pow(static_cast<double>(n), 1.5) *
                        std::sqrt(std::log(static_cast<double>(n)));
    const auto [gs, rs] = build_setcover(pt);
    CHECK(static_cast<double>(rs.edge_count) <= 2.0 * root);
    const auto [gr, rr] = build_randomized(pt, 99);
    CHECK(static_cast<double>(rr.edge_count) <= 2.0 * std::sqrt(3.0) * root);
    (void)gs;
    (void)gr;
  }
}

TEST_CASE("set cover is deterministic across thread counts") {
  const PointSet ps = gen_random_sign_points(90, 24, 12);
  const PermutationTable pt = table_for(ps);
  set_threads(1);
  const auto [g1, r1] = build_setcover(pt);
  set_threads(0);
  const auto [g2, r2] = build_setcover(pt);
  CHECK(g1.adj == g2.adj);
  CHECK(r1.hubs == r2.hubs);
}

TEST_CASE("knn baseline") {
  const PointSet ps = five_points();
  const DistanceOracle oracle(ps);
  const PermutationTable pt = build_permutations(ps, oracle);

  const DirectedGraph g1 = build_knn_baseline(pt, 1);
  CHECK(g1.adj[0] == std::vector<NodeId>{1});
  CHECK(g1.adj[1] == std::vector<NodeId>{0});
  CHECK(g1.adj[2] == std::vector<NodeId>{3});
  CHECK(g1.adj[3] == std::vector<NodeId>{2});  // tie at sqrt(5): id 2 beats 4
  CHECK(g1.adj[4] == std::vector<NodeId>{3});
  for (NodeId i = 0; i < 5; ++i) CHECK(g1.adj[i].size() == 1);

  const DirectedGraph g4 = build_knn_baseline(pt, 4);
  CHECK(degree_stats(g4).edge_count == 20);
  CHECK(thrown_code([&] { build_knn_baseline(pt, 0); }) == errc::out_of_range);
  CHECK(thrown_code([&] { build_knn_baseline(pt, 5); }) == errc::out_of_range);
}

TEST_CASE("builder argument validation") {
  const PointSet ps = gen_random_sign_points(10, 32, 2);
  const PermutationTable pt = table_for(ps);
  CHECK(thrown_code([&] { build_randomized(pt, 1, 11); }) == errc::out_of_range);
  CHECK(thrown_code([&] { build_setcover(pt, -3); }) == errc::out_of_range);

  PointSet single;
  single.n = 1;
  single.d = 1;
  single.data = {1.0};
  const DistanceOracle oracle(single);
  const PermutationTable pt1 = build_permutations(single, oracle);
  CHECK(thrown_code([&] { build_setcover(pt1, 1); }) == errc::too_few_nodes);
}

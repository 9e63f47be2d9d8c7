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
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "navgraph/parallel.hpp"
#include "navgraph/permutation.hpp"
#include "navgraph/rng.hpp"
#include "test_util.hpp"

using namespace navgraph;
using namespace navgraph::testfix;

namespace {

// Independent oracle: ids ascending, stable-sorted by distance alone (so
// equal distances keep id order), with distances from a plain coordinate
// loop rather than the DistanceOracle.
std::vector<std::int32_t> brute_row(const PointSet& ps, NodeId i) {
  std::vector<double> dist(ps.n);
  for (NodeId j = 0; j < ps.n; ++j) {
    double sum = 0.0;
    for (int k = 0; k < ps.d; ++k) {
      const double diff = ps.row(i)[k] - ps.row(j)[k];
      sum += diff * diff;
    }
    dist[j] = std::sqrt(sum);
  }
  std::vector<std::int32_t> ids(ps.n);
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(),
                   [&](std::int32_t a, std::int32_t b) { return dist[a] < dist[b]; });
  return ids;
}

PointSet random_general_points(int n, int d, Seed seed) {
  PointSet ps;
  ps.n = n;
  ps.d = d;
  ps.kind = PointKind::general;
  ps.data.resize(static_cast<std::size_t>(n) * d);
  SplitMix64 rng(seed);
  for (auto& v : ps.data)
    v = static_cast<double>(rng.next() >> 11) / static_cast<double>(1ULL << 53);
  return ps;
}

}  // namespace

TEST_CASE("five-point permutation rows match the hand-computed ordering") {
  const PointSet ps = five_points();
  const DistanceOracle oracle(ps);
  const PermutationTable pt = build_permutations(ps, oracle);
  const auto expected = five_perm_rows();
  for (NodeId i = 0; i < 5; ++i) {
    auto row = pt.row(i);
    CHECK(std::vector<std::int32_t>(row.begin(), row.end()) == expected[i]);
  }
}

TEST_CASE("single point yields the single row [0]") {
  PointSet ps;
  ps.n = 1;
  ps.d = 1;
  ps.data = {0.25};
  const DistanceOracle oracle(ps);
  const PermutationTable pt = build_permutations(ps, oracle);
  CHECK(pt.row(0)[0] == 0);
  CHECK(pt.rank_of(0, 0) == 0);
}

TEST_CASE("rows equal the stable-sort oracle, with and without ties") {
  // Low-dimensional sign points force many repeated distances.
  for (const PointSet& ps :
       {gen_random_sign_points(48, 8, 5), random_general_points(40, 3, 17)}) {
    if (!check_distinct(ps)) continue;
    const DistanceOracle oracle(ps);
    const PermutationTable pt = build_permutations(ps, oracle);
    for (NodeId i = 0; i < ps.n; ++i) {
      auto row = pt.row(i);
      CHECK(std::vector<std::int32_t>(row.begin(), row.end()) == brute_row(ps, i));
    }
  }
}

TEST_CASE("table invariants: self-first, sorted keys, inverse ranks") {
  const PointSet ps = gen_random_sign_points(64, 16, 2);
  REQUIRE(check_distinct(ps));
  const DistanceOracle oracle(ps);
  const PermutationTable pt = build_permutations(ps, oracle);
  for (NodeId i = 0; i < ps.n; ++i) {
    auto row = pt.row(i);
    CHECK(row[0] == i);
    for (int k = 0; k + 1 < ps.n; ++k) {
      const double a = oracle.between(i, row[k]);
      const double b = oracle.between(i, row[k + 1]);
      CHECK(a <= b);
      if (a == b) CHECK(row[k] < row[k + 1]);
    }
    for (NodeId j = 0; j < ps.n; ++j) CHECK(row[pt.rank_of(i, j)] == j);
  }
}

TEST_CASE("build is deterministic across thread counts") {
  const PointSet ps = gen_random_sign_points(96, 24, 77);
  const DistanceOracle oracle(ps);
  set_threads(1);
  const PermutationTable a = build_permutations(ps, oracle);
  set_threads(0);
  const PermutationTable b = build_permutations(ps, oracle);
  CHECK(a.perm == b.perm);
  CHECK(a.rank == b.rank);
}

TEST_CASE("duplicate points are rejected") {
  PointSet dup = five_points();
  dup.data[8] = 4.0;
  dup.data[9] = -2.0;
  const DistanceOracle oracle(dup);
  CHECK(thrown_code([&] { build_permutations(dup, oracle); }) == errc::duplicate_points);
}

TEST_CASE("nearest_m") {
  const PointSet ps = five_points();
  const DistanceOracle oracle(ps);
  const PermutationTable pt = build_permutations(ps, oracle);
  CHECK(nearest_m(pt, 0, 2) == std::vector<NodeId>{0, 1});
  for (NodeId i = 0; i < 5; ++i) CHECK(nearest_m(pt, i, 1) == std::vector<NodeId>{i});
  auto all = nearest_m(pt, 2, 5);
  std::sort(all.begin(), all.end());
  CHECK(all == std::vector<NodeId>{0, 1, 2, 3, 4});
  CHECK(thrown_code([&] { nearest_m(pt, 0, 0); }) == errc::out_of_range);
  CHECK(thrown_code([&] { nearest_m(pt, 0, 6); }) == errc::out_of_range);
}

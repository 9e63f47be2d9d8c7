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

#include <vector>

#include "navgraph/graph.hpp"
#include "navgraph/pointset.hpp"
#include "navgraph/types.hpp"

namespace navgraph::testfix {

// Five planar points whose greedy-routing behavior is fully hand-checkable.
// Node 3 sits equidistant (sqrt 5) from nodes 2 and 4, which exercises the
// id tie rule.
inline PointSet five_points() {
  PointSet ps;
  ps.n = 5;
  ps.d = 2;
  ps.kind = PointKind::general;
  ps.data = {
      4.0, -2.0,  // 0
      6.0, -1.0,  // 1
      2.0, 1.0,   // 2
      0.0, 0.0,   // 3
      1.0, -2.0,  // 4
  };
  return ps;
}

// A navigable 9-edge graph over five_points().
inline DirectedGraph five_graph() {
  DirectedGraph g(5);
  g.adj = {{1, 3}, {0}, {0, 3}, {2, 4}, {0, 3}};
  return g;
}

// Distance-sorted orderings of five_points(), ties by id (row 3: 2 < 4).
inline std::vector<std::vector<std::int32_t>> five_perm_rows() {
  return {
      {0, 1, 4, 2, 3},
      {1, 0, 2, 4, 3},
      {2, 3, 4, 0, 1},
      {3, 2, 4, 0, 1},
      {4, 3, 0, 2, 1},
  };
}

}  // namespace navgraph::testfix

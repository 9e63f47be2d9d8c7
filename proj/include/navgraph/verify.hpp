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

#include <optional>

#include "navgraph/graph.hpp"
#include "navgraph/lowerlab.hpp"
#include "navgraph/permutation.hpp"
#include "navgraph/types.hpp"

namespace navgraph {

/// The permutation criterion: for every target t and every position l > 1,
/// the node at position l of t's permutation has an out-edge to some node at
/// an earlier position. Sufficient for navigability (the converse needs
/// distinct distances and is never assumed here).
bool verify_property(const DirectedGraph& g, const PermutationTable& pt);

struct ExhaustiveResult {
  bool ok = false;
  int max_moves = 0;  // measured small-world parameter
  std::optional<PairFailure> first_failure;
};

/// Greedy-routes every ordered pair; ok iff all n^2 routes reach the target.
ExhaustiveResult verify_exhaustive(const DirectedGraph& g, const DistanceOracle& oracle);

/// Necessary condition for navigability: every neighborhood O_j must contain
/// at least |O_j| - 1 of g's edges within O_j x O_j.
bool audit_claim5(const DirectedGraph& g, const NearNeighborhoodSet& hoods);

struct VerifyReport {
  std::optional<bool> property_holds;
  std::optional<bool> exhaustive_ok;
  std::optional<int> max_moves;
  std::optional<PairFailure> first_failure;
  std::optional<bool> claim5_ok;
};

}  // namespace navgraph

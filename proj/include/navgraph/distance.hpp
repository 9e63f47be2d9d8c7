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

#include "navgraph/pointset.hpp"
#include "navgraph/types.hpp"

namespace navgraph {

/// Packed +/-1 rows, one bit per coordinate (bit set <=> +1), 64 coordinates
/// per word. Trailing bits of the last word are zero in every row, so XOR
/// popcounts over whole words count exactly the disagreeing coordinates.
struct SignBits {
  int n = 0;
  int d = 0;
  int words = 0;
  std::vector<std::uint64_t> bits;

  std::span<const std::uint64_t> row(NodeId i) const {
    return {bits.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(words),
            static_cast<std::size_t>(words)};
  }
};

SignBits pack_sign_bits(const PointSet& ps);

/// Exact inner product of two packed rows, an integer in [-d, d].
int inner_product(const SignBits& sb, NodeId a, NodeId b);

/// Euclidean distance oracle over one point set. D(x,x) = 0 and
/// D(x,y) > 0 for x != y are checked lazily: any observed violation (or a
/// non-finite value) throws. For sign point sets, distances are derived from
/// XOR popcounts; squared distances are small integers either way, so the
/// packed path and the coordinate path produce bit-identical doubles.
class DistanceOracle {
 public:
  explicit DistanceOracle(const PointSet& ps);

  /// D(x_a, x_b).
  double between(NodeId a, NodeId b) const;

  /// D(q, x_b) for an arbitrary query point of dimension d.
  double to_point(std::span<const double> q, NodeId b) const;

  const PointSet& points() const { return *ps_; }
  int n() const { return ps_->n; }

 private:
  const PointSet* ps_;
  SignBits sign_;  // empty unless kind == sign
};

inline DistanceOracle euclidean_oracle(const PointSet& ps) { return DistanceOracle(ps); }

}  // namespace navgraph

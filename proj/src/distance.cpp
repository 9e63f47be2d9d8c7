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

#include "navgraph/distance.hpp"

#include <bit>
#include <cmath>

namespace navgraph {

SignBits pack_sign_bits(const PointSet& ps) {
  require(ps.kind == PointKind::sign, errc::wrong_kind, "packed bits need a sign point set");
  SignBits sb;
  sb.n = ps.n;
  sb.d = ps.d;
  sb.words = (ps.d + 63) / 64;
  sb.bits.assign(static_cast<std::size_t>(ps.n) * sb.words, 0);
  for (int i = 0; i < ps.n; ++i) {
    auto r = ps.row(i);
    std::uint64_t* w = sb.bits.data() + static_cast<std::size_t>(i) * sb.words;
    for (int j = 0; j < ps.d; ++j)
      if (r[j] > 0.0) w[j >> 6] |= 1ULL << (j & 63);
  }
  return sb;
}

int inner_product(const SignBits& sb, NodeId a, NodeId b) {
  const std::uint64_t* wa = sb.bits.data() + static_cast<std::size_t>(a) * sb.words;
  const std::uint64_t* wb = sb.bits.data() + static_cast<std::size_t>(b) * sb.words;
  int disagree = 0;
  for (int k = 0; k < sb.words; ++k) disagree += std::popcount(wa[k] ^ wb[k]);
  return sb.d - 2 * disagree;
}

DistanceOracle::DistanceOracle(const PointSet& ps) : ps_(&ps) {
  validate(ps);
  if (ps.kind == PointKind::sign) sign_ = pack_sign_bits(ps);
}

double DistanceOracle::between(NodeId a, NodeId b) const {
  require(a >= 0 && a < ps_->n && b >= 0 && b < ps_->n, errc::out_of_range,
          "node id outside point set");
  double dist;
  if (ps_->kind == PointKind::sign) {
    // Squared distance is exactly 4 * (#disagreeing coordinates); both this
    // and the coordinate loop below produce the same small-integer double.
    const std::uint64_t* wa = sign_.bits.data() + static_cast<std::size_t>(a) * sign_.words;
    const std::uint64_t* wb = sign_.bits.data() + static_cast<std::size_t>(b) * sign_.words;
    int disagree = 0;
    for (int k = 0; k < sign_.words; ++k) disagree += std::popcount(wa[k] ^ wb[k]);
    dist = std::sqrt(4.0 * disagree);
  } else {
    dist = to_point(ps_->row(a), b);
  }
  if (a == b) {
    require(dist == 0.0, errc::non_finite_distance, "D(x,x) != 0");
  } else if (dist == 0.0) {
    fail(errc::duplicate_points, "zero distance between distinct node ids " +
                                     std::to_string(a) + " and " + std::to_string(b));
  }
  return dist;
}

double DistanceOracle::to_point(std::span<const double> q, NodeId b) const {
  require(b >= 0 && b < ps_->n, errc::out_of_range, "node id outside point set");
  require(static_cast<int>(q.size()) == ps_->d, errc::size_mismatch,
          "query dimension does not match point set");
  auto r = ps_->row(b);
  double sum = 0.0;
  for (int j = 0; j < ps_->d; ++j) {
    const double diff = q[j] - r[j];
    sum += diff * diff;
  }
  require(std::isfinite(sum), errc::non_finite_distance, "non-finite distance evaluation");
  return std::sqrt(sum);
}

}  // namespace navgraph

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

#include "navgraph/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "navgraph/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace navgraph {

void validate(const PointSet& ps) {
  require(ps.n >= 1 && ps.d >= 1, errc::bad_format, "point set needs n >= 1 and d >= 1");
  require(ps.data.size() == static_cast<std::size_t>(ps.n) * static_cast<std::size_t>(ps.d),
          errc::bad_format, "point data size does not match n*d");
  for (double v : ps.data) {
    require(std::isfinite(v), errc::bad_format, "non-finite coordinate");
    if (ps.kind == PointKind::sign)
      require(v == 1.0 || v == -1.0, errc::bad_format, "sign point set holds a non +/-1 entry");
  }
}

PointSet gen_random_sign_points(int n, int d, Seed seed) {
  require(n >= 1 && d >= 1, errc::out_of_range, "gen_random_sign_points needs n,d >= 1");
  PointSet ps;
  ps.n = n;
  ps.d = d;
  ps.kind = PointKind::sign;
  const std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(d);
  ps.data.resize(total);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const std::size_t base = static_cast<std::size_t>(i) * static_cast<std::size_t>(d);
    for (int j = 0; j < d; ++j) {
      // Entry (i, j) depends only on (seed, i*d + j).
      const std::uint64_t r = splitmix64_at(seed, base + static_cast<std::size_t>(j));
      ps.data[base + static_cast<std::size_t>(j)] = (r >> 63) ? 1.0 : -1.0;
    }
  }
  return ps;
}

PointSet gen_hub_instance(int n) {
  require(n >= 2, errc::out_of_range, "gen_hub_instance needs n >= 2");
  PointSet ps;
  ps.n = n;
  ps.d = n - 1;
  ps.kind = PointKind::general;
  ps.data.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1), 0.0);
  for (int i = 0; i + 1 < n; ++i)
    ps.data[static_cast<std::size_t>(i) * (n - 1) + i] = 1.0;
  return ps;
}

bool check_distinct(const PointSet& ps) {
  std::vector<int> order(static_cast<std::size_t>(ps.n));
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](int a, int b) {
    auto ra = ps.row(a), rb = ps.row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t k = 1; k < order.size(); ++k) {
    auto ra = ps.row(order[k - 1]), rb = ps.row(order[k]);
    if (std::equal(ra.begin(), ra.end(), rb.begin())) return false;
  }
  return true;
}

bool all_sign_entries(const PointSet& ps) {
  return std::all_of(ps.data.begin(), ps.data.end(),
                     [](double v) { return v == 1.0 || v == -1.0; });
}

}  // namespace navgraph

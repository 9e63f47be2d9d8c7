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

#include "navgraph/lowerlab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>

#include "navgraph/distance.hpp"
#include "parallel_for.hpp"

namespace navgraph {

namespace {

int popcount_row(std::span<const std::uint64_t> row) {
  int c = 0;
  for (std::uint64_t w : row) c += std::popcount(w);
  return c;
}

int intersection_size(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  int c = 0;
  for (std::size_t k = 0; k < a.size(); ++k) c += std::popcount(a[k] & b[k]);
  return c;
}

}  // namespace

int NearNeighborhoodSet::hood_size(NodeId j) const { return popcount_row(row(j)); }

double calibrate_ch(std::int64_t n) {
  require(n >= 3, errc::out_of_range, "calibration needs n >= 3");
  const double ln_n = std::log(static_cast<double>(n));
  // Solving exp(-c^2 ln n) / sqrt(ln n) = 1 / sqrt(n) for c.
  double c = std::sqrt(0.5 - std::log(ln_n) / (2.0 * ln_n));
  if (c < 1.0 / 3.0 || c > 1.0) {
    std::fprintf(stderr, "navgraph: calibrated c_h = %.6f for n = %lld clamped to [1/3, 1]\n",
                 c, static_cast<long long>(n));
    c = std::clamp(c, 1.0 / 3.0, 1.0);
  }
  return c;
}

NearNeighborhoodSet build_hoods(const PointSet& ps, double c_h) {
  require(ps.kind == PointKind::sign, errc::wrong_kind,
          "neighborhoods are defined over sign point sets");
  require(c_h > 0.0 && c_h <= 1.0, errc::out_of_range, "c_h must be in (0, 1]");
  validate(ps);
  const SignBits sb = pack_sign_bits(ps);
  const int n = ps.n;

  NearNeighborhoodSet hs;
  hs.n = n;
  hs.words = (n + 63) / 64;
  hs.threshold = c_h * std::sqrt(ps.d * std::log(static_cast<double>(n)));
  hs.c_h = c_h;
  hs.hoods.assign(static_cast<std::size_t>(n) * hs.words, 0);

  std::vector<int> row_max(static_cast<std::size_t>(n), std::numeric_limits<int>::min());
  detail::parallel_for(n, [&](std::int64_t j) {
    auto out = hs.row(static_cast<NodeId>(j));
    int best = std::numeric_limits<int>::min();
    for (int i = 0; i < n; ++i) {
      const int ip = inner_product(sb, static_cast<NodeId>(j), i);
      if (static_cast<double>(ip) >= hs.threshold)
        out[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63);
      if (i != j) best = std::max(best, ip);
    }
    row_max[j] = best;
  });
  int global = std::numeric_limits<int>::min();
  for (int j = 0; j < n; ++j) global = std::max(global, row_max[j]);
  hs.max_pair_inner = n >= 2 ? static_cast<double>(global) : 0.0;
  return hs;
}

OverlapStats overlap_stats(const NearNeighborhoodSet& hoods) {
  const int n = hoods.n;
  require(n >= 2, errc::out_of_range, "overlap needs n >= 2");
  require(n <= 65535, errc::out_of_range, "overlap table supports n up to 65535");

  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<std::uint16_t> overlap(pairs);
  std::vector<std::size_t> offset(static_cast<std::size_t>(n));
  std::size_t acc = 0;
  for (int i = 0; i < n; ++i) {
    offset[i] = acc;
    acc += static_cast<std::size_t>(n - 1 - i);
  }

  detail::parallel_for(n - 1, [&](std::int64_t i) {
    auto ri = hoods.row(static_cast<NodeId>(i));
    std::uint16_t* out = overlap.data() + offset[i];
    for (int j = static_cast<int>(i) + 1; j < n; ++j)
      out[j - i - 1] = static_cast<std::uint16_t>(
          intersection_size(ri, hoods.row(j)));
  });

  OverlapStats st;
  for (std::uint16_t v : overlap) st.max_overlap = std::max<int>(st.max_overlap, v);
  st.histogram.assign(static_cast<std::size_t>(st.max_overlap) + 1, 0);
  for (std::uint16_t v : overlap) ++st.histogram[v];
  return st;
}

LowerBoundReport certified_lower_bound(const NearNeighborhoodSet& hoods) {
  const int n = hoods.n;
  require(n >= 2, errc::out_of_range, "lower bound needs n >= 2");

  LowerBoundReport rep;
  rep.c_h = hoods.c_h;
  rep.threshold = hoods.threshold;
  rep.max_pair_inner = hoods.max_pair_inner;
  rep.min_hood = std::numeric_limits<int>::max();
  std::uint64_t total = 0;
  for (int j = 0; j < n; ++j) {
    const int s = hoods.hood_size(j);
    rep.min_hood = std::min(rep.min_hood, s);
    rep.max_hood = std::max(rep.max_hood, s);
    total += static_cast<std::uint64_t>(s);
    if (s > 1) rep.sum_required += static_cast<std::uint64_t>(s - 1);
  }
  rep.mean_hood = static_cast<double>(total) / n;

  const OverlapStats st = overlap_stats(hoods);
  rep.max_overlap = st.max_overlap;
  if (st.max_overlap == 0) {
    // Degenerate family (possible only for hand-built, asymmetric hoods):
    // no edge can serve two demands, so the demands themselves are the bound.
    rep.certified_lb = rep.sum_required;
  } else {
    const std::uint64_t mo = static_cast<std::uint64_t>(st.max_overlap);
    rep.certified_lb = (rep.sum_required + mo - 1) / mo;
  }
  return rep;
}

bool cross_check_lb(const NearNeighborhoodSet& hoods, const DirectedGraph& g,
                    bool verified_navigable) {
  require(verified_navigable, errc::out_of_range,
          "cross_check_lb needs a graph the caller verified navigable");
  require(g.n == hoods.n, errc::size_mismatch, "graph and neighborhoods disagree on n");
  const LowerBoundReport rep = certified_lower_bound(hoods);
  if (g.edge_count() < rep.certified_lb) return false;

  std::vector<std::uint64_t> per_node(static_cast<std::size_t>(g.n), 0);
  detail::parallel_for(g.n, [&](std::int64_t u) {
    auto ru = hoods.row(static_cast<NodeId>(u));
    std::uint64_t acc = 0;
    for (NodeId v : g.adj[u])
      acc += static_cast<std::uint64_t>(intersection_size(ru, hoods.row(v)));
    per_node[u] = acc;
  });
  std::uint64_t covered = 0;
  for (std::uint64_t v : per_node) covered += v;
  return covered >= rep.sum_required;
}

double binom_tail_exact(std::int64_t t, double x) {
  require(t >= 0 && t <= 1000000, errc::out_of_range, "t must be in [0, 10^6]");
  require(std::isfinite(x), errc::out_of_range, "x must be finite");
  const double bound = 0.5 * static_cast<double>(t) -
                       0.5 * x * std::sqrt(static_cast<double>(t));
  if (bound < 0.0) return 0.0;
  std::int64_t K = static_cast<std::int64_t>(std::floor(bound));
  if (K >= t) return 1.0;

  // P(B <= K) for the smaller tail; reflect when K is past the mode.
  const bool complement = K > (t - 1) / 2;
  const std::int64_t limit = complement ? t - K - 1 : K;

  double tail;
  if (t <= 10000) {
    // Term recurrence in extended precision; 2^-t stays representable here.
    long double term = std::ldexp(1.0L, -static_cast<int>(t));
    long double sum = term;
    for (std::int64_t k = 1; k <= limit; ++k) {
      term *= static_cast<long double>(t - k + 1) / static_cast<long double>(k);
      sum += term;
    }
    tail = static_cast<double>(sum);
  } else {
    // Log-space summation, ascending so logsumexp stays stable.
    const double log_ct = std::lgamma(static_cast<double>(t) + 1.0);
    const double log_half = static_cast<double>(t) * std::log(2.0);
    double lsum = -std::numeric_limits<double>::infinity();
    for (std::int64_t k = 0; k <= limit; ++k) {
      const double lp = log_ct - std::lgamma(static_cast<double>(k) + 1.0) -
                        std::lgamma(static_cast<double>(t - k) + 1.0) - log_half;
      if (lsum == -std::numeric_limits<double>::infinity())
        lsum = lp;
      else {
        const double hi = std::max(lsum, lp), lo = std::min(lsum, lp);
        lsum = hi + std::log1p(std::exp(lo - hi));
      }
    }
    tail = std::exp(lsum);
  }
  return complement ? 1.0 - tail : tail;
}

double max_inner_product(const PointSet& ps) {
  require(ps.kind == PointKind::sign, errc::wrong_kind,
          "inner products are tracked for sign point sets");
  require(ps.n >= 2, errc::out_of_range, "needs at least two points");
  const SignBits sb = pack_sign_bits(ps);
  const int n = ps.n;
  std::vector<int> row_max(static_cast<std::size_t>(n - 1), std::numeric_limits<int>::min());
  detail::parallel_for(n - 1, [&](std::int64_t i) {
    int best = std::numeric_limits<int>::min();
    for (int j = static_cast<int>(i) + 1; j < n; ++j)
      best = std::max(best, inner_product(sb, static_cast<NodeId>(i), j));
    row_max[i] = best;
  });
  int global = std::numeric_limits<int>::min();
  for (int v : row_max) global = std::max(global, v);
  return static_cast<double>(global);
}

namespace {

void require_hub_instance(const PointSet& ps) {
  require(ps.n >= 2 && ps.d == ps.n - 1, errc::wrong_instance,
          "expected n points in dimension n-1");
  for (int i = 0; i < ps.n; ++i) {
    auto r = ps.row(i);
    for (int j = 0; j < ps.d; ++j) {
      const double want = (i < ps.n - 1 && j == i) ? 1.0 : 0.0;
      require(r[j] == want, errc::wrong_instance,
              "point set is not basis vectors plus the origin");
    }
  }
}

}  // namespace

bool hub_degree_audit(const PointSet& ps, const DirectedGraph& g) {
  require_hub_instance(ps);
  require(g.n == ps.n, errc::size_mismatch, "graph and point set disagree on n");
  const int n = ps.n;
  const NodeId hub = n - 1;
  if (static_cast<int>(g.adj[hub].size()) != n - 1) return false;

  // Deleting hub->i from the complete graph must strand greedy search at the
  // hub: every other neighbor sits at distance sqrt(2) > 1 from x_i.
  const DistanceOracle oracle(ps);
  DirectedGraph probe = complete_graph(n);
  for (NodeId i = 0; i < hub; ++i) {
    auto& row = probe.adj[hub];
    row.erase(std::lower_bound(row.begin(), row.end(), i));
    const RouteTrace tr = greedy_search(probe, oracle, hub, ps.row(i));
    row.insert(std::lower_bound(row.begin(), row.end(), i), i);
    if (tr.terminal == i) return false;
  }
  return true;
}

}  // namespace navgraph

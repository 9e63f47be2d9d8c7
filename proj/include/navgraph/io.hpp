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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "navgraph/graph.hpp"
#include "navgraph/permutation.hpp"
#include "navgraph/pointset.hpp"

namespace navgraph {

// Point formats:
//   .pts   text: "n d" then n lines of d space-separated decimals (shortest
//          round-trip formatting, so doubles survive a write/read cycle).
//   .pm1   text: "n d" then n lines of "+1"/"-1" tokens; kind = sign.
//   .fvecs binary: per vector an int32 little-endian d then d float32
//          little-endian values. Lossy (32-bit) by design of the format.
// Graph format:
//   .adj   text: "n" then n lines "i k j_1 ... j_k", neighbors ascending.
//          Round-trips bit-exactly.
// Permutation dump:
//   .perm  text: "n" then n lines of n ids (row i of the table).

PointSet read_pts(std::istream& in);
void write_pts(const PointSet& ps, std::ostream& out);

PointSet read_pm1(std::istream& in);
void write_pm1(const PointSet& ps, std::ostream& out);

PointSet read_fvecs(std::istream& in);
void write_fvecs(const PointSet& ps, std::ostream& out);

DirectedGraph read_adj(std::istream& in);
void write_adj(const DirectedGraph& g, std::ostream& out);

PermutationTable read_perm(std::istream& in);
void write_perm(const PermutationTable& pt, std::ostream& out);

/// Dispatch on extension (.pts/.pm1/.fvecs). Throws io_error on open
/// failure, bad_format on anything malformed.
PointSet read_points_file(const std::filesystem::path& path);
void write_points_file(const PointSet& ps, const std::filesystem::path& path);

DirectedGraph read_adj_file(const std::filesystem::path& path);
void write_adj_file(const DirectedGraph& g, const std::filesystem::path& path);

void write_perm_file(const PermutationTable& pt, const std::filesystem::path& path);

/// Shortest round-trip decimal rendering of a double (used by .pts).
std::string format_double(double v);

}  // namespace navgraph

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

#include "navgraph/io.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace navgraph {

namespace {

constexpr int kMaxCount = 1 << 24;  // sanity ceiling for text headers

int read_count(std::istream& in, const char* what) {
  long long v = 0;
  if (!(in >> v) || v < 0 || v > kMaxCount)
    fail(errc::bad_format, std::string("bad or missing ") + what);
  return static_cast<int>(v);
}

double read_double(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) fail(errc::bad_format, "missing coordinate");
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    fail(errc::bad_format, "bad coordinate token '" + tok + "'");
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, ptr};
}

PointSet read_pts(std::istream& in) {
  PointSet ps;
  ps.n = read_count(in, "point count");
  ps.d = read_count(in, "dimension");
  ps.kind = PointKind::general;
  ps.data.resize(static_cast<std::size_t>(ps.n) * ps.d);
  for (auto& v : ps.data) v = read_double(in);
  validate(ps);
  return ps;
}

void write_pts(const PointSet& ps, std::ostream& out) {
  out << ps.n << ' ' << ps.d << '\n';
  for (int i = 0; i < ps.n; ++i) {
    auto r = ps.row(i);
    for (int j = 0; j < ps.d; ++j) {
      if (j) out << ' ';
      out << format_double(r[j]);
    }
    out << '\n';
  }
}

PointSet read_pm1(std::istream& in) {
  PointSet ps;
  ps.n = read_count(in, "point count");
  ps.d = read_count(in, "dimension");
  ps.kind = PointKind::sign;
  ps.data.resize(static_cast<std::size_t>(ps.n) * ps.d);
  std::string tok;
  for (auto& v : ps.data) {
    if (!(in >> tok)) fail(errc::bad_format, "missing sign token");
    if (tok == "+1")
      v = 1.0;
    else if (tok == "-1")
      v = -1.0;
    else
      fail(errc::bad_format, "sign token must be +1 or -1, got '" + tok + "'");
  }
  validate(ps);
  return ps;
}

void write_pm1(const PointSet& ps, std::ostream& out) {
  require(ps.kind == PointKind::sign, errc::wrong_kind, "pm1 stores sign point sets");
  out << ps.n << ' ' << ps.d << '\n';
  for (int i = 0; i < ps.n; ++i) {
    auto r = ps.row(i);
    for (int j = 0; j < ps.d; ++j) {
      if (j) out << ' ';
      out << (r[j] > 0.0 ? "+1" : "-1");
    }
    out << '\n';
  }
}

PointSet read_fvecs(std::istream& in) {
  PointSet ps;
  ps.kind = PointKind::general;
  std::int32_t d = 0;
  std::vector<float> buf;
  while (in.read(reinterpret_cast<char*>(&d), 4)) {
    if (d < 1 || d > kMaxCount) fail(errc::bad_format, "bad fvecs dimension");
    if (ps.n == 0)
      ps.d = d;
    else if (d != ps.d)
      fail(errc::bad_format, "fvecs vectors disagree on dimension");
    buf.resize(static_cast<std::size_t>(d));
    if (!in.read(reinterpret_cast<char*>(buf.data()), 4ll * d))
      fail(errc::bad_format, "truncated fvecs record");
    for (float f : buf) ps.data.push_back(static_cast<double>(f));
    ++ps.n;
  }
  if (in.gcount() != 0) fail(errc::bad_format, "trailing bytes in fvecs file");
  require(ps.n >= 1, errc::bad_format, "empty fvecs file");
  validate(ps);
  return ps;
}

void write_fvecs(const PointSet& ps, std::ostream& out) {
  // 32-bit storage: lossy for general doubles, exact for +/-1 and small ints.
  const std::int32_t d = ps.d;
  std::vector<float> buf(static_cast<std::size_t>(ps.d));
  for (int i = 0; i < ps.n; ++i) {
    auto r = ps.row(i);
    for (int j = 0; j < ps.d; ++j) buf[j] = static_cast<float>(r[j]);
    out.write(reinterpret_cast<const char*>(&d), 4);
    out.write(reinterpret_cast<const char*>(buf.data()), 4ll * ps.d);
  }
}

DirectedGraph read_adj(std::istream& in) {
  const int n = read_count(in, "node count");
  DirectedGraph g(n);
  for (int i = 0; i < n; ++i) {
    const int idx = read_count(in, "node index");
    require(idx == i, errc::bad_format, "adjacency lines must be in node order");
    const int k = read_count(in, "degree");
    require(k <= n, errc::bad_format, "degree exceeds n");
    auto& row = g.adj[i];
    row.resize(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      const int v = read_count(in, "neighbor id");
      require(v < n, errc::bad_format, "neighbor id outside graph");
      require(v != i, errc::bad_format, "self-loop in adjacency file");
      require(j == 0 || row[j - 1] < v, errc::bad_format,
              "neighbors must be strictly ascending");
      row[j] = v;
    }
  }
  return g;
}

void write_adj(const DirectedGraph& g, std::ostream& out) {
  out << g.n << '\n';
  for (int i = 0; i < g.n; ++i) {
    out << i << ' ' << g.adj[i].size();
    for (NodeId v : g.adj[i]) out << ' ' << v;
    out << '\n';
  }
}

PermutationTable read_perm(std::istream& in) {
  const int n = read_count(in, "node count");
  PermutationTable pt;
  pt.n = n;
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  pt.perm.resize(nn);
  pt.rank.assign(nn, -1);
  for (int i = 0; i < n; ++i) {
    std::int32_t* rk = pt.rank.data() + static_cast<std::size_t>(i) * n;
    for (int k = 0; k < n; ++k) {
      const int v = read_count(in, "permutation entry");
      require(v < n, errc::bad_format, "permutation entry outside range");
      require(rk[v] == -1, errc::bad_format, "row is not a permutation");
      pt.perm[static_cast<std::size_t>(i) * n + k] = v;
      rk[v] = k;
    }
  }
  return pt;
}

void write_perm(const PermutationTable& pt, std::ostream& out) {
  out << pt.n << '\n';
  for (int i = 0; i < pt.n; ++i) {
    auto row = pt.row(i);
    for (int k = 0; k < pt.n; ++k) {
      if (k) out << ' ';
      out << row[k];
    }
    out << '\n';
  }
}

namespace {

enum class PointFormat { pts, pm1, fvecs };

PointFormat point_format(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".pts") return PointFormat::pts;
  if (ext == ".pm1") return PointFormat::pm1;
  if (ext == ".fvecs") return PointFormat::fvecs;
  fail(errc::bad_format, "unknown point file extension '" + ext + "'");
}

std::ifstream open_in(const std::filesystem::path& path, bool binary) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) fail(errc::io_error, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path, bool binary) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) fail(errc::io_error, "cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ostream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) fail(errc::io_error, "write failed for " + path.string());
}

}  // namespace

PointSet read_points_file(const std::filesystem::path& path) {
  switch (point_format(path)) {
    case PointFormat::pts: {
      auto in = open_in(path, false);
      return read_pts(in);
    }
    case PointFormat::pm1: {
      auto in = open_in(path, false);
      return read_pm1(in);
    }
    case PointFormat::fvecs: {
      auto in = open_in(path, true);
      return read_fvecs(in);
    }
  }
  fail(errc::bad_format, "unreachable");
}

void write_points_file(const PointSet& ps, const std::filesystem::path& path) {
  switch (point_format(path)) {
    case PointFormat::pts: {
      auto out = open_out(path, false);
      write_pts(ps, out);
      finish(out, path);
      return;
    }
    case PointFormat::pm1: {
      auto out = open_out(path, false);
      write_pm1(ps, out);
      finish(out, path);
      return;
    }
    case PointFormat::fvecs: {
      auto out = open_out(path, true);
      write_fvecs(ps, out);
      finish(out, path);
      return;
    }
  }
}

DirectedGraph read_adj_file(const std::filesystem::path& path) {
  auto in = open_in(path, false);
  return read_adj(in);
}

void write_adj_file(const DirectedGraph& g, const std::filesystem::path& path) {
  auto out = open_out(path, false);
  write_adj(g, out);
  finish(out, path);
}

void write_perm_file(const PermutationTable& pt, const std::filesystem::path& path) {
  auto out = open_out(path, false);
  write_perm(pt, out);
  finish(out, path);
}

}  // namespace navgraph

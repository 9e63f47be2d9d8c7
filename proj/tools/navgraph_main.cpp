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

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "navgraph/construct.hpp"
#include "navgraph/io.hpp"
#include "navgraph/lowerlab.hpp"
#include "navgraph/parallel.hpp"
#include "navgraph/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace navgraph;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitVerifyFailed = 4;

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(errc::io_error, "cannot open " + out_path + " for writing");
  out << j.dump(2) << '\n';
  out.flush();
  if (!out) fail(errc::io_error, "write failed for " + out_path);
}

// Sign point sets read from generic containers (.pts/.fvecs) are promoted
// when every entry is +/-1, so lb-lab works on any of the three formats.
PointSet read_sign_points(const std::string& path) {
  PointSet ps = read_points_file(path);
  if (ps.kind != PointKind::sign) {
    require(all_sign_entries(ps), errc::wrong_kind,
            path + " does not hold +/-1 vectors");
    ps.kind = PointKind::sign;
  }
  return ps;
}

struct GenConfig {
  std::string dist;
  int n = 0;
  int d = 0;
  Seed seed = 0;
  std::string out;
};

int cmd_gen(const GenConfig& cfg) {
  PointSet ps;
  if (cfg.dist == "sign") {
    require(cfg.d >= 1, errc::out_of_range, "--dist sign needs -d >= 1");
    ps = gen_random_sign_points(cfg.n, cfg.d, cfg.seed);
  } else if (cfg.dist == "hub") {
    ps = gen_hub_instance(cfg.n);
  } else {
    fail(errc::out_of_range, "--dist must be sign or hub");
  }
  write_points_file(ps, cfg.out);
  return kExitOk;
}

struct PermuteConfig {
  std::string in, out;
};

int cmd_permute(const PermuteConfig& cfg) {
  const PointSet ps = read_points_file(cfg.in);
  const DistanceOracle oracle(ps);
  const PermutationTable pt = build_permutations(ps, oracle);
  write_perm_file(pt, cfg.out);
  return kExitOk;
}

struct BuildConfig {
  std::string in, out, report, method = "setcover";
  int m = kAutoM;
  int k = 1;
  Seed seed = 0;
};

json build_report_json(const BuildReport& rep) {
  json j;
  j["method"] = build_method_name(rep.method);
  j["n"] = rep.n;
  j["m"] = rep.m;
  if (rep.method == BuildMethod::randomized)
    j["random_edges_per_node"] = rep.random_edges_per_node;
  if (rep.method == BuildMethod::setcover) j["hubs"] = rep.hubs;
  j["edge_count"] = rep.edge_count;
  j["avg_degree"] = rep.avg_degree;
  j["log_base"] = "e";
  return j;
}

int cmd_build(const BuildConfig& cfg) {
  const PointSet ps = read_points_file(cfg.in);
  const DistanceOracle oracle(ps);
  const PermutationTable pt = build_permutations(ps, oracle);

  DirectedGraph g;
  BuildReport rep;
  if (cfg.method == "randomized") {
    std::tie(g, rep) = build_randomized(pt, cfg.seed, cfg.m);
  } else if (cfg.method == "setcover") {
    std::tie(g, rep) = build_setcover(pt, cfg.m);
  } else if (cfg.method == "knn") {
    g = build_knn_baseline(pt, cfg.k);
    rep.method = BuildMethod::knn;
    rep.n = pt.n;
    rep.m = cfg.k;
    rep.edge_count = g.edge_count();
    rep.avg_degree = static_cast<double>(rep.edge_count) / pt.n;
  } else {
    fail(errc::out_of_range, "--method must be randomized, setcover or knn");
  }
  write_adj_file(g, cfg.out);
  emit(build_report_json(rep), cfg.report);
  return kExitOk;
}

struct SearchConfig {
  std::string graph, points, format = "json";
  NodeId start = 0, target = 0;
};

int cmd_search(const SearchConfig& cfg) {
  const PointSet ps = read_points_file(cfg.points);
  const DirectedGraph g = read_adj_file(cfg.graph);
  const DistanceOracle oracle(ps);
  const RouteTrace tr = greedy_search_to(g, oracle, cfg.start, cfg.target);
  if (cfg.format == "text") {
    std::cout << "path:";
    for (NodeId v : tr.path) std::cout << ' ' << v;
    std::cout << "\nmoves: " << tr.moves << "\nterminal: " << tr.terminal
              << "\nreason: " << stop_reason_name(tr.reason) << '\n';
  } else {
    json j;
    j["path"] = tr.path;
    j["moves"] = tr.moves;
    j["terminal"] = tr.terminal;
    j["reason"] = stop_reason_name(tr.reason);
    std::cout << j.dump(2) << '\n';
  }
  return kExitOk;
}

struct VerifyConfig {
  std::string graph, points, mode = "both";
  bool claim5 = false;
  double ch = 0.0;  // 0 = calibrate from n
};

int cmd_verify(const VerifyConfig& cfg) {
  const PointSet ps = read_points_file(cfg.points);
  const DirectedGraph g = read_adj_file(cfg.graph);
  const DistanceOracle oracle(ps);
  require(g.n == ps.n, errc::size_mismatch, "graph and point file disagree on n");
  const bool do_property = cfg.mode == "property" || cfg.mode == "both";
  const bool do_exhaustive = cfg.mode == "exhaustive" || cfg.mode == "both";
  require(do_property || do_exhaustive, errc::out_of_range,
          "--mode must be property, exhaustive or both");

  VerifyReport rep;
  if (do_property) {
    const PermutationTable pt = build_permutations(ps, oracle);
    rep.property_holds = verify_property(g, pt);
  }
  if (do_exhaustive) {
    const ExhaustiveResult ex = verify_exhaustive(g, oracle);
    rep.exhaustive_ok = ex.ok;
    rep.max_moves = ex.max_moves;
    rep.first_failure = ex.first_failure;
  }
  if (cfg.claim5) {
    PointSet sign_ps = read_sign_points(cfg.points);
    const double ch = cfg.ch > 0.0 ? cfg.ch : calibrate_ch(sign_ps.n);
    const NearNeighborhoodSet hoods = build_hoods(sign_ps, ch);
    rep.claim5_ok = audit_claim5(g, hoods);
  }

  json j;
  if (rep.property_holds) j["property_holds"] = *rep.property_holds;
  if (rep.exhaustive_ok) j["exhaustive_ok"] = *rep.exhaustive_ok;
  if (rep.max_moves) j["max_moves"] = *rep.max_moves;
  if (rep.first_failure) {
    j["first_failure"] = {{"s", rep.first_failure->s},
                          {"t", rep.first_failure->t},
                          {"stuck_at", rep.first_failure->stuck_at}};
  }
  if (rep.claim5_ok) j["claim5_ok"] = *rep.claim5_ok;
  std::cout << j.dump(2) << '\n';

  // Exhaustive is definitive; the property alone decides only when it holds.
  const bool failed = rep.exhaustive_ok ? !*rep.exhaustive_ok
                                        : (rep.property_holds && !*rep.property_holds);
  return failed ? kExitVerifyFailed : kExitOk;
}

struct LbLabConfig {
  std::string points, out, hist;
  double ch = 0.0;
};

int cmd_lblab(const LbLabConfig& cfg) {
  const PointSet ps = read_sign_points(cfg.points);
  const double ch = cfg.ch > 0.0 ? cfg.ch : calibrate_ch(ps.n);
  const NearNeighborhoodSet hoods = build_hoods(ps, ch);
  const LowerBoundReport rep = certified_lower_bound(hoods);

  json j;
  j["n"] = ps.n;
  j["d"] = ps.d;
  j["c_h"] = rep.c_h;
  j["threshold"] = rep.threshold;
  j["log_base"] = "e";
  j["min_hood"] = rep.min_hood;
  j["mean_hood"] = rep.mean_hood;
  j["max_hood"] = rep.max_hood;
  j["max_overlap"] = rep.max_overlap;
  j["sum_required"] = rep.sum_required;
  j["certified_lb"] = rep.certified_lb;
  j["certified_avg_degree"] = static_cast<double>(rep.certified_lb) / ps.n;
  j["max_pair_inner"] = rep.max_pair_inner;
  emit(j, cfg.out);

  if (!cfg.hist.empty()) {
    const OverlapStats st = overlap_stats(hoods);
    std::ofstream out(cfg.hist);
    if (!out) fail(errc::io_error, "cannot open " + cfg.hist + " for writing");
    out << "overlap_size,pair_count\n";
    for (std::size_t k = 0; k < st.histogram.size(); ++k)
      if (st.histogram[k] != 0) out << k << ',' << st.histogram[k] << '\n';
    out.flush();
    if (!out) fail(errc::io_error, "write failed for " + cfg.hist);
  }
  return kExitOk;
}

struct WorstcaseConfig {
  int n = 128;
};

int cmd_worstcase(const WorstcaseConfig& cfg) {
  const PointSet ps = gen_hub_instance(cfg.n);
  const DistanceOracle oracle(ps);
  const DirectedGraph g = complete_graph(cfg.n);
  const ExhaustiveResult ex = verify_exhaustive(g, oracle);
  const bool audit = ex.ok && hub_degree_audit(ps, g);
  json j;
  j["n"] = cfg.n;
  j["hub_out_degree"] = g.adj[cfg.n - 1].size();
  j["exhaustive_ok"] = ex.ok;
  j["max_moves"] = ex.max_moves;
  j["audit_ok"] = audit;
  std::cout << j.dump(2) << '\n';
  return ex.ok && audit ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse navigable graph construction, search and verification"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = auto); NAVGRAPH_THREADS overrides");

  GenConfig gen_cfg;
  auto* gen = app.add_subcommand("gen", "generate a point set");
  gen->add_option("--dist", gen_cfg.dist, "sign | hub")->required();
  gen->add_option("-n", gen_cfg.n, "point count")->required();
  gen->add_option("-d", gen_cfg.d, "dimension (sign only)");
  gen->add_option("--seed", gen_cfg.seed, "generator seed");
  gen->add_option("-o,--output", gen_cfg.out, "output .pm1/.pts/.fvecs")->required();

  PermuteConfig permute_cfg;
  auto* permute = app.add_subcommand("permute", "dump distance-based permutations");
  permute->add_option("-i,--input", permute_cfg.in, "point file")->required();
  permute->add_option("-o,--output", permute_cfg.out, "output .perm")->required();

  BuildConfig build_cfg;
  auto* build = app.add_subcommand("build", "construct a navigable graph");
  build->add_option("-i,--input", build_cfg.in, "point file")->required();
  build->add_option("--method", build_cfg.method, "randomized | setcover | knn");
  build->add_option("-m", build_cfg.m, "near-neighborhood size (0 = auto)");
  build->add_option("-k", build_cfg.k, "neighbors for --method knn");
  build->add_option("--seed", build_cfg.seed, "seed for --method randomized");
  build->add_option("-o,--output", build_cfg.out, "output .adj")->required();
  build->add_option("--report", build_cfg.report, "build report JSON path (default stdout)");

  SearchConfig search_cfg;
  auto* search = app.add_subcommand("search", "run greedy search between two nodes");
  search->add_option("-g,--graph", search_cfg.graph, "graph .adj")->required();
  search->add_option("-p,--points", search_cfg.points, "point file")->required();
  search->add_option("--start", search_cfg.start, "start node")->required();
  search->add_option("--target", search_cfg.target, "target node")->required();
  search->add_option("--format", search_cfg.format, "json | text");

  VerifyConfig verify_cfg;
  auto* verify = app.add_subcommand("verify", "decide navigability");
  verify->add_option("-g,--graph", verify_cfg.graph, "graph .adj")->required();
  verify->add_option("-p,--points", verify_cfg.points, "point file")->required();
  verify->add_option("--mode", verify_cfg.mode, "property | exhaustive | both");
  verify->add_flag("--claim5", verify_cfg.claim5, "audit in-neighborhood edge counts");
  verify->add_option("--ch", verify_cfg.ch, "c_h for --claim5 (0 = calibrate)");

  LbLabConfig lblab_cfg;
  auto* lblab = app.add_subcommand("lb-lab", "near-neighborhood lower-bound lab");
  lblab->add_option("-p,--points", lblab_cfg.points, "sign point file")->required();
  lblab->add_option("--ch", lblab_cfg.ch, "c_h (0 = calibrate from n)");
  lblab->add_option("-o,--output", lblab_cfg.out, "report JSON path (default stdout)");
  lblab->add_option("--hist", lblab_cfg.hist, "overlap histogram CSV path");

  WorstcaseConfig worst_cfg;
  auto* worst = app.add_subcommand("worstcase", "max-degree worst case audit");
  worst->add_option("-n", worst_cfg.n, "instance size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  set_threads(resolve_threads(threads));
  try {
    if (gen->parsed()) return cmd_gen(gen_cfg);
    if (permute->parsed()) return cmd_permute(permute_cfg);
    if (build->parsed()) return cmd_build(build_cfg);
    if (search->parsed()) return cmd_search(search_cfg);
    if (verify->parsed()) return cmd_verify(verify_cfg);
    if (lblab->parsed()) return cmd_lblab(lblab_cfg);
    if (worst->parsed()) return cmd_worstcase(worst_cfg);
  } catch (const Error& e) {
    std::cerr << "navgraph: " << e.what() << '\n';
    return (e.code() == errc::io_error || e.code() == errc::bad_format) ? kExitIo
                                                                        : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "navgraph: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}

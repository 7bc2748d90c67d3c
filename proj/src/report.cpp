/*
 * Copyright 2026 The dlrx Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "dlrx/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace dlrx {

using nlohmann::ordered_json;

namespace {

std::string num(double d) {
  std::ostringstream os;
  os << std::setprecision(10) << d;
  return os.str();
}

std::vector<std::pair<std::uint64_t, std::pair<double, double>>> collect_diffs(
    KernelKind kind, const Csr& csr, const KernelParams& kp, const KernelOutput& out,
    std::uint32_t epochs, std::size_t limit) {
  std::vector<std::pair<std::uint64_t, std::pair<double, double>>> d;
  auto add = [&](std::uint64_t i, double got, double want) {
    if (d.size() < limit) d.push_back({i, {got, want}});
  };
  const Word inf = kp.width_bits == 64 ? ~Word{0} : 0xffffffffULL;
  std::vector<std::uint64_t> want_i;
  std::vector<double> want_r;
  switch (kind) {
    case KernelKind::Sssp: want_i = dijkstra(csr, kp.root, inf); break;
    case KernelKind::Bfs: want_i = bfs_levels(csr, kp.root, inf); break;
    case KernelKind::Wcc: want_i = wcc_labels(csr); break;
    case KernelKind::PageRank: want_r = pagerank_power(csr, kp.damping, epochs); break;
    case KernelKind::Spmv: {
      const auto x = spmv_x(csr.num_vertices, kp.x_seed, kp.spmv_float);
      if (kp.spmv_float) want_r = spmv_real(csr, x);
      else want_i = spmv_int(csr, x, kp.width_bits);
      break;
    }
  }
  if (!want_i.empty())
    for (std::size_t i = 0; i < want_i.size() && i < out.ints.size(); ++i) {
      if (want_i[i] != out.ints[i])
        add(i, static_cast<double>(out.ints[i]), static_cast<double>(want_i[i]));
    }
  for (std::size_t i = 0; i < want_r.size() && i < out.reals.size(); ++i) {
    double err = std::abs(want_r[i] - out.reals[i]);
    if (kind != KernelKind::PageRank) err /= std::max(std::abs(want_r[i]), 1e-300);
    if (!(err <= (kind == KernelKind::PageRank ? 1e-6 : 1e-9)) && want_r[i] != out.reals[i])
      add(i, out.reals[i], want_r[i]);
  }
  return d;
}

}  // namespace

RunResult run_experiment(const RunConfig& cfg_in, const Csr& csr) {
  RunResult r;
  r.cfg = resolve(cfg_in, csr);
  const Validation v = validate(r.cfg, csr);
  if (!v.ok()) {
    std::string msg;
    for (const auto& d : v.diagnostics)
      if (d.severity == Diagnostic::Severity::Error) msg += (msg.empty() ? "" : "; ") + d.message;
    throw ConfigError(msg);
  }
  r.vertices = csr.num_vertices;
  r.edges = csr.num_edges();
  r.footprint = v.footprint;
  r.tile_memory_bytes = v.tile_memory_bytes;

  KernelOutput out;
  r.stats = simulate(r.cfg.sim, csr, &out);

  const Topology topo = Topology::make(r.cfg.sim.topology, r.cfg.sim.width, r.cfg.sim.height,
                                       r.cfg.sim.ruche, r.cfg.sim.buffer_pool);
  r.area = area_of(r.tile_memory_bytes, topo, r.cfg.energy);
  r.energy = energy_of_run(r.stats, topo, r.tile_memory_bytes, r.cfg.sim.kp.width_bits,
                           r.cfg.energy);
  r.power_density_mw_mm2 = power_density(r.energy, r.stats.seconds(), r.area.chip_mm2);
  if (r.cfg.oracle) {
    r.oracle_checked = true;
    r.oracle = check_oracle(r.cfg.sim.kernel, csr, r.cfg.sim.kp, out, r.stats.epochs);
    if (!r.oracle.match)
      r.diffs = collect_diffs(r.cfg.sim.kernel, csr, r.cfg.sim.kp, out, r.stats.epochs, 100);
  }
  return r;
}

RunResult run_experiment(const RunConfig& cfg) {
  return run_experiment(cfg, load_dataset(cfg.dataset, cfg.sim.kernel, cfg.seed));
}

std::string run_json(const RunResult& r) {
  ordered_json j;
  j["schema_version"] = 1;
  ordered_json c = ordered_json::object();
  for (const auto& [k, v] : config_echo(r.cfg)) c[k] = v;
  j["config"] = c;
  j["dataset"] = {{"vertices", r.vertices}, {"edges", r.edges}, {"root", r.cfg.sim.kp.root}};

  const RunStats& s = r.stats;
  ordered_json st;
  st["cycles"] = s.cycles;
  st["seconds"] = s.seconds();
  st["edges_processed"] = s.edges_processed;
  st["micro_ops"] = s.micro_ops;
  st["mem_reads"] = s.mem_reads;
  st["mem_writes"] = s.mem_writes;
  st["messages_sent"] = s.messages_sent;
  st["messages_delivered"] = s.messages_delivered;
  st["flits_injected"] = s.flits_injected;
  st["flits_ejected"] = s.flits_ejected;
  st["unit_link_flits"] = s.unit_link_flits;
  st["ruche_link_flits"] = s.ruche_link_flits;
  st["router_traversals"] = s.router_traversals;
  st["max_hops"] = s.max_hops;
  st["epochs"] = s.epochs;
  st["broadcasts"] = s.broadcasts;
  st["edges_per_second"] = s.edges_per_second();
  st["ops_per_second"] = s.ops_per_second();
  st["mbw_bytes_per_second"] = s.mbw_bytes_per_second();
  double busy = 0, rbusy = 0;
  std::vector<std::uint64_t> inv(s.task_names.size(), 0);
  for (const auto& t : s.tiles) {
    busy += static_cast<double>(t.busy);
    rbusy += static_cast<double>(t.router_busy);
    for (std::size_t k = 0; k < inv.size() && k < t.invocations.size(); ++k)
      inv[k] += t.invocations[k];
  }
  const double denom = static_cast<double>(s.cycles) * static_cast<double>(s.tiles.size());
  st["pu_utilization"] = denom > 0 ? busy / denom : 0.0;
  st["router_utilization"] = denom > 0 ? rbusy / denom : 0.0;
  ordered_json invj = ordered_json::object();
  for (std::size_t k = 0; k < inv.size(); ++k) invj[s.task_names[k]] = inv[k];
  st["invocations"] = invj;
  j["stats"] = st;

  j["memory"] = {{"data_bytes", r.footprint.data_bytes},
                 {"queue_bytes", r.footprint.queue_bytes},
                 {"code_bytes", r.footprint.code_bytes},
                 {"tile_memory_bytes", r.tile_memory_bytes}};
  j["area"] = {{"sram_mm2", r.area.sram_mm2},     {"pu_mm2", r.area.pu_mm2},
               {"router_mm2", r.area.router_mm2}, {"tile_mm2", r.area.tile_mm2},
               {"chip_mm2", r.area.chip_mm2},     {"pitch_mm", r.area.pitch_mm}};
  const EnergyLedger& e = r.energy;
  j["energy"] = {{"compute_j", e.compute_j},
                 {"sram_j", e.sram_j},
                 {"network_j", e.network_j},
                 {"leakage_j", e.leakage_j},
                 {"total_j", e.total()},
                 {"power_density_mw_mm2", r.power_density_mw_mm2},
                 {"power_density_flag",
                  r.power_density_mw_mm2 > r.cfg.energy.power_density_limit_mw_mm2}};
  ordered_json o;
  o["checked"] = r.oracle_checked;
  if (r.oracle_checked) {
    o["match"] = r.oracle.match;
    o["mismatches"] = r.oracle.mismatches;
    o["max_error"] = r.oracle.max_error;
    o["tolerance"] = r.oracle.tolerance;
    o["detail"] = r.oracle.detail;
  }
  j["oracle"] = o;
  return j.dump(2) + "\n";
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + tmp.string());
    out << content;
    if (!out) throw ConfigError("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void write_outputs(const std::filesystem::path& dir, const RunResult& r) {
  std::filesystem::create_directories(dir);
  write_atomic(dir / "run.json", run_json(r));

  const RunStats& s = r.stats;
  const std::uint32_t w = r.cfg.sim.width, h = r.cfg.sim.height;
  const double cyc = s.cycles ? static_cast<double>(s.cycles) : 1.0;
  {
    std::ostringstream pu, rt;
    for (std::uint32_t y = 0; y < h; ++y) {
      for (std::uint32_t x = 0; x < w; ++x) {
        const TileStats& t = s.tiles[y * w + x];
        pu << (x ? "," : "") << num(static_cast<double>(t.busy) / cyc);
        rt << (x ? "," : "") << num(static_cast<double>(t.router_busy) / cyc);
      }
      pu << "\n";
      rt << "\n";
    }
    write_atomic(dir / "pu_heatmap.csv", pu.str());
    write_atomic(dir / "router_heatmap.csv", rt.str());
  }
  {
    std::ostringstream os;
    os << "tile,x,y";
    for (const auto& n : s.task_names) os << "," << n;
    os << ",busy,gated,idle\n";
    for (std::size_t i = 0; i < s.tiles.size(); ++i) {
      const TileStats& t = s.tiles[i];
      os << i << "," << i % w << "," << i / w;
      for (auto c : t.invocations) os << "," << c;
      os << "," << t.busy << "," << t.gated << "," << t.idle << "\n";
    }
    write_atomic(dir / "per_task_invocations.csv", os.str());
  }
  {
    std::ostringstream os;
    os << "cycle,pu_busy,router_busy,flits_in_network,messages_delivered\n";
    for (const auto& t : s.timeline)
      os << t.cycle << "," << num(t.pu_busy) << "," << num(t.router_busy) << ","
         << t.flits_in_network << "," << t.messages_delivered << "\n";
    write_atomic(dir / "timeline.csv", os.str());
  }
  {
    const EnergyLedger& e = r.energy;
    std::ostringstream os;
    os << "category,joules,fraction\n";
    os << "compute," << num(e.compute_j) << "," << num(e.fraction(e.compute_j)) << "\n";
    os << "sram," << num(e.sram_j) << "," << num(e.fraction(e.sram_j)) << "\n";
    os << "network," << num(e.network_j) << "," << num(e.fraction(e.network_j)) << "\n";
    os << "leakage," << num(e.leakage_j) << "," << num(e.fraction(e.leakage_j)) << "\n";
    os << "total," << num(e.total()) << ",1\n";
    write_atomic(dir / "energy_breakdown.csv", os.str());
  }
  if (r.oracle_checked && !r.oracle.match) {
    std::ostringstream os;
    os << "index,got,want\n";
    for (const auto& [i, gw] : r.diffs)
      os << i << "," << num(gw.first) << "," << num(gw.second) << "\n";
    write_atomic(dir / "oracle_diff.csv", os.str());
  }
}

std::string scaling_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  if (rows.empty()) return "";
  for (const auto& [k, v] : rows.front().point) os << k << ",";
  os << "tiles,cycles,seconds,edges_per_second,mbw_bytes_per_second,energy_j,"
        "chip_mm2,power_density_mw_mm2,tile_memory_bytes,oracle\n";
  for (const auto& row : rows) {
    for (const auto& [k, v] : row.point) os << v << ",";
    const RunResult& r = row.result;
    os << r.cfg.sim.tiles() << "," << r.stats.cycles << "," << num(r.stats.seconds()) << ","
       << num(r.stats.edges_per_second()) << "," << num(r.stats.mbw_bytes_per_second())
       << "," << num(r.energy.total()) << "," << num(r.area.chip_mm2) << ","
       << num(r.power_density_mw_mm2) << "," << r.tile_memory_bytes << ","
       << (!r.oracle_checked ? "skipped" : r.oracle.match ? "match" : "mismatch") << "\n";
  }
  return os.str();
}

}  // namespace dlrx

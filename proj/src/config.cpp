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


#include "dlrx/config.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <limits>
#include <map>
#include <tuple>
#include <fstream>
#include <sstream>

#include "dlrx/kernels.hpp"

namespace dlrx {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  std::string s = trim(v);
  // Accept 1e9 style for large limits.
  if (s.find_first_of("eE") != std::string::npos) {
    std::istringstream is(s);
    double d = 0;
    if (!(is >> d) || !is.eof() || d < 0 || d != std::floor(d))
      throw ConfigError(key + ": expected a non-negative integer, got '" + v + "'");
    return static_cast<std::uint64_t>(d);
  }
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ConfigError(key + ": expected a non-negative integer, got '" + v + "'");
  return out;
}

std::uint32_t to_u32(const std::string& key, const std::string& v) {
  const auto x = to_u64(key, v);
  if (x > 0xffffffffULL) throw ConfigError(key + ": value too large");
  return static_cast<std::uint32_t>(x);
}

double to_double(const std::string& key, const std::string& v) {
  const std::string s = trim(v);
  if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  std::istringstream is(s);
  double d = 0;
  if (!(is >> d) || !is.eof()) throw ConfigError(key + ": expected a number, got '" + v + "'");
  return d;
}

bool to_bool(const std::string& key, const std::string& v) {
  const std::string s = trim(v);
  if (s == "on" || s == "true" || s == "1" || s == "yes") return true;
  if (s == "off" || s == "false" || s == "0" || s == "no") return false;
  throw ConfigError(key + ": expected on|off, got '" + v + "'");
}

// Shortest text that parses back to the same double.
std::string fmt_double(double d) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, r.ptr);
}

std::string on_off(bool b) { return b ? "on" : "off"; }

ConfigKey u32_key(std::string name, std::string help,
                  std::function<std::uint32_t&(RunConfig&)> ref, bool echo = true) {
  return {name, std::move(help),
          [name, ref](RunConfig& c, const std::string& v) { ref(c) = to_u32(name, v); },
          [ref](const RunConfig& c) {
            return std::to_string(ref(const_cast<RunConfig&>(c)));
          },
          echo};
}

ConfigKey u64_key(std::string name, std::string help,
                  std::function<std::uint64_t&(RunConfig&)> ref) {
  return {name, std::move(help),
          [name, ref](RunConfig& c, const std::string& v) { ref(c) = to_u64(name, v); },
          [ref](const RunConfig& c) {
            return std::to_string(ref(const_cast<RunConfig&>(c)));
          },
          true};
}

ConfigKey real_key(std::string name, std::string help,
                   std::function<double&(RunConfig&)> ref) {
  return {name, std::move(help),
          [name, ref](RunConfig& c, const std::string& v) { ref(c) = to_double(name, v); },
          [ref](const RunConfig& c) { return fmt_double(ref(const_cast<RunConfig&>(c))); },
          true};
}

ConfigKey bool_key(std::string name, std::string help, std::function<bool&(RunConfig&)> ref) {
  return {name, std::move(help),
          [name, ref](RunConfig& c, const std::string& v) { ref(c) = to_bool(name, v); },
          [ref](const RunConfig& c) { return on_off(ref(const_cast<RunConfig&>(c))); }, true};
}

ConfigKey cost_key(const std::string& op, OpKind k) {
  return u32_key("cost." + op, "cycles per " + op + " micro-op",
                 [k](RunConfig& c) -> std::uint32_t& {
                   return c.sim.costs.cycles[static_cast<std::size_t>(k)];
                 });
}

std::vector<ConfigKey> build_keys() {
  std::vector<ConfigKey> k;
  k.push_back({"kernel", "bfs|sssp|wcc|pagerank|spmv",
               [](RunConfig& c, const std::string& v) { c.sim.kernel = parse_kernel(trim(v)); },
               [](const RunConfig& c) { return to_string(c.sim.kernel); }, true});
  k.push_back({"dataset", "file:PATH | rmat:s=..:ef=.. | uniform:n=..:density=..",
               [](RunConfig& c, const std::string& v) { c.dataset = trim(v); },
               [](const RunConfig& c) { return c.dataset; }, true});
  k.push_back({"grid", "WxH, powers of two",
               [](RunConfig& c, const std::string& v) {
                 std::tie(c.sim.width, c.sim.height) = parse_grid(trim(v));
               },
               [](const RunConfig& c) {
                 return std::to_string(c.sim.width) + "x" + std::to_string(c.sim.height);
               },
               true});
  k.push_back({"topology", "mesh|torus",
               [](RunConfig& c, const std::string& v) { c.sim.topology = parse_topology(trim(v)); },
               [](const RunConfig& c) { return to_string(c.sim.topology); }, true});
  k.push_back(u32_key("ruche", "ruche factor (1 = none)",
                      [](RunConfig& c) -> std::uint32_t& { return c.sim.ruche; }));
  k.push_back({"placement", "contiguous|interleaved",
               [](RunConfig& c, const std::string& v) { c.sim.placement = parse_placement(trim(v)); },
               [](const RunConfig& c) { return to_string(c.sim.placement); }, true});
  k.push_back({"barrier", "off|epoch",
               [](RunConfig& c, const std::string& v) {
                 const std::string s = trim(v);
                 if (s == "off") c.sim.kp.barrier = false;
                 else if (s == "epoch") c.sim.kp.barrier = true;
                 else throw ConfigError("barrier: expected off|epoch, got '" + v + "'");
               },
               [](const RunConfig& c) { return std::string(c.sim.kp.barrier ? "epoch" : "off"); },
               true});
  k.push_back(u64_key("seed", "default generator seed (datasets without seed=, SPMV x)",
                      [](RunConfig& c) -> std::uint64_t& { return c.seed; }));
  k.push_back(u64_key("cycle-limit", "abort after this many cycles",
                      [](RunConfig& c) -> std::uint64_t& { return c.sim.cycle_limit; }));
  k.push_back({"out", "output directory",
               [](RunConfig& c, const std::string& v) { c.out = trim(v); },
               [](const RunConfig& c) { return c.out; }, false});
  k.push_back(bool_key("oracle", "compare against the sequential oracle",
                       [](RunConfig& c) -> bool& { return c.oracle; }));
  k.push_back(u32_key("flit-width", "32|64",
                      [](RunConfig& c) -> std::uint32_t& { return c.sim.kp.width_bits; }));
  k.push_back(u32_key("workers", "host threads stepping tiles (results are identical)",
                      [](RunConfig& c) -> std::uint32_t& { return c.sim.workers; }, false));

  k.push_back(u32_key("noc.buffer_pool", "router buffer slots per input direction",
                      [](RunConfig& c) -> std::uint32_t& { return c.sim.buffer_pool; }));
  k.push_back({"sim.idle_latency", "idle-signal latency in cycles (auto = 2*(log2 W + log2 H))",
               [](RunConfig& c, const std::string& v) {
                 c.sim.idle_latency = trim(v) == "auto"
                                          ? -1
                                          : static_cast<std::int64_t>(
                                                to_u64("sim.idle_latency", v));
               },
               [](const RunConfig& c) {
                 return c.sim.idle_latency < 0 ? std::string("auto")
                                               : std::to_string(c.sim.idle_latency);
               },
               true});
  k.push_back(u32_key("sim.timeline_interval", "cycles per timeline sample",
                      [](RunConfig& c) -> std::uint32_t& { return c.sim.timeline_interval; }));
  k.push_back(bool_key("sim.check_invariants", "per-cycle flit conservation check",
                       [](RunConfig& c) -> bool& { return c.sim.check_invariants; }));

  k.push_back({"kernel.root", "BFS/SSSP root vertex, or auto (highest out-degree)",
               [](RunConfig& c, const std::string& v) {
                 c.root_auto = trim(v) == "auto";
                 if (!c.root_auto) c.sim.kp.root = to_u64("kernel.root", v);
               },
               [](const RunConfig& c) {
                 return c.root_auto ? std::string("auto") : std::to_string(c.sim.kp.root);
               },
               true});
  k.push_back(u32_key("kernel.oqt2", "max edges per CQ1 message (0 = q_len(CQ2)/flits per edge)",
                      [](RunConfig& c) -> std::uint32_t& { return c.sim.kp.oqt2; }));
  k.push_back(real_key("kernel.damping", "PageRank damping",
                       [](RunConfig& c) -> double& { return c.sim.kp.damping; }));
  k.push_back(real_key("kernel.epsilon", "PageRank L1 convergence threshold",
                       [](RunConfig& c) -> double& { return c.sim.kp.epsilon; }));
  k.push_back(u32_key("kernel.max_epochs", "PageRank epoch cap",
                      [](RunConfig& c) -> std::uint32_t& { return c.sim.kp.max_epochs; }));
  k.push_back(bool_key("kernel.spmv_float", "SPMV with float32 products",
                       [](RunConfig& c) -> bool& { return c.sim.kp.spmv_float; }));

  k.push_back(u32_key("queue.t1", "IQ entries of T1",
                      [](RunConfig& c) -> std::uint32_t& { return c.sim.kp.iq_t1; }));
  k.push_back(u32_key("queue.t2", "IQ entries of T2",
                      [](RunConfig& c) -> std::uint32_t& { return c.sim.kp.iq_t2; }));
  k.push_back(u32_key("queue.t3", "IQ entries of T3",
                      [](RunConfig& c) -> std::uint32_t& { return c.sim.kp.iq_t3; }));
  k.push_back(u32_key("queue.t4", "minimum IQ entries of T4 (never below one per frontier block)",
                      [](RunConfig& c) -> std::uint32_t& { return c.sim.kp.iq_t4; }));
  k.push_back(u32_key("queue.acc", "IQ entries of the SPMV accumulation task",
                      [](RunConfig& c) -> std::uint32_t& { return c.sim.kp.iq_acc; }));
  k.push_back(u32_key("queue.cq1", "CQ1 entries",
                      [](RunConfig& c) -> std::uint32_t& { return c.sim.kp.cq1_len; }));
  k.push_back(u32_key("queue.cq2", "CQ2 entries",
                      [](RunConfig& c) -> std::uint32_t& { return c.sim.kp.cq2_len; }));
  k.push_back(u32_key("queue.cq3", "CQ3 entries (SPMV)",
                      [](RunConfig& c) -> std::uint32_t& { return c.sim.kp.cq3_len; }));

  k.push_back(real_key("sched.high_watermark", "IQ fill fraction for High priority",
                       [](RunConfig& c) -> double& { return c.sim.sched.high_watermark; }));
  k.push_back(real_key("sched.low_watermark", "OQ fill fraction for Medium priority",
                       [](RunConfig& c) -> double& { return c.sim.sched.low_watermark; }));
  k.push_back({"sched.tie_break", "capacity|occupancy",
               [](RunConfig& c, const std::string& v) {
                 const std::string s = trim(v);
                 if (s == "capacity") c.sim.sched.tie_by_occupancy = false;
                 else if (s == "occupancy") c.sim.sched.tie_by_occupancy = true;
                 else throw ConfigError("sched.tie_break: expected capacity|occupancy");
               },
               [](const RunConfig& c) {
                 return std::string(c.sim.sched.tie_by_occupancy ? "occupancy" : "capacity");
               },
               true});

  k.push_back(cost_key("load", OpKind::Load));
  k.push_back(cost_key("store", OpKind::Store));
  k.push_back(cost_key("alu", OpKind::Alu));
  k.push_back(cost_key("branch", OpKind::Branch));
  k.push_back(cost_key("push_oq", OpKind::PushOq));
  k.push_back(cost_key("pop_iq", OpKind::PopIq));
  k.push_back(cost_key("peek_iq", OpKind::PeekIq));
  k.push_back(cost_key("queue_status", OpKind::QueueStatus));
  k.push_back(cost_key("load_push", OpKind::LoadPush));

  k.push_back(u64_key("tile.sram_kb", "scratchpad KB per tile (0 = footprint in 32 KB macros)",
                      [](RunConfig& c) -> std::uint64_t& { return c.sram_kb; }));
  k.push_back(u64_key("tile.code_kb", "code region budget in KB",
                      [](RunConfig& c) -> std::uint64_t& { return c.code_kb; }));

  k.push_back(real_key("energy.sram_read_pj", "pJ per scratchpad read",
                       [](RunConfig& c) -> double& { return c.energy.sram_read_pj; }));
  k.push_back(real_key("energy.sram_write_pj", "pJ per scratchpad write",
                       [](RunConfig& c) -> double& { return c.energy.sram_write_pj; }));
  k.push_back(real_key("energy.wire_pj_per_mm", "pJ per 32-bit flit per mm",
                       [](RunConfig& c) -> double& { return c.energy.wire_pj_per_mm; }));
  k.push_back(real_key("energy.alu_op_pj", "pJ per micro-op",
                       [](RunConfig& c) -> double& { return c.energy.alu_op_pj; }));
  k.push_back(real_key("energy.router_flit_pj", "pJ per flit per router",
                       [](RunConfig& c) -> double& { return c.energy.router_flit_pj; }));
  k.push_back(real_key("energy.pu_leakage_mw", "PU leakage per tile",
                       [](RunConfig& c) -> double& { return c.energy.pu_leakage_mw; }));
  k.push_back(real_key("energy.sram_leakage_uw", "leakage per 32 KB macro",
                       [](RunConfig& c) -> double& { return c.energy.sram_leakage_uw; }));
  k.push_back(real_key("energy.density_mbit_mm2", "SRAM density",
                       [](RunConfig& c) -> double& { return c.energy.sram_density_mbit_mm2; }));
  k.push_back(real_key("energy.pu_area_mm2", "PU area",
                       [](RunConfig& c) -> double& { return c.energy.pu_area_mm2; }));
  k.push_back(real_key("energy.router_area_mm2", "mesh router area",
                       [](RunConfig& c) -> double& { return c.energy.router_area_mm2; }));
  k.push_back(real_key("energy.torus_router_factor", "torus router area over mesh",
                       [](RunConfig& c) -> double& { return c.energy.torus_router_factor; }));
  return k;
}

std::map<std::string, std::string> uri_fields(const std::string& body, const std::string& uri) {
  std::map<std::string, std::string> f;
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ':')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos)
      throw ConfigError("dataset '" + uri + "': expected key=value, got '" + part + "'");
    f[part.substr(0, eq)] = part.substr(eq + 1);
  }
  return f;
}

}  // namespace

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys = build_keys();
  return keys;
}

const ConfigKey* find_key(const std::string& name) {
  for (const auto& k : config_keys())
    if (k.name == name) return &k;
  return nullptr;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  const ConfigKey* k = find_key(key);
  if (!k) throw ConfigError("unknown configuration key '" + key + "'");
  k->set(cfg, value);
}

std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string& text,
                                                                   const std::string& name) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(detail::concat(name, ":", n, ": expected 'key = value'"));
    const std::string key = trim(line.substr(0, eq));
    if (!find_key(key))
      throw ConfigError(detail::concat(name, ":", n, ": unknown key '", key, "'"));
    out.emplace_back(key, trim(line.substr(eq + 1)));
  }
  return out;
}

void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  for (const auto& [k, v] : parse_config_text(ss.str(), path)) apply_setting(cfg, k, v);
}

std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& k : config_keys())
    if (k.echo) out.emplace_back(k.name, k.get(cfg));
  return out;
}

std::pair<std::uint32_t, std::uint32_t> parse_grid(const std::string& s) {
  const auto x = s.find('x');
  if (x == std::string::npos) throw ConfigError("grid: expected WxH, got '" + s + "'");
  const std::uint32_t w = to_u32("grid", s.substr(0, x));
  const std::uint32_t h = to_u32("grid", s.substr(x + 1));
  if (!is_pow2(w) || !is_pow2(h))
    throw ConfigError("grid " + s + ": width and height must be powers of two");
  return {w, h};
}

Csr load_dataset(const std::string& uri, KernelKind kernel, std::uint64_t seed) {
  const bool weighted = kernel_weighted(kernel);
  const bool sym = kernel_symmetric(kernel);
  const auto colon = uri.find(':');
  const std::string scheme = uri.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : uri.substr(colon + 1);
  if (scheme == "file") {
    if (body.empty()) throw ConfigError("dataset 'file:' needs a path");
    if (!std::filesystem::exists(body)) throw ConfigError("dataset not found: " + body);
    if (is_binary_csr(body)) {
      Csr csr = read_binary_csr(body);
      if (!sym) return csr;
      // Rebuild through the edge list to symmetrize.
      Graph g;
      g.num_vertices = csr.num_vertices;
      g.weighted = csr.weighted;
      for (std::uint64_t u = 0; u < csr.num_vertices; ++u)
        for (std::uint64_t k = csr.ptr[u]; k < csr.ptr[u + 1]; ++k)
          g.edges.push_back({static_cast<VertexId>(u), csr.edge_idx[k], csr.edge_values[k]});
      return build_csr(g, true);
    }
    // Weight columns are accepted for every kernel; unweighted kernels ignore them.
    return build_csr(load_edge_list(body, true), sym);
  }
  const auto f = uri_fields(body, uri);
  auto get = [&](const std::string& k, const std::string& dflt) {
    const auto it = f.find(k);
    return it == f.end() ? dflt : it->second;
  };
  auto check_known = [&](std::initializer_list<const char*> known) {
    for (const auto& [k, v] : f) {
      bool ok = false;
      for (const char* n : known) ok |= k == n;
      if (!ok) throw ConfigError("dataset '" + uri + "': unknown field '" + k + "'");
    }
  };
  if (scheme == "rmat") {
    check_known({"s", "scale", "ef", "seed", "a", "b", "c", "d", "sort", "permute"});
    RmatParams p;
    p.scale = static_cast<int>(to_u32("rmat scale", get("s", get("scale", "10"))));
    p.edge_factor = to_u32("rmat ef", get("ef", "10"));
    p.seed = to_u64("rmat seed", get("seed", std::to_string(seed)));
    p.a = to_double("rmat a", get("a", "0.57"));
    p.b = to_double("rmat b", get("b", "0.19"));
    p.c = to_double("rmat c", get("c", "0.19"));
    p.d = to_double("rmat d", get("d", "0.05"));
    p.weighted = weighted;
    p.permute = to_bool("rmat permute", get("permute", "1"));
    Graph g = rmat_generate(p);
    const std::string sort = get("sort", "none");
    if (sort == "degree")
      g = degree_sorted(g);
    else if (sort != "none")
      throw ConfigError("dataset '" + uri + "': sort must be degree|none");
    return build_csr(g, sym);
  }
  if (scheme == "uniform") {
    check_known({"n", "density", "seed"});
    Graph g = uniform_random(to_u64("uniform n", get("n", "1024")),
                             to_double("uniform density", get("density", "0.01")),
                             to_u64("uniform seed", get("seed", std::to_string(seed))));
    g.weighted = weighted;
    if (!weighted)
      for (auto& e : g.edges) e.weight = 1;
    return build_csr(g, sym);
  }
  throw ConfigError("dataset '" + uri + "': unknown scheme (file|rmat|uniform)");
}

RunConfig resolve(const RunConfig& cfg, const Csr& csr) {
  RunConfig r = cfg;
  r.sim.kp.x_seed = cfg.seed;
  if (cfg.root_auto) {
    std::uint64_t best = 0;
    r.sim.kp.root = 0;
    for (std::uint64_t v = 0; v < csr.num_vertices; ++v)
      if (csr.ptr[v + 1] - csr.ptr[v] > best) {
        best = csr.ptr[v + 1] - csr.ptr[v];
        r.sim.kp.root = v;
      }
  }
  return r;
}

bool Validation::ok() const {
  for (const auto& d : diagnostics)
    if (d.severity == Diagnostic::Severity::Error) return false;
  return true;
}

std::string to_string(const Diagnostic& d) {
  const char* sev = d.severity == Diagnostic::Severity::Error     ? "error"
                    : d.severity == Diagnostic::Severity::Warning ? "warning"
                                                                  : "info";
  return std::string(sev) + " [" + d.code + "] " + d.message;
}

Validation validate(const RunConfig& cfg_in, const Csr& csr) {
  const RunConfig cfg = resolve(cfg_in, csr);
  Validation v;
  auto error = [&](std::string code, std::string msg) {
    v.diagnostics.push_back({Diagnostic::Severity::Error, std::move(code), std::move(msg)});
  };
  Topology topo;
  try {
    topo = Topology::make(cfg.sim.topology, cfg.sim.width, cfg.sim.height, cfg.sim.ruche,
                          cfg.sim.buffer_pool);
  } catch (const ConfigError& e) {
    error("grid", e.what());
    return v;
  }
  if (cfg.sim.cycle_limit == 0) error("cycle-limit", "cycle limit must be positive");
  const KernelParams& kp = cfg.sim.kp;
  const std::uint32_t fpe = cfg.sim.kernel == KernelKind::Spmv ? 3 : 2;
  if (kp.oqt2 && static_cast<std::uint64_t>(kp.oqt2) * fpe > kp.cq2_len)
    error("oqt2", detail::concat("task-program OQT2 rule: T2's worst case of ", fpe,
                                 " x OQT2 = ", static_cast<std::uint64_t>(kp.oqt2) * fpe,
                                 " flits exceeds q_len(CQ2) = ", kp.cq2_len));

  const PartitionedDataset d = partition(csr, cfg.sim.placement, topo.tiles());
  std::unique_ptr<Kernel> kernel;
  try {
    kernel = make_kernel(cfg.sim.kernel, kp, d);
  } catch (const ConfigError& e) {
    const std::string m = e.what();
    error(m.find("OQT2") != std::string::npos       ? "oqt2"
          : m.find("head bits") != std::string::npos ? "head-bits"
                                                     : "kernel",
          m);
    return v;
  }
  const std::uint64_t code_budget = cfg.code_kb * 1024;
  if (kernel->program().code_bytes > code_budget)
    error("code", detail::concat("program needs ", kernel->program().code_bytes,
                                 " code bytes, budget is ", code_budget));
  v.footprint = kernel->footprint(d);
  v.footprint.code_bytes = code_budget;
  v.tile_memory_bytes = tile_memory_bytes(v.footprint.total(), cfg.sram_kb, cfg.energy);
  if (cfg.sram_kb) {
    const std::uint64_t have = cfg.sram_kb * 1024;
    if (v.footprint.queue_bytes + v.footprint.code_bytes > have)
      error("queues", detail::concat("queue regions (", v.footprint.queue_bytes,
                                     " B) plus code (", v.footprint.code_bytes,
                                     " B) exceed the ", cfg.sram_kb, " KB scratchpad"));
    else if (v.footprint.total() > have)
      error("capacity",
            detail::concat("dataset does not fit the aggregated scratchpad: each tile needs ",
                           ceil_div(v.footprint.total(), 1024), " KB, has ", cfg.sram_kb,
                           " KB (", topo.tiles(), " tiles)"));
  }
  v.diagnostics.push_back(
      {Diagnostic::Severity::Info, "footprint",
       detail::concat("per tile: data ", v.footprint.data_bytes, " B, queues ",
                      v.footprint.queue_bytes, " B, code ", v.footprint.code_bytes,
                      " B; provisioned ", v.tile_memory_bytes, " B")});
  return v;
}

Validation validate(const RunConfig& cfg) {
  Csr csr;
  try {
    csr = load_dataset(cfg.dataset, cfg.sim.kernel, cfg.seed);
  } catch (const ConfigError& e) {
    Validation v;
    v.diagnostics.push_back({Diagnostic::Severity::Error, "dataset", e.what()});
    return v;
  }
  return validate(cfg, csr);
}

}  // namespace dlrx

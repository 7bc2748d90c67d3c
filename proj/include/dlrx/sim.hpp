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


#pragma once

#include <cstdint>
#include <exception>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlrx/graph.hpp"
#include "dlrx/kernels.hpp"
#include "dlrx/noc.hpp"
#include "dlrx/placement.hpp"
#include "dlrx/tile.hpp"

namespace dlrx {

/// Run stopped before quiescence: cycle limit or livelock monitor.
class SimAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimConfig {
  std::uint32_t width = 4;
  std::uint32_t height = 4;
  TopologyKind topology = TopologyKind::Torus;
  std::uint32_t ruche = 1;
  std::uint32_t buffer_pool = 8;
  Placement placement = Placement::Interleaved;
  KernelKind kernel = KernelKind::Bfs;
  KernelParams kp;
  SchedulerParams sched;
  CostModel costs;
  std::uint64_t cycle_limit = 1'000'000'000ULL;
  /// Staged idle-signal delay; negative selects 2 * (log2 W + log2 H).
  std::int64_t idle_latency = -1;
  std::uint32_t timeline_interval = 1000;
  std::uint32_t workers = 1;
  bool record_causal = false;
  bool check_invariants = true;

  std::uint32_t tiles() const { return width * height; }
  std::uint64_t detection_latency() const;
};

struct TimelineSample {
  Cycle cycle = 0;
  double pu_busy = 0.0;     // fraction of PUs busy in the window
  double router_busy = 0.0; // fraction of routers that moved a flit in the window
  std::uint64_t flits_in_network = 0;
  std::uint64_t messages_delivered = 0;  // in the window
};

struct TileStats {
  std::uint64_t busy = 0, gated = 0, idle = 0;
  std::uint64_t mem_reads = 0, mem_writes = 0;
  std::uint64_t micro_ops = 0;
  std::uint64_t edges = 0;
  std::vector<std::uint64_t> invocations;
  std::vector<std::uint32_t> iq_high_water;
  std::uint64_t router_busy = 0;
  std::uint64_t router_stalls = 0;
  std::uint64_t router_flits = 0;  // flits leaving through network ports
  std::uint32_t buffer_high_water = 0;
  std::array<std::uint64_t, kMaxPorts> port_flits{};
};

struct RunStats {
  Cycle cycles = 0;
  std::uint64_t edges_processed = 0;
  std::uint64_t micro_ops = 0;
  std::uint64_t mem_reads = 0;
  std::uint64_t mem_writes = 0;
  std::uint64_t messages_sent = 0;
  std::uint64_t messages_delivered = 0;
  std::uint64_t flits_injected = 0;
  std::uint64_t flits_ejected = 0;
  std::uint64_t unit_link_flits = 0;   // flits over N/E/S/W links
  std::uint64_t ruche_link_flits = 0;  // flits over ruche links
  std::uint64_t router_traversals = 0;
  std::uint32_t max_hops = 0;
  std::uint32_t epochs = 0;
  std::uint32_t broadcasts = 0;
  std::uint32_t word_bytes = 4;
  std::vector<TileStats> tiles;
  std::vector<std::string> task_names;
  std::vector<TimelineSample> timeline;

  double seconds() const { return static_cast<double>(cycles) * 1e-9; }
  double edges_per_second() const;
  double ops_per_second() const;
  double mbw_bytes_per_second() const;
};

/// The whole chip: tiles, routers and the host-side controller.
class World {
 public:
  World(const SimConfig& cfg, const Csr& csr);
  ~World();
  World(const World&) = delete;
  World& operator=(const World&) = delete;

  /// Advances one cycle (phase A, phase B, serial bookkeeping).
  void step();
  /// True when all queues, buffers and PUs are empty or idle.
  bool quiescent() const;
  /// Runs to termination, including barrier epochs. Throws SimAbort.
  void run();

  RunStats collect_stats() const;
  KernelOutput output() const { return kernel_->output(tiles_, dataset_); }

  Cycle cycle() const { return now_; }
  const SimConfig& config() const { return cfg_; }
  const Topology& topology() const { return topo_; }
  const PartitionedDataset& dataset() const { return dataset_; }
  const Kernel& kernel() const { return *kernel_; }
  const std::vector<Tile>& tiles() const { return tiles_; }
  const std::vector<Router>& routers() const { return routers_; }
  const ExecEnv& env() const { return env_; }
  std::uint64_t flits_in_network() const;
  std::uint64_t livelock_bound() const { return livelock_bound_; }

 private:
  struct Pool;

  void phase_a(std::uint32_t begin, std::uint32_t end);
  void phase_b(std::uint32_t begin, std::uint32_t end);
  void tile_cycle(TileId t);
  void inject(TileId t);
  void eject(TileId t);
  void serial_step();
  void check_conservation() const;
  void sample_timeline();

  SimConfig cfg_;
  Topology topo_;
  PartitionedDataset dataset_;
  std::unique_ptr<Kernel> kernel_;
  ExecEnv env_;
  std::vector<Tile> tiles_;
  std::vector<Router> routers_;
  std::vector<TileId> inject_dest_;  // [tile * nch + ch]
  std::vector<std::uint8_t> progress_;
  std::vector<std::uint8_t> router_moved_;
  std::vector<std::uint32_t> max_hops_;
  Cycle now_ = 0;
  Cycle last_progress_ = 0;
  std::uint64_t livelock_bound_ = 64;
  std::uint32_t hop_bound_ = 0;
  std::vector<TimelineSample> timeline_;
  std::uint64_t window_busy_ = 0, window_router_ = 0, window_delivered_ = 0;
  std::uint64_t window_cycles_ = 0;
  std::unique_ptr<Pool> pool_;
};

/// Convenience: build, run and collect.
RunStats simulate(const SimConfig& cfg, const Csr& csr, KernelOutput* output = nullptr);

}  // namespace dlrx

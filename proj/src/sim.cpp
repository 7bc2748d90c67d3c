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


#include "dlrx/sim.hpp"

#include <algorithm>
#include <atomic>
#include <barrier>
#include <thread>

namespace dlrx {

namespace {

constexpr std::uint8_t kPuBusy = 1, kDelivered = 2, kRouterMoved = 4;

}  // namespace

std::uint64_t SimConfig::detection_latency() const {
  if (idle_latency >= 0) return static_cast<std::uint64_t>(idle_latency);
  return 2ULL * (log2_floor(width) + log2_floor(height));
}

double RunStats::edges_per_second() const {
  return cycles ? static_cast<double>(edges_processed) / seconds() : 0.0;
}
double RunStats::ops_per_second() const {
  return cycles ? static_cast<double>(micro_ops) / seconds() : 0.0;
}
double RunStats::mbw_bytes_per_second() const {
  return cycles ? static_cast<double>((mem_reads + mem_writes) * word_bytes) / seconds() : 0.0;
}

// Persistent workers stepping disjoint tile ranges between barriers. The
// calling thread acts as worker 0.
struct World::Pool {
  World& world;
  std::uint32_t n;
  std::barrier<> bar;
  std::vector<std::thread> threads;
  std::atomic<bool> stop{false};
  std::vector<std::exception_ptr> errors;

  Pool(World& w, std::uint32_t count) : world(w), n(count), bar(count), errors(count) {
    for (std::uint32_t i = 1; i < n; ++i)
      threads.emplace_back([this, i] {
        while (true) {
          bar.arrive_and_wait();
          if (stop.load()) return;
          work(i);
        }
      });
  }
  ~Pool() {
    stop.store(true);
    bar.arrive_and_wait();
    for (auto& t : threads) t.join();
  }
  std::pair<std::uint32_t, std::uint32_t> range(std::uint32_t i) const {
    const std::uint32_t tiles = static_cast<std::uint32_t>(world.tiles_.size());
    return {tiles * i / n, tiles * (i + 1) / n};
  }
  void work(std::uint32_t i) {
    const auto [b, e] = range(i);
    try {
      world.phase_a(b, e);
    } catch (...) {
      errors[i] = std::current_exception();
    }
    bar.arrive_and_wait();
    try {
      if (!errors[i]) world.phase_b(b, e);
    } catch (...) {
      errors[i] = std::current_exception();
    }
    bar.arrive_and_wait();
  }
  void step() {
    bar.arrive_and_wait();
    work(0);
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
};

World::World(const SimConfig& cfg, const Csr& csr) : cfg_(cfg) {
  topo_ = Topology::make(cfg.topology, cfg.width, cfg.height, cfg.ruche, cfg.buffer_pool);
  if (cfg.cycle_limit == 0) throw ConfigError("cycle limit must be positive");
  dataset_ = partition(csr, cfg.placement, topo_.tiles());
  KernelParams kp = cfg.kp;
  kernel_ = make_kernel(cfg.kernel, kp, dataset_);
  const TaskProgram& program = kernel_->program();

  env_.program = &program;
  env_.costs = cfg.costs;
  env_.width_bits = kp.width_bits;
  env_.record_causal = cfg.record_causal;
  std::vector<std::uint32_t> flits;
  for (const auto& c : program.channels) {
    ChannelCodec cc;
    cc.policy = c.encode == ArrayClass::Vertex ? dataset_.vertex_policy : dataset_.edge_policy;
    cc.codec = HeadCodec{kp.width_bits, topo_.tile_bits()};
    cc.flits = c.flits_per_message;
    env_.channels.push_back(cc);
    flits.push_back(c.flits_per_message);
  }

  const std::uint32_t n = topo_.tiles();
  tiles_.reserve(n);
  for (TileId t = 0; t < n; ++t) {
    tiles_.emplace_back(t, program);
    tiles_.back().data = kernel_->make_tile_data(t, dataset_);
  }
  const auto slots = channel_slots(topo_.buffer_pool, flits);
  routers_.resize(n);
  for (auto& r : routers_) r.init(topo_.num_ports(), slots);
  kernel_->seed(tiles_, dataset_);

  inject_dest_.assign(static_cast<std::size_t>(n) * program.channels.size(), 0);
  progress_.assign(n, 0);
  max_hops_.assign(n, 0);
  const std::uint32_t max_slots = *std::max_element(slots.begin(), slots.end());
  livelock_bound_ = std::max<std::uint64_t>(
      64, static_cast<std::uint64_t>(n) * program.max_message_flits() * max_slots);
  hop_bound_ = topo_.torus() ? topo_.width / 2 + topo_.height / 2
                             : (topo_.width - 1) + (topo_.height - 1);
  const std::uint32_t workers = std::min(cfg.workers, n);
  if (workers > 1) pool_ = std::make_unique<Pool>(*this, workers);
}

World::~World() = default;

void World::phase_a(std::uint32_t begin, std::uint32_t end) {
  for (std::uint32_t t = begin; t < end; ++t) router_arbitrate(routers_[t], t, routers_, topo_);
}

void World::phase_b(std::uint32_t begin, std::uint32_t end) {
  for (std::uint32_t t = begin; t < end; ++t) tile_cycle(t);
}

void World::inject(TileId t) {
  Tile& tile = tiles_[t];
  Router& r = routers_[t];
  const std::size_t nch = tile.cq.size();
  for (std::uint32_t c = 0; c < nch; ++c) {
    Queue& q = tile.cq[c];
    if (q.empty() || q.front_ready() > now_ || r.buffer(Local, c).free() == 0) continue;
    Flit f;
    f.tag = q.front_tag();
    f.payload = q.pop();
    ++tile.counters.mem_reads;
    f.channel = static_cast<std::uint8_t>(c);
    f.len = static_cast<std::uint16_t>(env_.channels[c].flits);
    f.src = t;
    f.head = tile.inject_pos[c] == 0;
    TileId& dest = inject_dest_[t * nch + c];
    if (f.head) dest = env_.channels[c].codec.decode(f.payload).tile;
    DLRX_ASSERT(dest < tiles_.size(), "tile ", t, ": head flit decodes to tile ", dest,
                " outside the grid");
    f.dest = dest;
    tile.inject_pos[c] = (tile.inject_pos[c] + 1) % f.len;
    r.accept(Local, f);
    ++r.counters.flits_injected;
  }
}

void World::eject(TileId t) {
  Router& r = routers_[t];
  if (r.buffered == 0) return;
  Tile& tile = tiles_[t];
  const std::uint32_t nbuf = r.nports * r.nch;
  for (std::uint32_t k = 0; k < nbuf; ++k) {
    const std::uint32_t b = (r.eject_rr + k) % nbuf;
    const FlitBuffer& buf = r.in[b];
    if (buf.empty() || r.route_out[b] >= 0) continue;
    const Flit& head = buf.front();
    if (!head.head || head.dest != t || buf.size() < head.len) continue;
    const std::uint32_t c = head.channel;
    const std::uint16_t task = env_.program->channels[c].target_task;
    Queue& iq = tile.iq[task];
    if (iq.free() < head.len) continue;
    DLRX_ASSERT(head.hops <= hop_bound_, "message from tile ", head.src, " to ", t, " took ",
                head.hops, " hops, bound ", hop_bound_);
    max_hops_[t] = std::max<std::uint32_t>(max_hops_[t], head.hops);
    const std::uint16_t len = head.len;
    const std::uint64_t tag = head.tag;
    for (std::uint16_t i = 0; i < len; ++i) {
      Flit f = r.in[b].pop();
      DLRX_ASSERT(f.tag == tag && f.head == (i == 0), "tile ", t,
                  ": ejected message is not contiguous");
      // The head decoder strips the tile bits before the IQ write.
      const Word v = i == 0 ? env_.channels[c].codec.decode(f.payload).local : f.payload;
      iq.push(v, tag, now_);
    }
    r.buffered -= len;
    tile.counters.mem_writes += len;
    ++tile.counters.messages_recv[c];
    r.counters.flits_out[Local] += len;
    ++r.counters.messages_ejected;
    r.eject_rr = static_cast<std::uint16_t>((b + 1) % nbuf);
    progress_[t] |= kDelivered | kRouterMoved;
    return;  // one message per cycle through the TSU port
  }
}

void World::tile_cycle(TileId t) {
  Router& r = routers_[t];
  Tile& tile = tiles_[t];
  progress_[t] = r.out_valid ? kRouterMoved : 0;
  router_commit_grants(r);
  router_receive(r, t, routers_, topo_);
  inject(t);
  eject(t);
  if (progress_[t] & kRouterMoved) ++r.counters.busy_cycles;

  if (tile.busy_until > now_) {
    ++tile.counters.busy_cycles;
    progress_[t] |= kPuBusy;
    return;
  }
  if (const auto task = schedule_next(tile, *env_.program, cfg_.sched)) {
    tile.busy_until = now_ + invoke(tile, *task, env_, now_);
    ++tile.counters.busy_cycles;
    progress_[t] |= kPuBusy;
  } else if (tile.iqs_empty()) {
    ++tile.counters.gated_cycles;
  } else {
    ++tile.counters.idle_cycles;
  }
}

void World::step() {
  if (pool_) {
    pool_->step();
  } else {
    const auto n = static_cast<std::uint32_t>(tiles_.size());
    phase_a(0, n);
    phase_b(0, n);
  }
  serial_step();
}

void World::serial_step() {
  bool progress = false;
  for (std::size_t t = 0; t < tiles_.size(); ++t) {
    const std::uint8_t p = progress_[t];
    if (p & (kPuBusy | kDelivered)) progress = true;
    window_busy_ += (p & kPuBusy) != 0;
    window_router_ += (p & kRouterMoved) != 0;
    window_delivered_ += (p & kDelivered) != 0;
  }
  ++window_cycles_;
  ++now_;
  if (progress) last_progress_ = now_;
  if (cfg_.check_invariants) check_conservation();
  if (cfg_.timeline_interval && now_ % cfg_.timeline_interval == 0) sample_timeline();
  if (now_ - last_progress_ > livelock_bound_)
    throw SimAbort(detail::concat("livelock: no delivery, invocation or busy PU for ",
                                  now_ - last_progress_, " cycles at cycle ", now_,
                                  " with ", flits_in_network(), " flits in the network"));
}

void World::sample_timeline() {
  if (window_cycles_ == 0) return;
  TimelineSample s;
  s.cycle = now_;
  const double denom = static_cast<double>(window_cycles_) * static_cast<double>(tiles_.size());
  s.pu_busy = static_cast<double>(window_busy_) / denom;
  s.router_busy = static_cast<double>(window_router_) / denom;
  s.flits_in_network = flits_in_network();
  s.messages_delivered = window_delivered_;
  timeline_.push_back(s);
  window_busy_ = window_router_ = window_delivered_ = window_cycles_ = 0;
}

std::uint64_t World::flits_in_network() const {
  std::uint64_t n = 0;
  for (const auto& r : routers_) n += r.buffered;
  return n;
}

void World::check_conservation() const {
  std::uint64_t sent = 0, queued = 0, ejected = 0;
  for (std::size_t t = 0; t < tiles_.size(); ++t) {
    for (auto f : tiles_[t].counters.flits_sent) sent += f;
    for (const auto& q : tiles_[t].cq) queued += q.size();
    ejected += routers_[t].counters.flits_out[Local];
  }
  const std::uint64_t buffered = flits_in_network();
  DLRX_ASSERT(sent == queued + buffered + ejected, "flit conservation broken at cycle ", now_,
              ": sent ", sent, " != queued ", queued, " + buffered ", buffered,
              " + ejected ", ejected);
}

bool World::quiescent() const {
  for (std::size_t t = 0; t < tiles_.size(); ++t) {
    const Tile& tile = tiles_[t];
    if (tile.busy_until > now_ || routers_[t].buffered != 0 || !tile.queues_empty())
      return false;
  }
  return true;
}

void World::run() {
  const std::uint64_t latency = cfg_.detection_latency();
  while (true) {
    if (quiescent()) {
      // The staged idle signal reaches the host `latency` cycles later; all
      // PUs sit clock-gated meanwhile.
      for (auto& tile : tiles_) tile.counters.gated_cycles += latency;
      now_ += latency;
      last_progress_ = now_;
      const HostAction a = kernel_->on_quiescence(tiles_);
      if (a.kind == HostAction::Kind::Stop) break;
      for (auto& tile : tiles_) {
        DLRX_ASSERT(tile.iq[a.task].free() > 0, "broadcast IQ full on tile ", tile.id);
        tile.iq[a.task].push(a.payload, 0, now_);
      }
      continue;
    }
    if (now_ >= cfg_.cycle_limit)
      throw SimAbort(detail::concat("cycle limit ", cfg_.cycle_limit,
                                    " reached before quiescence"));
    step();
  }
  sample_timeline();
}

RunStats World::collect_stats() const {
  RunStats s;
  s.cycles = now_;
  s.epochs = kernel_->epochs();
  s.broadcasts = kernel_->broadcasts();
  s.word_bytes = cfg_.kp.width_bits / 8;
  for (const auto& t : kernel_->program().tasks) s.task_names.push_back(t.name);
  s.timeline = timeline_;
  for (std::size_t i = 0; i < tiles_.size(); ++i) {
    const Tile& tile = tiles_[i];
    const Router& r = routers_[i];
    const TileCounters& c = tile.counters;
    TileStats ts;
    ts.busy = c.busy_cycles;
    ts.gated = c.gated_cycles;
    ts.idle = c.idle_cycles;
    ts.mem_reads = c.mem_reads;
    ts.mem_writes = c.mem_writes;
    ts.micro_ops = c.micro_ops();
    ts.edges = c.edges_processed;
    ts.invocations = c.invocations;
    for (const auto& q : tile.iq) ts.iq_high_water.push_back(q.high_water());
    ts.router_busy = r.counters.busy_cycles;
    ts.router_stalls = r.counters.stall_cycles;
    ts.port_flits = r.counters.flits_out;
    for (std::uint32_t p = 1; p < kMaxPorts; ++p) ts.router_flits += r.counters.flits_out[p];
    for (const auto& b : r.in) ts.buffer_high_water = std::max(ts.buffer_high_water, b.high_water());

    s.edges_processed += ts.edges;
    s.micro_ops += ts.micro_ops;
    s.mem_reads += ts.mem_reads;
    s.mem_writes += ts.mem_writes;
    for (auto m : c.messages_sent) s.messages_sent += m;
    for (auto m : c.messages_recv) s.messages_delivered += m;
    s.flits_injected += r.counters.flits_injected;
    s.flits_ejected += r.counters.flits_out[Local];
    for (std::uint32_t p = N; p <= W; ++p) s.unit_link_flits += r.counters.flits_out[p];
    for (std::uint32_t p = RN; p <= RW; ++p) s.ruche_link_flits += r.counters.flits_out[p];
    s.max_hops = std::max(s.max_hops, max_hops_[i]);
    s.tiles.push_back(std::move(ts));
  }
  s.router_traversals = s.unit_link_flits + s.ruche_link_flits + s.flits_ejected;
  return s;
}

RunStats simulate(const SimConfig& cfg, const Csr& csr, KernelOutput* output) {
  World w(cfg, csr);
  w.run();
  if (output) *output = w.output();
  return w.collect_stats();
}

}  // namespace dlrx

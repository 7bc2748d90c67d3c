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


#include "dlrx/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace dlrx {

std::string to_string(KernelKind k) {
  switch (k) {
    case KernelKind::Bfs: return "bfs";
    case KernelKind::Sssp: return "sssp";
    case KernelKind::Wcc: return "wcc";
    case KernelKind::PageRank: return "pagerank";
    case KernelKind::Spmv: return "spmv";
  }
  return "?";
}

KernelKind parse_kernel(const std::string& s) {
  if (s == "bfs") return KernelKind::Bfs;
  if (s == "sssp") return KernelKind::Sssp;
  if (s == "wcc") return KernelKind::Wcc;
  if (s == "pagerank" || s == "pr") return KernelKind::PageRank;
  if (s == "spmv") return KernelKind::Spmv;
  throw ConfigError("unknown kernel '" + s + "' (bfs|sssp|wcc|pagerank|spmv)");
}

bool kernel_weighted(KernelKind k) { return k == KernelKind::Sssp || k == KernelKind::Spmv; }
bool kernel_symmetric(KernelKind k) { return k == KernelKind::Wcc; }

Word Kernel::inf() const {
  return params_.width_bits >= 64 ? ~Word{0} : (Word{1} << params_.width_bits) - 1;
}

std::vector<Word> spmv_x(std::uint64_t n, std::uint64_t seed, bool real) {
  std::vector<Word> x(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (real)
      x[i] = std::bit_cast<std::uint32_t>(static_cast<float>(unit_random(seed, 0x5b, i)));
    else
      x[i] = 1 + mix64(seed ^ mix64(i)) % 16;
  }
  return x;
}

namespace {

constexpr std::uint16_t kCq1 = 0, kCq2 = 1, kCq3 = 2;

float as_float(Word w) { return std::bit_cast<float>(static_cast<std::uint32_t>(w)); }
Word float_bits(float f) { return std::bit_cast<std::uint32_t>(f); }

struct GraphData : TileData {
  std::vector<std::uint64_t> ptr_begin, ptr_end;
  std::vector<VertexId> edge_idx;
  std::vector<std::uint32_t> edge_values;
  std::vector<Word> dist;  // dist, label, or integer y
  std::vector<Word> frontier;
  std::vector<Word> staged;  // next-epoch frontier in barrier mode
  std::uint64_t blocks = 0;
  std::uint64_t nlocal = 0;  // real (non-padding) vertices; a prefix of the chunk
  // T1 registers that survive a resume.
  bool t1_new_vertex = true;
  std::uint64_t t1_begin = 0;
  Word t1_value = 0;
  // PageRank, and floating SPMV's y in `next`.
  std::vector<double> rank, next;
  double dangling = 0.0;
  double delta = 0.0;
  // SPMV.
  std::vector<Word> x;
};

std::uint64_t local_count(TileId t, const PlacementPolicy& p) {
  if (p.kind == Placement::Interleaved)
    return p.length > t ? ceil_div(p.length - t, p.num_tiles) : 0;
  const std::uint64_t first = static_cast<std::uint64_t>(t) * p.chunk;
  return p.length > first ? std::min(p.chunk, p.length - first) : 0;
}

class DlrxKernel final : public Kernel {
 public:
  DlrxKernel(KernelKind kind, const KernelParams& p, const PartitionedDataset& d)
      : Kernel(kind, p), vpol_(d.vertex_policy), epol_(d.edge_policy) {
    if (kind == KernelKind::PageRank && !p.barrier)
      throw ConfigError(
          "pagerank needs per-epoch synchronization; use --barrier epoch");
    if (p.width_bits != 32 && p.width_bits != 64)
      throw ConfigError("flit width must be 32 or 64");
    if ((kind == KernelKind::Bfs || kind == KernelKind::Sssp) && d.num_vertices > 0 &&
        p.root >= d.num_vertices)
      throw ConfigError(detail::concat("root ", p.root, " outside graph of ",
                                       d.num_vertices, " vertices"));
    const std::uint32_t tile_bits = log2_floor(d.num_tiles);
    const std::uint32_t local_bits = p.width_bits - tile_bits;
    const std::uint64_t max_local =
        local_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << local_bits) - 1;
    if (vpol_.chunk - 1 > max_local || epol_.chunk > max_local)
      throw ConfigError(detail::concat(
          "array too large for the grid/width combination: chunk of ",
          std::max(vpol_.chunk, epol_.chunk), " does not fit ", local_bits,
          " local head bits"));
    if (d.num_vertices > inf())
      throw ConfigError("vertex ids do not fit the flit width");

    words_ = std::max<std::uint64_t>(1, ceil_div(vpol_.chunk, 32));
    flits_per_edge_ = kind == KernelKind::Spmv ? 3 : 2;
    oqt2_ = p.oqt2 ? p.oqt2 : p.cq2_len / flits_per_edge_;
    if (oqt2_ == 0 || static_cast<std::uint64_t>(oqt2_) * flits_per_edge_ > p.cq2_len)
      throw ConfigError(detail::concat(
          "OQT2 rule violated: T2 may emit ", flits_per_edge_, " x OQT2 = ",
          static_cast<std::uint64_t>(oqt2_) * flits_per_edge_,
          " flits but q_len(CQ2) is ", p.cq2_len));
    num_vertices_ = d.num_vertices;
    pr_base_ = num_vertices_ ? (1.0 - p.damping) / static_cast<double>(num_vertices_) : 0;
    build_program();
  }

  std::unique_ptr<TileData> make_tile_data(TileId t,
                                           const PartitionedDataset& d) const override {
    auto g = std::make_unique<GraphData>();
    g->ptr_begin = d.ptr_begin.chunks[t];
    g->ptr_end = d.ptr_end.chunks[t];
    g->edge_idx = d.edge_idx.chunks[t];
    g->edge_values = d.edge_values.chunks[t];
    g->nlocal = local_count(t, vpol_);
    g->frontier.assign(words_, 0);
    if (params_.barrier) g->staged.assign(words_, 0);
    const std::uint64_t n = vpol_.chunk;
    switch (kind_) {
      case KernelKind::Bfs:
      case KernelKind::Sssp:
        g->dist.assign(n, inf());
        break;
      case KernelKind::Wcc:
        g->dist.assign(n, inf());
        for (std::uint64_t k = 0; k < g->nlocal; ++k) g->dist[k] = global_of({t, k}, vpol_);
        break;
      case KernelKind::PageRank:
        g->rank.assign(n, 0.0);
        g->next.assign(n, 0.0);
        for (std::uint64_t k = 0; k < g->nlocal; ++k)
          g->rank[k] = 1.0 / static_cast<double>(num_vertices_);
        break;
      case KernelKind::Spmv: {
        const auto x = spmv_x(num_vertices_, params_.x_seed, params_.spmv_float);
        g->x.assign(n, 0);
        for (std::uint64_t k = 0; k < g->nlocal; ++k) g->x[k] = x[global_of({t, k}, vpol_)];
        if (params_.spmv_float)
          g->next.assign(n, 0.0);
        else
          g->dist.assign(n, 0);
        break;
      }
    }
    return g;
  }

  void seed(std::vector<Tile>& tiles, const PartitionedDataset& d) override {
    if (d.num_vertices == 0) return;
    if (kind_ == KernelKind::Bfs || kind_ == KernelKind::Sssp) {
      const Slot s = owner_of(params_.root, vpol_);
      auto& g = static_cast<GraphData&>(*tiles[s.tile].data);
      g.dist[s.local] = 0;
      tiles[s.tile].iq[task::T1].push(s.local);
      return;
    }
    // Every vertex starts in its owner's local frontier.
    for (auto& tile : tiles) {
      auto& g = static_cast<GraphData&>(*tile.data);
      stage_all(g, g.frontier);
      for (std::uint64_t w = 0; w < words_; ++w)
        if (g.frontier[w]) {
          tile.iq[task::T4].push(w);
          ++g.blocks;
        }
    }
  }

  HostAction on_quiescence(std::vector<Tile>& tiles) override {
    if (!params_.barrier) {
      epochs_ = 1;  // one asynchronous pass
      return {};
    }
    if (kind_ == KernelKind::PageRank) return pagerank_controller(tiles);
    if (!any_staged(tiles)) {
      epochs_ = broadcasts_ + 1;
      return {};
    }
    ++broadcasts_;
    return {HostAction::Kind::Broadcast, explore_task_, 0};
  }

  KernelOutput output(const std::vector<Tile>& tiles,
                      const PartitionedDataset& d) const override {
    KernelOutput out;
    out.real = kind_ == KernelKind::PageRank ||
               (kind_ == KernelKind::Spmv && params_.spmv_float);
    for (std::uint64_t v = 0; v < d.num_vertices; ++v) {
      const Slot s = owner_of(v, vpol_);
      const auto& g = static_cast<const GraphData&>(*tiles[s.tile].data);
      if (kind_ == KernelKind::PageRank)
        out.reals.push_back(g.rank[s.local]);
      else if (out.real)
        out.reals.push_back(g.next[s.local]);
      else
        out.ints.push_back(g.dist[s.local]);
    }
    return out;
  }

  Footprint footprint(const PartitionedDataset& d) const override {
    const std::uint64_t w = params_.width_bits / 8;
    const std::uint64_t npc = d.vertex_policy.chunk, epc = d.edge_policy.chunk;
    Footprint f;
    f.data_bytes = 2 * npc * w + epc * w;
    if (kernel_weighted(kind_)) f.data_bytes += epc * w;
    f.data_bytes += words_ * w * (params_.barrier ? 2 : 1);
    switch (kind_) {
      case KernelKind::PageRank: f.data_bytes += 2 * npc * 8; break;
      case KernelKind::Spmv: f.data_bytes += npc * w + npc * (params_.spmv_float ? 8 : w); break;
      default: f.data_bytes += npc * w; break;
    }
    for (const auto& t : program_.tasks) f.queue_bytes += t.iq_len * w;
    for (const auto& c : program_.channels) f.queue_bytes += c.q_len * w;
    f.code_bytes = program_.code_bytes;
    return f;
  }

 private:
  void build_program();
  void t1(TaskContext& ctx);
  void t2(TaskContext& ctx);
  void t3(TaskContext& ctx);
  void t4(TaskContext& ctx);
  void explore(TaskContext& ctx);
  void finish(TaskContext& ctx);
  void accumulate(TaskContext& ctx);
  void mark(TaskContext& ctx, GraphData& g, std::uint64_t v);
  HostAction pagerank_controller(std::vector<Tile>& tiles);

  void stage_all(GraphData& g, std::vector<Word>& bitmap) const {
    for (std::uint64_t k = 0; k < g.nlocal; ++k) bitmap[k >> 5] |= Word{1} << (k & 31);
  }
  bool any_staged(const std::vector<Tile>& tiles) const {
    for (const auto& tile : tiles) {
      const auto& g = static_cast<const GraphData&>(*tile.data);
      for (Word w : g.staged)
        if (w) return true;
    }
    return false;
  }
  Word mask(Word v) const { return v & inf(); }

  PlacementPolicy vpol_, epol_;
  std::uint64_t words_ = 1;
  std::uint32_t flits_per_edge_ = 2;
  std::uint64_t num_vertices_ = 0;
  double pr_base_ = 0.0;
  std::uint16_t explore_task_ = 0;
  std::uint16_t finish_task_ = 0;
  std::uint16_t acc_task_ = 0;
  bool pr_finishing_ = false;
  double last_delta_ = 0.0;
};

void DlrxKernel::build_program() {
  const auto& p = params_;
  const bool spmv = kind_ == KernelKind::Spmv;
  const bool pr = kind_ == KernelKind::PageRank;
  std::vector<TaskDescriptor> tasks;
  std::vector<ChannelDescriptor> channels;

  const char* value_role = pr ? "contribution" : spmv ? "row" : kind_ == KernelKind::Wcc
                                                                     ? "label"
                                                                     : "vertex_dist";
  channels.push_back({"CQ1", p.cq1_len, task::T2, ArrayClass::Edge, 3,
                      {"head: global edge index (begin)", "local end index", value_role}});
  if (spmv) {
    channels.push_back({"CQ2", p.cq2_len, task::T3, ArrayClass::Vertex, 3,
                        {"head: global column index", "matrix value", "row"}});
    channels.push_back({"CQ3", p.cq3_len, task::T5, ArrayClass::Vertex, 2,
                        {"head: global row index", "product"}});
  } else {
    channels.push_back({"CQ2", p.cq2_len, task::T3, ArrayClass::Vertex, 2,
                        {"head: global vertex index",
                         pr ? "contribution" : kind_ == KernelKind::Wcc ? "label"
                                                                        : "candidate distance"}});
  }

  auto bind = [this](void (DlrxKernel::*fn)(TaskContext&)) {
    return [this, fn](TaskContext& ctx) { (this->*fn)(ctx); };
  };

  TaskDescriptor t1{"T1", p.iq_t1, false, 0, {{QueueRef::cq(kCq1), 3}}, QueueRef::cq(kCq1),
                    {}, true, bind(&DlrxKernel::t1)};
  TaskDescriptor t2{"T2",
                    p.iq_t2,
                    true,
                    3,
                    {{QueueRef::cq(kCq2), flits_per_edge_ * oqt2_}},
                    QueueRef::cq(kCq2),
                    {},
                    false,
                    bind(&DlrxKernel::t2)};
  TaskDescriptor t3{"T3", p.iq_t3, true, spmv ? 3u : 2u, {}, std::nullopt, {}, false,
                    bind(&DlrxKernel::t3)};
  if (spmv) {
    t3.gates.push_back({QueueRef::cq(kCq3), 2});
    t3.primary_output = QueueRef::cq(kCq3);
  } else if (!pr && !p.barrier) {
    t3.primary_output = QueueRef::iq(task::T4);
    t3.local_targets = {task::T4};
  }
  TaskDescriptor t4{"T4",
                    static_cast<std::uint32_t>(std::max<std::uint64_t>(words_, p.iq_t4)),
                    false,
                    0,
                    {{QueueRef::iq(task::T1), 1}},
                    QueueRef::iq(task::T1),
                    {task::T1},
                    true,
                    bind(&DlrxKernel::t4)};
  tasks = {t1, t2, t3, t4};
  if (spmv) {
    acc_task_ = static_cast<std::uint16_t>(tasks.size());
    tasks.push_back({"ACC", p.iq_acc, true, 2, {}, std::nullopt, {}, false,
                     bind(&DlrxKernel::accumulate)});
  }
  if (p.barrier) {
    explore_task_ = static_cast<std::uint16_t>(tasks.size());
    tasks.push_back({"EXPLORE", 2, true, 1, {}, QueueRef::iq(task::T4), {task::T4}, true,
                     bind(&DlrxKernel::explore)});
  }
  if (pr) {
    finish_task_ = static_cast<std::uint16_t>(tasks.size());
    tasks.push_back({"FINISH", 2, true, 1, {}, std::nullopt, {}, true,
                     bind(&DlrxKernel::finish)});
  }
  program_ = declare_program(to_string(kind_), std::move(tasks), std::move(channels));
}

// Reads the vertex's neighbor range and splits it into CQ1 messages at edge
// chunk boundaries and at OQT2 edges. The vertex stays at the IQ head until
// its whole range has been sent.
void DlrxKernel::t1(TaskContext& ctx) {
  auto& g = ctx.data<GraphData>();
  const Word v = ctx.peek_iq(task::T1);
  ctx.branch();
  const bool fresh = g.t1_new_vertex;
  if (fresh) g.t1_begin = ctx.load(g.ptr_begin, v);
  const std::uint64_t end = ctx.load(g.ptr_end, v);

  Word value = 0;
  switch (kind_) {
    case KernelKind::PageRank:
      if (fresh) {
        const double r = ctx.load(g.rank, v);
        const std::uint64_t deg = end - g.t1_begin;
        ctx.alu();
        ctx.branch();
        if (deg == 0) {
          // Dangling mass is reduced by the host at the barrier.
          ctx.alu();
          g.dangling += r;
        } else {
          ctx.alu(2);
          g.t1_value = float_bits(static_cast<float>(params_.damping * r /
                                                     static_cast<double>(deg)));
        }
      }
      value = g.t1_value;
      break;
    case KernelKind::Spmv:
      ctx.alu();
      value = global_of({ctx.tile_id(), v}, vpol_);
      break;
    default:
      value = ctx.load(g.dist, v);
      break;
  }

  const std::uint64_t epc = epol_.chunk;
  while (true) {
    ctx.branch();
    if (g.t1_begin >= end || !ctx.cq_has_room(kCq1)) break;
    const std::uint64_t b = g.t1_begin;
    const std::uint64_t chunk_start = (b / epc) * epc;
    const std::uint64_t partial_end = std::min({end, chunk_start + epc, b + oqt2_});
    ctx.alu(4);
    ctx.send_head(kCq1, b, false, global_of({ctx.tile_id(), v}, vpol_));
    ctx.send_payload(kCq1, partial_end - chunk_start);
    ctx.send_payload(kCq1, value);
    g.t1_begin = partial_end;
  }
  ctx.alu();
  g.t1_new_vertex = g.t1_begin == end;
  if (g.t1_new_vertex) ctx.pop_iq(task::T1);
}

// One message per edge of a chunk-local range.
void DlrxKernel::t2(TaskContext& ctx) {
  auto& g = ctx.data<GraphData>();
  const std::uint64_t lb = ctx.param(0), le = ctx.param(1);
  Word value = ctx.param(2);
  DLRX_ASSERT(lb <= le && le <= g.edge_idx.size(), "tile ", ctx.tile_id(),
              ": edge range [", lb, ",", le, ") outside chunk");
  if (kind_ == KernelKind::Bfs) {
    ctx.alu();
    value = mask(value + 1);
  }
  for (std::uint64_t i = lb; i < le; ++i) {
    ctx.send_head(kCq2, g.edge_idx[i], true);
    switch (kind_) {
      case KernelKind::Sssp: {
        const Word w = ctx.load(g.edge_values, i);
        ctx.alu();
        ctx.send_payload(kCq2, mask(value + w));
        break;
      }
      case KernelKind::Spmv:
        ctx.send_payload(kCq2, g.edge_values[i], true);
        ctx.send_payload(kCq2, value);
        break;
      default:
        ctx.send_payload(kCq2, value);
        break;
    }
    ctx.branch();
  }
  ctx.count_edges(le - lb);
}

void DlrxKernel::mark(TaskContext& ctx, GraphData& g, std::uint64_t v) {
  ctx.alu();
  const std::uint64_t blk = v >> 5;
  auto& bitmap = params_.barrier ? g.staged : g.frontier;
  const Word bits = ctx.load(bitmap, blk);
  ctx.alu();
  ctx.store(bitmap, blk, bits | (Word{1} << (v & 31)));
  ctx.branch();
  if (!params_.barrier && bits == 0) {
    ctx.push_iq(task::T4, blk);
    ctx.alu();
    ++g.blocks;
  }
}

void DlrxKernel::t3(TaskContext& ctx) {
  auto& g = ctx.data<GraphData>();
  const std::uint64_t v = ctx.param(0);
  switch (kind_) {
    case KernelKind::PageRank: {
      const double cur = ctx.load(g.next, v);
      ctx.alu();
      ctx.store(g.next, v, cur + static_cast<double>(as_float(ctx.param(1))));
      return;
    }
    case KernelKind::Spmv: {
      const Word xj = ctx.load(g.x, v);
      const Word a = ctx.param(1);
      ctx.alu();
      const Word prod = params_.spmv_float
                            ? float_bits(static_cast<float>(a) * as_float(xj))
                            : mask(a * xj);
      ctx.send_head(kCq3, ctx.param(2));
      ctx.send_payload(kCq3, prod);
      return;
    }
    default: {
      const Word cand = ctx.param(1);
      const Word cur = ctx.load(g.dist, v);
      ctx.alu();
      ctx.branch();
      if (cand < cur) {
        ctx.store(g.dist, v, cand);
        mark(ctx, g, v);
      }
      return;
    }
  }
}

// Drains frontier blocks into IQ1 while there is room.
void DlrxKernel::t4(TaskContext& ctx) {
  auto& g = ctx.data<GraphData>();
  std::uint64_t blk = ctx.peek_iq(task::T4);
  while (true) {
    ctx.branch();
    if (g.blocks == 0 || ctx.iq_free(task::T1) == 0) break;
    Word bits = ctx.load(g.frontier, blk);
    ctx.alu();
    const std::uint64_t base = blk << 5;
    while (true) {
      ctx.branch();
      if (bits == 0 || ctx.iq_free(task::T1) == 0) break;
      const int idx = 63 - std::countl_zero(bits);
      bits &= ~(Word{1} << idx);
      ctx.alu(3);
      ctx.push_iq(task::T1, base + static_cast<std::uint64_t>(idx));
    }
    ctx.store(g.frontier, blk, bits);
    ctx.branch();
    if (bits != 0) break;
    ctx.pop_iq(task::T4);
    ctx.alu();
    --g.blocks;
    if (g.blocks == 0) break;
    blk = ctx.peek_iq(task::T4);
  }
}

// Barrier broadcast: staged words become the new local frontier.
void DlrxKernel::explore(TaskContext& ctx) {
  auto& g = ctx.data<GraphData>();
  for (std::uint64_t w = 0; w < words_; ++w) {
    const Word bits = ctx.load(g.staged, w);
    ctx.branch();
    if (bits == 0) continue;
    const Word cur = ctx.load(g.frontier, w);
    ctx.alu();
    ctx.store(g.frontier, w, cur | bits);
    ctx.store(g.staged, w, Word{0});
    ctx.branch();
    if (cur == 0) {
      ctx.push_iq(task::T4, w);
      ctx.alu();
      ++g.blocks;
    }
  }
}

// PageRank epoch end: fold accumulated contributions into rank, track the
// local L1 change and stage every vertex for the next epoch.
void DlrxKernel::finish(TaskContext& ctx) {
  auto& g = ctx.data<GraphData>();
  const double share = static_cast<double>(as_float(ctx.param(0)));
  for (std::uint64_t v = 0; v < g.nlocal; ++v) {
    const double acc = ctx.load(g.next, v);
    const double old = ctx.load(g.rank, v);
    const double r = pr_base_ + share + acc;
    ctx.alu(5);
    g.delta += std::abs(r - old);
    ctx.store(g.rank, v, r);
    ctx.store(g.next, v, 0.0);
    ctx.branch();
  }
  std::vector<Word> all(words_, 0);
  stage_all(g, all);
  for (std::uint64_t w = 0; w < words_; ++w)
    if (all[w]) ctx.store(g.staged, w, all[w]);
}

void DlrxKernel::accumulate(TaskContext& ctx) {
  auto& g = ctx.data<GraphData>();
  const std::uint64_t row = ctx.param(0);
  const Word prod = ctx.param(1);
  if (params_.spmv_float) {
    const double cur = ctx.load(g.next, row);
    ctx.alu();
    ctx.store(g.next, row, cur + static_cast<double>(as_float(prod)));
  } else {
    const Word cur = ctx.load(g.dist, row);
    ctx.alu();
    ctx.store(g.dist, row, mask(cur + prod));
  }
}

HostAction DlrxKernel::pagerank_controller(std::vector<Tile>& tiles) {
  if (num_vertices_ == 0) return {};
  if (!pr_finishing_) {
    // Contributions are in: reduce dangling mass and close the epoch.
    double dangling = 0.0;
    for (auto& tile : tiles) {
      auto& g = static_cast<GraphData&>(*tile.data);
      dangling += g.dangling;
      g.dangling = 0.0;
    }
    pr_finishing_ = true;
    ++broadcasts_;
    const float share = static_cast<float>(params_.damping * dangling /
                                           static_cast<double>(num_vertices_));
    return {HostAction::Kind::Broadcast, finish_task_, float_bits(share)};
  }
  pr_finishing_ = false;
  ++epochs_;
  double delta = 0.0;
  for (auto& tile : tiles) {
    auto& g = static_cast<GraphData&>(*tile.data);
    delta += g.delta;
    g.delta = 0.0;
  }
  last_delta_ = delta;
  if (delta < params_.epsilon || epochs_ >= params_.max_epochs) return {};
  ++broadcasts_;
  return {HostAction::Kind::Broadcast, explore_task_, 0};
}

}  // namespace

std::unique_ptr<Kernel> make_kernel(KernelKind kind, const KernelParams& params,
                                    const PartitionedDataset& d) {
  return std::make_unique<DlrxKernel>(kind, params, d);
}

}  // namespace dlrx

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

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dlrx/common.hpp"
#include "dlrx/noc.hpp"
#include "dlrx/program.hpp"
#include "dlrx/queue.hpp"

namespace dlrx {

/// Kernel-owned scratchpad arrays of one tile.
struct TileData {
  virtual ~TileData() = default;
};

/// How a channel turns a global index into a head flit.
struct ChannelCodec {
  PlacementPolicy policy;
  HeadCodec codec;
  std::uint32_t flits = 1;
};

/// Everything a task body may consult besides its own tile.
struct ExecEnv {
  const TaskProgram* program = nullptr;
  CostModel costs;
  std::vector<ChannelCodec> channels;
  std::uint32_t width_bits = 32;
  bool record_causal = false;
};

/// Simulator-only provenance of one message, used by the program-order
/// property checks.
struct SendRecord {
  std::uint64_t tag = 0;
  std::uint64_t parent = 0;  // tag of the message that invoked the sender
  Cycle cycle = 0;
  TileId src = 0;
  std::uint16_t channel = 0;
  std::uint16_t task = 0;
  std::uint64_t aux = 0;  // kernel-defined, e.g. the source vertex
};

struct InvokeRecord {
  std::uint64_t tag = 0;
  Cycle cycle = 0;
  std::uint16_t task = 0;
};

struct TileCounters {
  std::uint64_t busy_cycles = 0;
  std::uint64_t gated_cycles = 0;
  std::uint64_t idle_cycles = 0;  // PU idle, some IQ non-empty
  std::uint64_t mem_reads = 0;
  std::uint64_t mem_writes = 0;
  std::array<std::uint64_t, kOpKinds> ops{};
  std::uint64_t edges_processed = 0;
  std::vector<std::uint64_t> invocations;     // per task
  std::vector<std::uint64_t> messages_sent;   // per channel
  std::vector<std::uint64_t> messages_recv;   // per channel, ejected here
  std::vector<std::uint64_t> flits_sent;      // per channel

  std::uint64_t micro_ops() const {
    std::uint64_t n = 0;
    for (auto v : ops) n += v;
    return n;
  }
};

class Tile {
 public:
  Tile() = default;
  Tile(TileId id, const TaskProgram& program);

  TileId id = 0;
  std::vector<Queue> iq;  // per task
  std::vector<Queue> cq;  // per channel
  std::vector<std::uint32_t> inject_pos;  // flit index within the message being injected
  std::unique_ptr<TileData> data;

  Cycle busy_until = 0;
  std::uint64_t next_seq = 1;
  TileCounters counters;
  std::vector<SendRecord> sends;
  std::vector<InvokeRecord> invokes;

  std::uint64_t new_tag() { return (static_cast<std::uint64_t>(id) + 1) << 40 | next_seq++; }
  bool queues_empty() const;
  bool iqs_empty() const;
};

/// Execution context handed to a task body. Every accessor charges its
/// micro-op cost; the body runs functionally at invocation and the PU stays
/// busy for the accumulated cycle count.
class TaskContext {
 public:
  TaskContext(Tile& tile, const ExecEnv& env, Cycle start, std::uint16_t task,
              std::uint64_t tag)
      : tile_(tile), env_(env), start_(start), task_(task), tag_(tag) {}

  Tile& tile() { return tile_; }
  TileId tile_id() const { return tile_.id; }
  template <typename T>
  T& data() {
    return static_cast<T&>(*tile_.data);
  }
  std::uint16_t task() const { return task_; }
  std::uint64_t elapsed() const { return elapsed_; }
  Cycle now() const { return start_ + elapsed_; }
  const ExecEnv& env() const { return env_; }

  // Parameters the TSU popped before the body started.
  std::uint32_t num_params() const { return nparams_; }
  Word param(std::uint32_t i) const {
    DLRX_ASSERT(i < nparams_, "parameter ", i, " not preloaded");
    return params_[i];
  }
  void set_params(const std::array<Word, 8>& p, std::uint32_t n) {
    params_ = p;
    nparams_ = n;
  }

  void charge(OpKind k, std::uint32_t n = 1) {
    elapsed_ += static_cast<std::uint64_t>(env_.costs.of(k)) * n;
    tile_.counters.ops[static_cast<std::size_t>(k)] += n;
  }
  void alu(std::uint32_t n = 1) { charge(OpKind::Alu, n); }
  void branch(std::uint32_t n = 1) { charge(OpKind::Branch, n); }

  template <typename T>
  T load(const std::vector<T>& a, std::uint64_t i) {
    DLRX_ASSERT(i < a.size(), "tile ", tile_.id, ": load index ", i, " outside chunk of ",
                a.size());
    charge(OpKind::Load);
    ++tile_.counters.mem_reads;
    return a[i];
  }
  /// Stores only ever target this tile's chunk, so ownership holds by
  /// construction; the bound check catches a misdecoded index.
  template <typename T>
  void store(std::vector<T>& a, std::uint64_t i, T v) {
    DLRX_ASSERT(i < a.size(), "tile ", tile_.id, ": store index ", i, " outside chunk of ",
                a.size());
    charge(OpKind::Store);
    ++tile_.counters.mem_writes;
    a[i] = v;
  }

  Word peek_iq(std::uint16_t task);
  void pop_iq(std::uint16_t task);
  void push_iq(std::uint16_t task, Word v);
  /// Queue-status register read.
  std::uint32_t iq_free(std::uint16_t task);
  /// True if a whole message fits in the channel queue (status register read).
  bool cq_has_room(std::uint16_t channel);

  /// Pushes the head flit for `global_idx`. With `fused`, the scratchpad read
  /// that produced the index shares the cycle (one read, one queue write).
  void send_head(std::uint16_t channel, std::uint64_t global_idx, bool fused = false,
                 std::uint64_t aux = 0);
  void send_payload(std::uint16_t channel, Word v, bool fused = false);

  void count_edges(std::uint64_t n) { tile_.counters.edges_processed += n; }

 private:
  void push_cq(std::uint16_t channel, Word v, bool fused);

  Tile& tile_;
  const ExecEnv& env_;
  Cycle start_;
  std::uint16_t task_;
  std::uint64_t tag_;
  std::uint64_t elapsed_ = 0;
  std::uint64_t msg_tag_ = 0;
  std::array<Word, 8> params_{};
  std::uint32_t nparams_ = 0;
};

enum class Priority : std::uint8_t { Ineligible, Low, Medium, High };

struct SchedulerParams {
  double high_watermark = 7.0 / 8.0;  // IQ "nearly full"
  double low_watermark = 1.0 / 8.0;   // OQ "nearly empty"
  bool tie_by_occupancy = false;      // tie-break on IQ occupancy instead of capacity
};

std::uint32_t high_threshold(std::uint32_t capacity, double frac);
std::uint32_t low_threshold(std::uint32_t capacity, double frac);

bool gates_pass(std::uint16_t task, const Tile& tile, const TaskProgram& program);

Priority priority_of(std::uint16_t task, const Tile& tile, const TaskProgram& program,
                     const SchedulerParams& params);

/// Highest priority class wins, then the larger IQ, then the lowest id.
std::optional<std::uint16_t> schedule_next(const Tile& tile, const TaskProgram& program,
                                           const SchedulerParams& params);

/// Runs one task body starting at `now`. Returns its cycle cost (>= 1).
std::uint64_t invoke(Tile& tile, std::uint16_t task, const ExecEnv& env, Cycle now);

}  // namespace dlrx

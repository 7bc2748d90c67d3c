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


#include "dlrx/tile.hpp"

#include <algorithm>
#include <cmath>

namespace dlrx {

Tile::Tile(TileId tile_id, const TaskProgram& program) : id(tile_id) {
  for (const auto& t : program.tasks) iq.emplace_back(t.iq_len);
  for (const auto& c : program.channels) cq.emplace_back(c.q_len);
  inject_pos.assign(program.channels.size(), 0);
  counters.invocations.assign(program.tasks.size(), 0);
  counters.messages_sent.assign(program.channels.size(), 0);
  counters.messages_recv.assign(program.channels.size(), 0);
  counters.flits_sent.assign(program.channels.size(), 0);
}

bool Tile::iqs_empty() const {
  return std::all_of(iq.begin(), iq.end(), [](const Queue& q) { return q.empty(); });
}

bool Tile::queues_empty() const {
  return iqs_empty() &&
         std::all_of(cq.begin(), cq.end(), [](const Queue& q) { return q.empty(); });
}

Word TaskContext::peek_iq(std::uint16_t task) {
  charge(OpKind::PeekIq);
  ++tile_.counters.mem_reads;
  return tile_.iq[task].front();
}

void TaskContext::pop_iq(std::uint16_t task) {
  charge(OpKind::PopIq);
  ++tile_.counters.mem_reads;
  tile_.iq[task].pop();
}

void TaskContext::push_iq(std::uint16_t task, Word v) {
  charge(OpKind::PushOq);
  ++tile_.counters.mem_writes;
  tile_.iq[task].push(v, tag_, now());
}

std::uint32_t TaskContext::iq_free(std::uint16_t task) {
  charge(OpKind::QueueStatus);
  return tile_.iq[task].free();
}

bool TaskContext::cq_has_room(std::uint16_t channel) {
  charge(OpKind::QueueStatus);
  return tile_.cq[channel].free() >= env_.channels[channel].flits;
}

void TaskContext::push_cq(std::uint16_t channel, Word v, bool fused) {
  if (fused) {
    charge(OpKind::LoadPush);
    ++tile_.counters.mem_reads;
  } else {
    charge(OpKind::PushOq);
  }
  ++tile_.counters.mem_writes;
  ++tile_.counters.flits_sent[channel];
  // Visible to the injector once the write has happened.
  tile_.cq[channel].push(v, msg_tag_, now());
}

void TaskContext::send_head(std::uint16_t channel, std::uint64_t global_idx, bool fused,
                            std::uint64_t aux) {
  const ChannelCodec& cc = env_.channels[channel];
  DLRX_ASSERT(tile_.cq[channel].free() >= cc.flits, "tile ", tile_.id, ": channel ",
              channel, " message does not fit its queue");
  msg_tag_ = tile_.new_tag();
  ++tile_.counters.messages_sent[channel];
  if (env_.record_causal)
    tile_.sends.push_back({msg_tag_, tag_, now(), tile_.id, channel, task_, aux});
  push_cq(channel, encode_head(global_idx, cc.policy, cc.codec), fused);
}

void TaskContext::send_payload(std::uint16_t channel, Word v, bool fused) {
  const std::uint64_t mask =
      env_.width_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << env_.width_bits) - 1;
  DLRX_ASSERT((v & ~mask) == 0, "payload ", v, " wider than the flit");
  push_cq(channel, v, fused);
}

std::uint32_t high_threshold(std::uint32_t capacity, double frac) {
  return static_cast<std::uint32_t>(std::ceil(frac * capacity - 1e-9));
}

std::uint32_t low_threshold(std::uint32_t capacity, double frac) {
  return static_cast<std::uint32_t>(std::floor(frac * capacity + 1e-9));
}

namespace {

const Queue& queue_of(const Tile& tile, QueueRef q) {
  return q.kind == QueueRef::Kind::Iq ? tile.iq[q.index] : tile.cq[q.index];
}

}  // namespace

bool gates_pass(std::uint16_t task, const Tile& tile, const TaskProgram& program) {
  for (const auto& g : program.tasks[task].gates)
    if (queue_of(tile, g.queue).free() < g.min_free) return false;
  return true;
}

Priority priority_of(std::uint16_t task, const Tile& tile, const TaskProgram& program,
                     const SchedulerParams& params) {
  const TaskDescriptor& t = program.tasks[task];
  const Queue& in = tile.iq[task];
  if (in.empty()) return Priority::Ineligible;
  if (t.params_preloaded && in.size() < t.params_per_invocation) return Priority::Ineligible;
  if (!gates_pass(task, tile, program)) return Priority::Ineligible;
  if (in.size() >= high_threshold(in.capacity(), params.high_watermark))
    return Priority::High;
  if (t.primary_output) {
    const Queue& out = queue_of(tile, *t.primary_output);
    if (out.size() <= low_threshold(out.capacity(), params.low_watermark))
      return Priority::Medium;
  }
  return Priority::Low;
}

std::optional<std::uint16_t> schedule_next(const Tile& tile, const TaskProgram& program,
                                           const SchedulerParams& params) {
  std::optional<std::uint16_t> best;
  Priority best_p = Priority::Ineligible;
  std::uint32_t best_key = 0;
  for (std::uint16_t i = 0; i < program.tasks.size(); ++i) {
    const Priority p = priority_of(i, tile, program, params);
    if (p == Priority::Ineligible) continue;
    const std::uint32_t key = params.tie_by_occupancy ? tile.iq[i].size()
                                                      : program.tasks[i].iq_len;
    if (!best || p > best_p || (p == best_p && key > best_key)) {
      best = i;
      best_p = p;
      best_key = key;
    }
  }
  return best;
}

std::uint64_t invoke(Tile& tile, std::uint16_t task, const ExecEnv& env, Cycle now) {
  const TaskDescriptor& t = env.program->tasks[task];
  Queue& in = tile.iq[task];
  const std::uint64_t tag = in.front_tag();
  TaskContext ctx(tile, env, now, task, tag);
  if (t.params_preloaded) {
    std::array<Word, 8> p{};
    DLRX_ASSERT(t.params_per_invocation <= p.size(), "too many task parameters");
    for (std::uint32_t i = 0; i < t.params_per_invocation; ++i) p[i] = in.pop();
    // The TSU reads the parameters through its own scratchpad port.
    tile.counters.mem_reads += t.params_per_invocation;
    ctx.set_params(p, t.params_per_invocation);
  }
  if (env.record_causal) tile.invokes.push_back({tag, now, task});
  ++tile.counters.invocations[task];
  t.body(ctx);
  return std::max<std::uint64_t>(ctx.elapsed(), 1);
}

}  // namespace dlrx

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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dlrx {

class TaskContext;

/// Abstract PU operations. Every kind has a configurable cycle cost.
enum class OpKind : std::uint8_t {
  Load,
  Store,
  Alu,
  Branch,
  PushOq,
  PopIq,
  PeekIq,
  QueueStatus,
  LoadPush,  // scratchpad read feeding a queue write in the same cycle
  Count
};

inline constexpr std::size_t kOpKinds = static_cast<std::size_t>(OpKind::Count);

const char* to_string(OpKind k);

struct CostModel {
  std::array<std::uint32_t, kOpKinds> cycles;

  CostModel() { cycles.fill(1); }
  std::uint32_t of(OpKind k) const { return cycles[static_cast<std::size_t>(k)]; }
};

/// Sum of per-op costs along an executed trace.
std::uint64_t cycle_cost(std::span<const OpKind> trace, const CostModel& costs);

/// Which distributed array a channel's head flit indexes; selects the chunk
/// and placement used by the head encoder.
enum class ArrayClass : std::uint8_t { Vertex, Edge };

struct QueueRef {
  enum class Kind : std::uint8_t { Iq, Cq } kind = Kind::Iq;
  std::uint16_t index = 0;

  static QueueRef iq(std::uint16_t i) { return {Kind::Iq, i}; }
  static QueueRef cq(std::uint16_t i) { return {Kind::Cq, i}; }
  friend bool operator==(const QueueRef&, const QueueRef&) = default;
};

struct ChannelDescriptor {
  std::string name;
  std::uint32_t q_len = 0;
  std::uint16_t target_task = 0;
  ArrayClass encode = ArrayClass::Vertex;
  std::uint32_t flits_per_message = 1;
  /// Role of each flit; flit 0 is always the routable head index.
  std::vector<std::string> flit_roles;
};

/// Invocation gate: the TSU only invokes the task when `queue` has at least
/// `min_free` free entries.
struct OutputGate {
  QueueRef queue;
  std::uint32_t min_free = 0;
};

using TaskBody = std::function<void(TaskContext&)>;

struct TaskDescriptor {
  std::string name;
  std::uint32_t iq_len = 0;
  bool params_preloaded = false;
  std::uint32_t params_per_invocation = 0;
  /// Worst-case output declarations plus progress gates for guarded queues.
  std::vector<OutputGate> gates;
  /// Queue whose occupancy drives the Medium priority class.
  std::optional<QueueRef> primary_output;
  /// Local IQs this task writes (for reachability and diagnostics).
  std::vector<std::uint16_t> local_targets;
  /// Invoked by the host (root seed, frontier seeding or barrier broadcast).
  bool host_entry = false;
  TaskBody body;
};

/// Validated task/channel graph; identical on every tile.
struct TaskProgram {
  std::string name;
  std::vector<TaskDescriptor> tasks;
  std::vector<ChannelDescriptor> channels;
  std::uint32_t code_bytes = 0;

  std::uint32_t queue_capacity(QueueRef q) const {
    return q.kind == QueueRef::Kind::Iq ? tasks[q.index].iq_len
                                        : channels[q.index].q_len;
  }
  std::uint32_t max_message_flits() const;
};

/// Validates and freezes a program. Throws ConfigError on a dangling
/// channel target, a zero-capacity queue, a gate larger than its queue, a
/// preloaded parameter count that does not match the feeding channel, or an
/// unreachable task.
TaskProgram declare_program(std::string name, std::vector<TaskDescriptor> tasks,
                            std::vector<ChannelDescriptor> channels,
                            std::uint32_t code_bytes = 4096);

struct MessageSchema {
  std::vector<std::string> roles;
  std::size_t size() const { return roles.size(); }
};

MessageSchema message_schema(const ChannelDescriptor& channel);

/// Text table of tasks, queues and channels.
std::string dump_program(const TaskProgram& program);

}  // namespace dlrx

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

#include "dlrx/program.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "dlrx/common.hpp"

namespace dlrx {

const char* to_string(OpKind k) {
  switch (k) {
    case OpKind::Load: return "load";
    case OpKind::Store: return "store";
    case OpKind::Alu: return "alu";
    case OpKind::Branch: return "branch";
    case OpKind::PushOq: return "push_oq";
    case OpKind::PopIq: return "pop_iq";
    case OpKind::PeekIq: return "peek_iq";
    case OpKind::QueueStatus: return "queue_status";
    case OpKind::LoadPush: return "load_push";
    case OpKind::Count: break;
  }
  return "?";
}

std::uint64_t cycle_cost(std::span<const OpKind> trace, const CostModel& costs) {
  std::uint64_t total = 0;
  for (OpKind k : trace) total += costs.of(k);
  return total;
}

std::uint32_t TaskProgram::max_message_flits() const {
  std::uint32_t m = 1;
  for (const auto& c : channels) m = std::max(m, c.flits_per_message);
  return m;
}

TaskProgram declare_program(std::string name, std::vector<TaskDescriptor> tasks,
                            std::vector<ChannelDescriptor> channels,
                            std::uint32_t code_bytes) {
  const std::string where = "program '" + name + "': ";
  if (tasks.empty()) throw ConfigError(where + "no tasks");
  if (tasks.size() > 16 || channels.size() > 7)
    throw ConfigError(where + "too many tasks or channels");

  for (const auto& t : tasks) {
    if (t.iq_len == 0) throw ConfigError(where + "task " + t.name + " has a zero-capacity IQ");
    if (!t.body) throw ConfigError(where + "task " + t.name + " has no body");
    if (t.params_per_invocation > t.iq_len)
      throw ConfigError(where + "task " + t.name + " parameters exceed its IQ");
    for (auto lt : t.local_targets)
      if (lt >= tasks.size())
        throw ConfigError(where + "task " + t.name + " writes an undeclared IQ");
  }
  for (const auto& c : channels) {
    if (c.q_len == 0) throw ConfigError(where + "channel " + c.name + " has zero capacity");
    if (c.flits_per_message == 0)
      throw ConfigError(where + "channel " + c.name + " has empty messages");
    if (c.target_task >= tasks.size())
      throw ConfigError(detail::concat(where, "channel ", c.name,
                                       " targets undeclared task T", c.target_task + 1));
    if (c.flits_per_message > c.q_len)
      throw ConfigError(where + "channel " + c.name + " message exceeds queue length");
    const auto& target = tasks[c.target_task];
    if (target.params_preloaded && target.params_per_invocation != c.flits_per_message)
      throw ConfigError(where + "channel " + c.name +
                        " message size differs from the target task's parameters");
    if (c.flits_per_message > target.iq_len)
      throw ConfigError(where + "channel " + c.name + " message exceeds the target IQ");
  }

  auto capacity = [&](QueueRef q) -> std::uint32_t {
    if (q.kind == QueueRef::Kind::Iq) {
      if (q.index >= tasks.size()) throw ConfigError(where + "gate on undeclared IQ");
      return tasks[q.index].iq_len;
    }
    if (q.index >= channels.size()) throw ConfigError(where + "gate on undeclared CQ");
    return channels[q.index].q_len;
  };
  for (const auto& t : tasks) {
    for (const auto& g : t.gates)
      if (g.min_free > capacity(g.queue))
        throw ConfigError(detail::concat(where, "task ", t.name, " worst-case output of ",
                                         g.min_free, " entries exceeds its queue capacity ",
                                         capacity(g.queue)));
    if (t.primary_output) capacity(*t.primary_output);
  }

  // Reachability: host entries, channel targets and local IQ writes.
  std::vector<bool> reached(tasks.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < tasks.size(); ++i)
    if (tasks[i].host_entry) {
      reached[i] = true;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    const std::size_t t = stack.back();
    stack.pop_back();
    auto visit = [&](std::size_t n) {
      if (!reached[n]) {
        reached[n] = true;
        stack.push_back(n);
      }
    };
    for (auto lt : tasks[t].local_targets) visit(lt);
    for (const auto& g : tasks[t].gates)
      if (g.queue.kind == QueueRef::Kind::Cq) visit(channels[g.queue.index].target_task);
    if (tasks[t].primary_output && tasks[t].primary_output->kind == QueueRef::Kind::Cq)
      visit(channels[tasks[t].primary_output->index].target_task);
  }
  for (std::size_t i = 0; i < tasks.size(); ++i)
    if (!reached[i]) throw ConfigError(where + "task " + tasks[i].name + " is unreachable");

  TaskProgram p;
  p.name = std::move(name);
  p.tasks = std::move(tasks);
  p.channels = std::move(channels);
  p.code_bytes = code_bytes;
  return p;
}

MessageSchema message_schema(const ChannelDescriptor& channel) {
  MessageSchema s;
  s.roles = channel.flit_roles;
  s.roles.resize(channel.flits_per_message);
  if (s.roles[0].empty()) s.roles[0] = "head";
  for (auto& r : s.roles)
    if (r.empty()) r = "payload";
  return s;
}

std::string dump_program(const TaskProgram& p) {
  std::ostringstream os;
  os << "program " << p.name << "\n";
  os << std::left << std::setw(8) << "task" << std::setw(8) << "iq_len" << std::setw(11)
     << "preloaded" << std::setw(8) << "params" << "gates\n";
  for (std::size_t i = 0; i < p.tasks.size(); ++i) {
    const auto& t = p.tasks[i];
    os << std::setw(8) << t.name << std::setw(8) << t.iq_len << std::setw(11)
       << (t.params_preloaded ? "yes" : "no") << std::setw(8) << t.params_per_invocation;
    for (const auto& g : t.gates) {
      if (g.queue.kind == QueueRef::Kind::Cq)
        os << p.channels[g.queue.index].name;
      else
        os << "IQ(" << p.tasks[g.queue.index].name << ")";
      os << ">=" << g.min_free << " ";
    }
    os << "\n";
  }
  os << std::setw(8) << "channel" << std::setw(8) << "q_len" << std::setw(11) << "target"
     << std::setw(8) << "flits" << "schema\n";
  for (const auto& c : p.channels) {
    os << std::setw(8) << c.name << std::setw(8) << c.q_len << std::setw(11)
       << p.tasks[c.target_task].name << std::setw(8) << c.flits_per_message << "[";
    const auto s = message_schema(c);
    for (std::size_t i = 0; i < s.roles.size(); ++i) os << (i ? ", " : "") << s.roles[i];
    os << "] encode=" << (c.encode == ArrayClass::Vertex ? "vertex" : "edge") << "\n";
  }
  return os.str();
}

}  // namespace dlrx

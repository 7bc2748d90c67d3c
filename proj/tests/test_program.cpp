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


#include "doctest.h"
#include "dlrx/kernels.hpp"
#include "dlrx/program.hpp"
#include "support.hpp"

using namespace dlrx;

namespace {

TaskDescriptor make_task(std::string name, std::uint32_t iq, bool host = true) {
  TaskDescriptor t;
  t.name = std::move(name);
  t.iq_len = iq;
  t.host_entry = host;
  t.body = [](TaskContext&) {};
  return t;
}

PartitionedDataset small_dataset(bool weighted) {
  const Graph g = dlrx::testing::graph_of(4, {{0, 1, 3}, {1, 2, 1}, {2, 3, 2}, {0, 3, 9}},
                                          weighted);
  return partition(build_csr(g, false), Placement::Interleaved, 4);
}

}  // namespace

TEST_CASE("sssp program shape") {
  KernelParams kp;
  const auto d = small_dataset(true);
  const auto k = make_kernel(KernelKind::Sssp, kp, d);
  const TaskProgram& p = k->program();
  CHECK(p.tasks.size() == 4);
  CHECK(p.channels.size() == 2);
  CHECK(message_schema(p.channels[0]).size() == 3);
  CHECK(message_schema(p.channels[1]).size() == 2);
  CHECK(p.channels[0].target_task == task::T2);
  CHECK(p.channels[1].target_task == task::T3);
  CHECK(p.max_message_flits() == 3);
  CHECK(dump_program(p).find("CQ1") != std::string::npos);
}

TEST_CASE("barrier and spmv programs add their tasks") {
  KernelParams kp;
  kp.barrier = true;
  const auto d = small_dataset(true);
  CHECK(make_kernel(KernelKind::Bfs, kp, d)->program().tasks.size() == 5);
  CHECK(make_kernel(KernelKind::PageRank, kp, d)->program().tasks.size() == 6);
  kp.barrier = false;
  const auto spmv = make_kernel(KernelKind::Spmv, kp, d);
  CHECK(spmv->program().channels.size() == 3);
  CHECK(message_schema(spmv->program().channels[1]).size() == 3);
  CHECK_THROWS_AS(make_kernel(KernelKind::PageRank, kp, d), ConfigError);
}

TEST_CASE("oqt2 must fit cq2") {
  KernelParams kp;
  const auto d = small_dataset(true);
  CHECK(make_kernel(KernelKind::Sssp, kp, d)->oqt2() == 512);
  kp.oqt2 = 513;
  CHECK_THROWS_AS(make_kernel(KernelKind::Sssp, kp, d), ConfigError);
  kp.oqt2 = 0;
  kp.root = 4;
  CHECK_THROWS_AS(make_kernel(KernelKind::Sssp, kp, d), ConfigError);
}

TEST_CASE("declare_program rejects a channel to T9") {
  std::vector<TaskDescriptor> tasks{make_task("A", 4)};
  std::vector<ChannelDescriptor> ch{{"C", 8, 8, ArrayClass::Vertex, 1, {"head"}}};
  CHECK_THROWS_WITH_AS(declare_program("p", tasks, ch), doctest::Contains("T9"), ConfigError);
}

TEST_CASE("declare_program structural errors") {
  CHECK_THROWS_AS(declare_program("p", {}, {}), ConfigError);
  CHECK_THROWS_AS(declare_program("p", {make_task("A", 0)}, {}), ConfigError);
  // Unreachable: B is not a host entry and nothing feeds it.
  CHECK_THROWS_WITH_AS(declare_program("p", {make_task("A", 4), make_task("B", 4, false)}, {}),
                       doctest::Contains("unreachable"), ConfigError);
  // Gate bigger than the queue.
  auto a = make_task("A", 4);
  a.gates.push_back({QueueRef::cq(0), 9});
  std::vector<ChannelDescriptor> ch{{"C", 8, 1, ArrayClass::Vertex, 1, {"head"}}};
  CHECK_THROWS_AS(declare_program("p", {a, make_task("B", 4, false)}, ch), ConfigError);
  // Preloaded parameter count must match the message size.
  auto b = make_task("B", 4, false);
  b.params_preloaded = true;
  b.params_per_invocation = 2;
  a.gates.clear();
  a.primary_output = QueueRef::cq(0);
  CHECK_THROWS_AS(declare_program("p", {a, b}, ch), ConfigError);
  b.params_per_invocation = 1;
  CHECK_NOTHROW(declare_program("p", {a, b}, ch));
}

TEST_CASE("cycle costs") {
  CostModel unit;
  CHECK(cycle_cost({}, unit) == 0);
  // T3 fast path: pop parameters, compare, branch out.
  const std::vector<OpKind> fast{OpKind::Load, OpKind::Alu, OpKind::Branch};
  CHECK(cycle_cost(fast, unit) == 3);
  std::vector<OpKind> loop;
  for (int i = 0; i < 50; ++i) loop.insert(loop.end(), fast.begin(), fast.end());
  CHECK(cycle_cost(loop, unit) == 150);
  CostModel slow;
  slow.cycles[static_cast<std::size_t>(OpKind::Load)] = 4;
  CHECK(cycle_cost(fast, slow) == 6);
}

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


#include <deque>

#include "doctest.h"
#include "dlrx/tile.hpp"
#include "support.hpp"

using namespace dlrx;
using dlrx::testing::Gen;

namespace {

TaskDescriptor make_task(std::string name, std::uint32_t iq, bool host = true) {
  TaskDescriptor t;
  t.name = std::move(name);
  t.iq_len = iq;
  t.host_entry = host;
  t.body = [](TaskContext& ctx) { ctx.pop_iq(ctx.task()); };
  return t;
}

// A (IQ 128) feeds B through a 1024-entry channel.
TaskProgram producer_consumer() {
  auto a = make_task("A", 128);
  a.primary_output = QueueRef::cq(0);
  auto b = make_task("B", 128, false);
  return declare_program("pc", {a, b}, {{"C", 1024, 1, ArrayClass::Vertex, 1, {"head"}}});
}

}  // namespace

TEST_CASE("queue: push, peek, pop") {
  Queue q(3);
  CHECK(q.empty());
  q.push(7);
  q.push(8);
  CHECK(q.front() == 7);
  CHECK(q.at(1) == 8);
  CHECK(q.pop() == 7);
  q.push(9);
  q.push(10);
  CHECK(q.full());
  CHECK_THROWS_AS(q.push(11), SimAssertion);
  CHECK(q.pop() == 8);
  CHECK(q.pop() == 9);
  CHECK(q.pop() == 10);
  CHECK_THROWS_AS(q.pop(), SimAssertion);
  CHECK_THROWS_AS(q.front(), SimAssertion);
  CHECK(q.high_water() == 3);
}

TEST_CASE("property: queue matches a FIFO reference") {
  Gen gen(21);
  Queue q(17);
  std::deque<Word> ref;
  for (int op = 0; op < 100000; ++op) {
    if (gen.coin() && ref.size() < 17) {
      const Word v = gen.next();
      q.push(v);
      ref.push_back(v);
    } else if (!ref.empty()) {
      CHECK(q.front() == ref.front());
      CHECK(q.pop() == ref.front());
      ref.pop_front();
    }
    REQUIRE(q.size() == ref.size());
    if (!ref.empty()) REQUIRE(q.at(static_cast<std::uint32_t>(ref.size() - 1)) == ref.back());
  }
}

TEST_CASE("thresholds") {
  CHECK(high_threshold(128, 7.0 / 8.0) == 112);
  CHECK(high_threshold(100, 7.0 / 8.0) == 88);
  CHECK(low_threshold(1024, 1.0 / 8.0) == 128);
  CHECK(low_threshold(10, 1.0 / 8.0) == 1);
}

TEST_CASE("tsu priority classes") {
  const TaskProgram p = producer_consumer();
  const SchedulerParams sp;
  Tile t(0, p);
  CHECK(priority_of(0, t, p, sp) == Priority::Ineligible);
  t.iq[0].push(1);
  CHECK(priority_of(0, t, p, sp) == Priority::Medium);  // IQ 1/128, OQ 0/1024
  for (int i = 0; i < 200; ++i) t.cq[0].push(0);
  CHECK(priority_of(0, t, p, sp) == Priority::Low);
  while (t.iq[0].size() < 120) t.iq[0].push(1);
  CHECK(priority_of(0, t, p, sp) == Priority::High);  // IQ 120/128
  CHECK(priority_of(1, t, p, sp) == Priority::Ineligible);
}

TEST_CASE("tsu picks the largest IQ among equals") {
  std::vector<TaskDescriptor> tasks{make_task("T1", 32), make_task("T2", 128), make_task("T3", 2048),
                                    make_task("T4", 32)};
  const TaskProgram p = declare_program("four", tasks, {});
  const SchedulerParams sp;
  Tile t(0, p);
  CHECK_FALSE(schedule_next(t, p, sp).has_value());
  for (auto& q : t.iq) q.push(1);
  for (std::uint16_t i = 0; i < 4; ++i) CHECK(priority_of(i, t, p, sp) == Priority::Low);
  CHECK(schedule_next(t, p, sp) == std::uint16_t{2});
  // Equal capacities fall to the lowest id.
  t.iq[2].clear();
  t.iq[1].clear();
  CHECK(schedule_next(t, p, sp) == std::uint16_t{0});
  // Occupancy tie-break.
  SchedulerParams occ;
  occ.tie_by_occupancy = true;
  t.iq[3].push(2);
  CHECK(schedule_next(t, p, occ) == std::uint16_t{3});
}

TEST_CASE("tsu: high beats medium") {
  auto a = make_task("A", 128);
  a.primary_output = QueueRef::cq(0);
  auto b = make_task("B", 16, false);
  const TaskProgram p =
      declare_program("hm", {a, b}, {{"C", 1024, 1, ArrayClass::Vertex, 1, {"head"}}});
  Tile t(0, p);
  t.iq[0].push(1);  // Medium
  for (int i = 0; i < 15; ++i) t.iq[1].push(1);  // High, smaller IQ
  CHECK(priority_of(0, t, p, {}) == Priority::Medium);
  CHECK(priority_of(1, t, p, {}) == Priority::High);
  CHECK(schedule_next(t, p, {}) == std::uint16_t{1});
}

TEST_CASE("tsu gates on output room and preloaded parameters") {
  auto a = make_task("A", 8);
  a.gates.push_back({QueueRef::cq(0), 3});
  auto b = make_task("B", 8, false);
  b.params_preloaded = true;
  b.params_per_invocation = 3;
  const TaskProgram p =
      declare_program("g", {a, b}, {{"C", 4, 1, ArrayClass::Vertex, 3, {"h", "x", "y"}}});
  Tile t(0, p);
  t.iq[0].push(1);
  CHECK(gates_pass(0, t, p));
  t.cq[0].push(0);
  t.cq[0].push(0);
  CHECK_FALSE(gates_pass(0, t, p));
  CHECK(priority_of(0, t, p, {}) == Priority::Ineligible);
  t.iq[1].push(1);
  t.iq[1].push(2);
  CHECK(priority_of(1, t, p, {}) == Priority::Ineligible);
  t.iq[1].push(3);
  CHECK(priority_of(1, t, p, {}) != Priority::Ineligible);
}

TEST_CASE("invoke charges micro-ops and pops parameters") {
  auto a = make_task("A", 8);
  a.params_preloaded = true;
  a.params_per_invocation = 2;
  std::uint64_t seen = 0;
  a.body = [&seen](TaskContext& ctx) {
    seen = ctx.param(0) + ctx.param(1);
    ctx.alu(2);
    ctx.branch();
  };
  const TaskProgram p = declare_program("inv", {a}, {});
  ExecEnv env;
  env.program = &p;
  env.record_causal = true;
  Tile t(0, p);
  t.iq[0].push(4, 77);
  t.iq[0].push(5, 77);
  CHECK(invoke(t, 0, env, 10) == 3);
  CHECK(seen == 9);
  CHECK(t.iq[0].empty());
  CHECK(t.counters.invocations[0] == 1);
  CHECK(t.counters.micro_ops() == 3);
  REQUIRE(t.invokes.size() == 1);
  CHECK(t.invokes[0].tag == 77);
  CHECK(t.invokes[0].cycle == 10);
  // An empty body still occupies the PU for one cycle.
  auto e = make_task("E", 2);
  e.body = [](TaskContext&) {};
  const TaskProgram q = declare_program("empty", {e}, {});
  ExecEnv env2;
  env2.program = &q;
  Tile u(0, q);
  u.iq[0].push(1);
  CHECK(invoke(u, 0, env2, 0) == 1);
}

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
#include <map>
#include <set>

#include "doctest.h"
#include "dlrx/noc.hpp"
#include "support.hpp"

using namespace dlrx;
using dlrx::testing::Gen;

namespace {

// Routers plus ideal endpoints: each tile injects one flit per channel per
// cycle from its backlog and sinks whole messages addressed to it.
struct Net {
  Topology topo;
  std::vector<Router> r;
  std::vector<std::vector<std::deque<Flit>>> backlog;  // [tile][channel]
  std::map<std::uint64_t, Cycle> delivered;
  std::map<std::uint64_t, std::uint16_t> hops;
  Cycle now = 0;
  std::uint64_t injected = 0, ejected = 0;

  Net(Topology t, const std::vector<std::uint32_t>& flits) : topo(t) {
    r.resize(topo.tiles());
    const auto slots = channel_slots(topo.buffer_pool, flits);
    for (auto& x : r) x.init(topo.num_ports(), slots);
    backlog.assign(topo.tiles(), std::vector<std::deque<Flit>>(flits.size()));
  }

  void send(TileId src, TileId dst, std::uint8_t ch, std::uint16_t len, std::uint64_t tag) {
    for (std::uint16_t i = 0; i < len; ++i) {
      Flit f;
      f.src = src;
      f.dest = dst;
      f.channel = ch;
      f.len = len;
      f.tag = tag;
      f.head = i == 0;
      f.payload = i;
      backlog[src][ch].push_back(f);
    }
  }

  void step() {
    for (TileId t = 0; t < r.size(); ++t) router_arbitrate(r[t], t, r, topo);
    for (TileId t = 0; t < r.size(); ++t) {
      router_commit_grants(r[t]);
      router_receive(r[t], t, r, topo);
      for (std::uint32_t c = 0; c < r[t].nch; ++c) {
        auto& q = backlog[t][c];
        if (!q.empty() && r[t].buffer(Local, c).free() > 0) {
          r[t].accept(Local, q.front());
          q.pop_front();
          ++injected;
        }
      }
      eject(t);
    }
    ++now;
  }

  void eject(TileId t) {
    Router& x = r[t];
    for (std::uint32_t b = 0; b < x.in.size(); ++b) {
      FlitBuffer& buf = x.in[b];
      if (buf.empty() || x.route_out[b] >= 0) continue;
      const Flit head = buf.front();
      if (!head.head || head.dest != t || buf.size() < head.len) continue;
      for (std::uint16_t i = 0; i < head.len; ++i) {
        const Flit f = buf.pop();
        REQUIRE(f.tag == head.tag);
      }
      x.buffered -= head.len;
      ejected += head.len;
      REQUIRE(delivered.emplace(head.tag, now).second);
      hops[head.tag] = head.hops;
      return;
    }
  }

  std::uint64_t in_flight() const {
    std::uint64_t n = 0;
    for (const auto& x : r) n += x.buffered;
    return n;
  }

  bool idle() const {
    for (const auto& t : backlog)
      for (const auto& q : t)
        if (!q.empty()) return false;
    return in_flight() == 0;
  }
};

}  // namespace

TEST_CASE("tile bits") {
  CHECK(Topology::make(TopologyKind::Torus, 16, 16).tile_bits() == 8);
  CHECK(Topology::make(TopologyKind::Mesh, 1, 1).tile_bits() == 0);
  CHECK_THROWS_AS(Topology::make(TopologyKind::Mesh, 7, 7), ConfigError);
  CHECK_THROWS_AS(Topology::make(TopologyKind::Mesh, 8, 8, 8), ConfigError);
}

TEST_CASE("head encoding example") {
  const auto p = PlacementPolicy::make(Placement::Contiguous, 256000, 256);
  REQUIRE(p.chunk == 1000);
  const HeadCodec codec{32, 8};
  CHECK(encode_head(1001, p, codec) == ((Word{1} << 24) | 1));
  CHECK(decode_head((Word{1} << 24) | 1, codec) == Slot{1, 1});
}

TEST_CASE("head encoding overflow asserts") {
  const HeadCodec codec{32, 8};
  CHECK_THROWS_AS(codec.encode(Slot{0, 1u << 24}), SimAssertion);
}

TEST_CASE("property: head encode/decode round trip") {
  Gen gen(99);
  for (int i = 0; i < 1000000; ++i) {
    const std::uint32_t bits = static_cast<std::uint32_t>(gen.below(11));
    const std::uint32_t tiles = 1u << bits;
    const std::uint64_t len = gen.range(1, 1u << 20);
    const auto kind = gen.coin() ? Placement::Contiguous : Placement::Interleaved;
    const auto p = PlacementPolicy::make(kind, len, tiles);
    const HeadCodec codec{gen.coin() ? 32u : 64u, bits};
    const std::uint64_t idx = gen.below(len);
    const Slot s = decode_head(encode_head(idx, p, codec), codec);
    if (!(s == owner_of(idx, p))) {
      FAIL("round trip failed for idx ", idx, " tiles ", tiles);
    }
  }
}

TEST_CASE("routes") {
  const auto mesh = Topology::make(TopologyKind::Mesh, 4, 4);
  CHECK(route_next(0, 3, mesh) == E);
  CHECK(route_hops(0, 3, mesh) == 3);
  CHECK(route_next(0, 0, mesh) == Local);
  CHECK(route_next(mesh.id(2, 0), mesh.id(2, 3), mesh) == S);
  // X before Y.
  CHECK(route_next(mesh.id(0, 0), mesh.id(1, 1), mesh) == E);

  const auto torus = Topology::make(TopologyKind::Torus, 8, 8);
  CHECK(route_next(0, 6, torus) == W);
  CHECK(route_hops(0, 6, torus) == 2);
  CHECK(route_next(0, 4, torus) == E);  // tie goes positive
  CHECK(route_hops(0, torus.id(4, 4), torus) == 8);

  const auto ruche = Topology::make(TopologyKind::Mesh, 8, 8, 4);
  CHECK(route_next(0, 6, ruche) == RE);
  CHECK(route_hops(0, 6, ruche) == 3);  // one 4-hop ruche link, then two unit links
  CHECK(route_next(0, 3, ruche) == E);
}

TEST_CASE("property: routes are minimal and stay on the grid") {
  Gen gen(4);
  for (int round = 0; round < 2000; ++round) {
    const std::uint32_t w = 1u << gen.range(1, 4), h = 1u << gen.range(1, 4);
    const bool torus = gen.coin();
    const auto topo = Topology::make(torus ? TopologyKind::Torus : TopologyKind::Mesh, w, h);
    const TileId a = static_cast<TileId>(gen.below(topo.tiles()));
    const TileId b = static_cast<TileId>(gen.below(topo.tiles()));
    auto dist = [&](std::uint32_t p, std::uint32_t q, std::uint32_t n) {
      const std::uint32_t d = p > q ? p - q : q - p;
      return torus ? std::min(d, n - d) : d;
    };
    CHECK(route_hops(a, b, topo) == dist(topo.x_of(a), topo.x_of(b), w) +
                                        dist(topo.y_of(a), topo.y_of(b), h));
  }
}

TEST_CASE("bubble rule") {
  for (std::uint32_t len = 1; len <= 4; ++len) {
    CHECK_FALSE(bubble_admission(len, len, true));
    CHECK(bubble_admission(len + 1, len, true));
    CHECK(bubble_admission(1, len, false));
    CHECK_FALSE(bubble_admission(0, len, false));
  }
}

TEST_CASE("channel slots keep room for a message and a bubble") {
  CHECK(channel_slots(8, {3, 2}) == std::vector<std::uint32_t>{4, 4});
  CHECK(channel_slots(4, {3, 2}) == std::vector<std::uint32_t>{4, 3});
  CHECK(channel_slots(16, {1}) == std::vector<std::uint32_t>{16});
}

TEST_CASE("arbitration: wormhole holds the output, then round robin") {
  Net net(Topology::make(TopologyKind::Mesh, 4, 1), {2});
  // Two 2-flit messages meet at tile 1: one from the west, one local.
  net.send(0, 3, 0, 2, 1);
  net.send(1, 3, 0, 2, 2);
  std::vector<std::uint64_t> order;
  std::set<std::uint64_t> at3;
  for (int i = 0; i < 40 && !net.idle(); ++i) {
    net.step();
    if (net.r[1].out_valid & (1u << E)) order.push_back(net.r[1].out_flit[E].tag);
  }
  CHECK(net.idle());
  REQUIRE(order.size() == 4);
  // Each message crosses the shared link contiguously.
  CHECK(order[0] == order[1]);
  CHECK(order[2] == order[3]);
  CHECK(order[0] != order[2]);
  CHECK(net.delivered.size() == 2);
}

TEST_CASE("arbitration: round robin alternates between steady requesters") {
  Net net(Topology::make(TopologyKind::Mesh, 4, 1), {1});
  for (std::uint64_t k = 0; k < 6; ++k) {
    net.send(0, 3, 0, 1, 100 + k);
    net.send(1, 3, 0, 1, 200 + k);
  }
  std::vector<std::uint64_t> order;
  for (int i = 0; i < 100 && !net.idle(); ++i) {
    net.step();
    if (net.r[1].out_valid & (1u << E)) order.push_back(net.r[1].out_flit[E].tag / 100);
  }
  CHECK(net.idle());
  REQUIRE(order.size() == 12);
  // Once both inputs are backlogged neither waits twice in a row.
  int longest = 0, run = 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    run = order[i] == order[i - 1] ? run + 1 : 0;
    longest = std::max(longest, run);
  }
  CHECK(longest <= 2);
}

TEST_CASE("zero-load latency is hops + flits - 1 plus a constant") {
  for (auto kind : {TopologyKind::Mesh, TopologyKind::Torus}) {
    const auto topo = Topology::make(kind, 8, 8);
    auto latency = [&](TileId s, TileId d, std::uint16_t len) {
      Net net(topo, {len});
      net.send(s, d, 0, len, 1);
      while (!net.idle()) net.step();
      CHECK(net.hops[1] == route_hops(s, d, topo));
      return static_cast<std::int64_t>(net.delivered[1]);
    };
    const std::int64_t base = latency(0, 1, 1);
    Gen gen(8);
    for (int i = 0; i < 60; ++i) {
      const TileId s = static_cast<TileId>(gen.below(64));
      TileId d = static_cast<TileId>(gen.below(64));
      if (d == s) d = (d + 1) % 64;
      const auto len = static_cast<std::uint16_t>(gen.range(1, 3));
      const std::int64_t hops = route_hops(s, d, topo);
      CHECK(latency(s, d, len) - base == (hops - 1) + (len - 1));
    }
  }
}

TEST_CASE("property: saturated networks drain and conserve flits") {
  Gen gen(2024);
  struct Shape {
    TopologyKind kind;
    std::uint32_t w, h, ruche, pool;
  };
  const Shape shapes[] = {{TopologyKind::Torus, 8, 8, 1, 8}, {TopologyKind::Mesh, 8, 8, 1, 8},
                          {TopologyKind::Torus, 8, 4, 2, 8}, {TopologyKind::Torus, 4, 4, 1, 1},
                          {TopologyKind::Mesh, 16, 16, 4, 8}};
  for (const Shape& sh : shapes) {
    const auto topo = Topology::make(sh.kind, sh.w, sh.h, sh.ruche, sh.pool);
    Net net(topo, {3, 2});
    std::uint64_t tag = 1, flits = 0;
    std::map<std::uint64_t, std::pair<TileId, TileId>> sent;
    for (TileId t = 0; t < topo.tiles(); ++t)
      for (int m = 0; m < 40; ++m) {
        const auto ch = static_cast<std::uint8_t>(gen.below(2));
        const auto len = static_cast<std::uint16_t>(ch == 0 ? 3 : 2);
        TileId d = static_cast<TileId>(gen.below(topo.tiles()));
        if (d == t) d = (d + 1) % topo.tiles();
        net.send(t, d, ch, len, tag);
        sent[tag++] = {t, d};
        flits += len;
      }
    std::uint64_t guard = 0;
    while (!net.idle() && guard++ < 200000) {
      net.step();
      REQUIRE(net.injected == net.ejected + net.in_flight());
    }
    CHECK(net.idle());
    CHECK(net.ejected == flits);
    CHECK(net.delivered.size() == sent.size());
    for (const auto& [t, ends] : sent)
      CHECK(net.hops[t] == route_hops(ends.first, ends.second, topo));
  }
}

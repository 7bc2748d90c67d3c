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


#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dlrx/cli.hpp"
#include "dlrx/config.hpp"
#include "json.hpp"

using namespace dlrx;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int cli(std::vector<std::string> args, std::string* output = nullptr) {
  std::ostringstream out, err;
  const int rc = cli_main(args, out, err);
  if (output) *output = out.str() + err.str();
  return rc;
}

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("run sssp on an 8x8 torus") {
  TempDir tmp("dlrx_cli_run");
  const int rc = cli({"run", "--kernel", "sssp", "--grid", "8x8", "--topology", "torus",
                      "--dataset", "rmat:s=10:ef=10", "--out", tmp.path.string()});
  CHECK(rc == kExitOk);
  const auto j = read_json(tmp.path / "run.json");
  CHECK(j["schema_version"] == 1);
  CHECK(j["oracle"]["checked"] == true);
  CHECK(j["oracle"]["match"] == true);
  CHECK(j["dataset"]["vertices"] == 1024);
  CHECK(j["stats"]["cycles"].get<std::uint64_t>() > 0);
  for (const char* f : {"pu_heatmap.csv", "router_heatmap.csv", "per_task_invocations.csv",
                        "timeline.csv", "energy_breakdown.csv"})
    CHECK_MESSAGE(fs::exists(tmp.path / f), f);
  std::ifstream heat(tmp.path / "pu_heatmap.csv");
  int rows = 0;
  for (std::string line; std::getline(heat, line);) ++rows;
  CHECK(rows == 8);
}

TEST_CASE("config errors exit with 2") {
  TempDir tmp("dlrx_cli_bad");
  CHECK(cli({"run", "--grid", "7x7", "--out", tmp.path.string()}) == kExitConfig);
  CHECK(cli({"run", "--kernel", "nope", "--out", tmp.path.string()}) == kExitConfig);
  CHECK(cli({"run", "--kernel", "pagerank", "--barrier", "off", "--out",
             tmp.path.string()}) == kExitConfig);
  CHECK(cli({"validate", "--grid", "7x7"}) == kExitConfig);
  CHECK(cli({"bogus"}) == kExitConfig);
}

TEST_CASE("capacity error") {
  std::string text;
  CHECK(cli({"validate", "--grid", "2x2", "--dataset", "rmat:s=16:ef=10", "--tile.sram_kb",
             "64"},
            &text) == kExitConfig);
  CHECK(text.find("capacity") != std::string::npos);
  CHECK(cli({"validate", "--grid", "16x16", "--dataset", "rmat:s=10:ef=10"}) == kExitOk);
}

TEST_CASE("sweep writes one directory per point and scaling.csv") {
  TempDir tmp("dlrx_cli_sweep");
  CHECK(cli({"run", "--kernel", "bfs", "--dataset", "rmat:s=8:ef=8", "--sweep",
             "grid=2x2,4x4", "--sweep", "topology=mesh,torus", "--out", tmp.path.string()}) ==
        kExitOk);
  int runs = 0;
  for (const auto& e : fs::directory_iterator(tmp.path))
    if (e.is_directory() && fs::exists(e.path() / "run.json")) ++runs;
  CHECK(runs == 4);
  CHECK(fs::exists(tmp.path / "grid=2x2_topology=mesh" / "run.json"));
  std::ifstream csv(tmp.path / "scaling.csv");
  std::vector<std::string> lines;
  for (std::string line; std::getline(csv, line);) lines.push_back(line);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0].rfind("grid,topology,", 0) == 0);
}

TEST_CASE("expand_sweep order") {
  const auto pts = expand_sweep({"grid=2x2,4x4", "topology=mesh,torus"});
  REQUIRE(pts.size() == 4);
  CHECK(pts[0][0].second == "2x2");
  CHECK(pts[0][1].second == "mesh");
  CHECK(pts[1][1].second == "torus");
  CHECK(pts[2][0].second == "4x4");
  CHECK_THROWS_AS(expand_sweep({"grid"}), ConfigError);
}

TEST_CASE("config file and flag precedence") {
  TempDir tmp("dlrx_cli_cfg");
  {
    std::ofstream f(tmp.path / "run.cfg");
    f << "# test\nkernel = wcc\ngrid = 2x2\ndataset = rmat:s=8:ef=4\n";
  }
  const fs::path out = tmp.path / "out";
  CHECK(cli({"run", "-c", (tmp.path / "run.cfg").string(), "--grid", "4x4", "--out",
             out.string()}) == kExitOk);
  const auto j = read_json(out / "run.json");
  CHECK(j["config"]["kernel"] == "wcc");
  CHECK(j["config"]["grid"] == "4x4");
  {
    std::ofstream f(tmp.path / "bad.cfg");
    f << "kernel = bfs\nno.such.key = 1\n";
  }
  std::string text;
  CHECK(cli({"validate", "-c", (tmp.path / "bad.cfg").string()}, &text) == kExitConfig);
  CHECK(text.find(":2") != std::string::npos);
}

TEST_CASE("run.json is byte-stable") {
  TempDir tmp("dlrx_cli_det");
  const auto a = tmp.path / "a", b = tmp.path / "b";
  CHECK(cli({"run", "--dataset", "rmat:s=9:ef=8", "--grid", "4x4", "--out", a.string()}) == 0);
  CHECK(cli({"run", "--dataset", "rmat:s=9:ef=8", "--grid", "4x4", "--workers", "3", "--out",
             b.string()}) == 0);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  CHECK(slurp(a / "run.json") == slurp(b / "run.json"));
}

TEST_CASE("dump-program and keys") {
  std::string text;
  CHECK(cli({"dump-program", "--kernel", "sssp", "--dataset", "rmat:s=8:ef=4"}, &text) == 0);
  CHECK(text.find("oqt2 512") != std::string::npos);
  CHECK(cli({"keys"}, &text) == 0);
  CHECK(text.find("queue.cq2") != std::string::npos);
}

TEST_CASE("edge-list datasets") {
  TempDir tmp("dlrx_cli_file");
  {
    std::ofstream f(tmp.path / "g.txt");
    f << "0 1 4\n1 2 1\n0 2 9\n";
  }
  const RunConfig base;
  const Csr csr = load_dataset("file:" + (tmp.path / "g.txt").string(), KernelKind::Sssp, 1);
  CHECK(csr.num_vertices == 3);
  CHECK(csr.num_edges() == 3);
  CHECK(cli({"run", "--kernel", "sssp", "--grid", "2x2", "--kernel.root", "0", "--dataset",
             "file:" + (tmp.path / "g.txt").string(), "--out", (tmp.path / "o").string()}) == 0);
  CHECK_THROWS_AS(load_dataset("file:/no/such/file", KernelKind::Bfs, 1), ConfigError);
  CHECK_THROWS_AS(load_dataset("weird:x=1", KernelKind::Bfs, 1), ConfigError);
}

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


#include "dlrx/cli.hpp"

#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "dlrx/config.hpp"
#include "dlrx/kernels.hpp"
#include "dlrx/report.hpp"

namespace dlrx {

namespace {

std::string dir_name(const std::vector<std::pair<std::string, std::string>>& point) {
  std::string s;
  for (const auto& [k, v] : point) {
    if (!s.empty()) s += "_";
    s += k + "=" + v;
  }
  for (char& c : s)
    if (c == '/' || c == ':' || c == ' ' || c == '\\') c = '-';
  return s.empty() ? "run" : s;
}

void print_summary(std::ostream& out, const RunResult& r) {
  const RunStats& s = r.stats;
  out << "cycles " << s.cycles << "  edges/s " << s.edges_per_second() << "  energy_j "
      << r.energy.total() << "  mW/mm2 " << r.power_density_mw_mm2;
  if (r.oracle_checked)
    out << "  oracle " << (r.oracle.match ? "match" : "MISMATCH (" + r.oracle.detail + ")");
  out << "\n";
}

struct Cli {
  CLI::App app{"dlrxsim: cycle-level simulator of a tiled distributed-memory graph chip"};
  std::string config_file;
  std::map<std::string, std::string> values;  // flag overrides
  std::vector<std::string> sweeps;
  CLI::App* run = nullptr;
  CLI::App* validate = nullptr;
  CLI::App* dump = nullptr;
  CLI::App* keys = nullptr;

  Cli() {
    app.require_subcommand(1);
    run = app.add_subcommand("run", "simulate one configuration or a sweep");
    validate = app.add_subcommand("validate", "static checks without simulating");
    dump = app.add_subcommand("dump-program", "print the task program tables");
    keys = app.add_subcommand("keys", "list configuration keys");
    for (CLI::App* sub : {run, validate, dump}) {
      sub->add_option("-c,--config", config_file, "flat 'key = value' config file");
      for (const auto& k : config_keys()) {
        // Flags override the config file; remember only what was given.
        sub->add_option_function<std::string>(
            "--" + k.name, [this, name = k.name](const std::string& v) { values[name] = v; },
            k.help)
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
      }
    }
    run->add_option("--sweep", sweeps, "key=v1,v2,... (repeatable; cross product)");
  }
};

RunConfig build_config(const Cli& cli) {
  RunConfig cfg;
  if (!cli.config_file.empty()) load_config_file(cfg, cli.config_file);
  // Apply the kernel first so dataset defaults see it (order is otherwise free).
  for (const auto& [k, v] : cli.values) apply_setting(cfg, k, v);
  return cfg;
}

int do_run(const Cli& cli, std::ostream& out) {
  const RunConfig base = build_config(cli);
  if (cli.sweeps.empty()) {
    const RunResult r = run_experiment(base);
    write_outputs(base.out, r);
    print_summary(out, r);
    return r.oracle_checked && !r.oracle.match ? kExitOracleMismatch : kExitOk;
  }
  std::map<std::string, Csr> cache;
  std::vector<SweepRow> rows;
  bool all_match = true;
  for (const auto& point : expand_sweep(cli.sweeps)) {
    RunConfig cfg = base;
    for (const auto& [k, v] : point) apply_setting(cfg, k, v);
    const std::string key = cfg.dataset + "|" + to_string(cfg.sim.kernel) + "|" +
                            std::to_string(cfg.seed);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, load_dataset(cfg.dataset, cfg.sim.kernel, cfg.seed)).first;
    out << dir_name(point) << ": " << std::flush;
    RunResult r = run_experiment(cfg, it->second);
    write_outputs(std::filesystem::path(base.out) / dir_name(point), r);
    print_summary(out, r);
    all_match &= !r.oracle_checked || r.oracle.match;
    rows.push_back({point, std::move(r)});
  }
  std::filesystem::create_directories(base.out);
  write_atomic(std::filesystem::path(base.out) / "scaling.csv", scaling_csv(rows));
  return all_match ? kExitOk : kExitOracleMismatch;
}

int do_validate(const Cli& cli, std::ostream& out) {
  const RunConfig cfg = build_config(cli);
  const Validation v = validate(cfg);
  for (const auto& d : v.diagnostics) out << to_string(d) << "\n";
  out << (v.ok() ? "ok" : "invalid") << "\n";
  return v.ok() ? kExitOk : kExitConfig;
}

int do_dump(const Cli& cli, std::ostream& out) {
  RunConfig cfg = build_config(cli);
  const Csr csr = load_dataset(cfg.dataset, cfg.sim.kernel, cfg.seed);
  cfg = resolve(cfg, csr);
  const PartitionedDataset d = partition(csr, cfg.sim.placement, cfg.sim.tiles());
  const auto kernel = make_kernel(cfg.sim.kernel, cfg.sim.kp, d);
  out << dump_program(kernel->program());
  out << "oqt2 " << kernel->oqt2() << "  nodes_per_chunk " << d.nodes_per_chunk()
      << "  edges_per_chunk " << d.edges_per_chunk() << "\n";
  return kExitOk;
}

}  // namespace

std::vector<std::vector<std::pair<std::string, std::string>>> expand_sweep(
    const std::vector<std::string>& specs) {
  std::vector<std::vector<std::pair<std::string, std::string>>> points{{}};
  for (const auto& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConfigError("sweep '" + spec + "': expected key=v1,v2");
    const std::string key = spec.substr(0, eq);
    if (!find_key(key)) throw ConfigError("sweep: unknown key '" + key + "'");
    std::vector<std::string> vals;
    std::stringstream ss(spec.substr(eq + 1));
    for (std::string v; std::getline(ss, v, ',');)
      if (!v.empty()) vals.push_back(v);
    if (vals.empty()) throw ConfigError("sweep '" + spec + "': no values");
    std::vector<std::vector<std::pair<std::string, std::string>>> next;
    for (const auto& p : points)
      for (const auto& v : vals) {
        auto q = p;
        q.emplace_back(key, v);
        next.push_back(std::move(q));
      }
    points = std::move(next);
  }
  return points;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    cli.app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << cli.app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << cli.app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  try {
    if (cli.keys->parsed()) {
      for (const auto& k : config_keys()) out << k.name << "\t" << k.help << "\n";
      return kExitOk;
    }
    if (cli.run->parsed()) return do_run(cli, out);
    if (cli.validate->parsed()) return do_validate(cli, out);
    return do_dump(cli, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SimAbort& e) {
    err << "aborted: " << e.what() << "\n";
    return kExitAbort;
  } catch (const SimAssertion& e) {
    err << "internal assertion: " << e.what() << "\n";
    return kExitAssertion;
  }
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace dlrx

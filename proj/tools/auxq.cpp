// Copyright 2026 The auxq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "auxq/cli/commands.hpp"
#include "auxq/core/random.hpp"
#include "auxq/optics/resources.hpp"

namespace {

int emit(const auxq::cli::CommandResult& r, const std::string& format, const std::string& out) {
  std::string text;
  if (format == "csv") {
    if (r.csv.empty()) {
      std::cerr << "error: " << r.report.command << " has no csv form\n";
      return 2;
    }
    text = r.csv;
  } else {
    text = (r.bare ? r.report.results : r.report.to_json()).dump(2) + "\n";
  }
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  namespace ac = auxq::cli;
  CLI::App app{"auxq: qudit-assisted gate synthesis and linear-optics simulation"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out, "Write the report to FILE");
  };

  std::string n_range = "1..6";
  auto* verify = app.add_subcommand("verify", "Verify the synthesized n-controlled Fredkin gates");
  verify->add_option("--n", n_range, "n or n_min..n_max (1..8)");
  add_common(verify);

  std::string gate;
  std::string input;
  bool feedforward = true;
  std::uint64_t seed = auxq::kDefaultSeed;
  auto* optics = app.add_subcommand("optics", "Simulate a linear-optics gate");
  optics->add_option("gate", gate, "pswap or fredkin3")->required();
  optics->add_option("--input", input, "Logical ket (e.g. 01, 101) or random:N")->required();
  optics->add_flag("--feedforward,!--no-feedforward", feedforward, "Apply feedforward corrections");
  optics->add_option("--seed", seed, "Seed for random inputs");
  add_common(optics);

  auto* table1 = app.add_subcommand("table1", "Partial-swap coincidence table");
  add_common(table1);

  std::string res_range = "1..6";
  auto* resources = app.add_subcommand("resources", "Resource and success-probability table");
  resources->add_option("--n", res_range, "n or n_min..n_max");
  add_common(resources);

  auto* certify = app.add_subcommand("certify", "Cross-check the optical simulation with Fock amplitudes");
  add_common(certify);

  auto* netlist = app.add_subcommand("emit-netlist", "Print the netlist of a built-in gate");
  netlist->add_option("gate", gate, "pswap or fredkin3")->required();
  add_common(netlist);

  CLI11_PARSE(app, argc, argv);

  try {
    ac::CommandResult r;
    if (*verify) {
      auto [a, b] = ac::parse_n_range(n_range, 1, 8);
      r = ac::cmd_verify(a, b);
    } else if (*optics) {
      r = ac::cmd_optics(gate, feedforward, input, seed);
    } else if (*table1) {
      r = ac::cmd_table1();
    } else if (*resources) {
      auto [a, b] = ac::parse_n_range(res_range, 1, auxq::optics::kMaxResourceN);
      r = ac::cmd_resources(a, b);
    } else if (*certify) {
      r = ac::cmd_certify();
    } else {
      r = ac::cmd_emit_netlist(gate);
    }
    return emit(r, format, out);
  } catch (const ac::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

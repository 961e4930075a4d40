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

#include "auxq/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "auxq/core/random.hpp"
#include "auxq/fock/certify.hpp"
#include "auxq/optics/fidelity.hpp"
#include "auxq/optics/fredkin_chain.hpp"
#include "auxq/optics/netlist.hpp"
#include "auxq/optics/pswap.hpp"
#include "auxq/optics/resources.hpp"
#include "auxq/synthesis/fredkin.hpp"
#include "auxq/synthesis/gates.hpp"
#include "auxq/synthesis/verify.hpp"

namespace auxq::cli {

using nlohmann::json;

namespace {

int parse_int(const std::string& s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

json tolerance_block() { return {{"equality", kTolerance}, {"probability", 1e-12}}; }

std::string fraction_or_decimal(double p) {
  if (auto f = dyadic_fraction(p)) return *f;
  std::ostringstream os;
  os << clean(p);
  return os.str();
}

CVector basis_vector(std::size_t dim, std::size_t index) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

}  // namespace

std::pair<int, int> parse_n_range(const std::string& text, int lo, int hi) {
  const auto dots = text.find("..");
  int a = 0;
  int b = 0;
  if (dots == std::string::npos) {
    a = b = parse_int(text);
  } else {
    a = parse_int(text.substr(0, dots));
    b = parse_int(text.substr(dots + 2));
  }
  if (a < lo || b > hi || a > b) {
    throw UsageError("n range '" + text + "' must satisfy " + std::to_string(lo) +
                     " <= n_min <= n_max <= " + std::to_string(hi));
  }
  return {a, b};
}

InputSpec parse_input(const std::string& gate, const std::string& text, std::uint64_t seed) {
  std::vector<int> radix;
  if (gate == "pswap") radix = {optics::kPswapCarrierDim, 2};
  else if (gate == "fredkin3") radix = {2, 2, 2};
  else throw UsageError("unknown gate '" + gate + "' (expected pswap or fredkin3)");
  std::size_t dim = 1;
  for (int r : radix) dim *= static_cast<std::size_t>(r);

  InputSpec spec;
  if (text.rfind("random:", 0) == 0) {
    const int n = parse_int(text.substr(7));
    if (n < 1) throw UsageError("random input count must be >= 1");
    Rng rng(seed);
    spec.random = true;
    for (int k = 0; k < n; ++k) {
      spec.labels.push_back("random#" + std::to_string(k));
      spec.states.push_back(random_state_vector(dim, rng));
    }
    return spec;
  }
  if (text.size() != radix.size()) {
    throw UsageError("ket '" + text + "' needs " + std::to_string(radix.size()) + " digits");
  }
  std::size_t index = 0;
  for (std::size_t k = 0; k < radix.size(); ++k) {
    const int d = text[k] - '0';
    if (d < 0 || d >= radix[k]) throw UsageError("ket '" + text + "' has an invalid digit");
    index = index * static_cast<std::size_t>(radix[k]) + static_cast<std::size_t>(d);
  }
  spec.labels.push_back(text);
  spec.states.push_back(basis_vector(dim, index));
  return spec;
}

CommandResult cmd_verify(int n_min, int n_max) {
  CommandResult out;
  out.report.command = "verify";
  out.report.parameters = {{"n_min", n_min}, {"n_max", n_max}};
  out.report.tolerances = tolerance_block();
  json reports = json::array();
  std::ostringstream csv;
  csv << "n,verified,max_deviation,leakage,two_qubit_count,single_qudit_count,carrier_dim\n";
  bool all = true;
  for (int n = n_min; n <= n_max; ++n) {
    const auto r = synthesis::verify_synthesis(n);
    all = all && r.verified;
    reports.push_back({{"n", r.n},
                       {"verified", r.verified},
                       {"max_deviation", clean(r.max_deviation)},
                       {"leakage", clean(r.leakage)},
                       {"two_qubit_count", r.two_qubit_count},
                       {"single_qudit_count", r.single_qudit_count},
                       {"carrier_dim", r.carrier_dim}});
    csv << r.n << ',' << (r.verified ? "true" : "false") << ',' << clean(r.max_deviation) << ','
        << clean(r.leakage) << ',' << r.two_qubit_count << ',' << r.single_qudit_count << ','
        << r.carrier_dim << '\n';
  }
  out.report.results = {{"reports", reports}, {"all_verified", all}};
  out.csv = csv.str();
  out.exit_code = all ? 0 : 1;
  return out;
}

CommandResult cmd_optics(const std::string& gate, bool feedforward, const std::string& input,
                         std::uint64_t seed) {
  const InputSpec in = parse_input(gate, input, seed);
  CommandResult out;
  out.report.command = "optics";
  out.report.parameters = {{"gate", gate}, {"input", input}, {"seed", seed}};
  if (gate == "pswap") out.report.parameters["feedforward"] = feedforward;
  out.report.tolerances = tolerance_block();

  const bool is_pswap = gate == "pswap";
  const auto spec = optics::build_pswap_interferometer();
  const auto chain = optics::build_fredkin_interferometer();
  const UnitaryMatrix ideal = is_pswap ? synthesis::make_partial_swap(optics::kPswapCarrierDim).matrix()
                                       : synthesis::reference_fredkin();

  json runs = json::array();
  std::ostringstream csv;
  csv << "input,pattern,probability,fidelity\n";
  for (std::size_t k = 0; k < in.states.size(); ++k) {
    const CVector& state = in.states[k];
    const CVector want = ideal.entries() * state;
    json outcomes = json::array();
    double total = 0.0;
    double min_fid = 1.0;
    auto add = [&](const std::string& pattern, double p, const CVector& corrected,
                   const json& correction) {
      const double fid = p > 1e-14 ? optics::state_fidelity(want, corrected) : 0.0;
      if (p > 1e-14) min_fid = std::min(min_fid, fid);
      total += p;
      if (!in.random) {
        outcomes.push_back({{"pattern", pattern},
                            {"probability", probability_json(p)},
                            {"fidelity", clean(fid)},
                            {"correction", correction}});
        csv << in.labels[k] << ',' << pattern << ',' << fraction_or_decimal(p) << ',' << clean(fid)
            << '\n';
      }
    };
    if (is_pswap) {
      for (const auto& o : optics::run_pswap(spec, state, feedforward)) {
        json corr = json::array();
        for (const auto& c : o.correction) corr.push_back(optics::element_to_json(c.element));
        add("(" + o.pattern[0] + "," + o.pattern[1] + ")", o.probability,
            optics::apply_feedforward(o, optics::pswap_roles(), spec.basis), corr);
      }
    } else {
      for (const auto& r : optics::run_fredkin_chain(chain, state)) {
        json corr = json::array();
        for (const auto& c : r.outcome.correction) corr.push_back(optics::element_to_json(c.element));
        add("(" + r.label[0] + "," + r.label[1] + "," + r.label[2] + ")", r.outcome.probability,
            r.corrected, corr);
      }
    }
    json run = {{"input", in.labels[k]},
                {"total_probability", probability_json(total)},
                {"min_fidelity", clean(min_fid)}};
    if (!in.random) run["outcomes"] = outcomes;
    csv << in.labels[k] << ",total," << fraction_or_decimal(total) << ',' << clean(min_fid) << '\n';
    runs.push_back(run);
  }
  out.report.results = {{"runs", runs}};
  out.csv = csv.str();
  return out;
}

CommandResult cmd_table1() {
  using optics::kPswapFamilies;
  const auto t = optics::table1(optics::build_pswap_interferometer());
  CommandResult out;
  out.report.command = "table1";
  out.report.tolerances = tolerance_block();
  json rows = json::array();
  std::ostringstream csv;
  csv << "input,pattern,col1,col2,col3,col4,col5,col6\n";
  for (std::size_t row = 0; row < 6; ++row) {
    json fams = json::array();
    double row_sum = 0.0;
    for (std::size_t f = 0; f < 4; ++f) {
      const auto fam = kPswapFamilies[f];
      json cells = json::array();
      csv << optics::table1_row_label(row) << ',' << optics::family_name(fam);
      for (std::size_t col = 0; col < 6; ++col) {
        const auto& cell = t.cells[row][f][col];
        row_sum += cell.probability;
        cells.push_back({{"detectors", optics::table1_column_label(fam, col, true) + "," +
                                           optics::table1_column_label(fam, col, false)},
                         {"probability", probability_json(cell.probability)},
                         {"sign", cell.sign}});
        csv << ',' << fraction_or_decimal(cell.sign * cell.probability);
      }
      csv << '\n';
      fams.push_back({{"pattern", optics::family_name(fam)}, {"cells", cells}});
    }
    rows.push_back({{"input", optics::table1_row_label(row)},
                    {"families", fams},
                    {"row_sum", probability_json(row_sum)}});
  }
  out.report.results = {{"rows", rows}};
  out.csv = csv.str();
  return out;
}

CommandResult cmd_resources(int n_min, int n_max) {
  CommandResult out;
  out.report.command = "resources";
  out.report.parameters = {{"n_min", n_min}, {"n_max", n_max}};
  json rows = json::array();
  std::ostringstream csv;
  csv << "n,success_probability,pbs_count,cnot_count,pswap_count\n";
  for (int n = n_min; n <= n_max; ++n) {
    const auto r = optics::resource_calculator(n);
    const std::string frac = "1/" + std::to_string(r.probability_denominator);
    rows.push_back({{"n", n},
                    {"success_probability", {{"fraction", frac}, {"decimal", r.success_probability}}},
                    {"pbs_count", r.pbs_count},
                    {"cnot_count", r.cnot_count},
                    {"pswap_count", r.pswap_count}});
    csv << n << ',' << frac << ',' << r.pbs_count << ',' << r.cnot_count << ',' << r.pswap_count
        << '\n';
  }
  out.report.results = {{"rows", rows}};
  out.csv = csv.str();
  return out;
}

CommandResult cmd_certify() {
  CommandResult out;
  out.report.command = "certify";
  out.report.tolerances = tolerance_block();
  const auto a = fock::certify_pswap(optics::build_pswap_interferometer());
  const auto b = fock::certify_fredkin_chain(optics::build_fredkin_interferometer());
  json specs = json::array();
  std::ostringstream csv;
  csv << "spec,photons,inputs,patterns_checked,max_deviation,passed\n";
  for (const auto* r : {&a, &b}) {
    specs.push_back({{"spec", r->spec},
                     {"photons", r->photons},
                     {"inputs", r->inputs},
                     {"patterns_checked", r->patterns_checked},
                     {"max_deviation", clean(r->max_deviation)},
                     {"passed", r->passed}});
    csv << r->spec << ',' << r->photons << ',' << r->inputs << ',' << r->patterns_checked << ','
        << clean(r->max_deviation) << ',' << (r->passed ? "true" : "false") << '\n';
  }
  out.report.results = {{"specs", specs}};
  out.csv = csv.str();
  out.exit_code = a.passed && b.passed ? 0 : 1;
  return out;
}

CommandResult cmd_emit_netlist(const std::string& gate) {
  CommandResult out;
  out.report.command = "emit-netlist";
  out.report.parameters = {{"gate", gate}};
  out.bare = true;
  try {
    out.report.results = optics::builtin_netlist(gate);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return out;
}

}  // namespace auxq::cli

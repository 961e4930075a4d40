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

#include "auxq/optics/fidelity.hpp"

#include <algorithm>
#include <cmath>

#include "auxq/optics/pswap.hpp"

namespace auxq::optics {

PostSelectedGate pswap_gate(const InterferometerSpec& spec, bool feedforward) {
  return [spec, feedforward](const CVector& logical) {
    std::vector<HeraldedEvent> events;
    for (const auto& o : run_pswap(spec, logical, feedforward)) {
      events.push_back({o.probability, apply_feedforward(o, pswap_roles(), spec.basis)});
    }
    return events;
  };
}

PostSelectedGate fredkin_gate(const FredkinChain& chain) {
  return [chain](const CVector& logical) {
    std::vector<HeraldedEvent> events;
    for (const auto& r : run_fredkin_chain(chain, logical)) {
      events.push_back({r.outcome.probability, r.corrected});
    }
    return events;
  };
}

double state_fidelity(const CVector& a, const CVector& b) {
  const double na = a.squaredNorm();
  const double nb = b.squaredNorm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::norm(a.dot(b)) / (na * nb);
}

FidelityReport gate_fidelity(const PostSelectedGate& gate, const UnitaryMatrix& ideal,
                             std::size_t trials, Rng& rng) {
  FidelityReport report;
  report.trials = trials;
  for (std::size_t k = 0; k < trials; ++k) {
    const CVector in = random_state_vector(ideal.dim(), rng);
    const CVector want = ideal.entries() * in;
    double total = 0.0;
    for (const auto& e : gate(in)) {
      total += e.probability;
      if (e.probability > 1e-14) {
        report.min_fidelity = std::min(report.min_fidelity, state_fidelity(want, e.corrected));
      }
    }
    report.probabilities.push_back(total);
  }
  if (trials == 0) return report;
  const auto& p = report.probabilities;
  double sum = 0.0;
  for (double x : p) sum += x;
  report.mean_probability = sum / static_cast<double>(trials);
  double var = 0.0;
  for (double x : p) var += (x - report.mean_probability) * (x - report.mean_probability);
  report.std_probability = std::sqrt(var / static_cast<double>(trials));
  report.min_probability = *std::min_element(p.begin(), p.end());
  report.max_probability = *std::max_element(p.begin(), p.end());
  return report;
}

}  // namespace auxq::optics

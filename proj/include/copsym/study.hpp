// SPDX-License-Identifier: Apache-2.0
//
// copsym: visualization and nonparametric testing of bivariate copula symmetry
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "copsym/copula.hpp"
#include "copsym/symmetry_test.hpp"

namespace copsym {

/// One Monte-Carlo size/power cell: draw `replicates` samples of size n from
/// `spec`, run the symmetry test on each, record the rejection rate.
///
/// Desk-scale defaults (replicates=200, n_boot=200, m=m0=250, p=100) keep a
/// cell in the minutes range; the full-scale configuration is a flag away.
/// test.share_null reproduces the one-bootstrap-sample regime of the
/// radial/joint tables.
struct StudyScenario {
    CopulaSpec spec;
    Symmetry sym = Symmetry::Reflection;
    std::size_t n = 250;
    std::size_t replicates = 200;
    TestConfig test; // per-test settings; seed is derived per replicate
    std::string label;

    void validate() const;
};

struct StudyResult {
    StudyScenario scenario;
    std::size_t rejections = 0;
    double rejection_rate = 0.0;
    std::vector<double> p_values; // by replicate index
    double wall_seconds = 0.0;
};

/// Deterministic in (scenario, seed); replicates run under OpenMP with
/// per-replicate derived seeds. `workers` > 0 caps the worker count.
StudyResult run_scenario(const StudyScenario& s, std::uint64_t seed,
                         int workers = 0);

/// Wilson 95% interval for a binomial proportion.
std::pair<double, double> wilson_interval(std::size_t successes,
                                          std::size_t trials);

/// One CSV ledger row: scenario columns + rate + confidence interval.
/// Writes a header first when `with_header`.
void append_study_csv(std::ostream& out, const StudyResult& r,
                      std::uint64_t seed, bool with_header);

/// Deterministic JSON report (no wall time; that lives in the run manifest).
nlohmann::json study_report(const StudyResult& r, std::uint64_t seed);

StudyScenario scenario_from_json(const nlohmann::json& j);

} // namespace copsym

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

#include "copsym/study.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "copsym/errors.hpp"
#include "copsym/rng.hpp"

namespace copsym {

void StudyScenario::validate() const {
    if (replicates < 1) throw InvalidParameter("study: replicates must be >= 1");
    if (n < 20) throw InvalidParameter("study: n must be >= 20");
    test.validate();
}

StudyResult run_scenario(const StudyScenario& s, std::uint64_t seed, int workers) {
    s.validate();
    const auto t0 = std::chrono::steady_clock::now();

    StudyResult out;
    out.scenario = s;
    out.p_values.assign(s.replicates, 0.0);
    std::vector<char> rejected(s.replicates, 0);

#ifdef _OPENMP
    const int nthreads = workers > 0 ? workers : omp_get_max_threads();
#else
    const int nthreads = 1;
    (void)workers;
#endif

#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (std::ptrdiff_t ri = 0; ri < static_cast<std::ptrdiff_t>(s.replicates);
         ++ri) {
        const std::uint64_t r = static_cast<std::uint64_t>(ri);
        const UniformSample data =
            sample(s.spec, s.n, derive_seed(seed, "study/data", r));
        TestConfig cfg = s.test;
        cfg.seed = derive_seed(seed, "study/test", r);
        const TestResult res = run_test(data, cfg);
        out.p_values[static_cast<std::size_t>(ri)] = res.p_value;
        rejected[static_cast<std::size_t>(ri)] = res.reject ? 1 : 0;
    }

    for (char c : rejected) out.rejections += c;
    out.rejection_rate =
        static_cast<double>(out.rejections) / static_cast<double>(s.replicates);
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::pair<double, double> wilson_interval(std::size_t successes,
                                          std::size_t trials) {
    const double z = 1.959963984540054; // 95%
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

void append_study_csv(std::ostream& out, const StudyResult& r, std::uint64_t seed,
                      bool with_header) {
    if (with_header)
        out << "label,spec,sym,n,replicates,n_boot,m,m0,p,alpha,share_null,seed,"
               "rejections,rejection_rate,ci_low,ci_high\n";
    const auto [lo, hi] = wilson_interval(r.rejections, r.scenario.replicates);
    char buf[96];
    out << '"' << r.scenario.label << '"' << ',';
    out << '"' << r.scenario.spec.describe() << '"' << ',';
    out << symmetry_name(r.scenario.sym) << ',' << r.scenario.n << ','
        << r.scenario.replicates << ',' << r.scenario.test.n_boot << ','
        << r.scenario.test.resolved_m(r.scenario.n) << ','
        << r.scenario.test.resolved_m0(r.scenario.n) << ',' << r.scenario.test.p
        << ',';
    std::snprintf(buf, sizeof buf, "%.17g", r.scenario.test.alpha);
    out << buf << ',' << (r.scenario.test.share_null ? 1 : 0) << ',' << seed << ','
        << r.rejections << ',';
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g", r.rejection_rate, lo, hi);
    out << buf << "\n";
}

nlohmann::json study_report(const StudyResult& r, std::uint64_t seed) {
    const auto [lo, hi] = wilson_interval(r.rejections, r.scenario.replicates);
    nlohmann::json j;
    j["label"] = r.scenario.label;
    j["spec"] = to_json(r.scenario.spec);
    j["sym"] = symmetry_name(r.scenario.sym);
    j["n"] = r.scenario.n;
    j["replicates"] = r.scenario.replicates;
    j["n_boot"] = r.scenario.test.n_boot;
    j["m"] = r.scenario.test.resolved_m(r.scenario.n);
    j["m0"] = r.scenario.test.resolved_m0(r.scenario.n);
    j["p"] = r.scenario.test.p;
    j["alpha"] = r.scenario.test.alpha;
    j["share_null"] = r.scenario.test.share_null;
    j["fixed_anchors"] = r.scenario.test.fixed_anchors;
    j["seed"] = seed;
    j["rejections"] = r.rejections;
    j["rejection_rate"] = r.rejection_rate;
    j["ci95"] = {lo, hi};
    j["p_values"] = r.p_values;
    return j;
}

StudyScenario scenario_from_json(const nlohmann::json& j) {
    StudyScenario s;
    s.spec = copula_from_json(j.at("spec"));
    s.sym = symmetry_from_name(j.at("sym").get<std::string>());
    s.n = j.value("n", std::size_t{250});
    s.replicates = j.value("replicates", std::size_t{200});
    s.test.sym = s.sym;
    s.test.n_boot = j.value("n_boot", std::size_t{200});
    s.test.m = j.value("m", std::size_t{250});
    s.test.m0 = j.value("m0", std::size_t{250});
    s.test.p = j.value("p", std::size_t{100});
    s.test.alpha = j.value("alpha", 0.05);
    s.test.share_null = j.value("share_null", false);
    s.test.fixed_anchors = j.value("fixed_anchors", false);
    s.label = j.value("label", std::string{});
    return s;
}

} // namespace copsym

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

#include "copsym/symmetry_test.hpp"

#include <algorithm>
#include <cmath>

#include "copsym/errors.hpp"
#include "copsym/rng.hpp"

namespace copsym {

void TestConfig::validate() const {
    if (p < 2) throw InvalidParameter("test config: p must be >= 2");
    if (n_boot < 1) throw InvalidParameter("test config: n_boot must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw InvalidParameter("test config: alpha must lie in (0,1)");
}

std::size_t TestConfig::resolved_m(std::size_t n) const {
    return m > 0 ? m : std::max<std::size_t>(250, n);
}

std::size_t TestConfig::resolved_m0(std::size_t n) const {
    return m0 > 0 ? m0 : std::max<std::size_t>(250, n);
}

namespace {

struct PooledRanks {
    std::int64_t w_observed;
    TestResult::Diagnostics diagnostics;
};

PooledRanks pooled_w(const FunctionalSet& observed, const FunctionalSet& null_set,
                     std::uint64_t seed) {
    if (observed.sym != null_set.sym)
        throw InvalidParameter("w_statistic: symmetry type mismatch");
    if (observed.grid != null_set.grid)
        throw InvalidParameter("w_statistic: grid mismatch");

    const std::size_t k_obs = observed.curves();
    const std::size_t k_null = null_set.curves();
    const std::size_t p = observed.grid_size();

    std::vector<double> pooled;
    pooled.reserve((k_obs + k_null) * p);
    pooled.insert(pooled.end(), observed.values.begin(), observed.values.end());
    pooled.insert(pooled.end(), null_set.values.begin(), null_set.values.end());

    const DepthVector depths =
        modified_band_depth(pooled.data(), k_obs + k_null, p);
    const std::vector<int> ranks = rank_by_depth(depths, seed);

    PooledRanks out{};
    std::int64_t w = 0;
    for (std::size_t i = 0; i < k_obs; ++i) w += ranks[i];
    out.w_observed = w;

    auto summarize = [&](std::size_t begin, std::size_t count, double& mean,
                         double& min) {
        double s = 0.0;
        min = 1.0;
        for (std::size_t i = begin; i < begin + count; ++i) {
            s += depths.depths[i];
            min = std::min(min, depths.depths[i]);
        }
        mean = s / static_cast<double>(count);
    };
    summarize(0, k_obs, out.diagnostics.observed_depth_mean,
              out.diagnostics.observed_depth_min);
    summarize(k_obs, k_null, out.diagnostics.null_depth_mean,
              out.diagnostics.null_depth_min);
    return out;
}

} // namespace

std::int64_t w_statistic(const FunctionalSet& observed,
                         const FunctionalSet& null_set, std::uint64_t seed) {
    return pooled_w(observed, null_set, seed).w_observed;
}

TestResult run_test(const UniformSample& sample, const TestConfig& cfg) {
    cfg.validate();
    const std::size_t n = sample.size();
    if (n < 20)
        throw DataError("run_test: need at least 20 observations for a "
                        "meaningful empirical copula");

    const std::size_t m = cfg.resolved_m(n);
    const std::size_t m0 = cfg.resolved_m0(n);
    const std::uint64_t root = cfg.seed;

    // Steps 1-5 on the data.
    const std::vector<double> obs_anchors =
        draw_anchors(m, derive_seed(root, "anchors/observed"));
    const FunctionalSet obs_set = build_set(sample, cfg.sym, obs_anchors, cfg.p);

    const UniformSample null_sample =
        resample_null(sample, cfg.sym, n, derive_seed(root, "resample/observed"));
    const std::vector<double> null_anchors =
        draw_anchors(m0, derive_seed(root, "anchors/null"));
    const FunctionalSet null_set =
        build_set(null_sample, cfg.sym, null_anchors, cfg.p);

    const PooledRanks observed =
        pooled_w(obs_set, null_set, derive_seed(root, "ranks/observed"));

    // Bootstrap null distribution: each replicate treats a fresh null
    // resample as data and repeats the whole pipeline.
    std::vector<std::int64_t> w_null(cfg.n_boot);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t bi = 0; bi < static_cast<std::ptrdiff_t>(cfg.n_boot); ++bi) {
        const std::uint64_t bseed =
            derive_seed(root, "bootstrap", static_cast<std::uint64_t>(bi) + 1);
        const UniformSample data_b =
            resample_null(sample, cfg.sym, n, derive_seed(bseed, "data"));
        const std::vector<double> anchors_b =
            cfg.fixed_anchors ? obs_anchors
                              : draw_anchors(m, derive_seed(bseed, "anchors/observed"));
        const FunctionalSet set_b = build_set(data_b, cfg.sym, anchors_b, cfg.p);

        std::int64_t w;
        if (cfg.share_null) {
            w = w_statistic(set_b, null_set, derive_seed(bseed, "ranks"));
        } else {
            const UniformSample null_b =
                resample_null(data_b, cfg.sym, n, derive_seed(bseed, "resample"));
            const std::vector<double> null_anchors_b =
                cfg.fixed_anchors
                    ? null_anchors
                    : draw_anchors(m0, derive_seed(bseed, "anchors/null"));
            const FunctionalSet null_set_b =
                build_set(null_b, cfg.sym, null_anchors_b, cfg.p);
            w = w_statistic(set_b, null_set_b, derive_seed(bseed, "ranks"));
        }
        w_null[static_cast<std::size_t>(bi)] = w;
    }
    std::sort(w_null.begin(), w_null.end());

    std::size_t leq = 0;
    for (std::int64_t w : w_null)
        if (w <= observed.w_observed) ++leq;

    TestResult r;
    r.sym = cfg.sym;
    r.n = n;
    r.m = m;
    r.m0 = m0;
    r.p = cfg.p;
    r.n_boot = cfg.n_boot;
    r.alpha = cfg.alpha;
    r.seed = cfg.seed;
    r.share_null = cfg.share_null;
    r.fixed_anchors = cfg.fixed_anchors;
    r.w_observed = observed.w_observed;
    r.w_null = std::move(w_null);
    r.p_value = static_cast<double>(1 + leq) / static_cast<double>(cfg.n_boot + 1);
    r.reject = r.p_value <= cfg.alpha;
    r.diagnostics = observed.diagnostics;
    return r;
}

namespace {

// Type-7 (linear interpolation) quantile of a sorted vector.
double sorted_quantile(const std::vector<std::int64_t>& v, double q) {
    const double h = q * static_cast<double>(v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    const double frac = h - static_cast<double>(lo);
    return static_cast<double>(v[lo]) +
           frac * (static_cast<double>(v[hi]) - static_cast<double>(v[lo]));
}

} // namespace

nlohmann::json to_json(const TestResult& r, bool include_w_null) {
    nlohmann::json j;
    j["sym"] = symmetry_name(r.sym);
    j["n"] = r.n;
    j["m"] = r.m;
    j["m0"] = r.m0;
    j["p"] = r.p;
    j["n_boot"] = r.n_boot;
    j["alpha"] = r.alpha;
    j["seed"] = r.seed;
    j["share_null"] = r.share_null;
    j["fixed_anchors"] = r.fixed_anchors;
    j["w_observed"] = r.w_observed;
    j["p_value"] = r.p_value;
    j["reject"] = r.reject;
    j["w_null_summary"] = {
        {"min", static_cast<double>(r.w_null.front())},
        {"q25", sorted_quantile(r.w_null, 0.25)},
        {"median", sorted_quantile(r.w_null, 0.5)},
        {"q75", sorted_quantile(r.w_null, 0.75)},
        {"max", static_cast<double>(r.w_null.back())},
    };
    j["diagnostics"] = {
        {"observed_depth_mean", r.diagnostics.observed_depth_mean},
        {"observed_depth_min", r.diagnostics.observed_depth_min},
        {"null_depth_mean", r.diagnostics.null_depth_mean},
        {"null_depth_min", r.diagnostics.null_depth_min},
    };
    if (include_w_null) j["w_null"] = r.w_null;
    return j;
}

} // namespace copsym

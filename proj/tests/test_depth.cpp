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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "copsym/depth.hpp"
#include "copsym/errors.hpp"
#include "copsym/rng.hpp"

using Catch::Matchers::WithinAbs;
using namespace copsym;

namespace {

// Exhaustive O(K^3 p) enumeration over bands: independent of the library's
// rank-count identity.
std::vector<std::int64_t> band_counts_oracle(const std::vector<double>& m,
                                             std::size_t K, std::size_t p) {
    std::vector<std::int64_t> counts(K, 0);
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t a = 0; a < K; ++a)
            for (std::size_t b = a + 1; b < K; ++b)
                for (std::size_t k = 0; k < p; ++k) {
                    const double lo = std::min(m[a * p + k], m[b * p + k]);
                    const double hi = std::max(m[a * p + k], m[b * p + k]);
                    const double y = m[i * p + k];
                    if (lo <= y && y <= hi) ++counts[i];
                }
    return counts;
}

std::vector<double> random_matrix(Rng& rng, std::size_t K, std::size_t p,
                                  int levels) {
    std::vector<double> m(K * p);
    for (double& x : m)
        x = levels > 0 ? std::floor(rng.uniform() * levels) : rng.uniform();
    return m;
}

} // namespace

TEST_CASE("constant curves {0,1,2}: hand-enumerated depths", "[depth]") {
    const std::vector<double> m{0, 0, 0, 1, 1, 1, 2, 2, 2};
    const DepthVector d = modified_band_depth(m.data(), 3, 3);
    REQUIRE(d.depths[0] == 2.0 / 3.0);
    REQUIRE(d.depths[1] == 1.0);
    REQUIRE(d.depths[2] == 2.0 / 3.0);
}

TEST_CASE("identical curves all have depth one", "[depth]") {
    const std::vector<double> m(5 * 4, 3.25);
    const DepthVector d = modified_band_depth(m.data(), 5, 4);
    for (double x : d.depths) REQUIRE(x == 1.0);
}

TEST_CASE("constants {0,1,2,3}: depth of curve 1 is 5/6", "[depth]") {
    std::vector<double> m;
    for (double c : {0.0, 1.0, 2.0, 3.0})
        for (int k = 0; k < 2; ++k) m.push_back(c);
    const DepthVector d = modified_band_depth(m.data(), 4, 2);
    REQUIRE(d.depths[1] == 5.0 / 6.0);
    REQUIRE(d.depths[0] == 3.0 / 6.0);
}

TEST_CASE("kernel equals exhaustive enumeration bitwise", "[depth]") {
    Rng rng(5);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t K = 3 + rng.below(4); // 3..6
        const std::size_t p = 1 + rng.below(5); // 1..5
        const int levels = rep % 3 == 0 ? 3 : 0; // every third instance has ties
        const std::vector<double> m = random_matrix(rng, K, p, levels);
        const auto oracle = band_counts_oracle(m, K, p);
        REQUIRE(mbd_band_counts(m.data(), K, p) == oracle);
        REQUIRE(mbd_band_counts_serial(m.data(), K, p) == oracle);
        // and identical final depths via the same division
        const DepthVector d = modified_band_depth(m.data(), K, p);
        const double denom =
            static_cast<double>(K * (K - 1) / 2) * static_cast<double>(p);
        for (std::size_t i = 0; i < K; ++i)
            REQUIRE(d.depths[i] == static_cast<double>(oracle[i]) / denom);
    }
}

TEST_CASE("parallel kernel equals serial reference on larger inputs", "[depth]") {
    Rng rng(6);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t K = 40 + rng.below(160);
        const std::size_t p = 20 + rng.below(60);
        const std::vector<double> m = random_matrix(rng, K, p, rep % 2 ? 7 : 0);
        REQUIRE(mbd_band_counts(m.data(), K, p) ==
                mbd_band_counts_serial(m.data(), K, p));
    }
}

TEST_CASE("depth bounds and translation invariance", "[depth]") {
    Rng rng(7);
    const std::size_t K = 50;
    const std::size_t p = 30;
    const std::vector<double> m = random_matrix(rng, K, p, 0);
    const DepthVector d = modified_band_depth(m.data(), K, p);
    for (double x : d.depths) {
        REQUIRE(x >= 2.0 / static_cast<double>(K));
        REQUIRE(x <= 1.0);
    }
    std::vector<double> shifted = m;
    for (double& x : shifted) x += 1.0;
    const DepthVector d2 = modified_band_depth(shifted.data(), K, p);
    REQUIRE(d.depths == d2.depths);
}

TEST_CASE("too few curves is an error", "[depth]") {
    const std::vector<double> m{0, 1, 2, 3};
    REQUIRE_THROWS_AS(modified_band_depth(m.data(), 2, 2), InvalidParameter);
}

TEST_CASE("rank_by_depth: strict ordering", "[depth]") {
    DepthVector d;
    d.depths = {0.2, 0.9, 0.5};
    const auto ranks = rank_by_depth(d, 123);
    REQUIRE(ranks == std::vector<int>{1, 3, 2});
}

TEST_CASE("rank_by_depth: uniform tie breaking", "[depth]") {
    DepthVector d;
    d.depths = {0.5, 0.5, 0.5, 0.5};
    std::vector<double> mean_rank(4, 0.0);
    const int trials = 10000;
    for (int s = 0; s < trials; ++s) {
        const auto ranks = rank_by_depth(d, static_cast<std::uint64_t>(s));
        for (int i = 0; i < 4; ++i) mean_rank[i] += ranks[i];
    }
    for (int i = 0; i < 4; ++i)
        REQUIRE_THAT(mean_rank[i] / trials, WithinAbs(2.5, 0.06));
}

TEST_CASE("rank_by_depth: a tie pair occupies its two slots", "[depth]") {
    DepthVector d;
    d.depths = {0.3, 0.7, 0.3, 0.9};
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto ranks = rank_by_depth(d, seed);
        REQUIRE(ranks[1] == 3);
        REQUIRE(ranks[3] == 4);
        REQUIRE(ranks[0] + ranks[2] == 3); // {1,2} in some order
    }
}

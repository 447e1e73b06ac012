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
#include <numbers>

#include "copsym/normal.hpp"

using Catch::Matchers::WithinAbs;
using copsym::adaptive_simpson;
using copsym::bivariate_normal_cdf;
using copsym::normal_cdf;
using copsym::normal_quantile;

TEST_CASE("normal quantile hits standard critical values", "[normal]") {
    REQUIRE_THAT(normal_quantile(0.975), WithinAbs(1.959963984540054, 1e-9));
    REQUIRE_THAT(normal_quantile(0.025), WithinAbs(-1.959963984540054, 1e-9));
    REQUIRE_THAT(normal_quantile(0.995), WithinAbs(2.575829303548901, 1e-9));
    REQUIRE_THAT(normal_quantile(0.5), WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(normal_quantile(0.841344746068543), WithinAbs(1.0, 1e-9));
}

TEST_CASE("normal quantile inverts the CDF across the range", "[normal]") {
    for (double p = 0.0005; p < 1.0; p += 0.0101) {
        const double x = normal_quantile(p);
        REQUIRE_THAT(normal_cdf(x), WithinAbs(p, 1e-12));
        REQUIRE_THAT(normal_quantile(1.0 - p), WithinAbs(-x, 1e-9));
    }
}

TEST_CASE("adaptive Simpson integrates polynomials and kernels", "[normal]") {
    REQUIRE_THAT(adaptive_simpson([](double x) { return x * x; }, 0.0, 1.0, 1e-12),
                 WithinAbs(1.0 / 3.0, 1e-12));
    REQUIRE_THAT(adaptive_simpson([](double x) { return std::exp(-x * x); }, -4.0,
                                  4.0, 1e-12),
                 WithinAbs(std::sqrt(std::numbers::pi) * std::erf(4.0), 1e-10));
}

TEST_CASE("bivariate normal CDF: closed-form oracle at the origin", "[normal]") {
    // Phi2(0, 0, rho) = 1/4 + asin(rho) / (2 pi).
    for (double rho : {-0.95, -0.5, -0.2, 0.1, 0.3, 0.7071067811865476, 0.9239}) {
        const double expected = 0.25 + std::asin(rho) / (2.0 * std::numbers::pi);
        REQUIRE_THAT(bivariate_normal_cdf(0.0, 0.0, rho, 1e-10),
                     WithinAbs(expected, 1e-8));
    }
}

TEST_CASE("bivariate normal CDF: margins and independence", "[normal]") {
    REQUIRE_THAT(bivariate_normal_cdf(0.7, 9.0, 0.6), WithinAbs(normal_cdf(0.7), 1e-9));
    REQUIRE_THAT(bivariate_normal_cdf(-1.1, 9.0, -0.8), WithinAbs(normal_cdf(-1.1), 1e-9));
    REQUIRE_THAT(bivariate_normal_cdf(0.3, -0.4, 0.0),
                 WithinAbs(normal_cdf(0.3) * normal_cdf(-0.4), 1e-14));
}

TEST_CASE("bivariate normal CDF: quadrature agrees with dense Simpson oracle",
          "[normal]") {
    // Independent conditioning-form oracle:
    //   Phi2(h,k,rho) = Int_{-8}^{h} phi(x) Phi((k - rho x)/sqrt(1-rho^2)) dx.
    auto oracle = [](double h, double k, double rho) {
        const double s = std::sqrt(1.0 - rho * rho);
        auto f = [k, rho, s](double x) {
            const double phi =
                std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
            return phi * normal_cdf((k - rho * x) / s);
        };
        return adaptive_simpson(f, -8.5, h, 1e-11);
    };
    for (double rho : {-0.9, -0.3, 0.45, 0.85}) {
        for (double h : {-1.5, -0.2, 0.8}) {
            for (double k : {-0.9, 0.4, 1.7}) {
                REQUIRE_THAT(bivariate_normal_cdf(h, k, rho, 1e-10),
                             WithinAbs(oracle(h, k, rho), 1e-7));
            }
        }
    }
}

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

#include <functional>

namespace copsym {

/// Standard normal CDF.
double normal_cdf(double x) noexcept;

/// Inverse standard normal CDF for p in (0,1). Acklam's rational minimax
/// approximation followed by one Halley refinement step (absolute error well
/// below 1e-9). Returns +/-infinity at p = 1 / p = 0.
double normal_quantile(double p) noexcept;

/// Standard bivariate normal CDF P(X <= h, Y <= k) with correlation rho,
/// evaluated by one-dimensional adaptive quadrature over the correlation
/// (Drezner-Wesolowsky identity) to absolute tolerance `tol`.
/// Throws NumericFailure if the quadrature does not converge.
double bivariate_normal_cdf(double h, double k, double rho, double tol = 1e-8);

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
/// Throws NumericFailure when the recursion depth limit is exhausted before
/// the tolerance is met.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 40);

} // namespace copsym

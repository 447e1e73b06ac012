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

#include <iosfwd>
#include <string>
#include <vector>

#include "copsym/test_functions.hpp"

namespace copsym {

/// Functional-boxplot bands of a curve set: the deepest curve as median, the
/// pointwise envelope of the 50% deepest curves, fences inflated by `factor`
/// times the central range, and the envelope of the non-outlying curves.
struct BoxplotSummary {
    std::vector<double> grid;
    std::vector<double> median_curve;
    std::vector<double> central_lower, central_upper;
    std::vector<double> fence_lower, fence_upper;
    std::vector<double> envelope_lower, envelope_upper;
    std::vector<std::size_t> outlier_indices;
    std::vector<std::vector<double>> outlier_curves;
    std::size_t median_index = 0;
    double factor = 1.5;
};

/// Depths via modified band depth; depth ties resolved toward the lower curve
/// index. Requires K >= 3. A curve is an outlier when it exceeds a fence at
/// one grid point or more.
BoxplotSummary boxplot_summary(const FunctionalSet& set, double factor = 1.5);

/// Standalone deterministic SVG: shaded central region, median polyline,
/// fence whiskers, outliers in a distinct stroke, zero reference line and
/// t-axis ticks at 0, 0.25, 0.5, 0.75, 1.
std::string render(const BoxplotSummary& summary, const std::string& title);

/// Grid plus the seven band columns, for external plotting.
void write_boxplot_csv(const BoxplotSummary& summary, std::ostream& out);

} // namespace copsym

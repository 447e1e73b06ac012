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
#include <vector>

#include "copsym/test_functions.hpp"

namespace copsym {

/// Modified band depths of K curves; each entry lies in [2/K, 1].
struct DepthVector {
    std::vector<double> depths;

    std::size_t size() const noexcept { return depths.size(); }
};

/// Integer band-membership totals behind the depth values: counts[i] is the
/// number of (pair, grid point) combinations whose closed band contains curve
/// i, pairs taken over all C(K,2) unordered pairs including those containing
/// i. Depth = counts[i] / (C(K,2) * p).
///
/// The kernel sorts each grid point's cross-section (OpenMP across grid
/// points) and uses the J=2 rank-count identity
///   per point: (K-1) + C(K-1,2) - C(#below,2) - C(#above,2).
std::vector<std::int64_t> mbd_band_counts(const double* values, std::size_t K,
                                          std::size_t p);

/// Serial reference: per grid point, per curve, a linear scan for the
/// below/above counts. Identical totals to mbd_band_counts.
std::vector<std::int64_t> mbd_band_counts_serial(const double* values,
                                                 std::size_t K, std::size_t p);

/// Depths from a raw K x p row-major matrix. Requires K >= 3, p >= 1.
DepthVector modified_band_depth(const double* values, std::size_t K, std::size_t p);
DepthVector modified_band_depth(const FunctionalSet& set);

/// Ranks 1..K ascending in depth (rank 1 = least deep). Exact depth ties are
/// ordered uniformly at random, deterministic given the seed.
std::vector<int> rank_by_depth(const DepthVector& depths, std::uint64_t seed);

} // namespace copsym

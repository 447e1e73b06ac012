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

#include "copsym/depth.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "copsym/errors.hpp"
#include "copsym/rng.hpp"

namespace copsym {

namespace {

inline std::int64_t pairs2(std::int64_t x) noexcept { return x * (x - 1) / 2; }

void check_matrix(std::size_t K, std::size_t p) {
    if (K < 3) throw InvalidParameter("modified band depth needs K >= 3 curves");
    if (p < 1) throw InvalidParameter("modified band depth needs p >= 1");
}

// Transpose into p x K so each grid point's cross-section is contiguous.
std::vector<double> transpose(const double* values, std::size_t K, std::size_t p) {
    std::vector<double> t(K * p);
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t k = 0; k < p; ++k) t[k * K + i] = values[i * p + k];
    return t;
}

} // namespace

std::vector<std::int64_t> mbd_band_counts(const double* values, std::size_t K,
                                          std::size_t p) {
    check_matrix(K, p);
    const std::vector<double> cols = transpose(values, K, p);
    const std::int64_t base = static_cast<std::int64_t>(K - 1) +
                              pairs2(static_cast<std::int64_t>(K - 1));
    std::vector<std::int64_t> counts(K, 0);

#pragma omp parallel
    {
        std::vector<std::int64_t> local(K, 0);
        std::vector<double> sorted(K);
#pragma omp for schedule(static)
        for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(p); ++k) {
            const double* col = &cols[static_cast<std::size_t>(k) * K];
            std::copy(col, col + K, sorted.begin());
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < K; ++i) {
                const double x = col[i];
                const std::int64_t below =
                    std::lower_bound(sorted.begin(), sorted.end(), x) -
                    sorted.begin();
                const std::int64_t above =
                    sorted.end() -
                    std::upper_bound(sorted.begin(), sorted.end(), x);
                local[i] += base - pairs2(below) - pairs2(above);
            }
        }
#pragma omp critical
        for (std::size_t i = 0; i < K; ++i) counts[i] += local[i];
    }
    return counts;
}

std::vector<std::int64_t> mbd_band_counts_serial(const double* values,
                                                 std::size_t K, std::size_t p) {
    check_matrix(K, p);
    const std::int64_t base = static_cast<std::int64_t>(K - 1) +
                              pairs2(static_cast<std::int64_t>(K - 1));
    std::vector<std::int64_t> counts(K, 0);
    for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t i = 0; i < K; ++i) {
            const double x = values[i * p + k];
            std::int64_t below = 0;
            std::int64_t above = 0;
            for (std::size_t j = 0; j < K; ++j) {
                const double y = values[j * p + k];
                below += y < x ? 1 : 0;
                above += y > x ? 1 : 0;
            }
            counts[i] += base - pairs2(below) - pairs2(above);
        }
    }
    return counts;
}

DepthVector modified_band_depth(const double* values, std::size_t K, std::size_t p) {
    const std::vector<std::int64_t> counts = mbd_band_counts(values, K, p);
    const double denom = static_cast<double>(pairs2(static_cast<std::int64_t>(K))) *
                         static_cast<double>(p);
    DepthVector d;
    d.depths.resize(K);
    for (std::size_t i = 0; i < K; ++i)
        d.depths[i] = static_cast<double>(counts[i]) / denom;
    return d;
}

DepthVector modified_band_depth(const FunctionalSet& set) {
    return modified_band_depth(set.values.data(), set.curves(), set.grid_size());
}

std::vector<int> rank_by_depth(const DepthVector& depths, std::uint64_t seed) {
    const std::size_t K = depths.size();
    Rng rng(seed);
    std::vector<std::uint64_t> key(K);
    for (auto& k : key) k = rng.next();

    std::vector<std::size_t> order(K);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (depths.depths[a] != depths.depths[b])
            return depths.depths[a] < depths.depths[b];
        if (key[a] != key[b]) return key[a] < key[b];
        return a < b;
    });

    std::vector<int> ranks(K);
    for (std::size_t pos = 0; pos < K; ++pos)
        ranks[order[pos]] = static_cast<int>(pos + 1);
    return ranks;
}

} // namespace copsym

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

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace copsym {

enum class Provenance { direct, pseudo, resampled };

/// n points in the unit square, stored column-wise. Entries lie in (0,1].
/// Pseudo-observation samples place each margin on the grid {1/n, ..., 1}
/// (up to midranks when the raw data carried ties).
struct UniformSample {
    std::vector<double> u;
    std::vector<double> v;
    Provenance provenance = Provenance::direct;

    std::size_t size() const noexcept { return u.size(); }
};

/// Raw multivariate data: n rows, d named columns, finite entries.
struct DataMatrix {
    std::vector<std::string> column_names;
    std::vector<std::vector<double>> columns; // column-major

    std::size_t rows() const noexcept { return columns.empty() ? 0 : columns.front().size(); }
    std::size_t cols() const noexcept { return columns.size(); }

    /// Checks n >= 2, d >= 2, equal column lengths, finite entries.
    void validate() const;
};

/// Parse a DataMatrix from CSV text: header row of column names, one row per
/// observation, decimal-point reals, UTF-8.
DataMatrix read_data_csv(std::istream& in);
DataMatrix read_data_csv_file(const std::string& path);

/// Rank-transform of one column pair: U_is = rank(X_is)/n, with midranks for
/// ties. Throws DataError for out-of-range/equal column indices or a column
/// whose values are all equal. `tied_values`, when non-null, receives the
/// number of entries that participated in a tie (callers surface a warning).
UniformSample pseudo_observations(const DataMatrix& data, std::size_t col_a,
                                  std::size_t col_b,
                                  std::size_t* tied_values = nullptr);

/// Sample Kendall's tau (tau-b), O(n log n) merge-sort inversion counting.
double sample_kendall_tau(std::span<const double> x, std::span<const double> y);

/// Write a two-column sample as CSV ("u,v" header, 17 significant digits).
void write_sample_csv(const UniformSample& s, std::ostream& out);
UniformSample read_sample_csv(std::istream& in);

} // namespace copsym

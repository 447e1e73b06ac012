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

#include "copsym/sample.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "copsym/errors.hpp"

namespace copsym {

void DataMatrix::validate() const {
    if (cols() < 2) throw DataError("data matrix needs at least two columns");
    if (column_names.size() != cols())
        throw DataError("column names do not match column count");
    const std::size_t n = rows();
    if (n < 2) throw DataError("data matrix needs at least two rows");
    for (std::size_t c = 0; c < cols(); ++c) {
        if (columns[c].size() != n) throw DataError("ragged data matrix");
        for (double x : columns[c])
            if (!std::isfinite(x)) throw DataError("non-finite entry in data matrix");
    }
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) out.push_back(trim(field));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

bool is_missing(const std::string& tok) {
    if (tok.empty()) return true;
    std::string low = tok;
    std::transform(low.begin(), low.end(), low.begin(), ::tolower);
    return low == "na" || low == "nan" || low == "null";
}

} // namespace

DataMatrix read_data_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty CSV input");
    DataMatrix m;
    m.column_names = split_csv_line(line);
    if (m.column_names.size() < 2) throw DataError("CSV needs at least two columns");
    m.columns.resize(m.column_names.size());

    std::size_t lineno = 1;
    std::vector<double> row(m.column_names.size());
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != m.column_names.size()) {
            std::ostringstream os;
            os << "CSV line " << lineno << ": expected " << m.column_names.size()
               << " fields, got " << fields.size();
            throw DataError(os.str());
        }
        bool missing = false;
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (is_missing(fields[c])) {
                missing = true;
                break;
            }
            try {
                std::size_t pos = 0;
                row[c] = std::stod(fields[c], &pos);
                if (pos != fields[c].size()) throw std::invalid_argument(fields[c]);
            } catch (const std::exception&) {
                std::ostringstream os;
                os << "CSV line " << lineno << ": cannot parse '" << fields[c] << "'";
                throw DataError(os.str());
            }
        }
        if (missing) continue; // row deletion is the only missing-data policy
        for (std::size_t c = 0; c < fields.size(); ++c) m.columns[c].push_back(row[c]);
    }
    m.validate();
    return m;
}

DataMatrix read_data_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_data_csv(in);
}

namespace {

// Midranks divided by n; reports how many entries sat in a tie group.
std::vector<double> midrank_column(const std::vector<double>& col,
                                   std::size_t* tied_values) {
    const std::size_t n = col.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return col[a] < col[b]; });

    std::vector<double> out(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && col[order[j]] == col[order[i]]) ++j;
        if (j - i == n) throw DataError("degenerate column: all values equal");
        if (j - i > 1 && tied_values) *tied_values += j - i;
        // Average of 1-based ranks i+1 .. j.
        const double rank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k)
            out[order[k]] = rank / static_cast<double>(n);
        i = j;
    }
    return out;
}

} // namespace

UniformSample pseudo_observations(const DataMatrix& data, std::size_t col_a,
                                  std::size_t col_b, std::size_t* tied_values) {
    data.validate();
    if (col_a >= data.cols() || col_b >= data.cols())
        throw DataError("pseudo_observations: column index out of range");
    if (col_a == col_b) throw DataError("pseudo_observations: columns must differ");
    if (tied_values) *tied_values = 0;
    UniformSample s;
    s.u = midrank_column(data.columns[col_a], tied_values);
    s.v = midrank_column(data.columns[col_b], tied_values);
    s.provenance = Provenance::pseudo;
    return s;
}

namespace {

// Merge sort counting strict inversions.
std::uint64_t count_inversions(std::vector<double>& a, std::vector<double>& buf,
                               std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t cnt = count_inversions(a, buf, lo, mid) +
                        count_inversions(a, buf, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (a[j] < a[i]) {
            cnt += mid - i;
            buf[k++] = a[j++];
        } else {
            buf[k++] = a[i++];
        }
    }
    while (i < mid) buf[k++] = a[i++];
    while (j < hi) buf[k++] = a[j++];
    std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
              buf.begin() + static_cast<std::ptrdiff_t>(hi),
              a.begin() + static_cast<std::ptrdiff_t>(lo));
    return cnt;
}

std::uint64_t tie_pairs(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::uint64_t total = 0;
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        total += static_cast<std::uint64_t>(j - i) * (j - i - 1) / 2;
        i = j;
    }
    return total;
}

} // namespace

double sample_kendall_tau(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) throw DataError("kendall tau: need paired n >= 2");

    // Knight's O(n log n) algorithm with tie corrections (tau-b).
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (x[a] != x[b]) return x[a] < x[b];
        return y[a] < y[b];
    });

    std::uint64_t n1 = 0; // pairs tied in x
    std::uint64_t n3 = 0; // pairs tied in both
    {
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j < n && x[order[j]] == x[order[i]]) ++j;
            n1 += static_cast<std::uint64_t>(j - i) * (j - i - 1) / 2;
            std::size_t a = i;
            while (a < j) {
                std::size_t b = a;
                while (b < j && y[order[b]] == y[order[a]]) ++b;
                n3 += static_cast<std::uint64_t>(b - a) * (b - a - 1) / 2;
                a = b;
            }
            i = j;
        }
    }

    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) ys[i] = y[order[i]];
    const std::uint64_t n2 = tie_pairs(ys);
    std::vector<double> buf(n);
    const std::uint64_t swaps = count_inversions(ys, buf, 0, n);

    const std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const double num = static_cast<double>(n0) - static_cast<double>(n1) -
                       static_cast<double>(n2) + static_cast<double>(n3) -
                       2.0 * static_cast<double>(swaps);
    const double den = std::sqrt(static_cast<double>(n0 - n1)) *
                       std::sqrt(static_cast<double>(n0 - n2));
    if (den == 0.0) throw DataError("kendall tau: a margin is constant");
    return num / den;
}

void write_sample_csv(const UniformSample& s, std::ostream& out) {
    out << "u,v\n";
    char buf[64];
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.u[i], s.v[i]);
        out << buf;
    }
}

UniformSample read_sample_csv(std::istream& in) {
    const DataMatrix m = read_data_csv(in);
    if (m.cols() != 2) throw DataError("sample CSV must have exactly two columns");
    UniformSample s;
    s.u = m.columns[0];
    s.v = m.columns[1];
    s.provenance = Provenance::direct;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!(s.u[i] > 0.0 && s.u[i] <= 1.0 && s.v[i] > 0.0 && s.v[i] <= 1.0))
            throw DataError("sample CSV entries must lie in (0,1]");
    return s;
}

} // namespace copsym

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

#include "copsym/fboxplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <sstream>

#include "copsym/depth.hpp"
#include "copsym/errors.hpp"

namespace copsym {

BoxplotSummary boxplot_summary(const FunctionalSet& set, double factor) {
    const std::size_t K = set.curves();
    const std::size_t p = set.grid_size();
    if (K < 3) throw InvalidParameter("boxplot_summary: need at least 3 curves");
    if (!(factor >= 0.0)) throw InvalidParameter("boxplot_summary: bad factor");

    const DepthVector depth = modified_band_depth(set);

    // Depth-descending order; ties toward the lower curve index.
    std::vector<std::size_t> order(K);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (depth.depths[a] != depth.depths[b])
            return depth.depths[a] > depth.depths[b];
        return a < b;
    });

    BoxplotSummary s;
    s.grid = set.grid;
    s.factor = factor;
    s.median_index = order[0];
    s.median_curve.assign(&set.values[s.median_index * p],
                          &set.values[s.median_index * p] + p);

    const std::size_t half = (K + 1) / 2;
    s.central_lower.assign(p, std::numeric_limits<double>::infinity());
    s.central_upper.assign(p, -std::numeric_limits<double>::infinity());
    for (std::size_t r = 0; r < half; ++r) {
        const double* row = &set.values[order[r] * p];
        for (std::size_t k = 0; k < p; ++k) {
            s.central_lower[k] = std::min(s.central_lower[k], row[k]);
            s.central_upper[k] = std::max(s.central_upper[k], row[k]);
        }
    }

    s.fence_lower.resize(p);
    s.fence_upper.resize(p);
    for (std::size_t k = 0; k < p; ++k) {
        const double range = s.central_upper[k] - s.central_lower[k];
        s.fence_lower[k] = s.central_lower[k] - factor * range;
        s.fence_upper[k] = s.central_upper[k] + factor * range;
    }

    std::vector<bool> is_outlier(K, false);
    for (std::size_t i = 0; i < K; ++i) {
        const double* row = &set.values[i * p];
        for (std::size_t k = 0; k < p; ++k) {
            if (row[k] > s.fence_upper[k] || row[k] < s.fence_lower[k]) {
                is_outlier[i] = true;
                break;
            }
        }
    }
    s.envelope_lower.assign(p, std::numeric_limits<double>::infinity());
    s.envelope_upper.assign(p, -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < K; ++i) {
        const double* row = &set.values[i * p];
        if (is_outlier[i]) {
            s.outlier_indices.push_back(i);
            s.outlier_curves.emplace_back(row, row + p);
            continue;
        }
        for (std::size_t k = 0; k < p; ++k) {
            s.envelope_lower[k] = std::min(s.envelope_lower[k], row[k]);
            s.envelope_upper[k] = std::max(s.envelope_upper[k], row[k]);
        }
    }
    // All curves outlying cannot happen (the median never exceeds its own
    // fence), so the envelope is always populated.
    return s;
}

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMarginLeft = 56.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 34.0;
constexpr double kMarginBottom = 40.0;

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Mapper {
    double ymin, ymax;

    double x(double t) const {
        return kMarginLeft + t * (kWidth - kMarginLeft - kMarginRight);
    }
    double y(double v) const {
        const double frac = (v - ymin) / (ymax - ymin);
        return kHeight - kMarginBottom -
               frac * (kHeight - kMarginTop - kMarginBottom);
    }
};

void polyline(std::ostringstream& svg, const Mapper& map,
              const std::vector<double>& grid, const std::vector<double>& ys,
              const char* style) {
    svg << "<polyline fill=\"none\" " << style << " points=\"";
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (k) svg << " ";
        svg << num(map.x(grid[k])) << "," << num(map.y(ys[k]));
    }
    svg << "\"/>\n";
}

} // namespace

std::string render(const BoxplotSummary& s, const std::string& title) {
    const std::size_t p = s.grid.size();
    double ymin = 0.0;
    double ymax = 0.0;
    auto widen = [&](const std::vector<double>& v) {
        for (double x : v) {
            ymin = std::min(ymin, x);
            ymax = std::max(ymax, x);
        }
    };
    widen(s.fence_lower);
    widen(s.fence_upper);
    for (const auto& c : s.outlier_curves) widen(c);
    if (ymax - ymin < 1e-12) {
        ymin -= 0.5;
        ymax += 0.5;
    } else {
        const double pad = 0.06 * (ymax - ymin);
        ymin -= pad;
        ymax += pad;
    }
    const Mapper map{ymin, ymax};

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << num(kWidth / 2.0)
        << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">"
        << xml_escape(title) << "</text>\n";

    // central region
    svg << "<polygon fill=\"#b8cbe4\" fill-opacity=\"0.75\" stroke=\"none\" "
           "points=\"";
    for (std::size_t k = 0; k < p; ++k)
        svg << num(map.x(s.grid[k])) << "," << num(map.y(s.central_upper[k])) << " ";
    for (std::size_t k = p; k-- > 0;)
        svg << num(map.x(s.grid[k])) << "," << num(map.y(s.central_lower[k]))
            << (k ? " " : "");
    svg << "\"/>\n";

    // zero reference line
    if (ymin < 0.0 && ymax > 0.0) {
        svg << "<line x1=\"" << num(map.x(0.0)) << "\" y1=\"" << num(map.y(0.0))
            << "\" x2=\"" << num(map.x(1.0)) << "\" y2=\"" << num(map.y(0.0))
            << "\" stroke=\"#888888\" stroke-dasharray=\"4,3\" "
               "stroke-width=\"1\"/>\n";
    }

    for (const auto& c : s.outlier_curves)
        polyline(svg, map, s.grid, c,
                 "stroke=\"#d62728\" stroke-width=\"1\" stroke-dasharray=\"2,2\"");
    polyline(svg, map, s.grid, s.fence_lower, "stroke=\"#2f4b7c\" stroke-width=\"1\"");
    polyline(svg, map, s.grid, s.fence_upper, "stroke=\"#2f4b7c\" stroke-width=\"1\"");
    polyline(svg, map, s.grid, s.median_curve, "stroke=\"#1a1a1a\" stroke-width=\"2\"");

    // t axis with fixed ticks
    const double axis_y = kHeight - kMarginBottom;
    svg << "<line x1=\"" << num(map.x(0.0)) << "\" y1=\"" << num(axis_y)
        << "\" x2=\"" << num(map.x(1.0)) << "\" y2=\"" << num(axis_y)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (double tick : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double tx = map.x(tick);
        svg << "<line x1=\"" << num(tx) << "\" y1=\"" << num(axis_y) << "\" x2=\""
            << num(tx) << "\" y2=\"" << num(axis_y + 5.0)
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        char lab[16];
        std::snprintf(lab, sizeof lab, "%.2f", tick);
        svg << "<text x=\"" << num(tx) << "\" y=\"" << num(axis_y + 18.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << lab << "</text>\n";
    }
    // y axis labels at min/zero/max
    for (double v : {ymin, 0.0, ymax}) {
        if (v < ymin || v > ymax) continue;
        svg << "<text x=\"" << num(kMarginLeft - 6.0) << "\" y=\""
            << num(map.y(v) + 4.0)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << num(v) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_boxplot_csv(const BoxplotSummary& s, std::ostream& out) {
    out << "t,median,central_lower,central_upper,fence_lower,fence_upper,"
           "envelope_lower,envelope_upper\n";
    char buf[64];
    for (std::size_t k = 0; k < s.grid.size(); ++k) {
        const double cols[8] = {s.grid[k],          s.median_curve[k],
                                s.central_lower[k], s.central_upper[k],
                                s.fence_lower[k],   s.fence_upper[k],
                                s.envelope_lower[k], s.envelope_upper[k]};
        for (int c = 0; c < 8; ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", cols[c]);
            out << (c ? "," : "") << buf;
        }
        out << "\n";
    }
}

} // namespace copsym

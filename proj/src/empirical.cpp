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

#include "copsym/empirical.hpp"

#include <algorithm>
#include <cmath>

#include "copsym/errors.hpp"
#include "copsym/rng.hpp"

namespace copsym {

std::string symmetry_name(Symmetry s) {
    switch (s) {
        case Symmetry::Reflection: return "S";
        case Symmetry::Radial: return "R";
        case Symmetry::Joint: return "J";
    }
    throw InvalidParameter("unknown symmetry");
}

Symmetry symmetry_from_name(const std::string& name) {
    if (name == "S" || name == "s" || name == "reflection") return Symmetry::Reflection;
    if (name == "R" || name == "r" || name == "radial") return Symmetry::Radial;
    if (name == "J" || name == "j" || name == "joint") return Symmetry::Joint;
    throw InvalidParameter("unknown symmetry: " + name);
}

std::int64_t ecdf_count(const UniformSample& s, double x, double y) noexcept {
    std::int64_t c = 0;
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i)
        c += (s.u[i] <= x && s.v[i] <= y) ? 1 : 0;
    return c;
}

double ecdf_copula(const UniformSample& s, double x, double y) {
    if (s.size() == 0) throw DataError("ecdf_copula: empty sample");
    return static_cast<double>(ecdf_count(s, x, y)) / static_cast<double>(s.size());
}

double survival_ecdf(const UniformSample& s, double x, double y) {
    return ecdf_copula(s, 1.0 - x, 1.0 - y) - 1.0 + x + y;
}

double sym_s_ecdf(const UniformSample& s, double u, double v) {
    return 0.5 * (ecdf_copula(s, u, v) + ecdf_copula(s, v, u));
}

double sym_r_ecdf(const UniformSample& s, double u, double v) {
    return 0.5 * (ecdf_copula(s, u, v) + survival_ecdf(s, u, v));
}

double sym_j_ecdf(const UniformSample& s, double u, double v) {
    return 0.25 * (ecdf_copula(s, u, v) + u - ecdf_copula(s, u, 1.0 - v) + v -
                   ecdf_copula(s, 1.0 - u, v) + survival_ecdf(s, u, v));
}

void ecdf_lattice_counts(const UniformSample& s, std::span<const double> xs,
                         std::span<const double> ys, std::span<std::int32_t> out) {
    const std::size_t nx = xs.size();
    const std::size_t ny = ys.size();
    if (out.size() != nx * ny)
        throw InvalidParameter("ecdf_lattice_counts: output size mismatch");
    if (nx == 0 || ny == 0) return;

    // Histogram points into query-grid cells. Cell (a,b) holds points with
    // xs[a-1] < u <= xs[a] (a = nx for u beyond the grid), same for v; a
    // 2-d prefix sum then yields the dominance counts at every grid corner.
    const std::size_t n = s.size();
    std::vector<std::int32_t> hist((nx + 1) * (ny + 1), 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t a = static_cast<std::size_t>(
            std::lower_bound(xs.begin(), xs.end(), s.u[i]) - xs.begin());
        const std::size_t b = static_cast<std::size_t>(
            std::lower_bound(ys.begin(), ys.end(), s.v[i]) - ys.begin());
        ++hist[a * (ny + 1) + b];
    }
    for (std::size_t a = 0; a < nx; ++a) {
        std::int32_t run = 0;
        for (std::size_t b = 0; b < ny; ++b) {
            run += hist[a * (ny + 1) + b];
            out[a * ny + b] = run + (a ? out[(a - 1) * ny + b] : 0);
        }
    }
}

UniformSample resample_null(const UniformSample& s, Symmetry sym,
                            std::size_t n_out, std::uint64_t seed) {
    const std::size_t n = s.size();
    if (n == 0) throw DataError("resample_null: empty sample");
    if (n_out < 1) throw InvalidParameter("resample_null: n_out must be >= 1");

    const double shift = 1.0 / static_cast<double>(n);
    auto reflect = [shift](double x) { return std::min(1.0 - x + shift, 1.0); };

    Rng rng(seed);
    UniformSample out;
    out.provenance = Provenance::resampled;
    out.u.resize(n_out);
    out.v.resize(n_out);
    for (std::size_t i = 0; i < n_out; ++i) {
        const std::size_t idx = static_cast<std::size_t>(rng.below(n));
        const double a = s.u[idx];
        const double b = s.v[idx];
        switch (sym) {
            case Symmetry::Reflection: {
                if (rng.below(2) == 0) {
                    out.u[i] = a;
                    out.v[i] = b;
                } else {
                    out.u[i] = b;
                    out.v[i] = a;
                }
                break;
            }
            case Symmetry::Radial: {
                if (rng.below(2) == 0) {
                    out.u[i] = a;
                    out.v[i] = b;
                } else {
                    out.u[i] = reflect(a);
                    out.v[i] = reflect(b);
                }
                break;
            }
            case Symmetry::Joint: {
                switch (rng.below(4)) {
                    case 0:
                        out.u[i] = a;
                        out.v[i] = b;
                        break;
                    case 1:
                        out.u[i] = a;
                        out.v[i] = reflect(b);
                        break;
                    case 2:
                        out.u[i] = reflect(a);
                        out.v[i] = b;
                        break;
                    default:
                        out.u[i] = reflect(a);
                        out.v[i] = reflect(b);
                        break;
                }
                break;
            }
        }
    }
    return out;
}

} // namespace copsym

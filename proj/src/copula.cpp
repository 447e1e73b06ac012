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

#include "copsym/copula.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "copsym/errors.hpp"
#include "copsym/normal.hpp"
#include "copsym/rng.hpp"

namespace copsym {

namespace {

constexpr double kOpenLo = 1e-12;
constexpr double kOpenHi = 1.0 - 1e-12;

inline double clamp_open(double x) noexcept {
    return std::min(std::max(x, kOpenLo), kOpenHi);
}

void require(bool ok, const char* msg) {
    if (!ok) throw InvalidParameter(msg);
}

} // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Independence: return "independence";
        case Family::Gaussian: return "gaussian";
        case Family::Clayton: return "clayton";
        case Family::Gumbel: return "gumbel";
        case Family::Frank: return "frank";
        case Family::MarshallOlkin: return "marshall-olkin";
        case Family::Khoudraji: return "khoudraji";
    }
    throw InvalidParameter("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "independence" || name == "pi") return Family::Independence;
    if (name == "gaussian" || name == "normal") return Family::Gaussian;
    if (name == "clayton") return Family::Clayton;
    if (name == "gumbel") return Family::Gumbel;
    if (name == "frank") return Family::Frank;
    if (name == "marshall-olkin" || name == "marshall_olkin") return Family::MarshallOlkin;
    if (name == "khoudraji") return Family::Khoudraji;
    throw InvalidParameter("unknown copula family: " + name);
}

CopulaSpec CopulaSpec::independence() { return CopulaSpec{}; }

CopulaSpec CopulaSpec::gaussian(double rho) {
    require(rho > -1.0 && rho < 1.0, "gaussian: rho must lie in (-1,1)");
    return CopulaSpec{Family::Gaussian, {rho}, 0.0, nullptr, false};
}

CopulaSpec CopulaSpec::clayton(double theta) {
    require(std::isfinite(theta) && theta > 0.0, "clayton: theta must be > 0");
    return CopulaSpec{Family::Clayton, {theta}, 0.0, nullptr, false};
}

CopulaSpec CopulaSpec::gumbel(double theta) {
    require(std::isfinite(theta) && theta >= 1.0, "gumbel: theta must be >= 1");
    return CopulaSpec{Family::Gumbel, {theta}, 0.0, nullptr, false};
}

CopulaSpec CopulaSpec::frank(double theta) {
    require(std::isfinite(theta) && theta != 0.0, "frank: theta must be nonzero");
    return CopulaSpec{Family::Frank, {theta}, 0.0, nullptr, false};
}

CopulaSpec CopulaSpec::marshall_olkin(double alpha, double beta) {
    require(alpha > 0.0 && alpha <= 1.0 && beta > 0.0 && beta <= 1.0,
            "marshall-olkin: alpha and beta must lie in (0,1]");
    return CopulaSpec{Family::MarshallOlkin, {alpha, beta}, 0.0, nullptr, false};
}

CopulaSpec CopulaSpec::khoudraji(double delta, CopulaSpec inner, bool swapped) {
    require(delta >= 0.0 && delta <= 1.0, "khoudraji: delta must lie in [0,1]");
    if (delta == 0.0) return inner;          // device degenerates to the base copula
    if (delta == 1.0) return independence(); // and to independence at the other end
    CopulaSpec s;
    s.family = Family::Khoudraji;
    s.delta = delta;
    s.inner = std::make_shared<const CopulaSpec>(std::move(inner));
    s.swapped = swapped;
    return s;
}

CopulaSpec CopulaSpec::tawn1(double theta, double weight) {
    require(weight > 0.0 && weight <= 1.0, "tawn: weight must lie in (0,1]");
    return khoudraji(1.0 - weight, gumbel(theta), false);
}

CopulaSpec CopulaSpec::tawn2(double theta, double weight) {
    require(weight > 0.0 && weight <= 1.0, "tawn: weight must lie in (0,1]");
    return khoudraji(1.0 - weight, gumbel(theta), true);
}

std::string CopulaSpec::describe() const {
    std::ostringstream os;
    os << family_name(family);
    if (family == Family::Khoudraji) {
        os << "(delta=" << delta << (swapped ? ", swapped" : "") << ", inner="
           << inner->describe() << ")";
    } else if (!params.empty()) {
        os << "(";
        for (std::size_t i = 0; i < params.size(); ++i)
            os << (i ? "," : "") << params[i];
        os << ")";
    }
    return os.str();
}

namespace {

double cdf_unchecked(const CopulaSpec& spec, double u, double v);

double gaussian_cdf(double rho, double u, double v) {
    if (rho == 0.0) return u * v;
    const double h = normal_quantile(u);
    const double k = normal_quantile(v);
    // Tolerance well below the 1e-6 contract so the Frechet clamp below only
    // ever corrects rounding-level excursions.
    return bivariate_normal_cdf(h, k, rho, 1e-12);
}

double clayton_cdf(double theta, double u, double v) {
    const double s = std::pow(u, -theta) + std::pow(v, -theta) - 1.0;
    if (std::isinf(s)) return 0.0;
    return std::exp(-std::log(s) / theta);
}

double gumbel_cdf(double theta, double u, double v) {
    const double x = -std::log(u);
    const double y = -std::log(v);
    // (x^t + y^t)^{1/t} = m * (r^t + q^t)^{1/t} with r,q <= 1: overflow-free.
    const double m = std::max(x, y);
    if (m == 0.0) return 1.0;
    const double s = std::pow(x / m, theta) + std::pow(y / m, theta);
    return std::exp(-m * std::pow(s, 1.0 / theta));
}

double frank_cdf(double theta, double u, double v) {
    const double a = std::expm1(-theta * u);
    const double b = std::expm1(-theta * v);
    const double c = std::expm1(-theta);
    return -std::log1p(a * b / c) / theta;
}

double marshall_olkin_cdf(double alpha, double beta, double u, double v) {
    return std::min(std::pow(u, 1.0 - alpha) * v, u * std::pow(v, 1.0 - beta));
}

double khoudraji_cdf(const CopulaSpec& spec, double u, double v) {
    if (spec.swapped)
        return std::pow(v, spec.delta) *
               cdf_unchecked(*spec.inner, u, std::pow(v, 1.0 - spec.delta));
    return std::pow(u, spec.delta) *
           cdf_unchecked(*spec.inner, std::pow(u, 1.0 - spec.delta), v);
}

double cdf_unchecked(const CopulaSpec& spec, double u, double v) {
    if (u <= 0.0 || v <= 0.0) return 0.0;
    if (u >= 1.0 && v >= 1.0) return 1.0;
    if (u >= 1.0) return v;
    if (v >= 1.0) return u;

    double c;
    switch (spec.family) {
        case Family::Independence: c = u * v; break;
        case Family::Gaussian: c = gaussian_cdf(spec.params[0], u, v); break;
        case Family::Clayton: c = clayton_cdf(spec.params[0], u, v); break;
        case Family::Gumbel: c = gumbel_cdf(spec.params[0], u, v); break;
        case Family::Frank: c = frank_cdf(spec.params[0], u, v); break;
        case Family::MarshallOlkin:
            c = marshall_olkin_cdf(spec.params[0], spec.params[1], u, v);
            break;
        case Family::Khoudraji: c = khoudraji_cdf(spec, u, v); break;
        default: throw InvalidParameter("unknown family");
    }
    // Project into the Frechet-Hoeffding envelope; approximation error (the
    // Gaussian quadrature) stays within its tolerance.
    return std::min(std::max(c, std::max(u + v - 1.0, 0.0)), std::min(u, v));
}

} // namespace

double cdf(const CopulaSpec& spec, double u, double v) {
    if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0))
        throw InvalidParameter("cdf: arguments must lie in [0,1]");
    return cdf_unchecked(spec, u, v);
}

namespace {

struct Point {
    double u, v;
};

Point draw_point(const CopulaSpec& spec, Rng& rng) {
    switch (spec.family) {
        case Family::Independence:
            return {rng.uniform_open(), rng.uniform_open()};
        case Family::Gaussian: {
            const double rho = spec.params[0];
            const double z1 = rng.normal();
            const double z2 = rho * z1 + std::sqrt(1.0 - rho * rho) * rng.normal();
            return {normal_cdf(z1), normal_cdf(z2)};
        }
        case Family::Clayton: {
            // Gamma frailty: U = psi(E/V) with psi(t) = (1+t)^{-1/theta}.
            const double theta = spec.params[0];
            const double frailty = rng.gamma(1.0 / theta);
            const double e1 = rng.exponential();
            const double e2 = rng.exponential();
            return {std::exp(-std::log1p(e1 / frailty) / theta),
                    std::exp(-std::log1p(e2 / frailty) / theta)};
        }
        case Family::Gumbel: {
            // Positive-stable frailty: U = exp(-(E/S)^{1/theta}).
            const double theta = spec.params[0];
            if (theta == 1.0) return {rng.uniform_open(), rng.uniform_open()};
            const double s = rng.positive_stable(1.0 / theta);
            const double e1 = rng.exponential();
            const double e2 = rng.exponential();
            return {std::exp(-std::pow(e1 / s, 1.0 / theta)),
                    std::exp(-std::pow(e2 / s, 1.0 / theta))};
        }
        case Family::Frank: {
            // Conditional inversion: V = C_{2|1}^{-1}(w | u), closed form.
            const double theta = spec.params[0];
            const double u = rng.uniform_open();
            const double w = rng.uniform_open();
            const double x =
                w * std::expm1(-theta) / (std::exp(-theta * u) * (1.0 - w) + w);
            return {u, -std::log1p(x) / theta};
        }
        case Family::MarshallOlkin: {
            // Three competing exponential shocks with rates (1-a)/a, (1-b)/b, 1.
            const double alpha = spec.params[0];
            const double beta = spec.params[1];
            const double lam1 = (1.0 - alpha) / alpha;
            const double lam2 = (1.0 - beta) / beta;
            const double e1 = rng.exponential();
            const double e2 = rng.exponential();
            const double shared = rng.exponential();
            const double z1 =
                lam1 > 0.0 ? e1 / lam1 : std::numeric_limits<double>::infinity();
            const double z2 =
                lam2 > 0.0 ? e2 / lam2 : std::numeric_limits<double>::infinity();
            const double x = std::min(z1, shared);
            const double y = std::min(z2, shared);
            return {std::exp(-x / alpha), std::exp(-y / beta)};
        }
        case Family::Khoudraji: {
            // Max coupling: U = max(W^{1/d}, B1^{1/(1-d)}), V = B2 gives the
            // product copula u^d * C(u^{1-d}, v).
            const Point base = draw_point(*spec.inner, rng);
            const double w = rng.uniform_open();
            const double d = spec.delta;
            if (spec.swapped) {
                const double vv =
                    std::max(std::pow(w, 1.0 / d), std::pow(base.v, 1.0 / (1.0 - d)));
                return {base.u, vv};
            }
            const double uu =
                std::max(std::pow(w, 1.0 / d), std::pow(base.u, 1.0 / (1.0 - d)));
            return {uu, base.v};
        }
        default:
            throw InvalidParameter("unknown family");
    }
}

} // namespace

UniformSample sample(const CopulaSpec& spec, std::size_t n, std::uint64_t seed) {
    require(n >= 1, "sample: n must be >= 1");
    Rng rng(seed);
    UniformSample out;
    out.provenance = Provenance::direct;
    out.u.resize(n);
    out.v.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point pt = draw_point(spec, rng);
        out.u[i] = clamp_open(pt.u);
        out.v[i] = clamp_open(pt.v);
    }
    return out;
}

double debye1(double x) {
    require(x > 0.0, "debye1: argument must be positive");
    auto integrand = [](double t) {
        if (std::abs(t) < 1e-8) return 1.0 - 0.5 * t;
        return t / std::expm1(t);
    };
    return adaptive_simpson(integrand, 0.0, x, 1e-12) / x;
}

namespace {

double frank_tau_positive(double theta) {
    return 1.0 - 4.0 / theta * (1.0 - debye1(theta));
}

} // namespace

double kendall_tau(const CopulaSpec& spec) {
    switch (spec.family) {
        case Family::Independence: return 0.0;
        case Family::Gaussian:
            return 2.0 / std::numbers::pi * std::asin(spec.params[0]);
        case Family::Clayton: return spec.params[0] / (spec.params[0] + 2.0);
        case Family::Gumbel: return 1.0 - 1.0 / spec.params[0];
        case Family::Frank: {
            const double theta = spec.params[0];
            return theta > 0.0 ? frank_tau_positive(theta)
                               : -frank_tau_positive(-theta);
        }
        case Family::MarshallOlkin: {
            const double a = spec.params[0];
            const double b = spec.params[1];
            return a * b / (a + b - a * b);
        }
        case Family::Khoudraji:
            throw InvalidParameter("kendall_tau: no closed form for khoudraji specs");
    }
    throw InvalidParameter("unknown family");
}

CopulaSpec tau_to_params(Family family, double tau) {
    require(tau > -1.0 && tau < 1.0, "tau must lie in (-1,1)");
    switch (family) {
        case Family::Independence:
            require(tau == 0.0, "independence: only tau = 0 is admissible");
            return CopulaSpec::independence();
        case Family::Gaussian:
            return CopulaSpec::gaussian(std::sin(std::numbers::pi * tau / 2.0));
        case Family::Clayton:
            require(tau > 0.0, "clayton: tau must be positive");
            return CopulaSpec::clayton(2.0 * tau / (1.0 - tau));
        case Family::Gumbel:
            require(tau > 0.0, "gumbel: tau must be positive");
            return CopulaSpec::gumbel(1.0 / (1.0 - tau));
        case Family::Frank: {
            require(tau != 0.0, "frank: tau = 0 is the independence boundary");
            const double target = std::abs(tau);
            double lo = 1e-9;
            double hi = 1e5;
            if (frank_tau_positive(hi) < target)
                throw InvalidParameter("frank: tau too close to 1");
            // Bisection on the Debye relation; tau(theta) is increasing.
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double t = frank_tau_positive(mid);
                if (std::abs(t - target) < 1e-10) {
                    lo = hi = mid;
                    break;
                }
                (t < target ? lo : hi) = mid;
                if (hi - lo < 1e-12 * std::max(1.0, lo)) break;
            }
            const double theta = 0.5 * (lo + hi);
            return CopulaSpec::frank(tau > 0.0 ? theta : -theta);
        }
        case Family::MarshallOlkin:
        case Family::Khoudraji:
            throw InvalidParameter(
                "tau_to_params: unsupported family; construct the spec directly");
    }
    throw InvalidParameter("unknown family");
}

nlohmann::json to_json(const CopulaSpec& spec) {
    nlohmann::json j;
    j["family"] = family_name(spec.family);
    j["params"] = spec.params;
    if (spec.family == Family::Khoudraji) {
        j["delta"] = spec.delta;
        j["inner"] = to_json(*spec.inner);
        if (spec.swapped) j["swapped"] = true;
    }
    return j;
}

CopulaSpec copula_from_json(const nlohmann::json& j) {
    const Family family = family_from_name(j.at("family").get<std::string>());
    std::vector<double> params;
    if (j.contains("params")) params = j["params"].get<std::vector<double>>();
    switch (family) {
        case Family::Independence: return CopulaSpec::independence();
        case Family::Gaussian:
            require(params.size() == 1, "gaussian: expected one parameter");
            return CopulaSpec::gaussian(params[0]);
        case Family::Clayton:
            require(params.size() == 1, "clayton: expected one parameter");
            return CopulaSpec::clayton(params[0]);
        case Family::Gumbel:
            require(params.size() == 1, "gumbel: expected one parameter");
            return CopulaSpec::gumbel(params[0]);
        case Family::Frank:
            require(params.size() == 1, "frank: expected one parameter");
            return CopulaSpec::frank(params[0]);
        case Family::MarshallOlkin:
            require(params.size() == 2, "marshall-olkin: expected two parameters");
            return CopulaSpec::marshall_olkin(params[0], params[1]);
        case Family::Khoudraji: {
            require(j.contains("delta") && j.contains("inner"),
                    "khoudraji: requires delta and inner");
            const bool swapped = j.value("swapped", false);
            return CopulaSpec::khoudraji(j["delta"].get<double>(),
                                         copula_from_json(j["inner"]), swapped);
        }
    }
    throw InvalidParameter("unknown family");
}

} // namespace copsym

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
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "copsym/sample.hpp"

namespace copsym {

enum class Family {
    Independence,
    Gaussian,
    Clayton,
    Gumbel,
    Frank,
    MarshallOlkin,
    Khoudraji,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// A parametric bivariate copula, possibly wrapped by the Khoudraji device
/// K_delta(u,v) = u^delta * C(u^{1-delta}, v).
///
/// Parameter layout:
///   Independence  : {}
///   Gaussian      : {rho},   rho in (-1,1)
///   Clayton       : {theta}, theta > 0
///   Gumbel        : {theta}, theta >= 1
///   Frank         : {theta}, theta != 0
///   MarshallOlkin : {alpha, beta}, both in (0,1]
///   Khoudraji     : {} with `delta` in (0,1) and `inner` set. `swapped`
///                   applies the device to the second coordinate instead,
///                   which realizes the mirrored (Tawn type 2) construction.
///
/// Construct through the factory functions; they validate parameters and
/// normalize degenerate Khoudraji weights (delta=0 -> inner, delta=1 ->
/// independence).
struct CopulaSpec {
    Family family = Family::Independence;
    std::vector<double> params;
    double delta = 0.0;
    std::shared_ptr<const CopulaSpec> inner;
    bool swapped = false;

    static CopulaSpec independence();
    static CopulaSpec gaussian(double rho);
    static CopulaSpec clayton(double theta);
    static CopulaSpec gumbel(double theta);
    static CopulaSpec frank(double theta);
    static CopulaSpec marshall_olkin(double alpha, double beta);
    static CopulaSpec khoudraji(double delta, CopulaSpec inner, bool swapped = false);

    /// Khoudraji-Gumbel realizations of the Tawn copulas. `weight` is the
    /// exponent carried by the Gumbel factor: tawn1(theta, w)(u,v) =
    /// u^{1-w} * Gumbel_theta(u^w, v); weight 1 recovers the plain Gumbel.
    /// tawn2 is the coordinate-swapped transform.
    static CopulaSpec tawn1(double theta, double weight);
    static CopulaSpec tawn2(double theta, double weight);

    std::string describe() const;
};

/// C(u,v) for u,v in [0,1]. Gaussian evaluation uses one-dimensional adaptive
/// quadrature (absolute tolerance 1e-6 or better); all other families are
/// closed-form.
double cdf(const CopulaSpec& spec, double u, double v);

/// n i.i.d. draws, deterministic in (spec, n, seed); coordinates strictly
/// inside (0,1).
UniformSample sample(const CopulaSpec& spec, std::size_t n, std::uint64_t seed);

/// Population Kendall's tau for families with a closed form (all except
/// Khoudraji). Frank uses the Debye-function relation.
double kendall_tau(const CopulaSpec& spec);

/// Spec of `family` whose population tau equals `tau` (within 1e-8; Frank is
/// solved by bisection on the Debye relation). Throws InvalidParameter for
/// unsupported (family, tau) combinations, e.g. tau <= 0 for Clayton/Gumbel.
CopulaSpec tau_to_params(Family family, double tau);

/// First-order Debye function D1(x) = (1/x) Int_0^x t/(e^t - 1) dt, x > 0.
double debye1(double x);

nlohmann::json to_json(const CopulaSpec& spec);
CopulaSpec copula_from_json(const nlohmann::json& j);

} // namespace copsym

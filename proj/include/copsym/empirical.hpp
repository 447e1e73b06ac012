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
#include <span>
#include <vector>

#include "copsym/sample.hpp"

namespace copsym {

enum class Symmetry { Reflection, Radial, Joint };

std::string symmetry_name(Symmetry s);
Symmetry symmetry_from_name(const std::string& name);

/// #{ i : u_i <= x and v_i <= y }, by direct counting.
std::int64_t ecdf_count(const UniformSample& s, double x, double y) noexcept;

/// Empirical copula value: ecdf_count / n.
double ecdf_copula(const UniformSample& s, double x, double y);

/// Empirical survival copula: ecdf(1-x, 1-y) - 1 + x + y.
double survival_ecdf(const UniformSample& s, double x, double y);

/// Symmetrized mixture evaluators; these are the CDFs the null bootstrap
/// resamples from.
double sym_s_ecdf(const UniformSample& s, double u, double v); // reflection
double sym_r_ecdf(const UniformSample& s, double u, double v); // radial
double sym_j_ecdf(const UniformSample& s, double u, double v); // joint

/// Offline batch kernel. Fills out[i*ys.size()+j] with ecdf_count(s, xs[i],
/// ys[j]) for ascending query grids xs, ys. One pass of bucketed counting
/// plus a 2-d prefix sum; results are identical to direct counting.
void ecdf_lattice_counts(const UniformSample& s, std::span<const double> xs,
                         std::span<const double> ys, std::span<std::int32_t> out);

/// n_out i.i.d. draws from the symmetrized empirical copula of `s`:
/// pick a source point uniformly, then
///   Reflection: identity or coordinate swap, probability 1/2 each;
///   Radial:     identity or (u,v) -> (1-u+1/n, 1-v+1/n), probability 1/2;
///   Joint:      identity, (u,1-v+1/n), (1-u+1/n,v) or both flips,
///               probability 1/4 each.
/// The 1/n shift keeps grid-supported margins on {1/n,...,1}; coordinates are
/// capped at 1. Deterministic given the seed.
UniformSample resample_null(const UniformSample& s, Symmetry sym,
                            std::size_t n_out, std::uint64_t seed);

} // namespace copsym

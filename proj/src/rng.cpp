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

#include "copsym/rng.hpp"

#include <cmath>
#include <numbers>

#include "copsym/normal.hpp"

namespace copsym {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::string_view purpose,
                          std::uint64_t index) noexcept {
    // FNV-1a over the label, then two mixing rounds against root and index.
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : purpose) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    std::uint64_t s = mix64(root ^ mix64(h));
    return mix64(s ^ mix64(index + 0x632BE59BD9B4E019ull));
}

Rng::Rng(std::uint64_t seed) noexcept {
    // Expand the seed through SplitMix64, the recommended xoshiro seeding.
    std::uint64_t sm = seed;
    for (auto& s : state_) {
        sm += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = sm;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        s = z ^ (z >> 31);
    }
}

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
}
} // namespace

std::uint64_t Rng::next() noexcept {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform_open() noexcept {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
    // Classic unbiased rejection on the top of the range.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

double Rng::exponential() noexcept {
    return -std::log(uniform_open());
}

double Rng::normal() noexcept {
    return normal_quantile(uniform_open());
}

double Rng::gamma(double shape) noexcept {
    if (shape < 1.0) {
        // Boost a Gamma(shape+1) draw down; consumes one extra uniform.
        const double g = gamma(shape + 1.0);
        return g * std::pow(uniform_open(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform_open();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double Rng::positive_stable(double alpha) noexcept {
    // Kanter's representation: S = sin(a T) / sin(T)^{1/a}
    //                              * { sin((1-a) T) / W }^{(1-a)/a},
    // with T uniform on (0, pi) and W exponential.
    const double theta = std::numbers::pi * uniform_open();
    const double w = exponential();
    const double s = std::sin(theta);
    const double ratio = (1.0 - alpha) / alpha;
    return std::sin(alpha * theta) / std::pow(s, 1.0 / alpha) *
           std::pow(std::sin((1.0 - alpha) * theta) / w, ratio);
}

} // namespace copsym

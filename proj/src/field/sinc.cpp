// Copyright 2026 The qgrf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgrf/field/sinc.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace qgrf {

namespace {

constexpr double kSmall = 1e-8;

}  // namespace

double sinc(double s) {
    if (std::abs(s) < kSmall) {
        const double t = std::numbers::pi * s;
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    if (s == std::nearbyint(s)) {
        return 0.0;
    }
    const double t = std::numbers::pi * s;
    return std::sin(t) / t;
}

double sinc(std::span<const double> s) {
    double value = 1.0;
    for (double component : s) {
        value *= sinc(component);
    }
    return value;
}

double sinc_complex_modulus(double x, double y) {
    const double r = std::hypot(x, y);
    if (r < kSmall) {
        const std::complex<double> t = std::numbers::pi * std::complex<double>(x, y);
        const std::complex<double> t2 = t * t;
        return std::abs(1.0 - t2 / 6.0 + t2 * t2 / 120.0);
    }
    // |sin(a + ib)|^2 = sin^2 a + sinh^2 b.
    const double sx = y == 0.0 && x == std::nearbyint(x) ? 0.0 : std::sin(std::numbers::pi * x);
    const double shy = std::sinh(std::numbers::pi * y);
    return std::sqrt(sx * sx + shy * shy) / (std::numbers::pi * r);
}

}  // namespace qgrf

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

#include "qgrf/field/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qgrf {

double sigmoid(double value) {
    if (value >= 0) {
        return 1.0 / (1.0 + std::exp(-value));
    }
    const double e = std::exp(value);
    return e / (1.0 + e);
}

void Transformation::require_encodable() const {
    if (lo < -1.0 || hi > 1.0 || lo > hi) {
        throw std::invalid_argument("transformation '" + name +
                                    "' has a range outside [-1, 1] and cannot be encoded");
    }
}

Transformation Transformation::identity() {
    const double inf = std::numeric_limits<double>::infinity();
    return {"identity", [](double v) { return v; }, -inf, inf};
}

Transformation Transformation::cosine() {
    return {"cos", [](double v) { return std::cos(v); }, -1.0, 1.0};
}

Transformation Transformation::sigmoid(double scale) {
    if (!(scale > 0.0)) {
        throw std::invalid_argument("sigmoid scale must be positive");
    }
    return {"sigmoid", [scale](double v) { return scale * qgrf::sigmoid(v); }, 0.0, scale};
}

Transformation Transformation::two_phase(double z0, double z1, double a, double b) {
    return {"two_phase", [=](double v) { return z0 + (z1 - z0) * qgrf::sigmoid(a * v - b); },
            std::min(z0, z1), std::max(z0, z1)};
}

double transform_field(double value, const Transformation &rho) {
    return rho(value);
}

}  // namespace qgrf

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

#pragma once

#include <functional>
#include <string>

namespace qgrf {

/// Pointwise map rho with a declared range [lo, hi].
struct Transformation {
    std::string name;
    std::function<double(double)> map;
    double lo;
    double hi;

    double operator()(double value) const { return map(value); }
    /// Throws std::invalid_argument unless [lo, hi] lies inside [-1, 1].
    void require_encodable() const;

    static Transformation identity();
    static Transformation cosine();
    /// scale / (1 + exp(-value)), range [0, scale].
    static Transformation sigmoid(double scale = 1.0);
    /// z0 + (z1 - z0) sigmoid(a value - b).
    static Transformation two_phase(double z0, double z1, double a, double b);
};

double sigmoid(double value);

double transform_field(double value, const Transformation &rho);

}  // namespace qgrf

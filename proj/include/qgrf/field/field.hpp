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

#include <span>
#include <utility>
#include <vector>

#include "qgrf/field/grid.hpp"
#include "qgrf/field/kernel.hpp"
#include "qgrf/field/noise.hpp"

namespace qgrf {

/// One term h^{d/2} f(x, j h) of the discretized field at x.
struct FieldTerm {
    Index j;
    double weight;
};

/// The terms of Y(x) = h^{d/2} sum_j f(x, j h) W_j in lexicographic order
/// of j over index_set(grid, grid_center(grid, x)).
std::vector<FieldTerm> field_terms(const ConvolutionKernel &kernel, const GridSpec &grid,
                                   std::span<const double> x);

/// Y(x) for the given noise. Every required index must be present.
double evaluate_field(const ConvolutionKernel &kernel, const GridSpec &grid,
                      const WhiteNoiseGrid &noise, std::span<const double> x);

/// h^d sum_j f(x, j h) f(y, j h) over the indices shared by both points.
double discrete_covariance(const ConvolutionKernel &kernel, const GridSpec &grid,
                           std::span<const double> x, std::span<const double> y);

/// Dense linear map from the noise box to field values at `points`:
/// values[i] = sum_p map(i, p) W_p, stored row-major.
struct FieldMap {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> coefficients;

    std::vector<double> apply(std::span<const double> noise) const;
};

FieldMap field_map(const ConvolutionKernel &kernel, const GridSpec &grid, const NoiseBox &box,
                   const std::vector<std::vector<double>> &points);

}  // namespace qgrf

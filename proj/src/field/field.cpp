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

#include "qgrf/field/field.hpp"

#include <cmath>
#include <stdexcept>

namespace qgrf {

namespace {

void check_compatible(const ConvolutionKernel &kernel, const GridSpec &grid) {
    grid.validate();
    if (kernel.dimension() != grid.dimension) {
        throw std::invalid_argument("kernel and grid dimensions differ");
    }
    if (grid.centering == Centering::centered_at_x && !kernel.stationary()) {
        throw std::invalid_argument("centered grids require a stationary kernel");
    }
}

std::vector<double> lattice_point(const Index &j, double h) {
    std::vector<double> s(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        s[k] = static_cast<double>(j[k]) * h;
    }
    return s;
}

}  // namespace

std::vector<FieldTerm> field_terms(const ConvolutionKernel &kernel, const GridSpec &grid,
                                   std::span<const double> x) {
    check_compatible(kernel, grid);
    const double scale = std::pow(grid.h, 0.5 * grid.dimension);
    std::vector<FieldTerm> terms;
    for (auto &j : index_set(grid, grid_center(grid, x))) {
        const auto s = lattice_point(j, grid.h);
        const double w = scale * kernel(x, s);
        terms.push_back(FieldTerm{std::move(j), w});
    }
    return terms;
}

double evaluate_field(const ConvolutionKernel &kernel, const GridSpec &grid,
                      const WhiteNoiseGrid &noise, std::span<const double> x) {
    double value = 0.0;
    for (const auto &term : field_terms(kernel, grid, x)) {
        if (!noise.box().contains(term.j)) {
            throw std::out_of_range("noise grid does not cover the index set at x");
        }
        value += term.weight * noise.at(term.j);
    }
    return value;
}

double discrete_covariance(const ConvolutionKernel &kernel, const GridSpec &grid,
                           std::span<const double> x, std::span<const double> y) {
    check_compatible(kernel, grid);
    const auto jx = index_set(grid, grid_center(grid, x));
    const auto jy = index_set(grid, grid_center(grid, y));
    // Both lists are lexicographically sorted; walk the intersection in
    // order so the sum is symmetric in (x, y) bit for bit.
    double sum = 0.0;
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < jx.size() && b < jy.size()) {
        if (jx[a] < jy[b]) {
            ++a;
        } else if (jy[b] < jx[a]) {
            ++b;
        } else {
            const auto s = lattice_point(jx[a], grid.h);
            const double fx = kernel(x, s);
            const double fy = kernel(y, s);
            sum += fx <= fy ? fx * fy : fy * fx;
            ++a;
            ++b;
        }
    }
    return std::pow(grid.h, grid.dimension) * sum;
}

std::vector<double> FieldMap::apply(std::span<const double> noise) const {
    if (noise.size() != cols) {
        throw std::invalid_argument("noise length does not match the field map");
    }
    std::vector<double> out(rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        const double *row = coefficients.data() + i * cols;
        double acc = 0.0;
        for (std::size_t p = 0; p < cols; ++p) {
            acc += row[p] * noise[p];
        }
        out[i] = acc;
    }
    return out;
}

FieldMap field_map(const ConvolutionKernel &kernel, const GridSpec &grid, const NoiseBox &box,
                   const std::vector<std::vector<double>> &points) {
    box.validate();
    FieldMap map;
    map.rows = points.size();
    map.cols = box.size();
    map.coefficients.assign(map.rows * map.cols, 0.0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (const auto &term : field_terms(kernel, grid, points[i])) {
            if (!box.contains(term.j)) {
                throw std::out_of_range("noise box does not cover the index set of a point");
            }
            map.coefficients[i * map.cols + box.rank(term.j)] = term.weight;
        }
    }
    return map;
}

}  // namespace qgrf

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

#include "qgrf/field/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace qgrf {

void GridSpec::validate() const {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw std::invalid_argument("grid size h must be positive");
    }
    if (!(radius >= 0.0) || !std::isfinite(radius)) {
        throw std::invalid_argument("truncation radius must be finite and non-negative");
    }
    if (dimension < 1) {
        throw std::invalid_argument("grid dimension must be at least 1");
    }
}

std::int64_t snapped_floor(double v) {
    const double nearest = std::nearbyint(v);
    if (std::abs(v - nearest) <= 1e-9) {
        return static_cast<std::int64_t>(nearest);
    }
    return static_cast<std::int64_t>(std::floor(v));
}

Index grid_center(const GridSpec &grid, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(grid.dimension)) {
        throw std::invalid_argument("point dimension does not match the grid");
    }
    Index center(grid.dimension, 0);
    if (grid.centering == Centering::centered_at_x) {
        for (int k = 0; k < grid.dimension; ++k) {
            center[k] = snapped_floor(x[k] / grid.h);
        }
    }
    return center;
}

std::vector<Index> index_set(const GridSpec &grid, const Index &center) {
    grid.validate();
    const int d = grid.dimension;
    if (center.size() != static_cast<std::size_t>(d)) {
        throw std::invalid_argument("center dimension does not match the grid");
    }
    if (grid.centering == Centering::fixed_origin) {
        for (auto c : center) {
            if (c != 0) {
                throw std::invalid_argument("fixed-origin grids require a zero center");
            }
        }
    }
    const auto reach = static_cast<std::int64_t>(std::floor(grid.radius + 1e-12));
    const double r2 = grid.radius * grid.radius * (1.0 + 1e-12);
    std::vector<Index> out;
    Index offset(d, -reach);
    while (true) {
        bool keep = true;
        if (grid.norm == NormKind::euclidean) {
            double s = 0.0;
            for (auto o : offset) {
                s += static_cast<double>(o) * static_cast<double>(o);
            }
            keep = s <= r2;
        }
        if (keep) {
            Index j(d);
            for (int k = 0; k < d; ++k) {
                j[k] = center[k] + offset[k];
            }
            out.push_back(std::move(j));
        }
        int k = d - 1;
        while (k >= 0 && offset[k] == reach) {
            offset[k] = -reach;
            --k;
        }
        if (k < 0) {
            break;
        }
        ++offset[k];
    }
    return out;
}

}  // namespace qgrf

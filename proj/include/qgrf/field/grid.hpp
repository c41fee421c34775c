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

#include <cstdint>
#include <span>
#include <vector>

namespace qgrf {

using Index = std::vector<std::int64_t>;

enum class NormKind { euclidean, max };
enum class Centering { fixed_origin, centered_at_x };

/// Lattice h Z^d truncated to |j - center| <= r. In centered mode the
/// center is floor(x / h) for the evaluation point x.
struct GridSpec {
    double h = 1.0;
    double radius = 1.0;
    NormKind norm = NormKind::max;
    int dimension = 1;
    Centering centering = Centering::fixed_origin;

    void validate() const;
};

/// All j with |j - center| <= r in the grid's norm, in lexicographic order
/// (first component slowest).
std::vector<Index> index_set(const GridSpec &grid, const Index &center);

/// The index-set center used when evaluating at x: zero in fixed-origin
/// mode, floor(x / h) otherwise. Quotients within 1e-9 of an integer are
/// snapped to it so that lattice points land on their own index.
Index grid_center(const GridSpec &grid, std::span<const double> x);

/// floor(v) with the same snapping rule.
std::int64_t snapped_floor(double v);

}  // namespace qgrf

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

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace qgrf {

/// Rows `x0,...,x{d-1},value` after a `# params:` line and a header row.
void write_field_csv(std::ostream &out, const std::vector<std::vector<double>> &points,
                     std::span<const double> values, const std::string &params);

/// 8-bit ASCII PGM (P2). values are row-major, `width` per row; gray level
/// is round(255 (v - lo) / (hi - lo)) clamped to [0, 255].
void write_pgm(std::ostream &out, std::size_t width, std::size_t height,
               std::span<const double> values, double lo, double hi);

/// Shortest round-trip decimal form, independent of the global locale.
std::string format_double(double value);

}  // namespace qgrf

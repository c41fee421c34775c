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

#include "qgrf/field/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace qgrf {

std::string format_double(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

void write_field_csv(std::ostream &out, const std::vector<std::vector<double>> &points,
                     std::span<const double> values, const std::string &params) {
    if (points.size() != values.size()) {
        throw std::invalid_argument("point and value counts differ");
    }
    const std::size_t d = points.empty() ? 1 : points.front().size();
    out << "# params: " << params << '\n';
    for (std::size_t k = 0; k < d; ++k) {
        out << 'x' << k << ',';
    }
    out << "value\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (double c : points[i]) {
            out << format_double(c) << ',';
        }
        out << format_double(values[i]) << '\n';
    }
}

void write_pgm(std::ostream &out, std::size_t width, std::size_t height,
               std::span<const double> values, double lo, double hi) {
    if (values.size() != width * height) {
        throw std::invalid_argument("pgm value count does not match width * height");
    }
    if (!(hi > lo)) {
        throw std::invalid_argument("pgm range must satisfy hi > lo");
    }
    out << "P2\n" << width << ' ' << height << "\n255\n";
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            const double t = (values[r * width + c] - lo) / (hi - lo);
            const long g = std::clamp(std::lround(255.0 * t), 0L, 255L);
            out << g << (c + 1 == width ? '\n' : ' ');
        }
    }
}

}  // namespace qgrf

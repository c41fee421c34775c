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

#include "qgrf/qcircuits/encoder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qgrf {

void AngleRegisterSpec::validate() const {
    if (width < 2 || width > 16) {
        throw std::invalid_argument("angle register width must be in [2, 16]");
    }
}

unsigned angle_width_for(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("angle_width_for requires 0 < eps < 1");
    }
    return static_cast<unsigned>(std::ceil(std::log2(std::numbers::pi / (1.0 - std::cos(eps)))));
}

std::uint64_t encode_angle(double c, unsigned m_theta) {
    AngleRegisterSpec{m_theta}.validate();
    if (!std::isfinite(c) || std::abs(c) > 1.0 + 1e-12) {
        throw std::invalid_argument("encoded value " + std::to_string(c) + " is outside [-1, 1]");
    }
    const double clamped = std::clamp(c, -1.0, 1.0);
    const double scale = static_cast<double>(std::uint64_t{1} << m_theta);
    // The 1e-9 keeps exact multiples of pi / 2^m from flooring one step low.
    const double t = std::floor(scale * std::acos(clamped) / std::numbers::pi + 1e-9);
    const auto top = (std::uint64_t{1} << m_theta) - 1;
    return std::min(static_cast<std::uint64_t>(t), top);
}

double encoded_value(std::uint64_t theta, unsigned m_theta) {
    return std::cos(std::numbers::pi * static_cast<double>(theta) /
                    static_cast<double>(std::uint64_t{1} << m_theta));
}

unsigned index_width(std::size_t n) {
    unsigned b = 1;
    while ((std::size_t{1} << b) < n) {
        ++b;
    }
    return b;
}

void append_amplitude_encoder(Circuit &circuit, const std::vector<unsigned> &index,
                              unsigned flag, const std::vector<unsigned> &angle,
                              std::span<const double> values, unsigned m_theta,
                              EncoderLayout layout) {
    AngleRegisterSpec{m_theta}.validate();
    if (index.size() >= 63 || values.size() != (std::size_t{1} << index.size())) {
        throw std::invalid_argument("encoder needs one value per index basis state");
    }
    std::vector<std::uint64_t> theta(values.size());
    for (std::size_t j = 0; j < values.size(); ++j) {
        theta[j] = encode_angle(values[j], m_theta);
    }
    if (layout == EncoderLayout::fused) {
        if (!angle.empty()) {
            throw std::invalid_argument("fused encoder does not use an angle register");
        }
        const double step = 2.0 * std::numbers::pi / static_cast<double>(std::uint64_t{1} << m_theta);
        std::vector<double> angles(theta.size());
        for (std::size_t j = 0; j < theta.size(); ++j) {
            angles[j] = step * static_cast<double>(theta[j]);
        }
        circuit.append(Gate::rotation_oracle(index, flag, std::move(angles)));
        return;
    }
    if (angle.size() != m_theta) {
        throw std::invalid_argument("ancilla encoder needs an angle register of m_theta qubits");
    }
    const Gate oracle = Gate::function_oracle(index, angle, theta);
    circuit.append(oracle);
    for (unsigned t = 0; t < m_theta; ++t) {
        const double phi = std::ldexp(std::numbers::pi, 1 + static_cast<int>(t) - static_cast<int>(m_theta));
        circuit.append(Gate::ry(flag, phi).controlled({Control{angle[t], true}}));
    }
    circuit.append(oracle);
}

Circuit build_amplitude_encoder(std::span<const double> values, unsigned m_theta,
                                EncoderLayout layout) {
    const std::size_t n = values.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("encoder value count must be a power of two");
    }
    Circuit c;
    const unsigned flag = c.add_register("flag", 1).offset;
    std::vector<unsigned> angle;
    if (layout == EncoderLayout::ancilla) {
        angle = c.add_register("angle", m_theta).qubits();
    }
    const unsigned b = n == 1 ? 1 : index_width(n);
    const auto index = c.add_register("index", b).qubits();
    std::vector<double> padded(values.begin(), values.end());
    padded.resize(std::size_t{1} << b, 1.0);
    append_amplitude_encoder(c, index, flag, angle, padded, m_theta, layout);
    return c;
}

}  // namespace qgrf

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

#include "qgrf/qsim/circuit.hpp"

namespace qgrf {

/// Fixed-point width of the encoded angle, 2 <= width <= 16.
struct AngleRegisterSpec {
    unsigned width = 8;

    void validate() const;
};

/// ceil(log2(pi / (1 - cos eps))) for 0 < eps < 1.
unsigned angle_width_for(double eps);

/// theta = floor(2^m acos(c) / pi), capped at 2^m - 1 so that c = -1 fits
/// in the register. |c| may exceed 1 by 1e-12 and is clamped.
std::uint64_t encode_angle(double c, unsigned m_theta);

/// cos(pi theta / 2^m): the flag-0 amplitude produced by the encoder.
double encoded_value(std::uint64_t theta, unsigned m_theta);

/// ancilla: an oracle writes theta(j) into an angle register, one
///          controlled RY per angle bit rotates the flag, the oracle is
///          applied again to uncompute.
/// fused:   a single uniformly controlled RY by 2 pi theta(j) / 2^m.
///          Same action without the angle register.
enum class EncoderLayout { ancilla, fused };

/// Appends |j>|0>_flag -> C(j)'|j>|0> + sqrt(1 - C(j)'^2)|j>|1>, where C'
/// is the encoded value of C(j). values.size() must be 2^index.size();
/// `angle` must have m_theta qubits for the ancilla layout and be empty
/// for the fused one.
void append_amplitude_encoder(Circuit &circuit, const std::vector<unsigned> &index,
                              unsigned flag, const std::vector<unsigned> &angle,
                              std::span<const double> values, unsigned m_theta,
                              EncoderLayout layout);

/// Stand-alone encoder with registers flag (1), angle (m_theta, ancilla
/// layout only) and index (log2 n).
Circuit build_amplitude_encoder(std::span<const double> values, unsigned m_theta,
                                EncoderLayout layout = EncoderLayout::ancilla);

/// Smallest b >= 1 with 2^b >= n.
unsigned index_width(std::size_t n);

}  // namespace qgrf

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
#include <optional>
#include <span>
#include <vector>

#include "qgrf/field/grid.hpp"
#include "qgrf/field/kernel.hpp"
#include "qgrf/field/noise.hpp"
#include "qgrf/field/transform.hpp"
#include "qgrf/qcircuits/encoder.hpp"
#include "qgrf/qsim/circuit.hpp"
#include "qgrf/prng/pcg.hpp"

namespace qgrf {

/// Everything that determines the pseudo-samples Z^(k)(x_j) = rho(Y^(k)(x_j)),
/// where realization k draws its noise from seed derive_seed(params, seed, k).
struct SamplerConfig {
    std::vector<std::vector<double>> points;
    CovarianceSpec covariance;
    GridSpec grid;
    Transformation rho = Transformation::cosine();
    NoiseMode noise_mode = NoiseMode::clt_bits;
    unsigned clt_bits = 4;
    unsigned quantile_bits = 32;
    PcgParams params = PcgParams::small(6);
    std::uint64_t seed = 0;
    unsigned m = 0;
    unsigned m_theta = 8;
    EncoderLayout layout = EncoderLayout::fused;
    /// Noise box; defaults to the smallest box covering all points.
    std::optional<NoiseBox> noise_box;

    void validate() const;
    NoiseBox box() const;
    NoiseDescriptor descriptor(std::uint64_t k) const;
};

/// Values indexed by (point j, sample k). The point count is padded to a
/// power of two; padded points carry C = 0.
struct SampleTable {
    std::size_t points = 0;
    std::size_t padded_points = 0;
    unsigned m = 0;
    std::vector<double> values;

    std::size_t samples() const { return std::size_t{1} << m; }
    double operator()(std::size_t j, std::size_t k) const { return values[k * padded_points + j]; }
    std::span<const double> sample(std::size_t k) const;
};

/// Raw field values Y^(k)(x_j) of the classical pipeline.
SampleTable classical_field(const SamplerConfig &config);

/// rho applied to classical_field.
SampleTable classical_samples(const SamplerConfig &config);

/// A sampler ready to be placed in a larger circuit.
struct Sampler {
    SampleTable table;
    unsigned m_theta = 8;
    EncoderLayout layout = EncoderLayout::fused;
    std::uint64_t seed = 0;

    unsigned index_qubits() const;
    unsigned sample_qubits() const { return table.m; }

    static Sampler from_config(const SamplerConfig &config);
    /// values[k * n + j] for n points and 2^m samples, n a power of two.
    static Sampler from_table(std::vector<double> values, std::size_t points, unsigned m,
                              unsigned m_theta, EncoderLayout layout, std::uint64_t seed = 0);
};

/// Appends U^(m) acting on |j>_index |k>_sample |0>_flag. The oracle input
/// is j + n k (index qubits low, sample qubits high).
void append_sampler(Circuit &circuit, const Sampler &sampler, const std::vector<unsigned> &index,
                    const std::vector<unsigned> &sample, unsigned flag,
                    const std::vector<unsigned> &angle);

/// Registers flag (1), angle (ancilla layout), index, sample (when m > 0).
Circuit build_sampler(const Sampler &sampler);
Circuit build_sampler(const SamplerConfig &config);

}  // namespace qgrf

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

#include "qgrf/qcircuits/sampler.hpp"

#include <stdexcept>
#include <string>

#include "qgrf/field/field.hpp"
#include "qgrf/qsim/state_vector.hpp"

namespace qgrf {

void SamplerConfig::validate() const {
    if (points.empty()) {
        throw std::invalid_argument("sampler needs at least one point");
    }
    covariance.validate();
    grid.validate();
    if (covariance.dimension != grid.dimension) {
        throw std::invalid_argument("covariance and grid dimensions differ");
    }
    for (const auto &x : points) {
        if (x.size() != static_cast<std::size_t>(grid.dimension)) {
            throw std::invalid_argument("sampler point has the wrong dimension");
        }
    }
    params.validate();
    if (seed & ~params.state_mask()) {
        throw std::invalid_argument("master seed does not fit in the PCG state");
    }
    if (params.state_bits < 64 && m > params.state_bits) {
        throw std::invalid_argument("2^m samples exceed the 2^M derivable seeds");
    }
    if (m > 24) {
        throw std::invalid_argument("sample exponent m is too large");
    }
    AngleRegisterSpec{m_theta}.validate();
    descriptor(0).validate();
}

NoiseBox SamplerConfig::box() const {
    return noise_box ? *noise_box : covering_box(grid, points);
}

NoiseDescriptor SamplerConfig::descriptor(std::uint64_t k) const {
    NoiseDescriptor d;
    d.mode = noise_mode;
    d.params = params;
    d.seed = derive_seed(params, seed, k);
    d.clt_bits = clt_bits;
    d.quantile_bits = quantile_bits;
    return d;
}

std::span<const double> SampleTable::sample(std::size_t k) const {
    return std::span<const double>(values).subspan(k * padded_points, padded_points);
}

SampleTable classical_field(const SamplerConfig &config) {
    config.validate();
    if (config.noise_mode == NoiseMode::os_rng) {
        throw std::invalid_argument("sampler noise must be reproducible");
    }
    const auto kernel = gaussian_kernel(config.covariance);
    const NoiseBox box = config.box();
    const FieldMap map = field_map(kernel, config.grid, box, config.points);
    SampleTable t;
    t.points = config.points.size();
    t.padded_points = std::size_t{1} << index_width(t.points);
    t.m = config.m;
    t.values.assign(t.padded_points * t.samples(), 0.0);
    for (std::size_t k = 0; k < t.samples(); ++k) {
        const auto noise = sample_noise(box, config.descriptor(k));
        const auto y = map.apply(noise.values());
        for (std::size_t j = 0; j < t.points; ++j) {
            t.values[k * t.padded_points + j] = y[j];
        }
    }
    return t;
}

SampleTable classical_samples(const SamplerConfig &config) {
    config.rho.require_encodable();
    SampleTable t = classical_field(config);
    for (std::size_t k = 0; k < t.samples(); ++k) {
        for (std::size_t j = 0; j < t.points; ++j) {
            auto &v = t.values[k * t.padded_points + j];
            v = config.rho(v);
        }
    }
    return t;
}

unsigned Sampler::index_qubits() const {
    return index_width(table.padded_points);
}

Sampler Sampler::from_config(const SamplerConfig &config) {
    Sampler s;
    s.table = classical_samples(config);
    s.m_theta = config.m_theta;
    s.layout = config.layout;
    s.seed = config.seed;
    return s;
}

Sampler Sampler::from_table(std::vector<double> values, std::size_t points, unsigned m,
                            unsigned m_theta, EncoderLayout layout, std::uint64_t seed) {
    if (points == 0 || (points & (points - 1)) != 0) {
        throw std::invalid_argument("sampler table point count must be a power of two");
    }
    if (values.size() != points << m) {
        throw std::invalid_argument("sampler table size must be points * 2^m");
    }
    Sampler s;
    s.table.points = points;
    s.table.padded_points = points == 1 ? 2 : points;
    s.table.m = m;
    if (points == 1) {
        std::vector<double> padded(2 << m, 0.0);
        for (std::size_t k = 0; k < (std::size_t{1} << m); ++k) {
            padded[2 * k] = values[k];
        }
        values = std::move(padded);
    }
    s.table.values = std::move(values);
    s.m_theta = m_theta;
    s.layout = layout;
    s.seed = seed;
    return s;
}

void append_sampler(Circuit &circuit, const Sampler &sampler, const std::vector<unsigned> &index,
                    const std::vector<unsigned> &sample, unsigned flag,
                    const std::vector<unsigned> &angle) {
    if (index.size() != sampler.index_qubits() || sample.size() != sampler.sample_qubits()) {
        throw std::invalid_argument("sampler registers do not match the sample table");
    }
    std::vector<unsigned> input = index;
    input.insert(input.end(), sample.begin(), sample.end());
    append_amplitude_encoder(circuit, input, flag, angle, sampler.table.values, sampler.m_theta,
                             sampler.layout);
}

Circuit build_sampler(const Sampler &sampler) {
    Circuit c;
    const unsigned flag = c.add_register("flag", 1).offset;
    std::vector<unsigned> angle;
    if (sampler.layout == EncoderLayout::ancilla) {
        angle = c.add_register("angle", sampler.m_theta).qubits();
    }
    const auto index = c.add_register("index", sampler.index_qubits()).qubits();
    std::vector<unsigned> sample;
    if (sampler.sample_qubits() > 0) {
        sample = c.add_register("sample", sampler.sample_qubits()).qubits();
    }
    if (c.num_qubits() > max_qubits()) {
        throw std::invalid_argument("sampler needs " + std::to_string(c.num_qubits()) +
                                    " qubits, above the simulator cap");
    }
    append_sampler(c, sampler, index, sample, flag, angle);
    return c;
}

Circuit build_sampler(const SamplerConfig &config) {
    return build_sampler(Sampler::from_config(config));
}

}  // namespace qgrf

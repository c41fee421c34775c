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

#include "qgrf/qcircuits/qoi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qgrf/qsim/state_vector.hpp"

namespace qgrf {

namespace {

constexpr double kWeightTolerance = 1e-12;

void check_power_of_two_fit(const std::vector<unsigned> &qubits, std::size_t n) {
    if (qubits.size() >= 63 || n > (std::size_t{1} << qubits.size())) {
        throw std::invalid_argument("weight vector does not fit the index register");
    }
}

}  // namespace

QoiWeights::QoiWeights(std::vector<double> weights) : q(std::move(weights)) {
    if (q.empty()) {
        throw std::invalid_argument("weight vector must be non-empty");
    }
    double l1 = 0.0;
    for (double v : q) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("weights must be finite");
        }
        l1 += std::abs(v);
    }
    if (std::abs(l1 - 1.0) > kWeightTolerance) {
        throw std::invalid_argument("weights must satisfy |q|_1 = 1, got " + std::to_string(l1));
    }
}

QoiWeights QoiWeights::uniform(std::size_t n) {
    return uniform_range(n, 0, n);
}

QoiWeights QoiWeights::point_mass(std::size_t n, std::size_t j) {
    if (j >= n) {
        throw std::invalid_argument("point mass index out of range");
    }
    std::vector<double> q(n, 0.0);
    q[j] = 1.0;
    return QoiWeights(std::move(q));
}

QoiWeights QoiWeights::uniform_range(std::size_t n, std::size_t begin, std::size_t end) {
    if (begin >= end || end > n) {
        throw std::invalid_argument("uniform weight range is empty or out of bounds");
    }
    std::vector<double> q(n, 0.0);
    for (std::size_t j = begin; j < end; ++j) {
        q[j] = 1.0 / static_cast<double>(end - begin);
    }
    return QoiWeights(std::move(q));
}

std::vector<double> QoiWeights::padded(std::size_t length) const {
    if (length < q.size()) {
        throw std::invalid_argument("cannot pad weights to a shorter length");
    }
    std::vector<double> out(q);
    out.resize(length, 0.0);
    return out;
}

double QoiWeights::apply(std::span<const double> values) const {
    if (values.size() < q.size()) {
        throw std::invalid_argument("too few values for the weight vector");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        total += q[j] * values[j];
    }
    return total;
}

void append_state_prep(Circuit &circuit, const std::vector<unsigned> &qubits,
                       std::span<const double> weights) {
    check_power_of_two_fit(qubits, weights.size());
    const unsigned b = static_cast<unsigned>(qubits.size());
    const std::size_t n = std::size_t{1} << b;
    std::vector<double> w(n, 0.0);
    for (std::size_t j = 0; j < weights.size(); ++j) {
        w[j] = std::abs(weights[j]);
    }
    bool uniform = true;
    for (std::size_t j = 1; j < n; ++j) {
        uniform = uniform && w[j] == w[0];
    }
    if (uniform) {
        for (unsigned q : qubits) {
            circuit.append(Gate::h(q));
        }
        return;
    }
    // Subtree weights for prefixes of each length, most significant bit first.
    for (unsigned level = 0; level < b; ++level) {
        const unsigned target = qubits[b - 1 - level];
        const std::size_t nodes = std::size_t{1} << level;
        const std::size_t span = n >> level;
        std::vector<double> angles(nodes, 0.0);
        std::vector<bool> active(nodes, false);
        for (std::size_t p = 0; p < nodes; ++p) {
            double w0 = 0.0;
            double w1 = 0.0;
            for (std::size_t j = 0; j < span / 2; ++j) {
                w0 += w[p * span + j];
                w1 += w[p * span + span / 2 + j];
            }
            const double total = w0 + w1;
            if (total > 0.0) {
                active[p] = true;
                angles[p] = 2.0 * std::atan2(std::sqrt(w1), std::sqrt(w0));
            }
        }
        bool shared = true;
        double common = 0.0;
        bool seen = false;
        for (std::size_t p = 0; p < nodes; ++p) {
            if (!active[p]) {
                continue;
            }
            if (!seen) {
                common = angles[p];
                seen = true;
            } else if (angles[p] != common) {
                shared = false;
            }
        }
        if (shared) {
            if (common != 0.0) {
                circuit.append(Gate::ry(target, common));
            }
            continue;
        }
        for (std::size_t p = 0; p < nodes; ++p) {
            if (!active[p] || angles[p] == 0.0) {
                continue;
            }
            // Prefix p holds the top `level` bits; its MSB controls qubit b-1.
            std::vector<Control> controls;
            for (unsigned t = 0; t < level; ++t) {
                const bool bit = (p >> (level - 1 - t)) & 1;
                controls.push_back(Control{qubits[b - 1 - t], bit});
            }
            circuit.append(Gate::ry(target, angles[p]).controlled(std::move(controls)));
        }
    }
}

Circuit build_state_prep(const QoiWeights &q) {
    Circuit c;
    const auto index = c.add_register("index", index_width(q.size())).qubits();
    append_state_prep(c, index, q.q);
    return c;
}

void append_phase_flip(Circuit &circuit, const std::vector<unsigned> &qubits,
                       std::span<const double> weights) {
    check_power_of_two_fit(qubits, weights.size());
    std::vector<std::uint64_t> flagged;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (weights[j] < 0.0) {
            flagged.push_back(j);
        }
    }
    if (!flagged.empty()) {
        circuit.append(Gate::phase_oracle(qubits, std::move(flagged)));
    }
}

Circuit build_phase_flip(const QoiWeights &q) {
    Circuit c;
    const auto index = c.add_register("index", index_width(q.size())).qubits();
    append_phase_flip(c, index, q.q);
    return c;
}

Circuit build_mean_circuit(const Sampler &sampler, const QoiWeights &q) {
    return build_moment_circuit({sampler}, {q});
}

Circuit build_moment_circuit(const std::vector<Sampler> &samplers,
                             const std::vector<QoiWeights> &weights) {
    if (samplers.empty() || samplers.size() != weights.size()) {
        throw std::invalid_argument("moment circuit needs one weight vector per sampler");
    }
    const unsigned m = samplers[0].sample_qubits();
    const bool ancilla = samplers[0].layout == EncoderLayout::ancilla;
    unsigned m_theta = samplers[0].m_theta;
    for (const auto &s : samplers) {
        if (s.seed != samplers[0].seed) {
            throw std::invalid_argument("all samplers must share one master seed");
        }
        if (s.sample_qubits() != m) {
            throw std::invalid_argument("all samplers must share the sample register width");
        }
        if ((s.layout == EncoderLayout::ancilla) != ancilla) {
            throw std::invalid_argument("all samplers must use the same encoder layout");
        }
        m_theta = std::max(m_theta, s.m_theta);
    }
    for (std::size_t l = 0; l < samplers.size(); ++l) {
        if (weights[l].size() > samplers[l].table.padded_points) {
            throw std::invalid_argument("weight vector longer than the sampler's point list");
        }
    }
    Circuit c;
    std::vector<unsigned> flags;
    std::vector<std::vector<unsigned>> indices;
    for (std::size_t l = 0; l < samplers.size(); ++l) {
        const std::string tag = samplers.size() == 1 ? "" : std::to_string(l);
        flags.push_back(c.add_register("flag" + tag, 1).offset);
        indices.push_back(c.add_register("index" + tag, samplers[l].index_qubits()).qubits());
    }
    std::vector<unsigned> angle;
    if (ancilla) {
        angle = c.add_register("angle", m_theta).qubits();
    }
    std::vector<unsigned> sample;
    if (m > 0) {
        sample = c.add_register("sample", m).qubits();
    }
    if (c.num_qubits() > max_qubits()) {
        throw std::invalid_argument("moment circuit needs " + std::to_string(c.num_qubits()) +
                                    " qubits, above the simulator cap of " +
                                    std::to_string(max_qubits()));
    }
    for (std::size_t l = 0; l < samplers.size(); ++l) {
        const auto w = weights[l].padded(samplers[l].table.padded_points);
        append_state_prep(c, indices[l], w);
        append_phase_flip(c, indices[l], w);
    }
    for (unsigned q : sample) {
        c.append(Gate::h(q));
    }
    for (std::size_t l = 0; l < samplers.size(); ++l) {
        std::vector<unsigned> a(angle.begin(), angle.begin() + (ancilla ? samplers[l].m_theta : 0));
        append_sampler(c, samplers[l], indices[l], sample, flags[l], a);
    }
    for (std::size_t l = 0; l < samplers.size(); ++l) {
        const auto w = weights[l].padded(samplers[l].table.padded_points);
        Circuit prep;
        prep.add_register("index", samplers[l].index_qubits());
        append_state_prep(prep, prep.reg("index").qubits(), w);
        c.append_mapped(prep.inverse(), indices[l]);
    }
    for (unsigned q : sample) {
        c.append(Gate::h(q));
    }
    return c;
}

namespace {

double moment_impl(const std::vector<Sampler> &samplers, const std::vector<QoiWeights> &weights,
                   bool encoded) {
    if (samplers.empty() || samplers.size() != weights.size()) {
        throw std::invalid_argument("moment needs one weight vector per sampler");
    }
    const std::size_t samples = samplers[0].table.samples();
    double total = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        double product = 1.0;
        for (std::size_t l = 0; l < samplers.size(); ++l) {
            auto row = samplers[l].table.sample(k);
            std::vector<double> values(row.begin(), row.end());
            if (encoded) {
                for (auto &v : values) {
                    v = encoded_value(encode_angle(v, samplers[l].m_theta), samplers[l].m_theta);
                }
            }
            product *= weights[l].apply(values);
        }
        total += product;
    }
    return total / static_cast<double>(samples);
}

}  // namespace

double classical_moment(const std::vector<Sampler> &samplers,
                        const std::vector<QoiWeights> &weights) {
    return moment_impl(samplers, weights, false);
}

double encoded_moment(const std::vector<Sampler> &samplers,
                      const std::vector<QoiWeights> &weights) {
    return moment_impl(samplers, weights, true);
}

}  // namespace qgrf

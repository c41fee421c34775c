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

#include <span>
#include <vector>

#include "qgrf/qcircuits/sampler.hpp"
#include "qgrf/qsim/circuit.hpp"

namespace qgrf {

/// lambda(Z) = sum_j q_j Z(x_j) with |q|_1 = 1.
struct QoiWeights {
    std::vector<double> q;

    explicit QoiWeights(std::vector<double> weights);

    static QoiWeights uniform(std::size_t n);
    static QoiWeights point_mass(std::size_t n, std::size_t j);
    /// Uniform over indices [begin, end) of n points.
    static QoiWeights uniform_range(std::size_t n, std::size_t begin, std::size_t end);

    std::size_t size() const { return q.size(); }
    /// Weights padded with zeros to `length` entries.
    std::vector<double> padded(std::size_t length) const;
    double apply(std::span<const double> values) const;
};

/// Binary RY tree preparing sum_j sqrt|q_j| |j> on `qubits` (LSB first).
/// The most significant qubit is rotated first, each later level is
/// controlled on the prefix above it. Uniform weights use a Hadamard
/// layer; a level whose active nodes share one angle is a single RY.
void append_state_prep(Circuit &circuit, const std::vector<unsigned> &qubits,
                       std::span<const double> weights);
Circuit build_state_prep(const QoiWeights &q);

/// |j> -> sign(q_j) |j>, sign(0) = +1.
void append_phase_flip(Circuit &circuit, const std::vector<unsigned> &qubits,
                       std::span<const double> weights);
Circuit build_phase_flip(const QoiWeights &q);

/// (U_q x H^m)^dag U^(m) (U_{q,+-} U_q x H^m). The all-zeros amplitude is
/// 2^{-m} sum_k lambda(Z^(k)).
Circuit build_mean_circuit(const Sampler &sampler, const QoiWeights &q);

/// s branches (flag_l, index_l) sharing one sample register and, for the
/// ancilla layout, one angle register. The all-zeros amplitude is
/// 2^{-m} sum_k prod_l lambda_l(Z^(k)).
Circuit build_moment_circuit(const std::vector<Sampler> &samplers,
                             const std::vector<QoiWeights> &weights);

/// 2^{-m} sum_k prod_l lambda_l(Z^(k)) computed from the unencoded tables.
double classical_moment(const std::vector<Sampler> &samplers,
                        const std::vector<QoiWeights> &weights);

/// Same with every table value replaced by its encoded amplitude.
double encoded_moment(const std::vector<Sampler> &samplers,
                      const std::vector<QoiWeights> &weights);

}  // namespace qgrf

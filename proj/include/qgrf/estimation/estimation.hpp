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
#include <string>
#include <vector>

#include "qgrf/qcircuits/qoi.hpp"
#include "qgrf/qsim/circuit.hpp"
#include "qgrf/qsim/state_vector.hpp"

namespace qgrf {

/// Smallest m with 2^m >= max(1, ceil(eps^-2 ln(2 / delta))).
unsigned hoeffding_exponent(double eps, double delta);

struct ExactAmplitude {
    double value;
    double magnitude;
};

/// <0|U|0>. Throws std::runtime_error if its imaginary part exceeds 1e-9.
ExactAmplitude exact_amplitude(const Circuit &circuit);
ExactAmplitude exact_amplitude(const StateVector &state);

/// sqrt of the all-zeros frequency over `shots` measurements of all qubits.
double estimate_amplitude_shots(const Circuit &circuit, std::uint64_t shots, std::uint64_t seed);
double estimate_amplitude_shots(const StateVector &state, std::uint64_t shots,
                                std::uint64_t seed);

struct MlaeConfig {
    double eps = 0.01;
    double delta = 0.05;
    std::uint64_t seed = 1;
    /// Shots per power; 0 selects ceil(8 ln(2 / delta)).
    std::uint64_t shots_per_power = 0;
    /// Grover powers; empty selects 0, 1, 2, 4, ..., P with P the smallest
    /// power of two >= 1 / (4 eps).
    std::vector<std::uint64_t> powers;
};

struct MlaeResult {
    double estimate = 0.0;
    /// Applications of U or U^dag: sum over powers of shots * (2p + 1).
    std::uint64_t queries = 0;
    /// (8 ln(2/delta) + 1)(2/eps + log2(1/(4 eps)) + 3).
    double query_bound = 0.0;
    /// Length of the connected interval around the estimate on which the
    /// log-likelihood stays within 0.5 of its maximum.
    double width = 0.0;
    std::vector<std::uint64_t> powers;
    std::vector<std::uint64_t> hits;
    std::uint64_t shots_per_power = 0;
    bool widened = false;
};

std::vector<std::uint64_t> mlae_default_powers(double eps);
double mlae_query_bound(double eps, double delta);

/// log L(a) = sum_p h_p ln sin^2((2p+1) asin a) + (N - h_p) ln cos^2(...).
double mlae_log_likelihood(double a, const std::vector<std::uint64_t> &powers,
                           const std::vector<std::uint64_t> &hits, std::uint64_t shots);

/// Maximizes the likelihood on a grid of step eps / 10 over [0, 1], then
/// refines by golden section around the best grid point.
MlaeResult mlae_fit(const std::vector<std::uint64_t> &powers,
                    const std::vector<std::uint64_t> &hits, std::uint64_t shots, double eps);

/// Maximum-likelihood amplitude estimation of |<0|U|0>| with the Grover
/// operator Q = U R0 U^dag R0, R0 flipping the sign of |0...0>.
MlaeResult estimate_amplitude_mlae(const Circuit &circuit, const MlaeConfig &config);

enum class EstimatorMode { exact, shots, mlae };

const char *estimator_name(EstimatorMode mode);
EstimatorMode parse_estimator(const std::string &name);

struct EstimationConfig {
    double eps = 0.1;
    double delta = 0.05;
    EstimatorMode mode = EstimatorMode::exact;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 1;
    /// Permit m below hoeffding_exponent(eps, delta).
    bool allow_small_m = false;

    void validate() const;
};

struct MomentRequest {
    std::vector<Sampler> samplers;
    std::vector<QoiWeights> weights;
};

struct MomentEstimate {
    std::string mode;
    unsigned s = 0;
    unsigned m = 0;
    unsigned m_theta = 0;
    std::uint64_t shots = 0;
    std::uint64_t queries = 0;
    double estimate = 0.0;
    double bound = 0.0;
    std::uint64_t seed = 0;
    /// Signed all-zeros amplitude of the moment circuit.
    double exact = 0.0;
    unsigned qubits = 0;
};

/// Builds the moment circuit, runs the configured estimator and returns
/// |estimate| with bound sqrt(ln(2/delta) / 2^m) + s pi 2^{-m_theta} plus
/// the estimator tolerance (0 exact, sqrt(sqrt(ln(2/delta) / (2 shots)))
/// for shots, eps for mlae).
MomentEstimate estimate_moment(const MomentRequest &request, const EstimationConfig &config);

std::string estimate_csv_header();
std::string estimate_csv_row(const MomentEstimate &e);

}  // namespace qgrf

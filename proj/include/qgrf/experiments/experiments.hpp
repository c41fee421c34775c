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
#include <string>
#include <vector>

#include "qgrf/estimation/estimation.hpp"
#include "qgrf/field/kernel.hpp"
#include "qgrf/field/noise.hpp"
#include "qgrf/prng/pcg.hpp"

namespace qgrf {

/// Centered max-norm field h^{d/2} sum_j f(x, j h) W_j of a separable
/// Gaussian kernel on the product lattice coords^d (first axis slowest).
/// The noise box must cover every window.
std::vector<double> lattice_field(const GaussianForm &form, double spacing, double radius,
                                  const WhiteNoiseGrid &noise, std::span<const double> coords,
                                  int dimension);

// ---------------------------------------------------------------------------
// Truncation-radius convergence.

struct ConvergeConfig {
    double xi = 0.075;
    double variance = 1.0;
    double fine_h = 1.0 / 120.0;
    std::vector<int> levels{4, 6, 8, 12};
    unsigned samples = 30;
    std::uint64_t seed = 1;
    int dimension = 2;
    double domain_lo = -5.0;
    double domain_hi = 6.0;
    std::size_t noise_cap = kDefaultNoiseCap;

    void validate() const;
};

struct ConvergePoint {
    int ell = 1;
    double coarse_h = 0.0;
    double radius = 0.0;
    double mean_error = 0.0;
    double std_error = 0.0;
};

/// For each level l: coarse radius r = 2 xi^2 pi / (l h)^2, coarse noise by
/// sinc coarsening of the fine noise, and the realization-mean of the sup
/// error over the fine lattice points of [0, 1]^d.
std::vector<ConvergePoint> run_converge(const ConvergeConfig &config);

/// Least-squares slope of log(mean_error) against r.
double log_error_slope(const std::vector<ConvergePoint> &points);

// ---------------------------------------------------------------------------
// Single field realization on a raster.

struct FieldSampleConfig {
    double xi = 0.07;
    double variance = 4.0;
    double radius = 8.0;
    /// 0 selects xi sqrt(2 pi / r).
    double grid_h = 0.0;
    NormKind norm = NormKind::max;
    unsigned resolution = 128;
    std::uint64_t seed = 1;
    /// none, cos, or sigmoid (scaled by sigmoid_scale).
    std::string transform = "sigmoid";
    double sigmoid_scale = 11.0;

    void validate() const;
    double h() const;
};

struct FieldSample {
    std::vector<std::vector<double>> points;
    std::vector<double> field;
    std::vector<double> transformed;
};

FieldSample run_field_sample(const FieldSampleConfig &config);

// ---------------------------------------------------------------------------
// The quantum experiments on the n x n grid of [0, 1]^2.

struct QuantumGridConfig {
    unsigned grid_n = 16;
    double xi2 = 1.0 / 8.0;
    double variance = 1.0;
    double radius = 4.0;
    unsigned clt_bits = 4;
    PcgParams params = PcgParams::small(6);
    std::uint64_t seed = 7;
    unsigned m = 5;
    unsigned m_theta = 8;
    EncoderLayout layout = EncoderLayout::fused;

    void validate() const;
    /// Points (ix / n, iy / n) with index j = ix n + iy.
    std::vector<std::vector<double>> points() const;
    SamplerConfig sampler_config() const;
};

struct QuantumFieldResult {
    std::vector<double> quantum;
    std::vector<double> classical;
    double max_abs_diff = 0.0;
    unsigned qubits = 0;
};

/// m = 0 sampler run on a uniform superposition of the index register; the
/// flag-0 amplitudes times sqrt(n^2) are the realization values.
QuantumFieldResult run_quantum_field(QuantumGridConfig config);

struct CovarianceConfig {
    QuantumGridConfig grid;
    EstimationConfig estimation;
    std::uint64_t reference_samples = 1000000;
    std::uint64_t reference_seed = 2024;
    PcgParams reference_params = PcgParams::pcg32();
};

struct ReferenceMoments {
    std::uint64_t samples = 0;
    double mean_left = 0.0;
    double mean_right = 0.0;
    /// E[Z_left Z_right] and its Monte-Carlo standard error.
    double moment = 0.0;
    double moment_stderr = 0.0;
    double covariance = 0.0;
};

/// Classical Monte Carlo of Z_left, Z_right with CLT noise from the
/// reference generator.
ReferenceMoments covariance_reference(const CovarianceConfig &config);

struct CovarianceReport {
    MomentEstimate moment;
    double exact_moment = 0.0;
    double classical_moment = 0.0;
    double encoded_moment = 0.0;
    double mean_left = 0.0;
    double mean_right = 0.0;
    double covariance = 0.0;
    std::optional<ReferenceMoments> reference;
};

/// E[Z_left Z_right] from the s = 2 moment circuit, E[Z_left] and E[Z_right]
/// from s = 1 circuits, and optionally the classical reference.
CovarianceReport run_covariance(const CovarianceConfig &config, bool with_reference = true);

// ---------------------------------------------------------------------------
// PCG tables.

/// Bit t * w + b of the stream is bit b of word t, for t < 2^M.
std::vector<int> pcg_bit_table(const PcgParams &params, std::uint64_t seed);

struct PcgVerification {
    std::uint64_t seeds = 0;
    std::uint64_t matches = 0;
    std::optional<std::uint64_t> first_mismatch;
};

/// Runs build_quantum_pcg on every basis seed and compares state and word
/// registers with the classical generator.
PcgVerification verify_quantum_pcg(const PcgParams &params);

// ---------------------------------------------------------------------------
// E[cos Y(x)] through the s = 1 pipeline.

struct CosMomentConfig {
    double xi2 = 1.0 / 8.0;
    double variance = 1.0;
    double radius = 4.0;
    std::vector<double> x{0.5, 0.5};
    unsigned m = 10;
    unsigned m_theta = 12;
    std::uint64_t seed = 11;
    PcgParams params = PcgParams::pcg32();
};

struct CosMomentResult {
    double sigma2 = 0.0;
    double target = 0.0;
    double estimate = 0.0;
    double classical_mean = 0.0;
    double classical_stderr = 0.0;
};

CosMomentResult run_cos_moment(const CosMomentConfig &config);

}  // namespace qgrf

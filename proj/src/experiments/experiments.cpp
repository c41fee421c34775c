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

#include "qgrf/experiments/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qgrf/field/field.hpp"
#include "qgrf/field/grid.hpp"
#include "qgrf/field/transform.hpp"
#include "qgrf/qcircuits/quantum_pcg.hpp"
#include "qgrf/qsim/simulator.hpp"

namespace qgrf {

namespace {

/// Banded rows: weight of site lo + begin + t for coordinate i.
struct Band {
    std::size_t begin = 0;
    std::vector<double> weights;
};

std::vector<Band> axis_bands(const GaussianForm &form, double spacing, std::int64_t reach,
                             std::int64_t lo, std::int64_t hi, std::span<const double> coords) {
    std::vector<Band> bands;
    bands.reserve(coords.size());
    for (double x : coords) {
        const std::int64_t c = snapped_floor(x / spacing);
        if (c - reach < lo || c + reach > hi) {
            throw std::out_of_range("noise box does not cover the field window");
        }
        Band b;
        b.begin = static_cast<std::size_t>(c - reach - lo);
        for (std::int64_t j = c - reach; j <= c + reach; ++j) {
            b.weights.push_back(form.factor(x - static_cast<double>(j) * spacing));
        }
        bands.push_back(std::move(b));
    }
    return bands;
}

double sup_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

CovarianceSpec grid_covariance(const QuantumGridConfig &g) {
    CovarianceSpec cov;
    cov.variance = g.variance;
    cov.correlation_length = std::sqrt(g.xi2);
    cov.dimension = 2;
    return cov;
}

GridSpec grid_spec(double xi, double radius, int dimension) {
    GridSpec grid;
    grid.radius = radius;
    grid.h = xi * std::sqrt(2.0 * std::numbers::pi / radius);
    grid.norm = NormKind::max;
    grid.dimension = dimension;
    grid.centering = Centering::centered_at_x;
    return grid;
}

}  // namespace

std::vector<double> lattice_field(const GaussianForm &form, double spacing, double radius,
                                  const WhiteNoiseGrid &noise, std::span<const double> coords,
                                  int dimension) {
    const NoiseBox &box = noise.box();
    if (box.dimension() != dimension) {
        throw std::invalid_argument("noise dimension does not match the lattice");
    }
    const auto reach = static_cast<std::int64_t>(std::floor(radius + 1e-12));
    std::vector<double> cur(noise.values().begin(), noise.values().end());
    std::vector<std::size_t> shape(dimension);
    for (int k = 0; k < dimension; ++k) {
        shape[k] = static_cast<std::size_t>(box.extent(k));
    }
    const std::size_t nout = coords.size();
    for (int axis = 0; axis < dimension; ++axis) {
        const auto bands = axis_bands(form, spacing, reach, box.lo[axis], box.hi[axis], coords);
        std::size_t outer = 1;
        for (int k = 0; k < axis; ++k) {
            outer *= shape[k];
        }
        std::size_t inner = 1;
        for (int k = axis + 1; k < dimension; ++k) {
            inner *= shape[k];
        }
        const std::size_t nin = shape[axis];
        std::vector<double> next(outer * nout * inner, 0.0);
        for (std::size_t o = 0; o < outer; ++o) {
            const double *src = cur.data() + o * nin * inner;
            double *dst = next.data() + o * nout * inner;
            for (std::size_t i = 0; i < nout; ++i) {
                double *row = dst + i * inner;
                const Band &b = bands[i];
                for (std::size_t t = 0; t < b.weights.size(); ++t) {
                    const double w = b.weights[t];
                    if (w == 0.0) {
                        continue;
                    }
                    const double *in = src + (b.begin + t) * inner;
                    for (std::size_t q = 0; q < inner; ++q) {
                        row[q] += w * in[q];
                    }
                }
            }
        }
        cur.swap(next);
        shape[axis] = nout;
    }
    const double scale = form.amplitude * std::pow(spacing, 0.5 * dimension);
    for (auto &v : cur) {
        v *= scale;
    }
    return cur;
}

void ConvergeConfig::validate() const {
    if (!(xi > 0.0) || !(variance > 0.0) || !(fine_h > 0.0)) {
        throw std::invalid_argument("xi, variance and grid size must be positive");
    }
    if (levels.empty() || samples < 1) {
        throw std::invalid_argument("need at least one level and one sample");
    }
    for (int l : levels) {
        if (l < 1) {
            throw std::invalid_argument("coarsening levels must be positive integers");
        }
    }
    if (dimension < 1 || dimension > 3) {
        throw std::invalid_argument("convergence study supports dimensions 1..3");
    }
    if (!(domain_lo <= 0.0 && domain_hi >= 1.0)) {
        throw std::invalid_argument("oversampling domain must contain [0, 1]");
    }
}

std::vector<ConvergePoint> run_converge(const ConvergeConfig &config) {
    config.validate();
    const double h = config.fine_h;
    const int d = config.dimension;
    const auto n_fine = static_cast<std::int64_t>(std::llround(1.0 / h));
    const auto lo = static_cast<std::int64_t>(std::ceil(config.domain_lo / h - 1e-9));
    const auto hi = static_cast<std::int64_t>(std::floor(config.domain_hi / h + 1e-9));
    const NoiseBox fine_box = NoiseBox::cube(d, lo, hi);
    double sites = 1.0;
    for (int k = 0; k < d; ++k) {
        sites *= static_cast<double>(hi - lo + 1);
    }
    if (sites > static_cast<double>(config.noise_cap)) {
        throw std::invalid_argument("fine noise grid of " + std::to_string(sites) +
                                    " sites exceeds the memory cap; use a coarser --grid-h");
    }
    CovarianceSpec cov;
    cov.variance = config.variance;
    cov.correlation_length = config.xi;
    cov.dimension = d;
    const GaussianForm form = *gaussian_kernel(cov).gaussian_form();

    std::vector<double> coords(static_cast<std::size_t>(n_fine + 1));
    for (std::int64_t i = 0; i <= n_fine; ++i) {
        coords[static_cast<std::size_t>(i)] = static_cast<double>(i) * h;
    }
    // The reference keeps every index within 5 / h; the kernel underflows
    // to zero well before that radius.
    const double ref_radius = std::floor(std::min(-config.domain_lo, config.domain_hi - 1.0) / h);

    const std::size_t nl = config.levels.size();
    std::vector<double> sum(nl, 0.0);
    std::vector<double> sum2(nl, 0.0);
    std::vector<ConvergePoint> out(nl);
    for (std::size_t li = 0; li < nl; ++li) {
        const int ell = config.levels[li];
        out[li].ell = ell;
        out[li].coarse_h = ell * h;
        out[li].radius = 2.0 * config.xi * config.xi * std::numbers::pi / (out[li].coarse_h * out[li].coarse_h);
    }
    const PcgParams params = PcgParams::pcg32();
    for (unsigned s = 0; s < config.samples; ++s) {
        const auto noise =
            sample_noise(fine_box, NoiseDescriptor::pcg(derive_seed(params, config.seed, s), params),
                         config.noise_cap);
        const auto reference = lattice_field(form, h, ref_radius, noise, coords, d);
        for (std::size_t li = 0; li < nl; ++li) {
            const double H = out[li].coarse_h;
            const auto reach = static_cast<std::int64_t>(std::floor(out[li].radius + 1e-12));
            const auto top = snapped_floor(1.0 / H);
            const NoiseBox coarse_box = NoiseBox::cube(d, -reach, top + reach);
            if (out[li].ell == 1 &&
                !(fine_box.contains(coarse_box.lo) && fine_box.contains(coarse_box.hi))) {
                throw std::invalid_argument("coarse window exceeds the oversampling domain");
            }
            const auto coarse = coarsen_noise(noise, out[li].ell, coarse_box);
            const auto approx = lattice_field(form, H, out[li].radius, coarse, coords, d);
            const double err = sup_diff(reference, approx);
            sum[li] += err;
            sum2[li] += err * err;
        }
    }
    const double n = config.samples;
    for (std::size_t li = 0; li < nl; ++li) {
        out[li].mean_error = sum[li] / n;
        const double var = n > 1 ? std::max(0.0, (sum2[li] - sum[li] * sum[li] / n) / (n - 1)) : 0.0;
        out[li].std_error = std::sqrt(var / n);
    }
    return out;
}

double log_error_slope(const std::vector<ConvergePoint> &points) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (const auto &p : points) {
        if (!(p.mean_error > 0.0)) {
            continue;
        }
        const double y = std::log(p.mean_error);
        sx += p.radius;
        sy += y;
        sxx += p.radius * p.radius;
        sxy += p.radius * y;
        ++n;
    }
    if (n < 2) {
        throw std::invalid_argument("slope needs at least two positive errors");
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) {
        throw std::invalid_argument("slope needs at least two distinct radii");
    }
    return (n * sxy - sx * sy) / denom;
}

void FieldSampleConfig::validate() const {
    if (!(variance > 0.0)) {
        throw std::invalid_argument("variance must be positive");
    }
    if (!(xi > 0.0) || !(radius > 0.0) || grid_h < 0.0) {
        throw std::invalid_argument("xi and radius must be positive");
    }
    if (resolution < 1 || resolution > 4096) {
        throw std::invalid_argument("resolution must be in [1, 4096]");
    }
    if (transform != "none" && transform != "cos" && transform != "sigmoid") {
        throw std::invalid_argument("transform must be none, cos or sigmoid");
    }
    if (!(sigmoid_scale > 0.0)) {
        throw std::invalid_argument("sigmoid scale must be positive");
    }
}

double FieldSampleConfig::h() const {
    return grid_h > 0.0 ? grid_h : xi * std::sqrt(2.0 * std::numbers::pi / radius);
}

FieldSample run_field_sample(const FieldSampleConfig &config) {
    config.validate();
    CovarianceSpec cov;
    cov.variance = config.variance;
    cov.correlation_length = config.xi;
    cov.dimension = 2;
    const auto kernel = gaussian_kernel(cov);
    GridSpec grid;
    grid.h = config.h();
    grid.radius = config.radius;
    grid.norm = config.norm;
    grid.dimension = 2;
    grid.centering = Centering::centered_at_x;
    FieldSample out;
    const unsigned n = config.resolution;
    for (unsigned iy = 0; iy < n; ++iy) {
        for (unsigned ix = 0; ix < n; ++ix) {
            out.points.push_back({(ix + 0.5) / n, (iy + 0.5) / n});
        }
    }
    const auto noise =
        sample_noise(grid, out.points, NoiseDescriptor::pcg(config.seed, PcgParams::pcg32()));
    Transformation rho = Transformation::identity();
    if (config.transform == "cos") {
        rho = Transformation::cosine();
    } else if (config.transform == "sigmoid") {
        rho = Transformation::sigmoid(config.sigmoid_scale);
    }
    for (const auto &x : out.points) {
        const double y = evaluate_field(kernel, grid, noise, x);
        out.field.push_back(y);
        out.transformed.push_back(rho(y));
    }
    return out;
}

void QuantumGridConfig::validate() const {
    if (grid_n < 1 || grid_n > 64) {
        throw std::invalid_argument("grid_n must be in [1, 64]");
    }
    if (!(xi2 > 0.0) || !(variance > 0.0) || !(radius > 0.0)) {
        throw std::invalid_argument("xi^2, variance and radius must be positive");
    }
    params.validate();
}

std::vector<std::vector<double>> QuantumGridConfig::points() const {
    std::vector<std::vector<double>> pts;
    for (unsigned ix = 0; ix < grid_n; ++ix) {
        for (unsigned iy = 0; iy < grid_n; ++iy) {
            pts.push_back({static_cast<double>(ix) / grid_n, static_cast<double>(iy) / grid_n});
        }
    }
    return pts;
}

SamplerConfig QuantumGridConfig::sampler_config() const {
    validate();
    SamplerConfig c;
    c.points = points();
    c.covariance = grid_covariance(*this);
    c.grid = grid_spec(c.covariance.correlation_length, radius, 2);
    c.rho = Transformation::cosine();
    c.noise_mode = NoiseMode::clt_bits;
    c.clt_bits = clt_bits;
    c.params = params;
    c.seed = seed;
    c.m = m;
    c.m_theta = m_theta;
    c.layout = layout;
    return c;
}

QuantumFieldResult run_quantum_field(QuantumGridConfig config) {
    config.m = 0;
    const auto sampler = Sampler::from_config(config.sampler_config());
    Circuit circuit = build_sampler(sampler);
    const auto index = circuit.reg("index").qubits();
    StateVector state(circuit.num_qubits());
    for (unsigned q : index) {
        apply_gate(Gate::h(q), state);
    }
    run_in_place(circuit, state);
    QuantumFieldResult r;
    r.qubits = circuit.num_qubits();
    const std::size_t n = sampler.table.points;
    const double scale = std::sqrt(static_cast<double>(std::size_t{1} << index.size()));
    for (std::size_t j = 0; j < n; ++j) {
        // Flag qubit 0, index register holding j.
        std::uint64_t basis = 0;
        for (std::size_t b = 0; b < index.size(); ++b) {
            basis |= ((j >> b) & 1) << index[b];
        }
        r.quantum.push_back(scale * amplitude(state, basis).real());
        r.classical.push_back(sampler.table(j, 0));
        r.max_abs_diff = std::max(r.max_abs_diff, std::abs(r.quantum.back() - r.classical.back()));
    }
    return r;
}

ReferenceMoments covariance_reference(const CovarianceConfig &config) {
    SamplerConfig sc = config.grid.sampler_config();
    const auto kernel = gaussian_kernel(sc.covariance);
    const NoiseBox box = sc.box();
    const FieldMap map = field_map(kernel, sc.grid, box, sc.points);
    const std::size_t rows = map.rows;
    const std::size_t cols = map.cols;
    // Column-major copy so that each noise value is one contiguous axpy.
    std::vector<double> columns(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t p = 0; p < cols; ++p) {
            columns[p * rows + i] = map.coefficients[i * cols + p];
        }
    }
    const std::size_t half = rows / 2;
    const PcgParams &rp = config.reference_params;
    std::vector<double> y(rows);
    double sl = 0, sr = 0, slr = 0, slr2 = 0;
    for (std::uint64_t t = 0; t < config.reference_samples; ++t) {
        std::fill(y.begin(), y.end(), 0.0);
        PcgBitStream stream(rp, derive_seed(rp, config.reference_seed & rp.state_mask(), t));
        for (std::size_t p = 0; p < cols; ++p) {
            const double w = clt_value(stream.next_bits(sc.clt_bits), sc.clt_bits);
            const double *col = columns.data() + p * rows;
            for (std::size_t i = 0; i < rows; ++i) {
                y[i] += w * col[i];
            }
        }
        double left = 0, right = 0;
        for (std::size_t i = 0; i < half; ++i) {
            left += std::cos(y[i]);
        }
        for (std::size_t i = half; i < rows; ++i) {
            right += std::cos(y[i]);
        }
        left /= static_cast<double>(half);
        right /= static_cast<double>(rows - half);
        sl += left;
        sr += right;
        slr += left * right;
        slr2 += left * right * left * right;
    }
    ReferenceMoments r;
    const double n = static_cast<double>(config.reference_samples);
    r.samples = config.reference_samples;
    r.mean_left = sl / n;
    r.mean_right = sr / n;
    r.moment = slr / n;
    r.moment_stderr = n > 1 ? std::sqrt(std::max(0.0, (slr2 / n - r.moment * r.moment)) / (n - 1)) : 0.0;
    r.covariance = r.moment - r.mean_left * r.mean_right;
    return r;
}

CovarianceReport run_covariance(const CovarianceConfig &config, bool with_reference) {
    const SamplerConfig sc = config.grid.sampler_config();
    const auto sampler = Sampler::from_config(sc);
    const std::size_t n = sampler.table.points;
    const auto left = QoiWeights::uniform_range(n, 0, n / 2);
    const auto right = QoiWeights::uniform_range(n, n / 2, n);
    EstimationConfig est = config.estimation;
    est.allow_small_m = true;

    CovarianceReport report;
    report.moment = estimate_moment(MomentRequest{{sampler, sampler}, {left, right}}, est);
    report.exact_moment = report.moment.exact;
    report.classical_moment = classical_moment({sampler, sampler}, {left, right});
    report.encoded_moment = encoded_moment({sampler, sampler}, {left, right});

    EstimationConfig exact = est;
    exact.mode = EstimatorMode::exact;
    report.mean_left = estimate_moment(MomentRequest{{sampler}, {left}}, exact).exact;
    report.mean_right = estimate_moment(MomentRequest{{sampler}, {right}}, exact).exact;
    report.covariance = report.exact_moment - report.mean_left * report.mean_right;
    if (with_reference && config.reference_samples > 0) {
        report.reference = covariance_reference(config);
    }
    return report;
}

std::vector<int> pcg_bit_table(const PcgParams &params, std::uint64_t seed) {
    params.validate();
    if (params.state_bits > 16) {
        throw std::invalid_argument("bit tables are limited to 16 state bits");
    }
    const std::uint64_t total = params.output_bits * (std::uint64_t{1} << params.state_bits);
    PcgBitStream stream(params, seed);
    std::vector<int> bits(total);
    for (auto &b : bits) {
        b = stream.next_bit();
    }
    return bits;
}

PcgVerification verify_quantum_pcg(const PcgParams &params) {
    const Circuit circuit = build_quantum_pcg(params);
    const unsigned M = params.state_bits;
    PcgVerification v;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << M); ++s) {
        const StateVector out = run(circuit, StateVector::basis(circuit.num_qubits(), s));
        const std::uint64_t expected = pcg_step(params, s) | (pcg_word(params, s, 1) << M);
        ++v.seeds;
        if (std::abs(out[expected] - Amplitude{1.0, 0.0}) < 1e-12) {
            ++v.matches;
        } else if (!v.first_mismatch) {
            v.first_mismatch = s;
        }
    }
    return v;
}

CosMomentResult run_cos_moment(const CosMomentConfig &config) {
    SamplerConfig sc;
    sc.points = {config.x};
    sc.covariance.variance = config.variance;
    sc.covariance.correlation_length = std::sqrt(config.xi2);
    sc.covariance.dimension = static_cast<int>(config.x.size());
    sc.grid = grid_spec(sc.covariance.correlation_length, config.radius, sc.covariance.dimension);
    sc.rho = Transformation::cosine();
    sc.noise_mode = NoiseMode::pcg;
    sc.params = config.params;
    sc.seed = config.seed;
    sc.m = config.m;
    sc.m_theta = config.m_theta;
    sc.layout = EncoderLayout::fused;
    const auto sampler = Sampler::from_config(sc);

    CosMomentResult r;
    const auto kernel = gaussian_kernel(sc.covariance);
    r.sigma2 = discrete_covariance(kernel, sc.grid, config.x, config.x);
    r.target = std::exp(-0.5 * r.sigma2);
    EstimationConfig est;
    est.mode = EstimatorMode::exact;
    est.allow_small_m = true;
    r.estimate = estimate_moment(MomentRequest{{sampler}, {QoiWeights::point_mass(1, 0)}}, est).estimate;
    const std::size_t n = sampler.table.samples();
    double s = 0, s2 = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double v = sampler.table(0, k);
        s += v;
        s2 += v * v;
    }
    r.classical_mean = s / n;
    const double var = (s2 - s * s / n) / (n - 1);
    r.classical_stderr = std::sqrt(std::max(0.0, var) / n);
    return r;
}

}  // namespace qgrf

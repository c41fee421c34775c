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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgrf/experiments/experiments.hpp"
#include "qgrf/field/export.hpp"

namespace fs = std::filesystem;

namespace {

using qgrf::format_double;

std::ofstream open_output(const fs::path &dir, const std::string &name) {
    fs::create_directories(dir);
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + (dir / name).string());
    }
    return out;
}

void write_values_csv(const fs::path &dir, const std::string &name,
                      const std::vector<std::vector<double>> &points,
                      const std::vector<double> &values, const std::string &params) {
    auto out = open_output(dir, name);
    qgrf::write_field_csv(out, points, values, params);
}

void write_values_pgm(const fs::path &dir, const std::string &name, std::size_t n,
                      const std::vector<double> &values, double lo, double hi) {
    auto out = open_output(dir, name);
    qgrf::write_pgm(out, n, n, values, lo, hi);
}

qgrf::NormKind parse_norm(const std::string &s) {
    if (s == "max") {
        return qgrf::NormKind::max;
    }
    if (s == "euclidean") {
        return qgrf::NormKind::euclidean;
    }
    throw std::invalid_argument("unknown norm '" + s + "'");
}

/// Row-major image (row = y) of values indexed j = ix n + iy.
std::vector<double> column_major_image(const std::vector<double> &values, std::size_t n) {
    std::vector<double> img(n * n);
    for (std::size_t ix = 0; ix < n; ++ix) {
        for (std::size_t iy = 0; iy < n; ++iy) {
            img[iy * n + ix] = values[ix * n + iy];
        }
    }
    return img;
}

int cmd_field(const qgrf::FieldSampleConfig &cfg, const std::string &norm, const fs::path &out) {
    qgrf::FieldSampleConfig c = cfg;
    c.norm = parse_norm(norm);
    std::ostringstream params;
    params << "xi=" << format_double(c.xi) << " variance=" << format_double(c.variance)
           << " radius=" << format_double(c.radius) << " grid_h=" << format_double(c.h())
           << " norm=" << norm << " resolution=" << c.resolution << " seed=" << c.seed
           << " transform=" << c.transform << " sigmoid_scale=" << format_double(c.sigmoid_scale);
    const auto sample = qgrf::run_field_sample(c);
    write_values_csv(out, "field.csv", sample.points, sample.field, params.str());
    write_values_csv(out, "field_transformed.csv", sample.points, sample.transformed, params.str());
    const double span = 3.0 * std::sqrt(c.variance);
    write_values_pgm(out, "field.pgm", c.resolution, sample.field, -span, span);
    double lo = -1.0, hi = 1.0;
    if (c.transform == "sigmoid") {
        lo = 0.0;
        hi = c.sigmoid_scale;
    } else if (c.transform == "none") {
        lo = -span;
        hi = span;
    }
    write_values_pgm(out, "field_transformed.pgm", c.resolution, sample.transformed, lo, hi);
    double ymin = sample.field[0], ymax = sample.field[0];
    for (double v : sample.field) {
        ymin = std::min(ymin, v);
        ymax = std::max(ymax, v);
    }
    std::cout << "field range [" << format_double(ymin) << ", " << format_double(ymax) << "]\n";
    return 0;
}

int cmd_converge(const qgrf::ConvergeConfig &c, const fs::path &out) {
    std::ostringstream params;
    params << "xi=" << format_double(c.xi) << " variance=" << format_double(c.variance)
           << " grid_h=" << format_double(c.fine_h) << " samples=" << c.samples
           << " seed=" << c.seed << " dimension=" << c.dimension << " levels=";
    for (std::size_t i = 0; i < c.levels.size(); ++i) {
        params << (i ? ";" : "") << c.levels[i];
    }
    const auto points = qgrf::run_converge(c);
    auto csv = open_output(out, "converge.csv");
    csv << "# params: " << params.str() << '\n';
    csv << "ell,coarse_h,r,mean_sup_error,std_error\n";
    for (const auto &p : points) {
        csv << p.ell << ',' << format_double(p.coarse_h) << ',' << format_double(p.radius) << ','
            << format_double(p.mean_error) << ',' << format_double(p.std_error) << '\n';
        std::cout << "ell=" << p.ell << " r=" << format_double(p.radius)
                  << " mean_sup_error=" << format_double(p.mean_error) << '\n';
    }
    try {
        std::cout << "log-error slope " << format_double(qgrf::log_error_slope(points)) << '\n';
    } catch (const std::invalid_argument &) {
    }
    return 0;
}

int cmd_pcg(unsigned state_bits, std::uint64_t seed, bool verify, const fs::path &out) {
    if (state_bits > 8) {
        throw std::invalid_argument("pcg supports at most 8 state bits");
    }
    const qgrf::PcgParams params = qgrf::PcgParams::small(state_bits);
    if (seed & ~params.state_mask()) {
        throw std::invalid_argument("seed does not fit in the state");
    }
    const auto bits = qgrf::pcg_bit_table(params, seed);
    auto csv = open_output(out, "pcg_table.csv");
    csv << "# params: state_bits=" << params.state_bits << " multiplier=" << params.multiplier
        << " increment=" << params.increment << " output_bits=" << params.output_bits
        << " xorshift=" << params.xorshift << " rotation_bits=" << params.rotation_bits
        << " seed=" << seed << '\n';
    csv << "step,word_bits\n";
    const unsigned w = params.output_bits;
    for (std::size_t t = 0; t * w < bits.size(); ++t) {
        csv << t << ',';
        for (unsigned b = 0; b < w; ++b) {
            csv << bits[t * w + b];
        }
        csv << '\n';
    }
    std::size_t width = 1;
    while (width * width < bits.size()) {
        width *= 2;
    }
    const std::size_t height = (bits.size() + width - 1) / width;
    std::vector<double> img(width * height, 0.0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        img[i] = bits[i];
    }
    auto pgm = open_output(out, "pcg_bits.pgm");
    qgrf::write_pgm(pgm, width, height, img, 0.0, 1.0);
    std::cout << bits.size() << " bits written\n";
    if (verify) {
        const auto v = qgrf::verify_quantum_pcg(params);
        std::cout << v.matches << '/' << v.seeds << " seeds match\n";
        if (v.first_mismatch) {
            std::cout << "first mismatch at seed " << *v.first_mismatch << '\n';
            return 1;
        }
    }
    return 0;
}

std::string grid_params(const qgrf::QuantumGridConfig &g) {
    std::ostringstream p;
    p << "grid_n=" << g.grid_n << " xi2=" << format_double(g.xi2)
      << " variance=" << format_double(g.variance) << " radius=" << format_double(g.radius)
      << " clt_bits=" << g.clt_bits << " state_bits=" << g.params.state_bits << " seed=" << g.seed
      << " m=" << g.m << " m_theta=" << g.m_theta;
    return p.str();
}

int cmd_quantum_field(const qgrf::QuantumGridConfig &g, const fs::path &out) {
    qgrf::QuantumGridConfig c = g;
    c.m = 0;
    const auto r = qgrf::run_quantum_field(c);
    const auto points = c.points();
    write_values_csv(out, "quantum_field.csv", points, r.quantum, grid_params(c));
    write_values_csv(out, "classical_field.csv", points, r.classical, grid_params(c));
    write_values_pgm(out, "quantum_field.pgm", c.grid_n, column_major_image(r.quantum, c.grid_n),
                     -1.0, 1.0);
    write_values_pgm(out, "classical_field.pgm", c.grid_n,
                     column_major_image(r.classical, c.grid_n), -1.0, 1.0);
    const double tol = std::numbers::pi * std::ldexp(1.0, -static_cast<int>(c.m_theta));
    std::cout << "qubits " << r.qubits << "\nmax |quantum - classical| "
              << format_double(r.max_abs_diff) << " (bound " << format_double(tol) << ")\n";
    return r.max_abs_diff <= tol ? 0 : 1;
}

int cmd_covariance(const qgrf::CovarianceConfig &c, const fs::path &out) {
    const auto r = qgrf::run_covariance(c, c.reference_samples > 0);
    const double tol = std::numbers::pi * std::ldexp(1.0, -static_cast<int>(c.grid.m_theta));
    std::ostringstream params;
    params << grid_params(c.grid) << " mode=" << qgrf::estimator_name(c.estimation.mode)
           << " shots=" << c.estimation.shots << " eps=" << format_double(c.estimation.eps)
           << " delta=" << format_double(c.estimation.delta)
           << " ref_samples=" << c.reference_samples << " ref_seed=" << c.reference_seed;
    auto csv = open_output(out, "covariance.csv");
    csv << "# params: " << params.str() << '\n'
        << qgrf::estimate_csv_header() << '\n'
        << qgrf::estimate_csv_row(r.moment) << '\n';
    auto rep = open_output(out, "covariance_report.csv");
    rep << "# params: " << params.str() << '\n' << "quantity,value\n";
    auto row = [&](const std::string &k, double v) {
        rep << k << ',' << format_double(v) << '\n';
        std::cout << k << ' ' << format_double(v) << '\n';
    };
    row("moment_estimate", r.moment.estimate);
    row("moment_exact_amplitude", r.exact_moment);
    row("moment_classical_same_seed", r.classical_moment);
    row("moment_encoded_same_seed", r.encoded_moment);
    row("mean_left", r.mean_left);
    row("mean_right", r.mean_right);
    row("covariance", r.covariance);
    row("bound", r.moment.bound);
    if (r.reference) {
        row("reference_moment", r.reference->moment);
        row("reference_moment_stderr", r.reference->moment_stderr);
        row("reference_mean_left", r.reference->mean_left);
        row("reference_mean_right", r.reference->mean_right);
        row("reference_covariance", r.reference->covariance);
    }
    const bool encoded_ok = std::abs(r.exact_moment - r.encoded_moment) <= 1e-9;
    const bool classical_ok = std::abs(r.exact_moment - r.classical_moment) <= 2.0 * tol + 1e-9;
    return encoded_ok && classical_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Transformed Gaussian random fields on a statevector simulator"};
    app.require_subcommand(1);
    std::string out_dir = ".";

    qgrf::FieldSampleConfig field_cfg;
    std::string field_norm = "max";
    auto *field = app.add_subcommand("field", "Sample one field realization on a raster");
    field->add_option("--xi", field_cfg.xi, "Correlation length");
    field->add_option("--variance", field_cfg.variance, "Variance C");
    field->add_option("--grid-h", field_cfg.grid_h, "Grid size (0: xi sqrt(2 pi / r))");
    field->add_option("--radius", field_cfg.radius, "Truncation radius");
    field->add_option("--norm", field_norm, "Truncation norm")->check(CLI::IsMember({"max", "euclidean"}));
    field->add_option("--resolution", field_cfg.resolution, "Raster size per axis");
    field->add_option("--seed", field_cfg.seed, "PCG seed");
    field->add_option("--transform", field_cfg.transform, "none, cos or sigmoid")
        ->check(CLI::IsMember({"none", "cos", "sigmoid"}));
    field->add_option("--sigmoid-scale", field_cfg.sigmoid_scale, "Sigmoid scale");
    field->add_option("--out", out_dir, "Output directory");

    qgrf::ConvergeConfig conv_cfg;
    auto *converge = app.add_subcommand("converge", "Error versus truncation radius");
    converge->add_option("--xi", conv_cfg.xi, "Correlation length");
    converge->add_option("--variance", conv_cfg.variance, "Variance C");
    converge->add_option("--grid-h", conv_cfg.fine_h, "Fine grid size");
    converge->add_option("--levels", conv_cfg.levels, "Coarsening factors")->delimiter(',');
    converge->add_option("--samples", conv_cfg.samples, "Realizations");
    converge->add_option("--seed", conv_cfg.seed, "Master seed");
    converge->add_option("--dimension", conv_cfg.dimension, "Spatial dimension");
    converge->add_option("--out", out_dir, "Output directory");

    unsigned pcg_bits = 6;
    std::uint64_t pcg_seed = 0;
    bool verify = false;
    auto *pcg = app.add_subcommand("pcg", "Emit the small PCG bit table");
    pcg->add_option("--state-bits", pcg_bits, "State bits M (at most 8)");
    pcg->add_option("--seed", pcg_seed, "Seed");
    pcg->add_flag("--verify-quantum", verify, "Check the gate-level PCG on every seed");
    pcg->add_option("--out", out_dir, "Output directory");

    qgrf::QuantumGridConfig qf_cfg;
    auto add_grid_options = [](CLI::App *cmd, qgrf::QuantumGridConfig &g, std::string &out) {
        cmd->add_option("--points", g.grid_n, "Grid points per axis");
        cmd->add_option_function<double>(
            "--xi", [&g](const double &xi) { g.xi2 = xi * xi; }, "Correlation length");
        cmd->add_option("--variance", g.variance, "Variance C");
        cmd->add_option("--radius", g.radius, "Truncation radius");
        cmd->add_option("--m-theta", g.m_theta, "Angle register width");
        cmd->add_option("--seed", g.seed, "Master seed");
        cmd->add_option("--out", out, "Output directory");
    };
    auto *qfield = app.add_subcommand("quantum-field", "One realization read from the sampler circuit");
    add_grid_options(qfield, qf_cfg, out_dir);

    qgrf::CovarianceConfig cov_cfg;
    std::string mode = "exact";
    auto *cov = app.add_subcommand("covariance", "Left/right half-domain covariance");
    add_grid_options(cov, cov_cfg.grid, out_dir);
    cov->add_option("--m", cov_cfg.grid.m, "Sample exponent m");
    cov->add_option("--mode", mode, "Estimator")->check(CLI::IsMember({"exact", "shots", "mlae"}));
    cov->add_option("--shots", cov_cfg.estimation.shots, "Shots");
    cov->add_option("--ref-samples", cov_cfg.reference_samples, "Classical reference samples");
    cov->add_option("--ref-seed", cov_cfg.reference_seed, "Classical reference seed");

    CLI11_PARSE(app, argc, argv);
    try {
        const fs::path out(out_dir);
        if (*field) {
            return cmd_field(field_cfg, field_norm, out);
        }
        if (*converge) {
            return cmd_converge(conv_cfg, out);
        }
        if (*pcg) {
            return cmd_pcg(pcg_bits, pcg_seed, verify, out);
        }
        if (*qfield) {
            return cmd_quantum_field(qf_cfg, out);
        }
        if (*cov) {
            cov_cfg.estimation.mode = qgrf::parse_estimator(mode);
            cov_cfg.estimation.seed = cov_cfg.grid.seed;
            return cmd_covariance(cov_cfg, out);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

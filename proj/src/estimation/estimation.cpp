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

#include "qgrf/estimation/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qgrf/field/export.hpp"
#include "qgrf/qsim/simulator.hpp"

namespace qgrf {

namespace {

void check_unit_interval(double v, const char *name) {
    if (!(v > 0.0 && v < 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in (0, 1)");
    }
}

double safe_log(double v) {
    return std::log(std::max(v, 1e-300));
}

std::uint64_t bernoulli_hits(std::mt19937_64 &engine, double p, std::uint64_t shots) {
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < shots; ++s) {
        if (unit_double(engine()) < p) {
            ++hits;
        }
    }
    return hits;
}

void reflect_zero(StateVector &state) {
    state.amplitudes()[0] = -state.amplitudes()[0];
}

}  // namespace

unsigned hoeffding_exponent(double eps, double delta) {
    if (!(eps > 0.0 && eps <= 1.0)) {
        throw std::invalid_argument("eps must lie in (0, 1]");
    }
    check_unit_interval(delta, "delta");
    const double n = std::max(1.0, std::ceil(std::log(2.0 / delta) / (eps * eps)));
    unsigned m = 0;
    while (std::ldexp(1.0, static_cast<int>(m)) < n) {
        ++m;
    }
    return m;
}

ExactAmplitude exact_amplitude(const StateVector &state) {
    const Amplitude a = state[0];
    if (std::abs(a.imag()) > 1e-9) {
        throw std::runtime_error("all-zeros amplitude has imaginary part " +
                                 std::to_string(a.imag()));
    }
    return {a.real(), std::abs(a.real())};
}

ExactAmplitude exact_amplitude(const Circuit &circuit) {
    return exact_amplitude(run(circuit));
}

double estimate_amplitude_shots(const StateVector &state, std::uint64_t shots,
                                std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shot estimation needs at least one shot");
    }
    // Measuring every qubit and counting all-zeros outcomes is a Bernoulli
    // trial with p = |<0|psi>|^2.
    std::vector<unsigned> all(state.num_qubits());
    for (unsigned q = 0; q < state.num_qubits(); ++q) {
        all[q] = q;
    }
    const auto histogram = measure_shots(state, all, shots, seed);
    const auto it = histogram.find(0);
    const double zeros = it == histogram.end() ? 0.0 : static_cast<double>(it->second);
    return std::sqrt(zeros / static_cast<double>(shots));
}

double estimate_amplitude_shots(const Circuit &circuit, std::uint64_t shots, std::uint64_t seed) {
    return estimate_amplitude_shots(run(circuit), shots, seed);
}

std::vector<std::uint64_t> mlae_default_powers(double eps) {
    check_unit_interval(eps, "eps");
    std::uint64_t top = 1;
    while (static_cast<double>(top) < 1.0 / (4.0 * eps)) {
        top *= 2;
    }
    std::vector<std::uint64_t> powers{0};
    for (std::uint64_t p = 1; p <= top; p *= 2) {
        powers.push_back(p);
    }
    return powers;
}

double mlae_query_bound(double eps, double delta) {
    check_unit_interval(eps, "eps");
    check_unit_interval(delta, "delta");
    return (8.0 * std::log(2.0 / delta) + 1.0) *
           (2.0 / eps + std::log2(1.0 / (4.0 * eps)) + 3.0);
}

double mlae_log_likelihood(double a, const std::vector<std::uint64_t> &powers,
                           const std::vector<std::uint64_t> &hits, std::uint64_t shots) {
    const double theta = std::asin(std::clamp(a, 0.0, 1.0));
    double ll = 0.0;
    for (std::size_t i = 0; i < powers.size(); ++i) {
        const double phase = static_cast<double>(2 * powers[i] + 1) * theta;
        const double s = std::sin(phase);
        const double c = std::cos(phase);
        const auto h = static_cast<double>(hits[i]);
        const auto miss = static_cast<double>(shots - hits[i]);
        if (h > 0) {
            ll += h * safe_log(s * s);
        }
        if (miss > 0) {
            ll += miss * safe_log(c * c);
        }
    }
    return ll;
}

MlaeResult mlae_fit(const std::vector<std::uint64_t> &powers,
                    const std::vector<std::uint64_t> &hits, std::uint64_t shots, double eps) {
    check_unit_interval(eps, "eps");
    if (powers.empty() || powers.size() != hits.size()) {
        throw std::invalid_argument("mlae_fit needs one hit count per power");
    }
    const double step = eps / 10.0;
    const auto points = static_cast<std::size_t>(std::ceil(1.0 / step));
    std::vector<double> grid(points + 1);
    std::vector<double> ll(points + 1);
    std::size_t best = 0;
    for (std::size_t i = 0; i <= points; ++i) {
        grid[i] = std::min(1.0, static_cast<double>(i) * step);
        ll[i] = mlae_log_likelihood(grid[i], powers, hits, shots);
        if (ll[i] > ll[best]) {
            best = i;
        }
    }
    // Golden-section refinement inside the neighbouring grid cells.
    double lo = grid[best > 0 ? best - 1 : 0];
    double hi = grid[std::min(best + 1, points)];
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - g * (hi - lo);
    double x2 = lo + g * (hi - lo);
    double f1 = mlae_log_likelihood(x1, powers, hits, shots);
    double f2 = mlae_log_likelihood(x2, powers, hits, shots);
    for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = mlae_log_likelihood(x2, powers, hits, shots);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = mlae_log_likelihood(x1, powers, hits, shots);
        }
    }
    const double refined = 0.5 * (lo + hi);
    const double ll_refined = mlae_log_likelihood(refined, powers, hits, shots);
    MlaeResult r;
    r.estimate = ll_refined >= ll[best] ? refined : grid[best];
    const double threshold = std::max(ll_refined, ll[best]) - 0.5;
    // Likelihood interval: the connected region around the maximum with
    // log-likelihood above the threshold. Walk the grid outwards from the
    // estimate, then bisect inside the cell where the walk stopped.
    auto crossing = [&](double outside, double inside) {
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (outside + inside);
            if (mlae_log_likelihood(mid, powers, hits, shots) >= threshold) {
                inside = mid;
            } else {
                outside = mid;
            }
        }
        return inside;
    };
    double first = 0.0;
    {
        double inside = r.estimate;
        std::size_t i = best + 1;
        while (i-- > 0) {
            if (grid[i] >= r.estimate) {
                continue;
            }
            if (ll[i] < threshold) {
                first = crossing(grid[i], inside);
                break;
            }
            inside = grid[i];
            first = inside;
        }
    }
    double last = 1.0;
    {
        double inside = r.estimate;
        for (std::size_t i = best > 0 ? best - 1 : 0; i <= points; ++i) {
            if (grid[i] <= r.estimate) {
                continue;
            }
            if (ll[i] < threshold) {
                last = crossing(grid[i], inside);
                break;
            }
            inside = grid[i];
            last = inside;
        }
        if (r.estimate >= 1.0) {
            last = 1.0;
        }
    }
    r.width = last - first;
    r.powers = powers;
    r.hits = hits;
    r.shots_per_power = shots;
    return r;
}

MlaeResult estimate_amplitude_mlae(const Circuit &circuit, const MlaeConfig &config) {
    check_unit_interval(config.eps, "eps");
    check_unit_interval(config.delta, "delta");
    const std::uint64_t shots = config.shots_per_power > 0
                                    ? config.shots_per_power
                                    : static_cast<std::uint64_t>(
                                          std::ceil(8.0 * std::log(2.0 / config.delta)));
    std::vector<std::uint64_t> powers =
        config.powers.empty() ? mlae_default_powers(config.eps) : config.powers;
    std::sort(powers.begin(), powers.end());
    powers.erase(std::unique(powers.begin(), powers.end()), powers.end());

    const Circuit inverse = circuit.inverse();
    StateVector state = run(circuit);
    std::uint64_t applied = 0;
    auto advance_to = [&](std::uint64_t p) {
        for (; applied < p; ++applied) {
            // Q = U R0 U^dag R0.
            reflect_zero(state);
            run_in_place(inverse, state);
            reflect_zero(state);
            run_in_place(circuit, state);
        }
    };

    std::mt19937_64 engine(config.seed);
    std::vector<std::uint64_t> hits;
    for (auto p : powers) {
        advance_to(p);
        hits.push_back(bernoulli_hits(engine, std::norm(state[0]), shots));
    }

    auto extreme = [&](std::uint64_t h) { return h == 0 || h == shots; };
    auto degenerate = [&]() {
        if (!extreme(hits.back())) {
            return false;
        }
        for (auto h : hits) {
            if (h != hits.back()) {
                return true;
            }
        }
        return false;
    };
    bool widened = false;
    if (degenerate()) {
        const std::uint64_t next = std::max<std::uint64_t>(1, 2 * powers.back());
        advance_to(next);
        powers.push_back(next);
        hits.push_back(bernoulli_hits(engine, std::norm(state[0]), shots));
        widened = true;
        if (degenerate()) {
            throw std::runtime_error("amplitude estimation likelihood is degenerate at the top power");
        }
    }
    MlaeResult r = mlae_fit(powers, hits, shots, config.eps);
    r.widened = widened;
    r.query_bound = mlae_query_bound(config.eps, config.delta);
    for (auto p : powers) {
        r.queries += shots * (2 * p + 1);
    }
    return r;
}

const char *estimator_name(EstimatorMode mode) {
    switch (mode) {
        case EstimatorMode::exact:
            return "exact";
        case EstimatorMode::shots:
            return "shots";
        case EstimatorMode::mlae:
            return "mlae";
    }
    return "?";
}

EstimatorMode parse_estimator(const std::string &name) {
    if (name == "exact") {
        return EstimatorMode::exact;
    }
    if (name == "shots") {
        return EstimatorMode::shots;
    }
    if (name == "mlae") {
        return EstimatorMode::mlae;
    }
    throw std::invalid_argument("unknown estimator mode '" + name + "'");
}

void EstimationConfig::validate() const {
    check_unit_interval(eps, "eps");
    check_unit_interval(delta, "delta");
    if (mode == EstimatorMode::shots && shots < 1) {
        throw std::invalid_argument("shot estimation needs at least one shot");
    }
}

MomentEstimate estimate_moment(const MomentRequest &request, const EstimationConfig &config) {
    config.validate();
    if (request.samplers.empty()) {
        throw std::invalid_argument("moment request needs at least one factor");
    }
    const unsigned m = request.samplers[0].sample_qubits();
    if (!config.allow_small_m && m < hoeffding_exponent(config.eps, config.delta)) {
        throw std::invalid_argument("sample exponent m = " + std::to_string(m) +
                                    " is below the Hoeffding requirement " +
                                    std::to_string(hoeffding_exponent(config.eps, config.delta)));
    }
    const Circuit circuit = build_moment_circuit(request.samplers, request.weights);
    const StateVector state = run(circuit);

    MomentEstimate e;
    e.mode = estimator_name(config.mode);
    e.s = static_cast<unsigned>(request.samplers.size());
    e.m = m;
    e.m_theta = 0;
    for (const auto &s : request.samplers) {
        e.m_theta = std::max(e.m_theta, s.m_theta);
    }
    e.seed = config.seed;
    e.exact = exact_amplitude(state).value;
    e.qubits = circuit.num_qubits();
    double tolerance = 0.0;
    switch (config.mode) {
        case EstimatorMode::exact:
            e.estimate = std::abs(e.exact);
            e.queries = 1;
            break;
        case EstimatorMode::shots:
            e.estimate = estimate_amplitude_shots(state, config.shots, config.seed);
            e.shots = config.shots;
            e.queries = config.shots;
            tolerance = std::sqrt(std::sqrt(std::log(2.0 / config.delta) /
                                            (2.0 * static_cast<double>(config.shots))));
            break;
        case EstimatorMode::mlae: {
            MlaeConfig mc;
            mc.eps = config.eps;
            mc.delta = config.delta;
            mc.seed = config.seed;
            const MlaeResult r = estimate_amplitude_mlae(circuit, mc);
            e.estimate = r.estimate;
            e.shots = r.shots_per_power;
            e.queries = r.queries;
            tolerance = config.eps;
            break;
        }
    }
    double encoding = 0.0;
    for (const auto &s : request.samplers) {
        encoding += std::numbers::pi * std::ldexp(1.0, -static_cast<int>(s.m_theta));
    }
    e.bound = std::sqrt(std::log(2.0 / config.delta) / std::ldexp(1.0, static_cast<int>(m))) +
              encoding + tolerance;
    return e;
}

std::string estimate_csv_header() {
    return "mode,s,m,m_theta,shots,queries,estimate,bound,seed";
}

std::string estimate_csv_row(const MomentEstimate &e) {
    std::ostringstream out;
    out << e.mode << ',' << e.s << ',' << e.m << ',' << e.m_theta << ',' << e.shots << ','
        << e.queries << ',' << format_double(e.estimate) << ',' << format_double(e.bound) << ','
        << e.seed;
    return out.str();
}

}  // namespace qgrf

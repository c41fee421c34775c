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

#include "qgrf/qsim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qgrf {

namespace {

struct ControlMask {
    std::uint64_t mask = 0;
    std::uint64_t value = 0;

    explicit ControlMask(const std::vector<Control> &controls) {
        for (const auto &c : controls) {
            const std::uint64_t bit = std::uint64_t{1} << c.qubit;
            mask |= bit;
            if (c.positive) {
                value |= bit;
            }
        }
    }

    bool active(std::uint64_t i) const { return (i & mask) == value; }
};

/// Reads and writes the value of a list of qubits inside a basis index.
class RegisterView {
   public:
    RegisterView(const std::vector<unsigned> &targets, std::size_t begin, std::size_t end)
        : qubits_(targets.begin() + static_cast<std::ptrdiff_t>(begin),
                  targets.begin() + static_cast<std::ptrdiff_t>(end)) {
        contiguous_ = true;
        for (std::size_t k = 1; k < qubits_.size(); ++k) {
            if (qubits_[k] != qubits_[k - 1] + 1) {
                contiguous_ = false;
            }
        }
        shift_ = qubits_.empty() ? 0 : qubits_[0];
        value_mask_ = (std::uint64_t{1} << qubits_.size()) - 1;
        for (unsigned q : qubits_) {
            index_mask_ |= std::uint64_t{1} << q;
        }
    }

    std::uint64_t extract(std::uint64_t i) const {
        if (contiguous_) {
            return (i >> shift_) & value_mask_;
        }
        std::uint64_t v = 0;
        for (std::size_t k = 0; k < qubits_.size(); ++k) {
            v |= ((i >> qubits_[k]) & 1) << k;
        }
        return v;
    }

    /// Index bits corresponding to register value v.
    std::uint64_t scatter(std::uint64_t v) const {
        if (contiguous_) {
            return v << shift_;
        }
        std::uint64_t bits = 0;
        for (std::size_t k = 0; k < qubits_.size(); ++k) {
            bits |= ((v >> k) & 1) << qubits_[k];
        }
        return bits;
    }

    std::uint64_t index_mask() const { return index_mask_; }
    std::size_t width() const { return qubits_.size(); }

   private:
    std::vector<unsigned> qubits_;
    bool contiguous_ = true;
    unsigned shift_ = 0;
    std::uint64_t value_mask_ = 0;
    std::uint64_t index_mask_ = 0;
};

template <typename F>
void for_each_pair(StateVector &state, unsigned target, const ControlMask &ctrl, F &&f) {
    auto &a = state.amplitudes();
    const std::uint64_t bit = std::uint64_t{1} << target;
    const std::uint64_t n = state.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        if ((i & bit) || !ctrl.active(i)) {
            continue;
        }
        f(a[i], a[i | bit], i);
    }
}

void rotate(Amplitude &a0, Amplitude &a1, double phi) {
    const double c = std::cos(0.5 * phi);
    const double s = std::sin(0.5 * phi);
    const Amplitude v0 = a0;
    const Amplitude v1 = a1;
    a0 = c * v0 - s * v1;
    a1 = s * v0 + c * v1;
}

}  // namespace

std::uint64_t RunStats::total() const {
    std::uint64_t t = 0;
    for (const auto &[name, count] : counts) {
        t += count;
    }
    return t;
}

void RunStats::merge(const RunStats &other) {
    for (const auto &[name, count] : other.counts) {
        counts[name] += count;
    }
    controlled += other.controlled;
}

void apply_gate(const Gate &gate, StateVector &state) {
    for (unsigned q : gate.qubits()) {
        if (q >= state.num_qubits()) {
            throw std::out_of_range("gate acts on a qubit beyond the state");
        }
    }
    const ControlMask ctrl(gate.controls);
    auto &amps = state.amplitudes();
    const std::uint64_t n = state.size();
    switch (gate.kind) {
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            for_each_pair(state, gate.targets[0], ctrl,
                          [r](Amplitude &a0, Amplitude &a1, std::uint64_t) {
                              const Amplitude v0 = a0;
                              a0 = r * (v0 + a1);
                              a1 = r * (v0 - a1);
                          });
            break;
        }
        case GateKind::X:
            for_each_pair(state, gate.targets[0], ctrl,
                          [](Amplitude &a0, Amplitude &a1, std::uint64_t) { std::swap(a0, a1); });
            break;
        case GateKind::Z:
            for_each_pair(state, gate.targets[0], ctrl,
                          [](Amplitude &, Amplitude &a1, std::uint64_t) { a1 = -a1; });
            break;
        case GateKind::RY: {
            const double phi = gate.angle;
            for_each_pair(state, gate.targets[0], ctrl,
                          [phi](Amplitude &a0, Amplitude &a1, std::uint64_t) {
                              rotate(a0, a1, phi);
                          });
            break;
        }
        case GateKind::PERM: {
            const RegisterView view(gate.targets, 0, gate.targets.size());
            const auto &table = *gate.table;
            std::vector<Amplitude> out(n);
            for (std::uint64_t i = 0; i < n; ++i) {
                if (!ctrl.active(i)) {
                    out[i] = amps[i];
                    continue;
                }
                const std::uint64_t v = view.extract(i);
                const std::uint64_t j = (i & ~view.index_mask()) | view.scatter(table[v]);
                out[j] = amps[i];
            }
            amps.swap(out);
            break;
        }
        case GateKind::ORACLE: {
            const RegisterView in(gate.targets, 0, gate.input_width);
            const RegisterView out(gate.targets, gate.input_width, gate.targets.size());
            const auto &table = *gate.table;
            for (std::uint64_t i = 0; i < n; ++i) {
                if (!ctrl.active(i)) {
                    continue;
                }
                const std::uint64_t fx = table[in.extract(i)];
                if (fx == 0) {
                    continue;
                }
                const std::uint64_t j = i ^ out.scatter(fx);
                if (j > i) {
                    std::swap(amps[i], amps[j]);
                }
            }
            break;
        }
        case GateKind::PHASE: {
            const RegisterView view(gate.targets, 0, gate.targets.size());
            const auto &flagged = *gate.table;
            if (flagged.empty()) {
                break;
            }
            std::vector<char> hit(std::uint64_t{1} << view.width(), 0);
            for (auto v : flagged) {
                hit[v] = 1;
            }
            for (std::uint64_t i = 0; i < n; ++i) {
                if (ctrl.active(i) && hit[view.extract(i)]) {
                    amps[i] = -amps[i];
                }
            }
            break;
        }
        case GateKind::ROT_ORACLE: {
            const RegisterView index(gate.targets, 0, gate.input_width);
            const auto &angles = *gate.angles;
            for_each_pair(state, gate.targets.back(), ctrl,
                          [&](Amplitude &a0, Amplitude &a1, std::uint64_t i) {
                              const double phi = angles[index.extract(i)];
                              if (phi != 0.0) {
                                  rotate(a0, a1, phi);
                              }
                          });
            break;
        }
    }
}

void run_in_place(const Circuit &circuit, StateVector &state, RunStats *stats) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("circuit has " + std::to_string(circuit.num_qubits()) +
                                    " qubits but the state has " +
                                    std::to_string(state.num_qubits()));
    }
    const double before = state.norm_squared();
    for (const auto &g : circuit.gates()) {
        apply_gate(g, state);
        if (stats) {
            ++stats->counts[gate_name(g.kind)];
            if (!g.controls.empty()) {
                ++stats->controlled;
            }
        }
    }
    const double after = state.norm_squared();
    if (std::abs(after - before) > 1e-8) {
        throw std::runtime_error("state norm drifted by " + std::to_string(after - before));
    }
}

StateVector run(const Circuit &circuit, StateVector initial, RunStats *stats) {
    run_in_place(circuit, initial, stats);
    return initial;
}

StateVector run(const Circuit &circuit, RunStats *stats) {
    return run(circuit, StateVector(circuit.num_qubits()), stats);
}

double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::map<std::uint64_t, std::uint64_t> measure_shots(const StateVector &state,
                                                     const std::vector<unsigned> &qubits,
                                                     std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("measure_shots needs at least one shot");
    }
    for (unsigned q : qubits) {
        if (q >= state.num_qubits()) {
            throw std::out_of_range("measured qubit beyond the state");
        }
    }
    const RegisterView view(qubits, 0, qubits.size());
    std::vector<double> cdf(std::uint64_t{1} << qubits.size(), 0.0);
    const auto &amps = state.amplitudes();
    for (std::uint64_t i = 0; i < state.size(); ++i) {
        cdf[view.extract(i)] += std::norm(amps[i]);
    }
    for (std::size_t k = 1; k < cdf.size(); ++k) {
        cdf[k] += cdf[k - 1];
    }
    const double total = cdf.back();
    std::mt19937_64 engine(seed);
    std::map<std::uint64_t, std::uint64_t> histogram;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = unit_double(engine()) * total;
        // First outcome whose cumulative mass exceeds u; zero-probability
        // outcomes share their predecessor's value and are never chosen.
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) {
            --it;
        }
        ++histogram[static_cast<std::uint64_t>(it - cdf.begin())];
    }
    return histogram;
}

std::map<std::uint64_t, std::uint64_t> measure_shots(const StateVector &state,
                                                     const Circuit &circuit,
                                                     const std::vector<std::string> &registers,
                                                     std::uint64_t shots, std::uint64_t seed) {
    std::vector<unsigned> qubits;
    for (const auto &name : registers) {
        const auto q = circuit.reg(name).qubits();
        qubits.insert(qubits.end(), q.begin(), q.end());
    }
    return measure_shots(state, qubits, shots, seed);
}

}  // namespace qgrf

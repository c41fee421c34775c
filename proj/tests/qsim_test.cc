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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "qgrf/qsim/circuit.hpp"
#include "qgrf/qsim/gate.hpp"
#include "qgrf/qsim/simulator.hpp"
#include "qgrf/qsim/state_vector.hpp"

using namespace qgrf;

namespace {

std::uint64_t read_bits(std::uint64_t b, const std::vector<unsigned> &qs, std::size_t from,
                        std::size_t count) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < count; ++i) {
        v |= ((b >> qs[from + i]) & 1) << i;
    }
    return v;
}

std::uint64_t write_bits(std::uint64_t b, const std::vector<unsigned> &qs, std::size_t from,
                         std::size_t count, std::uint64_t v) {
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << qs[from + i];
        b = ((v >> i) & 1) ? (b | bit) : (b & ~bit);
    }
    return b;
}

// Per-basis-state reference: out = sum_b amp_b U|b>.
std::vector<Amplitude> reference_apply(const Gate &g, const std::vector<Amplitude> &in) {
    std::vector<Amplitude> out(in.size());
    const auto &t = g.targets;
    for (std::uint64_t b = 0; b < in.size(); ++b) {
        const Amplitude a = in[b];
        bool active = true;
        for (const auto &c : g.controls) {
            active &= (((b >> c.qubit) & 1) == 1) == c.positive;
        }
        if (!active) {
            out[b] += a;
            continue;
        }
        auto rotate = [&](unsigned q, double c, double s) {
            const std::uint64_t b0 = b & ~(std::uint64_t{1} << q);
            const std::uint64_t b1 = b | (std::uint64_t{1} << q);
            if ((b >> q) & 1) {
                out[b0] += -s * a;
                out[b1] += c * a;
            } else {
                out[b0] += c * a;
                out[b1] += s * a;
            }
        };
        switch (g.kind) {
            case GateKind::H: {
                const double r = 1.0 / std::sqrt(2.0);
                const unsigned q = t[0];
                const std::uint64_t b0 = b & ~(std::uint64_t{1} << q);
                const std::uint64_t b1 = b | (std::uint64_t{1} << q);
                out[b0] += r * a;
                out[b1] += ((b >> q) & 1 ? -r : r) * a;
                break;
            }
            case GateKind::X:
                out[b ^ (std::uint64_t{1} << t[0])] += a;
                break;
            case GateKind::Z:
                out[b] += ((b >> t[0]) & 1 ? -1.0 : 1.0) * a;
                break;
            case GateKind::RY:
                rotate(t[0], std::cos(g.angle / 2), std::sin(g.angle / 2));
                break;
            case GateKind::PERM: {
                const auto v = read_bits(b, t, 0, t.size());
                out[write_bits(b, t, 0, t.size(), (*g.table)[v])] += a;
                break;
            }
            case GateKind::ORACLE: {
                const std::size_t p = g.input_width;
                const std::size_t q = t.size() - p;
                const auto x = read_bits(b, t, 0, p);
                const auto y = read_bits(b, t, p, q);
                out[write_bits(b, t, p, q, y ^ (*g.table)[x])] += a;
                break;
            }
            case GateKind::PHASE: {
                const auto v = read_bits(b, t, 0, t.size());
                bool flagged = false;
                for (auto f : *g.table) {
                    flagged |= f == v;
                }
                out[b] += (flagged ? -1.0 : 1.0) * a;
                break;
            }
            case GateKind::ROT_ORACLE: {
                const auto x = read_bits(b, t, 0, g.input_width);
                const double phi = (*g.angles)[x];
                rotate(t.back(), std::cos(phi / 2), std::sin(phi / 2));
                break;
            }
        }
    }
    return out;
}

std::vector<unsigned> pick_distinct(std::mt19937_64 &rng, unsigned n, unsigned k) {
    std::vector<unsigned> all(n);
    for (unsigned i = 0; i < n; ++i) {
        all[i] = i;
    }
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    return all;
}

Gate random_gate(std::mt19937_64 &rng, unsigned n) {
    std::uniform_real_distribution<double> angle(-4.0, 4.0);
    const int kind = static_cast<int>(rng() % 8);
    const unsigned span = kind >= 4 ? 2 + static_cast<unsigned>(rng() % 3) : 1;
    auto qs = pick_distinct(rng, n, span + static_cast<unsigned>(rng() % 3));
    std::vector<unsigned> targets(qs.begin(), qs.begin() + span);
    Gate g;
    switch (kind) {
        case 0: g = Gate::h(targets[0]); break;
        case 1: g = Gate::x(targets[0]); break;
        case 2: g = Gate::z(targets[0]); break;
        case 3: g = Gate::ry(targets[0], angle(rng)); break;
        case 4: {
            std::vector<std::uint64_t> perm(std::size_t{1} << span);
            for (std::size_t i = 0; i < perm.size(); ++i) {
                perm[i] = i;
            }
            std::shuffle(perm.begin(), perm.end(), rng);
            g = Gate::basis_permutation(targets, perm);
            break;
        }
        case 5: {
            const std::size_t p = 1;
            std::vector<unsigned> in(targets.begin(), targets.begin() + p);
            std::vector<unsigned> out(targets.begin() + p, targets.end());
            std::vector<std::uint64_t> table(2);
            for (auto &v : table) {
                v = rng() % (std::uint64_t{1} << out.size());
            }
            g = Gate::function_oracle(in, out, table);
            break;
        }
        case 6: g = Gate::phase_oracle(targets, {rng() % (std::uint64_t{1} << span), 0}); break;
        default: {
            std::vector<unsigned> idx(targets.begin(), targets.end() - 1);
            std::vector<double> angles(std::size_t{1} << idx.size());
            for (auto &a : angles) {
                a = angle(rng);
            }
            g = Gate::rotation_oracle(idx, targets.back(), angles);
            break;
        }
    }
    std::vector<Control> ctrls;
    for (std::size_t i = span; i < qs.size(); ++i) {
        ctrls.push_back({qs[i], (rng() & 1) == 1});
    }
    return ctrls.empty() ? g : g.controlled(ctrls);
}

Circuit random_circuit(std::mt19937_64 &rng, unsigned n, int gates) {
    Circuit c;
    c.add_register("q", n);
    for (int i = 0; i < gates; ++i) {
        c.append(random_gate(rng, n));
    }
    return c;
}

StateVector random_state(std::mt19937_64 &rng, unsigned n) {
    std::normal_distribution<double> nd;
    StateVector s(n);
    double norm = 0.0;
    for (auto &a : s.amplitudes()) {
        a = {nd(rng), nd(rng)};
        norm += std::norm(a);
    }
    for (auto &a : s.amplitudes()) {
        a /= std::sqrt(norm);
    }
    return s;
}

double distance(const StateVector &a, const StateVector &b) {
    double d = 0.0;
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

}  // namespace

TEST(state_vector, fresh_state_and_little_endian_basis) {
    StateVector s(3);
    EXPECT_EQ(amplitude(s, 0), Amplitude(1.0, 0.0));
    // |5> = qubits 0 and 2 set.
    Circuit c;
    c.add_register("q", 3);
    c.append(Gate::x(0));
    c.append(Gate::x(2));
    const auto out = run(c);
    EXPECT_EQ(amplitude(out, 5), Amplitude(1.0, 0.0));
    EXPECT_EQ(StateVector::basis(3, 5).amplitudes(), out.amplitudes());
    EXPECT_THROW(amplitude(out, 8), std::out_of_range);
}

TEST(state_vector, respects_qubit_cap) {
    EXPECT_GE(max_qubits(), 1u);
    EXPECT_THROW(StateVector(max_qubits() + 1), std::invalid_argument);
}

TEST(simulator, single_qubit_examples) {
    Circuit c;
    c.add_register("q", 1);
    EXPECT_EQ(run(c).amplitudes(), StateVector(1).amplitudes());
    c.append(Gate::h(0));
    EXPECT_NEAR(run(c)[1].real(), 1.0 / std::sqrt(2.0), 1e-15);
    c.append(Gate::h(0));
    EXPECT_NEAR(std::abs(run(c)[0] - 1.0), 0.0, 1e-12);

    const double theta = 0.7;
    Circuit r;
    r.add_register("q", 1);
    r.append(Gate::ry(0, 2 * theta));
    EXPECT_NEAR(run(r)[0].real(), std::cos(theta), 1e-15);
    EXPECT_NEAR(run(r)[1].real(), std::sin(theta), 1e-15);
}

TEST(simulator, xor_copy_oracle) {
    Circuit c;
    const auto &x = c.add_register("x", 2);
    const auto &y = c.add_register("y", 2);
    c.append(Gate::function_oracle(x.qubits(), y.qubits(), [](std::uint64_t v) { return v; }));
    for (std::uint64_t v = 0; v < 4; ++v) {
        const auto out = run(c, StateVector::basis(4, v));
        EXPECT_EQ(out[v | (v << 2)], Amplitude(1.0, 0.0));
    }
}

TEST(simulator, oracle_is_self_inverse) {
    std::mt19937_64 rng(1);
    std::vector<std::uint64_t> table(8);
    for (auto &v : table) {
        v = rng() % 4;
    }
    Circuit c;
    c.add_register("x", 3);
    c.add_register("y", 2);
    const auto g = Gate::function_oracle({0, 1, 2}, {3, 4}, table);
    c.append(g);
    c.append(g);
    for (std::uint64_t b = 0; b < 32; ++b) {
        EXPECT_EQ(run(c, StateVector::basis(5, b)).amplitudes(), StateVector::basis(5, b).amplitudes());
    }
}

TEST(simulator, gates_match_reference) {
    std::mt19937_64 rng(2);
    const unsigned n = 6;
    for (int trial = 0; trial < 400; ++trial) {
        const Gate g = random_gate(rng, n);
        auto s = random_state(rng, n);
        const auto expected = reference_apply(g, s.amplitudes());
        apply_gate(g, s);
        for (std::uint64_t i = 0; i < s.size(); ++i) {
            ASSERT_NEAR(std::abs(s[i] - expected[i]), 0.0, 1e-13) << g.dump();
        }
    }
}

TEST(simulator, round_trip_random_circuits) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        const auto c = random_circuit(rng, 8, 200);
        const auto psi = random_state(rng, 8);
        const auto back = run(inverse(c), run(c, psi));
        EXPECT_LT(distance(back, psi), 1e-9);
        EXPECT_EQ(inverse(inverse(c)), c);
    }
}

TEST(simulator, preserves_inner_products) {
    std::mt19937_64 rng(4);
    const auto c = random_circuit(rng, 7, 150);
    const auto a = random_state(rng, 7);
    const auto b = random_state(rng, 7);
    const auto before = a.inner(b);
    const auto after = run(c, a).inner(run(c, b));
    EXPECT_LT(std::abs(before - after), 1e-10);
    EXPECT_NEAR(run(c, a).norm_squared(), 1.0, 1e-10);
}

TEST(simulator, rejects_mismatched_state) {
    Circuit c;
    c.add_register("q", 3);
    EXPECT_THROW(run(c, StateVector(2)), std::invalid_argument);
}

TEST(simulator, counts_gates_by_kind) {
    Circuit c;
    c.add_register("q", 3);
    c.append(Gate::h(0));
    c.append(Gate::h(1));
    c.append(Gate::x(2).controlled({{0, true}}));
    c.append(Gate::ry(1, 0.3));
    RunStats stats;
    run(c, &stats);
    EXPECT_EQ(stats.counts["H"], 2u);
    EXPECT_EQ(stats.counts["X"], 1u);
    EXPECT_EQ(stats.counts["RY"], 1u);
    EXPECT_EQ(stats.controlled, 1u);
    EXPECT_EQ(stats.total(), 4u);
    RunStats twice = stats;
    twice.merge(stats);
    EXPECT_EQ(twice.total(), 8u);
}

TEST(gate, inverses) {
    const auto r = Gate::ry(2, 0.4).inverse();
    EXPECT_EQ(r.kind, GateKind::RY);
    EXPECT_EQ(r.angle, -0.4);
    const auto p = Gate::basis_permutation({0, 1}, {2, 0, 3, 1});
    EXPECT_EQ(*p.inverse().table, (std::vector<std::uint64_t>{1, 3, 0, 2}));
    const auto o = Gate::function_oracle({0}, {1}, std::vector<std::uint64_t>{1, 0});
    EXPECT_EQ(o.inverse(), o);
    const auto rot = Gate::rotation_oracle({0}, 1, {0.1, -0.2});
    EXPECT_EQ(*rot.inverse().angles, (std::vector<double>{-0.1, 0.2}));
}

TEST(gate, construction_checks) {
    EXPECT_THROW(Gate::basis_permutation({0, 1}, {0, 1, 1, 2}), std::invalid_argument);
    EXPECT_THROW(Gate::basis_permutation({0, 1}, {0, 1, 2}), std::invalid_argument);
    EXPECT_THROW(Gate::function_oracle({0}, {1}, std::vector<std::uint64_t>{0, 2}),
                 std::invalid_argument);
    EXPECT_THROW(Gate::h(0).controlled({{0, true}}), std::invalid_argument);
    Circuit c;
    c.add_register("q", 2);
    EXPECT_THROW(c.append(Gate::h(2)), std::out_of_range);
    EXPECT_THROW(c.add_register("q", 1), std::invalid_argument);
}

TEST(circuit, registers_are_contiguous) {
    Circuit c;
    c.add_register("a", 2);
    c.add_register("b", 3);
    EXPECT_EQ(c.reg("b").offset, 2u);
    EXPECT_EQ(c.reg("b").qubits(), (std::vector<unsigned>{2, 3, 4}));
    EXPECT_EQ(c.num_qubits(), 5u);
    EXPECT_THROW(c.reg("zz"), std::out_of_range);
}

TEST(circuit, dump_format) {
    Circuit c;
    c.add_register("idx", 2);
    c.add_register("t", 1);
    c.append(Gate::h(0));
    c.append(Gate::ry(2, 0.5).controlled({{0, true}, {1, false}}));
    c.append(Gate::phase_oracle({0, 1}, {3, 1}));
    EXPECT_EQ(c.dump(),
              "REG idx 0 2\nREG t 2 1\nH 0\nRY 2 ctrl=+0,-1 angle=0.5\nPHASE 0,1 flagged=1,3\n");
}

TEST(measure, deterministic_state) {
    const auto s = StateVector::basis(3, 6);
    const auto hist = measure_shots(s, {0, 1, 2}, 1000, 9);
    ASSERT_EQ(hist.size(), 1u);
    EXPECT_EQ(hist.at(6), 1000u);
    const auto marg = measure_shots(s, {2, 0}, 50, 9);
    EXPECT_EQ(marg.at(1), 50u);
}

TEST(measure, uniform_frequencies_and_reproducibility) {
    Circuit c;
    c.add_register("a", 1);
    c.add_register("b", 1);
    c.append(Gate::h(0));
    c.append(Gate::h(1));
    const auto s = run(c);
    const auto hist = measure_shots(s, c, {"a", "b"}, 100000, 42);
    for (std::uint64_t v = 0; v < 4; ++v) {
        EXPECT_NEAR(hist.at(v) / 1e5, 0.25, 0.01);
    }
    EXPECT_EQ(hist, measure_shots(s, c, {"a", "b"}, 100000, 42));
}

TEST(measure, unit_double_range) {
    EXPECT_EQ(unit_double(0), 0.0);
    EXPECT_LT(unit_double(~std::uint64_t{0}), 1.0);
    EXPECT_EQ(unit_double(std::uint64_t{1} << 63), 0.5);
}

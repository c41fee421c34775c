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

#include "qgrf/qsim/gate.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qgrf {

namespace {

constexpr unsigned kBijectionCheckLimit = 20;

std::string fmt(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

void check_distinct(const std::vector<unsigned> &qubits) {
    std::set<unsigned> seen(qubits.begin(), qubits.end());
    if (seen.size() != qubits.size()) {
        throw std::invalid_argument("gate qubits must be distinct");
    }
}

std::uint64_t width_limit(std::size_t width) {
    if (width >= 64) {
        throw std::invalid_argument("register too wide for a table gate");
    }
    return std::uint64_t{1} << width;
}

}  // namespace

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
        case GateKind::RY:
            return "RY";
        case GateKind::PERM:
            return "PERM";
        case GateKind::ORACLE:
            return "ORACLE";
        case GateKind::PHASE:
            return "PHASE";
        case GateKind::ROT_ORACLE:
            return "ROT_ORACLE";
    }
    return "?";
}

Gate Gate::h(unsigned q) {
    Gate g;
    g.kind = GateKind::H;
    g.targets = {q};
    return g;
}

Gate Gate::x(unsigned q) {
    Gate g;
    g.kind = GateKind::X;
    g.targets = {q};
    return g;
}

Gate Gate::z(unsigned q) {
    Gate g;
    g.kind = GateKind::Z;
    g.targets = {q};
    return g;
}

Gate Gate::ry(unsigned q, double phi) {
    Gate g;
    g.kind = GateKind::RY;
    g.targets = {q};
    g.angle = phi;
    return g;
}

Gate Gate::basis_permutation(std::vector<unsigned> targets, std::vector<std::uint64_t> table) {
    check_distinct(targets);
    const std::uint64_t n = width_limit(targets.size());
    if (table.size() != n) {
        throw std::invalid_argument("permutation table size must be 2^k");
    }
    if (targets.size() <= kBijectionCheckLimit) {
        std::vector<char> hit(n, 0);
        for (auto v : table) {
            if (v >= n || hit[v]) {
                throw std::invalid_argument("basis_permutation table is not a bijection");
            }
            hit[v] = 1;
        }
    }
    Gate g;
    g.kind = GateKind::PERM;
    g.targets = std::move(targets);
    g.table = std::make_shared<const std::vector<std::uint64_t>>(std::move(table));
    return g;
}

Gate Gate::function_oracle(std::vector<unsigned> input, std::vector<unsigned> output,
                           std::vector<std::uint64_t> table) {
    const std::uint64_t n = width_limit(input.size());
    const std::uint64_t m = width_limit(output.size());
    if (table.size() != n) {
        throw std::invalid_argument("function_oracle table size must be 2^p");
    }
    for (auto v : table) {
        if (v >= m) {
            throw std::invalid_argument("function_oracle value does not fit the output register");
        }
    }
    Gate g;
    g.kind = GateKind::ORACLE;
    g.input_width = static_cast<unsigned>(input.size());
    g.targets = std::move(input);
    g.targets.insert(g.targets.end(), output.begin(), output.end());
    check_distinct(g.targets);
    g.table = std::make_shared<const std::vector<std::uint64_t>>(std::move(table));
    return g;
}

Gate Gate::function_oracle(std::vector<unsigned> input, std::vector<unsigned> output,
                           const std::function<std::uint64_t(std::uint64_t)> &f) {
    const std::uint64_t n = width_limit(input.size());
    std::vector<std::uint64_t> table(n);
    for (std::uint64_t x = 0; x < n; ++x) {
        table[x] = f(x);
    }
    return function_oracle(std::move(input), std::move(output), std::move(table));
}

Gate Gate::phase_oracle(std::vector<unsigned> targets, std::vector<std::uint64_t> flagged) {
    check_distinct(targets);
    const std::uint64_t n = width_limit(targets.size());
    std::sort(flagged.begin(), flagged.end());
    flagged.erase(std::unique(flagged.begin(), flagged.end()), flagged.end());
    if (!flagged.empty() && flagged.back() >= n) {
        throw std::invalid_argument("phase_oracle flagged value out of range");
    }
    Gate g;
    g.kind = GateKind::PHASE;
    g.targets = std::move(targets);
    g.table = std::make_shared<const std::vector<std::uint64_t>>(std::move(flagged));
    return g;
}

Gate Gate::rotation_oracle(std::vector<unsigned> index, unsigned target,
                           std::vector<double> angles) {
    const std::uint64_t n = width_limit(index.size());
    if (angles.size() != n) {
        throw std::invalid_argument("rotation_oracle needs one angle per index value");
    }
    Gate g;
    g.kind = GateKind::ROT_ORACLE;
    g.input_width = static_cast<unsigned>(index.size());
    g.targets = std::move(index);
    g.targets.push_back(target);
    check_distinct(g.targets);
    g.angles = std::make_shared<const std::vector<double>>(std::move(angles));
    return g;
}

Gate Gate::controlled(std::vector<Control> extra) const {
    Gate g = *this;
    g.controls.insert(g.controls.end(), extra.begin(), extra.end());
    check_distinct(g.qubits());
    return g;
}

Gate Gate::inverse() const {
    Gate g = *this;
    switch (kind) {
        case GateKind::RY:
            g.angle = -angle;
            break;
        case GateKind::PERM: {
            std::vector<std::uint64_t> inv(table->size());
            for (std::uint64_t v = 0; v < table->size(); ++v) {
                inv[(*table)[v]] = v;
            }
            g.table = std::make_shared<const std::vector<std::uint64_t>>(std::move(inv));
            break;
        }
        case GateKind::ROT_ORACLE: {
            std::vector<double> neg(angles->size());
            for (std::size_t i = 0; i < neg.size(); ++i) {
                neg[i] = -(*angles)[i];
            }
            g.angles = std::make_shared<const std::vector<double>>(std::move(neg));
            break;
        }
        default:
            break;
    }
    return g;
}

std::vector<unsigned> Gate::qubits() const {
    std::vector<unsigned> q = targets;
    for (const auto &c : controls) {
        q.push_back(c.qubit);
    }
    return q;
}

Gate Gate::remapped(const std::vector<unsigned> &map) const {
    Gate g = *this;
    for (auto &t : g.targets) {
        if (t >= map.size()) {
            throw std::out_of_range("qubit map does not cover a gate target");
        }
        t = map[t];
    }
    for (auto &c : g.controls) {
        if (c.qubit >= map.size()) {
            throw std::out_of_range("qubit map does not cover a gate control");
        }
        c.qubit = map[c.qubit];
    }
    return g;
}

std::string Gate::dump() const {
    std::ostringstream out;
    out << gate_name(kind) << ' ';
    for (std::size_t i = 0; i < targets.size(); ++i) {
        out << (i ? "," : "") << targets[i];
    }
    if (!controls.empty()) {
        out << " ctrl=";
        for (std::size_t i = 0; i < controls.size(); ++i) {
            out << (i ? "," : "") << (controls[i].positive ? '+' : '-') << controls[i].qubit;
        }
    }
    if (kind == GateKind::RY) {
        out << " angle=" << fmt(angle);
    }
    if (kind == GateKind::ORACLE || kind == GateKind::ROT_ORACLE) {
        out << " in=" << input_width;
    }
    if (table) {
        out << (kind == GateKind::PHASE ? " flagged=" : " table=");
        for (std::size_t i = 0; i < table->size(); ++i) {
            out << (i ? "," : "") << (*table)[i];
        }
    }
    if (angles) {
        out << " angles=";
        for (std::size_t i = 0; i < angles->size(); ++i) {
            out << (i ? "," : "") << fmt((*angles)[i]);
        }
    }
    return out.str();
}

bool Gate::operator==(const Gate &other) const {
    auto same_table = [](const auto &a, const auto &b) {
        if (!a || !b) {
            return !a && !b;
        }
        return a == b || *a == *b;
    };
    return kind == other.kind && targets == other.targets && controls == other.controls &&
           angle == other.angle && input_width == other.input_width &&
           same_table(table, other.table) && same_table(angles, other.angles);
}

}  // namespace qgrf

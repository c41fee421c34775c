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
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace qgrf {

enum class GateKind {
    H,
    X,
    Z,
    RY,
    /// Bijection of basis values on the target register.
    PERM,
    /// |x>|y> -> |x>|y ^ f(x)>; targets are the input qubits followed by
    /// the output qubits.
    ORACLE,
    /// |x> -> -|x> for flagged values x of the target register.
    PHASE,
    /// Uniformly controlled RY: RY(angle[x]) on the last target qubit for
    /// each value x of the remaining target qubits.
    ROT_ORACLE,
};

const char *gate_name(GateKind kind);

struct Control {
    unsigned qubit;
    bool positive = true;

    bool operator==(const Control &) const = default;
};

/// A gate with optional controls. Register values are read from `targets`
/// least significant qubit first.
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<unsigned> targets;
    std::vector<Control> controls;
    double angle = 0.0;
    unsigned input_width = 0;
    std::shared_ptr<const std::vector<std::uint64_t>> table;
    std::shared_ptr<const std::vector<double>> angles;

    static Gate h(unsigned q);
    static Gate x(unsigned q);
    static Gate z(unsigned q);
    /// RY(phi) = [[cos(phi/2), -sin(phi/2)], [sin(phi/2), cos(phi/2)]].
    static Gate ry(unsigned q, double phi);
    /// Throws unless `table` is a bijection of [2^k], k = targets.size().
    static Gate basis_permutation(std::vector<unsigned> targets, std::vector<std::uint64_t> table);
    static Gate function_oracle(std::vector<unsigned> input, std::vector<unsigned> output,
                                std::vector<std::uint64_t> table);
    static Gate function_oracle(std::vector<unsigned> input, std::vector<unsigned> output,
                                const std::function<std::uint64_t(std::uint64_t)> &f);
    /// `flagged` may be in any order; it is stored sorted and deduplicated.
    static Gate phase_oracle(std::vector<unsigned> targets, std::vector<std::uint64_t> flagged);
    static Gate rotation_oracle(std::vector<unsigned> index, unsigned target,
                                std::vector<double> angles);

    /// Copy with extra controls appended.
    Gate controlled(std::vector<Control> extra) const;
    Gate inverse() const;
    /// Qubits touched (targets plus controls).
    std::vector<unsigned> qubits() const;
    /// Same gate on relabelled qubits: qubit q becomes map[q].
    Gate remapped(const std::vector<unsigned> &map) const;
    /// `NAME targets [ctrl=+a,-b] [key=value ...]`.
    std::string dump() const;

    bool operator==(const Gate &other) const;
};

}  // namespace qgrf

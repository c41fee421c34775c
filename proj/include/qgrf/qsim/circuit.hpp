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

#include <string>
#include <vector>

#include "qgrf/qsim/gate.hpp"

namespace qgrf {

/// Contiguous block of qubits [offset, offset + width).
struct Register {
    std::string name;
    unsigned offset = 0;
    unsigned width = 0;

    unsigned qubit(unsigned i) const;
    std::vector<unsigned> qubits() const;

    bool operator==(const Register &) const = default;
};

/// Named registers allocated in order from qubit 0, plus a gate list.
class Circuit {
   public:
    Circuit() = default;

    const Register &add_register(const std::string &name, unsigned width);
    const Register &reg(const std::string &name) const;
    bool has_register(const std::string &name) const;
    const std::vector<Register> &registers() const { return registers_; }

    unsigned num_qubits() const { return num_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    /// Throws if a gate touches a qubit outside the declared registers.
    void append(Gate gate);
    /// Appends the gates of `other`, relabelling its qubit q as map[q].
    void append_mapped(const Circuit &other, const std::vector<unsigned> &map);
    /// Appends `other` (which must not have more qubits) on the same labels.
    void append(const Circuit &other);

    /// Reversed gate order with every gate inverted.
    Circuit inverse() const;

    /// One `NAME targets [ctrl=...] [key=value]` line per gate, preceded by
    /// one `REG name offset width` line per register.
    std::string dump() const;

    bool operator==(const Circuit &) const = default;

   private:
    std::vector<Register> registers_;
    std::vector<Gate> gates_;
    unsigned num_qubits_ = 0;
};

Circuit inverse(const Circuit &circuit);

}  // namespace qgrf

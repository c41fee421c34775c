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

#include "qgrf/qsim/circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace qgrf {

unsigned Register::qubit(unsigned i) const {
    if (i >= width) {
        throw std::out_of_range("qubit index outside register '" + name + "'");
    }
    return offset + i;
}

std::vector<unsigned> Register::qubits() const {
    std::vector<unsigned> q(width);
    for (unsigned i = 0; i < width; ++i) {
        q[i] = offset + i;
    }
    return q;
}

const Register &Circuit::add_register(const std::string &name, unsigned width) {
    if (has_register(name)) {
        throw std::invalid_argument("duplicate register '" + name + "'");
    }
    if (width == 0) {
        throw std::invalid_argument("register '" + name + "' must have positive width");
    }
    registers_.push_back(Register{name, num_qubits_, width});
    num_qubits_ += width;
    return registers_.back();
}

const Register &Circuit::reg(const std::string &name) const {
    for (const auto &r : registers_) {
        if (r.name == name) {
            return r;
        }
    }
    throw std::out_of_range("no register named '" + name + "'");
}

bool Circuit::has_register(const std::string &name) const {
    for (const auto &r : registers_) {
        if (r.name == name) {
            return true;
        }
    }
    return false;
}

void Circuit::append(Gate gate) {
    for (unsigned q : gate.qubits()) {
        if (q >= num_qubits_) {
            throw std::out_of_range("gate " + gate.dump() + " touches an undeclared qubit");
        }
    }
    gates_.push_back(std::move(gate));
}

void Circuit::append_mapped(const Circuit &other, const std::vector<unsigned> &map) {
    if (map.size() < other.num_qubits()) {
        throw std::invalid_argument("qubit map is shorter than the appended circuit");
    }
    for (const auto &g : other.gates_) {
        append(g.remapped(map));
    }
}

void Circuit::append(const Circuit &other) {
    if (other.num_qubits() > num_qubits_) {
        throw std::invalid_argument("appended circuit has more qubits than the target");
    }
    for (const auto &g : other.gates_) {
        append(g);
    }
}

Circuit Circuit::inverse() const {
    Circuit out;
    out.registers_ = registers_;
    out.num_qubits_ = num_qubits_;
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(it->inverse());
    }
    return out;
}

std::string Circuit::dump() const {
    std::ostringstream out;
    for (const auto &r : registers_) {
        out << "REG " << r.name << ' ' << r.offset << ' ' << r.width << '\n';
    }
    for (const auto &g : gates_) {
        out << g.dump() << '\n';
    }
    return out.str();
}

Circuit inverse(const Circuit &circuit) {
    return circuit.inverse();
}

}  // namespace qgrf

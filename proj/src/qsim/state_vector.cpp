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

#include "qgrf/qsim/state_vector.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qgrf {

unsigned max_qubits() {
    if (const char *env = std::getenv("QGRF_MAX_QUBITS")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 40) {
            return static_cast<unsigned>(v);
        }
    }
    return 26;
}

StateVector::StateVector(unsigned num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > max_qubits()) {
        throw std::invalid_argument("state of " + std::to_string(num_qubits) +
                                    " qubits exceeds the simulator cap of " +
                                    std::to_string(max_qubits()));
    }
    amps_.assign(std::uint64_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::basis(unsigned num_qubits, std::uint64_t index) {
    StateVector s(num_qubits);
    if (index >= s.size()) {
        throw std::out_of_range("basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

Amplitude StateVector::inner(const StateVector &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("inner product of states with different qubit counts");
    }
    Amplitude total{0.0, 0.0};
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        total += std::conj(amps_[i]) * other.amps_[i];
    }
    return total;
}

Amplitude amplitude(const StateVector &state, std::uint64_t basis_index) {
    if (basis_index >= state.size()) {
        throw std::out_of_range("basis index out of range");
    }
    return state[basis_index];
}

}  // namespace qgrf

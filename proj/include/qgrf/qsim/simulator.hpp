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
#include <map>
#include <string>
#include <vector>

#include "qgrf/qsim/circuit.hpp"
#include "qgrf/qsim/state_vector.hpp"

namespace qgrf {

/// Gate applications by kind name, plus the number that carried controls.
struct RunStats {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t controlled = 0;

    std::uint64_t total() const;
    void merge(const RunStats &other);
};

/// Applies one gate in place.
void apply_gate(const Gate &gate, StateVector &state);

/// Applies the circuit in place. Throws std::runtime_error if the norm
/// drifts by more than 1e-8.
void run_in_place(const Circuit &circuit, StateVector &state, RunStats *stats = nullptr);

StateVector run(const Circuit &circuit, StateVector initial, RunStats *stats = nullptr);

/// Runs on |0...0>.
StateVector run(const Circuit &circuit, RunStats *stats = nullptr);

/// Samples `shots` outcomes of the listed qubits (outcome bit i is
/// qubit qubits[i]) by inverse CDF over the marginal distribution.
/// Uniforms come from a seeded mt19937_64, so results are portable.
std::map<std::uint64_t, std::uint64_t> measure_shots(const StateVector &state,
                                                     const std::vector<unsigned> &qubits,
                                                     std::uint64_t shots, std::uint64_t seed);

/// Same, measuring the named registers concatenated in the given order.
std::map<std::uint64_t, std::uint64_t> measure_shots(const StateVector &state,
                                                     const Circuit &circuit,
                                                     const std::vector<std::string> &registers,
                                                     std::uint64_t shots, std::uint64_t seed);

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit word.
double unit_double(std::uint64_t bits);

}  // namespace qgrf

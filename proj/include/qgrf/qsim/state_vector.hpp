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

#include <complex>
#include <cstdint>
#include <vector>

namespace qgrf {

using Amplitude = std::complex<double>;

/// Simulator qubit cap: QGRF_MAX_QUBITS if set to a positive integer,
/// otherwise 26.
unsigned max_qubits();

/// Dense statevector over n qubits. Basis index bit t is qubit t.
class StateVector {
   public:
    /// |0...0> on n qubits.
    explicit StateVector(unsigned num_qubits);

    static StateVector basis(unsigned num_qubits, std::uint64_t index);

    unsigned num_qubits() const { return num_qubits_; }
    std::uint64_t size() const { return amps_.size(); }

    std::vector<Amplitude> &amplitudes() { return amps_; }
    const std::vector<Amplitude> &amplitudes() const { return amps_; }
    Amplitude operator[](std::uint64_t index) const { return amps_[index]; }

    double norm_squared() const;
    /// <this|other>.
    Amplitude inner(const StateVector &other) const;

   private:
    unsigned num_qubits_;
    std::vector<Amplitude> amps_;
};

/// Throws std::out_of_range for indices beyond 2^n.
Amplitude amplitude(const StateVector &state, std::uint64_t basis_index);

}  // namespace qgrf

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

#include "qgrf/qcircuits/quantum_pcg.hpp"

#include <stdexcept>
#include <vector>

namespace qgrf {

Circuit build_quantum_pcg(const PcgParams &params) {
    params.validate();
    const unsigned M = params.state_bits;
    const unsigned w = params.output_bits;
    const unsigned rb = params.rotation_bits;
    if (M > 8) {
        throw std::invalid_argument("quantum PCG supports at most 8 state bits");
    }
    Circuit c;
    const auto state = c.add_register("state", M).qubits();
    const auto word = c.add_register("word", w).qubits();

    std::vector<std::uint64_t> table(std::uint64_t{1} << M);
    for (std::uint64_t s = 0; s < table.size(); ++s) {
        table[s] = pcg_step(params, s);
    }
    c.append(Gate::basis_permutation(state, std::move(table)));

    // Output bit i of rotation r reads x bit base + (i + r) % w, where
    // x = s ^ (s >> xorshift); each contributing state bit is one
    // controlled X on word[i].
    const unsigned base = M - rb - w;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << rb); ++r) {
        const unsigned rot = static_cast<unsigned>(r % w);
        for (unsigned i = 0; i < w; ++i) {
            const unsigned src = base + (i + rot) % w;
            for (unsigned source : {src, src + params.xorshift}) {
                if (source >= M) {
                    continue;
                }
                std::vector<Control> controls;
                bool vanishes = false;
                bool merged = false;
                for (unsigned t = 0; t < rb; ++t) {
                    const unsigned q = M - rb + t;
                    const bool polarity = (r >> t) & 1;
                    if (q == source) {
                        merged = true;
                        vanishes = !polarity;
                    }
                    controls.push_back(Control{state[q], polarity});
                }
                if (vanishes) {
                    continue;
                }
                if (!merged) {
                    controls.push_back(Control{state[source], true});
                }
                c.append(Gate::x(word[i]).controlled(std::move(controls)));
            }
        }
    }
    return c;
}

}  // namespace qgrf

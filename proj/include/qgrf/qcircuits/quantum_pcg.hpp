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

#include "qgrf/prng/pcg.hpp"
#include "qgrf/qsim/circuit.hpp"

namespace qgrf {

/// Gate-level PCG step on registers state (M qubits) and word (w qubits):
/// |s>|0> -> |a s + c mod 2^M>|output(a s + c)>. The affine step is one
/// basis permutation; the xorshift, window and rotation are compiled into
/// multi-controlled X gates. Requires M <= 8.
Circuit build_quantum_pcg(const PcgParams &params);

}  // namespace qgrf

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

namespace qgrf {

/// Parameters of a permuted congruential generator with an XSH-RR style
/// output permutation, scaled to an arbitrary state width.
///
/// State update:  s <- (a * s + c) mod 2^M
/// Output of s:   x    = s ^ (s >> xorshift)
///                word = bits [M - rotation_bits - w, M - rotation_bits) of x
///                rot  = (s >> (M - rotation_bits)) mod w
///                out  = rotate_right_w(word, rot)
///
/// With M=64, w=32, xorshift=18, rotation_bits=5 this is exactly the output
/// function of pcg32.
struct PcgParams {
    unsigned state_bits;
    std::uint64_t multiplier;
    std::uint64_t increment;
    unsigned output_bits;
    unsigned xorshift;
    unsigned rotation_bits;

    /// The small generator used for quantum compilation. For M=6 this is
    /// a=29, c=37, w=4, xorshift=2, one rotation bit.
    static PcgParams small(unsigned state_bits = 6);
    /// 64-bit state, 32-bit output (pcg32 constants).
    static PcgParams pcg32();

    std::uint64_t state_mask() const;
    std::uint64_t output_mask() const;
    /// Throws std::invalid_argument unless the LCG has full period
    /// (a = 1 mod 4, c odd) and the output window fits in the state.
    void validate() const;

    bool operator==(const PcgParams &) const = default;
};

/// One LCG step.
std::uint64_t pcg_step(const PcgParams &params, std::uint64_t state);

/// LCG state after `steps` steps from `seed`, in O(log steps).
std::uint64_t pcg_state_at(const PcgParams &params, std::uint64_t seed, std::uint64_t steps);

/// Output permutation applied to a state.
std::uint64_t pcg_output(const PcgParams &params, std::uint64_t state);

/// Output word number `step` of the stream of `seed`:
/// pcg_output(pcg_state_at(seed, step)).
std::uint64_t pcg_word(const PcgParams &params, std::uint64_t seed, std::uint64_t step);

/// Bit `index` of the stream of `seed`. Word t = index / w supplies bits
/// t*w ... t*w + w - 1, least significant bit first.
int pcg_bit(const PcgParams &params, std::uint64_t seed, std::uint64_t index);

/// The M stream bits of `seed` starting at bit position sample * M,
/// assembled least significant bit first into a new seed.
std::uint64_t derive_seed(const PcgParams &params, std::uint64_t seed, std::uint64_t sample);

/// Sequential reader over the bit stream of one seed. Seeks once at
/// construction, then advances one LCG step per consumed word.
class PcgBitStream {
   public:
    PcgBitStream(const PcgParams &params, std::uint64_t seed, std::uint64_t first_bit = 0);

    int next_bit();
    /// Reads `count` (<= 64) bits; the first bit read becomes bit 0.
    std::uint64_t next_bits(unsigned count);

   private:
    PcgParams params_;
    std::uint64_t state_;
    std::uint64_t word_;
    unsigned bit_in_word_;
};

}  // namespace qgrf

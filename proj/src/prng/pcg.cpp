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

#include "qgrf/prng/pcg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace qgrf {

namespace {

std::uint64_t low_mask(unsigned bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

void check_seed(const PcgParams &params, std::uint64_t seed) {
    if (seed & ~params.state_mask()) {
        throw std::invalid_argument("seed " + std::to_string(seed) + " does not fit in " +
                                    std::to_string(params.state_bits) + " state bits");
    }
}

}  // namespace

PcgParams PcgParams::small(unsigned state_bits) {
    if (state_bits < 3 || state_bits > 16) {
        throw std::invalid_argument("small PCG supports 3..16 state bits");
    }
    PcgParams p{};
    p.state_bits = state_bits;
    p.multiplier = 29 & low_mask(state_bits);
    p.increment = 37 & low_mask(state_bits);
    p.output_bits = state_bits > 5 ? 4 : state_bits - 1;
    p.rotation_bits = 1;
    p.xorshift = state_bits / 3;
    p.validate();
    return p;
}

PcgParams PcgParams::pcg32() {
    PcgParams p{};
    p.state_bits = 64;
    p.multiplier = 6364136223846793005ULL;
    p.increment = 1442695040888963407ULL;
    p.output_bits = 32;
    p.xorshift = 18;
    p.rotation_bits = 5;
    return p;
}

std::uint64_t PcgParams::state_mask() const {
    return low_mask(state_bits);
}

std::uint64_t PcgParams::output_mask() const {
    return low_mask(output_bits);
}

void PcgParams::validate() const {
    if (state_bits < 2 || state_bits > 64) {
        throw std::invalid_argument("PCG state_bits must be in [2, 64]");
    }
    if ((multiplier & ~state_mask()) || (increment & ~state_mask())) {
        throw std::invalid_argument("PCG constants exceed the state width");
    }
    if ((multiplier & 3) != 1) {
        throw std::invalid_argument("PCG multiplier must be 1 mod 4 for full period");
    }
    if ((increment & 1) != 1) {
        throw std::invalid_argument("PCG increment must be odd for full period");
    }
    if (output_bits < 1 || output_bits + rotation_bits > state_bits) {
        throw std::invalid_argument("PCG output window does not fit in the state");
    }
    if (xorshift < 1 || xorshift >= state_bits) {
        throw std::invalid_argument("PCG xorshift must be in [1, state_bits)");
    }
}

std::uint64_t pcg_step(const PcgParams &params, std::uint64_t state) {
    return (params.multiplier * state + params.increment) & params.state_mask();
}

std::uint64_t pcg_state_at(const PcgParams &params, std::uint64_t seed, std::uint64_t steps) {
    check_seed(params, seed);
    // Square-and-multiply on the affine map s -> a s + c.
    std::uint64_t acc_mult = 1;
    std::uint64_t acc_plus = 0;
    std::uint64_t cur_mult = params.multiplier;
    std::uint64_t cur_plus = params.increment;
    while (steps > 0) {
        if (steps & 1) {
            acc_mult *= cur_mult;
            acc_plus = acc_plus * cur_mult + cur_plus;
        }
        cur_plus = (cur_mult + 1) * cur_plus;
        cur_mult *= cur_mult;
        steps >>= 1;
    }
    return (acc_mult * seed + acc_plus) & params.state_mask();
}

std::uint64_t pcg_output(const PcgParams &params, std::uint64_t state) {
    const unsigned M = params.state_bits;
    const unsigned w = params.output_bits;
    const std::uint64_t x = state ^ (state >> params.xorshift);
    const std::uint64_t word = (x >> (M - params.rotation_bits - w)) & params.output_mask();
    const unsigned rot = params.rotation_bits == 0
                             ? 0
                             : static_cast<unsigned>((state >> (M - params.rotation_bits)) % w);
    if (rot == 0) {
        return word;
    }
    return ((word >> rot) | (word << (w - rot))) & params.output_mask();
}

std::uint64_t pcg_word(const PcgParams &params, std::uint64_t seed, std::uint64_t step) {
    return pcg_output(params, pcg_state_at(params, seed, step));
}

int pcg_bit(const PcgParams &params, std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t word = pcg_word(params, seed, index / params.output_bits);
    return static_cast<int>((word >> (index % params.output_bits)) & 1);
}

std::uint64_t derive_seed(const PcgParams &params, std::uint64_t seed, std::uint64_t sample) {
    if (params.state_bits < 64 && sample >= (std::uint64_t{1} << params.state_bits)) {
        throw std::invalid_argument("derive_seed: sample index must be below 2^M");
    }
    if (sample > std::numeric_limits<std::uint64_t>::max() / params.state_bits) {
        throw std::invalid_argument("derive_seed: stream offset overflows");
    }
    PcgBitStream stream(params, seed, sample * params.state_bits);
    if (params.state_bits == 64) {
        return stream.next_bits(64);
    }
    return stream.next_bits(params.state_bits);
}

PcgBitStream::PcgBitStream(const PcgParams &params, std::uint64_t seed, std::uint64_t first_bit)
    : params_(params),
      state_(pcg_state_at(params, seed, first_bit / params.output_bits)),
      word_(pcg_output(params, state_)),
      bit_in_word_(static_cast<unsigned>(first_bit % params.output_bits)) {
}

int PcgBitStream::next_bit() {
    if (bit_in_word_ == params_.output_bits) {
        state_ = pcg_step(params_, state_);
        word_ = pcg_output(params_, state_);
        bit_in_word_ = 0;
    }
    return static_cast<int>((word_ >> bit_in_word_++) & 1);
}

std::uint64_t PcgBitStream::next_bits(unsigned count) {
    if (count > 64) {
        throw std::invalid_argument("next_bits reads at most 64 bits");
    }
    std::uint64_t result = 0;
    unsigned filled = 0;
    while (filled < count) {
        if (bit_in_word_ == params_.output_bits) {
            state_ = pcg_step(params_, state_);
            word_ = pcg_output(params_, state_);
            bit_in_word_ = 0;
        }
        // Take as many bits from the current word as possible.
        const unsigned take = std::min(count - filled, params_.output_bits - bit_in_word_);
        const std::uint64_t chunk = (word_ >> bit_in_word_) & low_mask(take);
        result |= chunk << filled;
        filled += take;
        bit_in_word_ += take;
    }
    return result;
}

}  // namespace qgrf

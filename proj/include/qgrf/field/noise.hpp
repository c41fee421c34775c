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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qgrf/field/grid.hpp"
#include "qgrf/prng/pcg.hpp"

namespace qgrf {

/// Axis-aligned integer box [lo, hi] (inclusive). Sites are ranked in
/// row-major order with the first component slowest; the rank is the
/// site's position in the noise stream.
struct NoiseBox {
    Index lo;
    Index hi;

    int dimension() const { return static_cast<int>(lo.size()); }
    std::int64_t extent(int axis) const { return hi[axis] - lo[axis] + 1; }
    std::size_t size() const;
    bool contains(const Index &j) const;
    std::size_t rank(const Index &j) const;
    Index site(std::size_t rank) const;
    void validate() const;

    static NoiseBox cube(int dimension, std::int64_t lo, std::int64_t hi);
};

/// Smallest box containing the index sets used to evaluate at all points.
NoiseBox covering_box(const GridSpec &grid, const std::vector<std::vector<double>> &points);

enum class NoiseMode { os_rng, pcg, clt_bits };

/// pcg:      W_p = inverse_cdf_sample(stream bits [p q, p q + q)), q = quantile_bits
/// clt_bits: W_p = n^{-1/2} sum_i (1 - 2 b_i) over stream bits [p n, p n + n)
/// os_rng:   std::random_device seeded normals, not reproducible.
struct NoiseDescriptor {
    NoiseMode mode = NoiseMode::pcg;
    std::uint64_t seed = 0;
    PcgParams params = PcgParams::pcg32();
    unsigned clt_bits = 4;
    unsigned quantile_bits = 32;

    static NoiseDescriptor pcg(std::uint64_t seed, const PcgParams &params = PcgParams::pcg32());
    static NoiseDescriptor clt(unsigned n, std::uint64_t seed,
                               const PcgParams &params = PcgParams::pcg32());
    static NoiseDescriptor os_rng();

    void validate() const;
};

/// n^{-1/2} sum_i (1 - 2 b_i) for the n low bits of `bits` (LSB first).
double clt_value(std::uint64_t bits, unsigned n);

class WhiteNoiseGrid {
   public:
    WhiteNoiseGrid(NoiseBox box, std::vector<double> values);

    const NoiseBox &box() const { return box_; }
    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    /// Throws std::out_of_range for sites outside the box.
    double at(const Index &j) const;

   private:
    NoiseBox box_;
    std::vector<double> values_;
};

constexpr std::size_t kDefaultNoiseCap = std::size_t{1} << 24;

WhiteNoiseGrid sample_noise(const NoiseBox &box, const NoiseDescriptor &descriptor,
                            std::size_t cap = kDefaultNoiseCap);

/// Noise covering every index needed to evaluate `grid` at `points`.
WhiteNoiseGrid sample_noise(const GridSpec &grid, const std::vector<std::vector<double>> &points,
                            const NoiseDescriptor &descriptor, std::size_t cap = kDefaultNoiseCap);

/// W_j = l^{-d/2} sum_k sinc(k / l - j) W_k over all fine sites k, for
/// every coarse site j of `coarse_box`. Applied one axis at a time.
WhiteNoiseGrid coarsen_noise(const WhiteNoiseGrid &fine, int ell, const NoiseBox &coarse_box);

}  // namespace qgrf

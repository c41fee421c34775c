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

#include "qgrf/field/noise.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "qgrf/field/sinc.hpp"
#include "qgrf/prng/normal.hpp"

namespace qgrf {

std::size_t NoiseBox::size() const {
    std::size_t n = 1;
    for (int k = 0; k < dimension(); ++k) {
        n *= static_cast<std::size_t>(extent(k));
    }
    return n;
}

bool NoiseBox::contains(const Index &j) const {
    if (j.size() != lo.size()) {
        return false;
    }
    for (int k = 0; k < dimension(); ++k) {
        if (j[k] < lo[k] || j[k] > hi[k]) {
            return false;
        }
    }
    return true;
}

std::size_t NoiseBox::rank(const Index &j) const {
    if (!contains(j)) {
        throw std::out_of_range("noise index outside the sampled box");
    }
    std::size_t r = 0;
    for (int k = 0; k < dimension(); ++k) {
        r = r * static_cast<std::size_t>(extent(k)) + static_cast<std::size_t>(j[k] - lo[k]);
    }
    return r;
}

Index NoiseBox::site(std::size_t rank) const {
    Index j(lo.size());
    for (int k = dimension() - 1; k >= 0; --k) {
        const auto e = static_cast<std::size_t>(extent(k));
        j[k] = lo[k] + static_cast<std::int64_t>(rank % e);
        rank /= e;
    }
    return j;
}

void NoiseBox::validate() const {
    if (lo.empty() || lo.size() != hi.size()) {
        throw std::invalid_argument("noise box bounds must be non-empty and of equal dimension");
    }
    for (int k = 0; k < dimension(); ++k) {
        if (hi[k] < lo[k]) {
            throw std::invalid_argument("noise box has an empty axis");
        }
    }
}

NoiseBox NoiseBox::cube(int dimension, std::int64_t lo, std::int64_t hi) {
    NoiseBox box{Index(dimension, lo), Index(dimension, hi)};
    box.validate();
    return box;
}

NoiseBox covering_box(const GridSpec &grid, const std::vector<std::vector<double>> &points) {
    grid.validate();
    if (points.empty()) {
        throw std::invalid_argument("covering_box needs at least one point");
    }
    const auto reach = static_cast<std::int64_t>(std::floor(grid.radius + 1e-12));
    NoiseBox box;
    for (const auto &x : points) {
        const Index c = grid_center(grid, x);
        if (box.lo.empty()) {
            box.lo = c;
            box.hi = c;
        }
        for (int k = 0; k < grid.dimension; ++k) {
            box.lo[k] = std::min(box.lo[k], c[k]);
            box.hi[k] = std::max(box.hi[k], c[k]);
        }
    }
    for (int k = 0; k < grid.dimension; ++k) {
        box.lo[k] -= reach;
        box.hi[k] += reach;
    }
    return box;
}

NoiseDescriptor NoiseDescriptor::pcg(std::uint64_t seed, const PcgParams &params) {
    NoiseDescriptor d;
    d.mode = NoiseMode::pcg;
    d.seed = seed;
    d.params = params;
    return d;
}

NoiseDescriptor NoiseDescriptor::clt(unsigned n, std::uint64_t seed, const PcgParams &params) {
    NoiseDescriptor d;
    d.mode = NoiseMode::clt_bits;
    d.seed = seed;
    d.params = params;
    d.clt_bits = n;
    return d;
}

NoiseDescriptor NoiseDescriptor::os_rng() {
    NoiseDescriptor d;
    d.mode = NoiseMode::os_rng;
    return d;
}

void NoiseDescriptor::validate() const {
    if (mode == NoiseMode::os_rng) {
        return;
    }
    params.validate();
    if (seed & ~params.state_mask()) {
        throw std::invalid_argument("noise seed does not fit in the PCG state");
    }
    if (mode == NoiseMode::clt_bits && (clt_bits < 1 || clt_bits > 64)) {
        throw std::invalid_argument("clt_bits mode needs 1..64 bits per sample");
    }
    if (mode == NoiseMode::pcg && (quantile_bits < 1 || quantile_bits > 52)) {
        throw std::invalid_argument("pcg mode needs 1..52 quantile bits per sample");
    }
}

double clt_value(std::uint64_t bits, unsigned n) {
    if (n < 1 || n > 64) {
        throw std::invalid_argument("clt_value needs 1..64 bits");
    }
    int sum = 0;
    for (unsigned i = 0; i < n; ++i) {
        sum += ((bits >> i) & 1) ? -1 : 1;
    }
    return sum / std::sqrt(static_cast<double>(n));
}

WhiteNoiseGrid::WhiteNoiseGrid(NoiseBox box, std::vector<double> values)
    : box_(std::move(box)), values_(std::move(values)) {
    box_.validate();
    if (values_.size() != box_.size()) {
        throw std::invalid_argument("noise value count does not match the box size");
    }
}

double WhiteNoiseGrid::at(const Index &j) const {
    return values_[box_.rank(j)];
}

WhiteNoiseGrid sample_noise(const NoiseBox &box, const NoiseDescriptor &descriptor,
                            std::size_t cap) {
    box.validate();
    descriptor.validate();
    // Guard against overflow of the size product before comparing.
    double approx = 1.0;
    for (int k = 0; k < box.dimension(); ++k) {
        approx *= static_cast<double>(box.extent(k));
    }
    if (approx > static_cast<double>(cap)) {
        throw std::invalid_argument("noise grid of " + std::to_string(approx) +
                                    " sites exceeds the cap of " + std::to_string(cap));
    }
    const std::size_t n = box.size();
    std::vector<double> values(n);
    switch (descriptor.mode) {
        case NoiseMode::pcg: {
            PcgBitStream stream(descriptor.params, descriptor.seed, 0);
            for (std::size_t p = 0; p < n; ++p) {
                values[p] = inverse_cdf_sample(stream.next_bits(descriptor.quantile_bits),
                                               descriptor.quantile_bits);
            }
            break;
        }
        case NoiseMode::clt_bits: {
            PcgBitStream stream(descriptor.params, descriptor.seed, 0);
            for (std::size_t p = 0; p < n; ++p) {
                values[p] = clt_value(stream.next_bits(descriptor.clt_bits), descriptor.clt_bits);
            }
            break;
        }
        case NoiseMode::os_rng: {
            std::random_device device;
            std::mt19937_64 engine((static_cast<std::uint64_t>(device()) << 32) ^ device());
            std::normal_distribution<double> normal(0.0, 1.0);
            for (auto &v : values) {
                v = normal(engine);
            }
            break;
        }
    }
    return WhiteNoiseGrid(box, std::move(values));
}

WhiteNoiseGrid sample_noise(const GridSpec &grid, const std::vector<std::vector<double>> &points,
                            const NoiseDescriptor &descriptor, std::size_t cap) {
    return sample_noise(covering_box(grid, points), descriptor, cap);
}

WhiteNoiseGrid coarsen_noise(const WhiteNoiseGrid &fine, int ell, const NoiseBox &coarse_box) {
    if (ell < 1) {
        throw std::invalid_argument("coarsening factor must be at least 1");
    }
    coarse_box.validate();
    const NoiseBox &fb = fine.box();
    const int d = fb.dimension();
    if (coarse_box.dimension() != d) {
        throw std::invalid_argument("coarse box dimension does not match the fine noise");
    }
    // Current array: axes [0, axis) already coarse, the rest still fine.
    std::vector<double> cur(fine.values().begin(), fine.values().end());
    std::vector<std::size_t> shape(d);
    for (int k = 0; k < d; ++k) {
        shape[k] = static_cast<std::size_t>(fb.extent(k));
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(ell));
    for (int axis = 0; axis < d; ++axis) {
        const std::size_t nf = shape[axis];
        const auto nc = static_cast<std::size_t>(coarse_box.extent(axis));
        std::vector<double> weights(nc * nf);
        for (std::size_t jc = 0; jc < nc; ++jc) {
            const auto j = static_cast<double>(coarse_box.lo[axis] + static_cast<std::int64_t>(jc));
            for (std::size_t kf = 0; kf < nf; ++kf) {
                const auto k = static_cast<double>(fb.lo[axis] + static_cast<std::int64_t>(kf));
                weights[jc * nf + kf] = norm * sinc(k / ell - j);
            }
        }
        std::size_t outer = 1;
        for (int k = 0; k < axis; ++k) {
            outer *= shape[k];
        }
        std::size_t inner = 1;
        for (int k = axis + 1; k < d; ++k) {
            inner *= shape[k];
        }
        std::vector<double> next(outer * nc * inner, 0.0);
        for (std::size_t o = 0; o < outer; ++o) {
            const double *src = cur.data() + o * nf * inner;
            double *dst = next.data() + o * nc * inner;
            for (std::size_t jc = 0; jc < nc; ++jc) {
                double *row = dst + jc * inner;
                const double *w = weights.data() + jc * nf;
                for (std::size_t kf = 0; kf < nf; ++kf) {
                    const double wk = w[kf];
                    if (wk == 0.0) {
                        continue;
                    }
                    const double *in = src + kf * inner;
                    for (std::size_t i = 0; i < inner; ++i) {
                        row[i] += wk * in[i];
                    }
                }
            }
        }
        cur.swap(next);
        shape[axis] = nc;
    }
    return WhiteNoiseGrid(coarse_box, std::move(cur));
}

}  // namespace qgrf

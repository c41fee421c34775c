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

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "qgrf/field/export.hpp"
#include "qgrf/field/field.hpp"
#include "qgrf/field/grid.hpp"
#include "qgrf/field/kernel.hpp"
#include "qgrf/field/noise.hpp"
#include "qgrf/field/sinc.hpp"
#include "qgrf/field/transform.hpp"
#include "qgrf/prng/normal.hpp"
#include "qgrf/prng/pcg.hpp"

using namespace qgrf;

namespace {

constexpr double kPi = std::numbers::pi;

CovarianceSpec cov(double C, double xi, int d) {
    CovarianceSpec c;
    c.variance = C;
    c.correlation_length = xi;
    c.dimension = d;
    return c;
}

GridSpec grid_for(double xi, double r, int d, Centering centering = Centering::fixed_origin) {
    GridSpec g;
    g.h = xi * std::sqrt(2.0 * kPi / r);
    g.radius = r;
    g.dimension = d;
    g.centering = centering;
    return g;
}

// Radical inverse in base b, for a simple Halton sequence.
double halton(std::uint64_t i, unsigned b) {
    double f = 1.0;
    double r = 0.0;
    while (i > 0) {
        f /= b;
        r += f * static_cast<double>(i % b);
        i /= b;
    }
    return r;
}

WhiteNoiseGrid normal_noise(const NoiseBox &box, std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<double> v(box.size());
    for (auto &x : v) {
        x = n(rng);
    }
    return WhiteNoiseGrid(box, std::move(v));
}

}  // namespace

TEST(kernel, gaussian_value_at_zero_lag) {
    const auto f = gaussian_kernel(cov(1.0, 1.0, 1));
    const std::vector<double> zero{0.0};
    EXPECT_NEAR(f(zero, zero), std::pow(kPi / 2.0, -0.25), 1e-15);
    EXPECT_NEAR(f(zero, zero), 0.8932, 1e-4);
    EXPECT_TRUE(f.stationary());
}

TEST(kernel, decays_beyond_six_lengths) {
    for (double xi : {0.075, 0.5, 1.0, 3.0}) {
        const auto f = gaussian_kernel(cov(1.0, xi, 1));
        const std::vector<double> s{0.0};
        for (double t = 6.0 * xi * 1.0001; t < 12.0 * xi; t += 0.25 * xi) {
            const std::vector<double> x{t};
            EXPECT_LT(f(x, s), 1e-12);
        }
    }
}

TEST(kernel, decay_metadata_bounds_kernel) {
    const auto f = gaussian_kernel(cov(2.5, 0.4, 2));
    const std::vector<double> s{0.1, -0.2};
    for (int i = -40; i <= 40; ++i) {
        for (int k = -40; k <= 40; ++k) {
            const std::vector<double> x{s[0] + 0.05 * i, s[1] + 0.05 * k};
            const double dist = std::hypot(x[0] - s[0], x[1] - s[1]);
            EXPECT_LE(std::abs(f(x, s)), f.gamma() * std::exp(-f.beta() * dist) * (1 + 1e-12));
        }
    }
}

TEST(kernel, self_convolution_reproduces_covariance) {
    // Trapezoidal quadrature of int f(x - s) f(y - s) ds on a fine grid.
    for (const auto &c : {cov(1.0, 1.0, 1), cov(2.0, 0.5, 1)}) {
        const auto f = gaussian_kernel(c);
        const double step = 0.005;
        for (double lag : {0.0, 0.3, 1.0, 2.2}) {
            const std::vector<double> x{0.1};
            const std::vector<double> y{0.1 + lag};
            double sum = 0.0;
            for (double s = -15.0; s <= 15.0; s += step) {
                const std::vector<double> sv{s};
                sum += f(x, sv) * f(y, sv);
            }
            EXPECT_NEAR(sum * step, c(x, y), 1e-6) << "lag " << lag;
        }
    }
}

TEST(sinc, reference_values) {
    EXPECT_EQ(sinc(std::vector<double>{0.0, 0.0}), 1.0);
    EXPECT_EQ(sinc(std::vector<double>{3.0, -2.0}), 0.0);
    EXPECT_NEAR(sinc(0.5), 2.0 / kPi, 1e-15);
    EXPECT_NEAR(sinc(0.63662), std::sin(kPi * 0.63662) / (kPi * 0.63662), 1e-15);
    const double tiny = 1e-9;
    EXPECT_NEAR(sinc(tiny), 1.0 - (kPi * tiny) * (kPi * tiny) / 6.0, 1e-18);
}

TEST(sinc, complex_modulus_values) {
    EXPECT_EQ(sinc_complex_modulus(0.0, 0.0), 1.0);
    EXPECT_NEAR(sinc_complex_modulus(1.0, 0.0), 0.0, 1e-15);
    const double v = sinc_complex_modulus(0.3, 0.7);
    EXPECT_LE(v, 2.0 * std::exp(0.7 * kPi));
    // |sin(pi z)|^2 = sin^2(pi x) + sinh^2(pi y).
    const double ref = std::sqrt(std::pow(std::sin(0.3 * kPi), 2) + std::pow(std::sinh(0.7 * kPi), 2)) /
                       (kPi * std::hypot(0.3, 0.7));
    EXPECT_NEAR(v, ref, 1e-14);
    for (double x : {-2.7, -0.4, 0.25, 1.5, 7.3}) {
        EXPECT_NEAR(sinc_complex_modulus(x, 0.0), std::abs(sinc(x)), 1e-15);
    }
}

TEST(sinc, analytic_continuation_bound) {
    for (std::uint64_t i = 1; i <= 100000; ++i) {
        const double x = -50.0 + 100.0 * halton(i, 2);
        const double y = -3.0 + 6.0 * halton(i, 3);
        ASSERT_LE(sinc_complex_modulus(x, y), 2.0 * std::exp(kPi * std::abs(y))) << x << "," << y;
    }
}

TEST(grid, index_set_examples) {
    GridSpec g;
    g.radius = 2;
    g.norm = NormKind::euclidean;
    g.dimension = 1;
    const auto line = index_set(g, Index{0});
    ASSERT_EQ(line.size(), 5u);
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ(line[i], Index{i - 2});
    }

    g.radius = 1;
    g.dimension = 2;
    g.norm = NormKind::max;
    const auto block = index_set(g, Index{0, 0});
    ASSERT_EQ(block.size(), 9u);
    EXPECT_EQ(block.front(), (Index{-1, -1}));
    EXPECT_EQ(block[1], (Index{-1, 0}));
    EXPECT_EQ(block.back(), (Index{1, 1}));

    g.norm = NormKind::euclidean;
    const auto cross = index_set(g, Index{0, 0});
    const std::vector<Index> expected{{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}};
    EXPECT_EQ(cross, expected);
}

TEST(grid, centered_center_snaps_lattice_points) {
    GridSpec g;
    g.h = 0.1;
    g.dimension = 1;
    g.centering = Centering::centered_at_x;
    // 0.3 / 0.1 = 2.9999999999999996 in floating point.
    EXPECT_EQ(grid_center(g, std::vector<double>{0.3}), Index{3});
    EXPECT_EQ(grid_center(g, std::vector<double>{-0.25}), Index{-3});
    g.centering = Centering::fixed_origin;
    EXPECT_EQ(grid_center(g, std::vector<double>{0.3}), Index{0});
}

TEST(noise, box_ranks_row_major) {
    const auto box = NoiseBox::cube(2, -1, 1);
    EXPECT_EQ(box.size(), 9u);
    EXPECT_EQ(box.rank(Index{-1, 0}), 1u);
    EXPECT_EQ(box.site(3), (Index{0, -1}));
    for (std::size_t p = 0; p < box.size(); ++p) {
        EXPECT_EQ(box.rank(box.site(p)), p);
    }
    EXPECT_THROW(box.rank(Index{2, 0}), std::out_of_range);
}

TEST(noise, clt_examples) {
    EXPECT_EQ(clt_value(0, 4), 2.0);
    // bits (0,1,0,1), least significant bit first.
    EXPECT_EQ(clt_value(0b1010, 4), 0.0);
    EXPECT_EQ(clt_value(0b1111, 4), -2.0);
}

TEST(noise, stream_position_is_rank) {
    const auto p = PcgParams::pcg32();
    const auto box = NoiseBox::cube(2, -3, 4);
    const auto g = sample_noise(box, NoiseDescriptor::pcg(77, p));
    const auto c = sample_noise(box, NoiseDescriptor::clt(4, 77, p));
    for (std::size_t r : {std::size_t{0}, std::size_t{5}, std::size_t{63}}) {
        std::uint64_t q = 0;
        std::uint64_t n4 = 0;
        for (unsigned b = 0; b < 32; ++b) {
            q |= static_cast<std::uint64_t>(pcg_bit(p, 77, r * 32 + b)) << b;
        }
        for (unsigned b = 0; b < 4; ++b) {
            n4 |= static_cast<std::uint64_t>(pcg_bit(p, 77, r * 4 + b)) << b;
        }
        EXPECT_EQ(g.values()[r], inverse_cdf_sample(q, 32));
        EXPECT_EQ(c.values()[r], clt_value(n4, 4));
        EXPECT_EQ(g.at(box.site(r)), g.values()[r]);
    }
}

TEST(noise, deterministic_regeneration) {
    const auto box = NoiseBox::cube(2, -10, 10);
    for (const auto &d : {NoiseDescriptor::pcg(5), NoiseDescriptor::clt(4, 5)}) {
        const auto a = sample_noise(box, d);
        const auto b = sample_noise(box, d);
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            EXPECT_EQ(a.values()[i], b.values()[i]);
        }
    }
}

TEST(noise, os_rng_fills_box) {
    const auto box = NoiseBox::cube(1, 0, 999);
    const auto w = sample_noise(box, NoiseDescriptor::os_rng());
    double mean = 0.0;
    for (double v : w.values()) {
        mean += v / 1000.0;
    }
    EXPECT_LT(std::abs(mean), 0.2);
}

TEST(noise, cap_is_enforced) {
    const auto box = NoiseBox::cube(2, 0, 99);
    EXPECT_THROW(sample_noise(box, NoiseDescriptor::pcg(1), 9999), std::invalid_argument);
    EXPECT_NO_THROW(sample_noise(box, NoiseDescriptor::pcg(1), 10000));
    const auto huge = NoiseBox::cube(3, 0, 999);
    EXPECT_THROW(sample_noise(huge, NoiseDescriptor::pcg(1)), std::invalid_argument);
}

TEST(field, zero_noise_gives_zero_field) {
    const auto f = gaussian_kernel(cov(1.0, 0.2, 2));
    const auto g = grid_for(0.2, 6, 2, Centering::centered_at_x);
    const std::vector<std::vector<double>> pts{{0.1, 0.2}, {0.55, -0.3}};
    const auto box = covering_box(g, pts);
    const WhiteNoiseGrid zero(box, std::vector<double>(box.size(), 0.0));
    for (const auto &x : pts) {
        EXPECT_EQ(evaluate_field(f, g, zero, x), 0.0);
    }
}

TEST(field, single_term_sum) {
    const auto f = gaussian_kernel(cov(1.0, 0.5, 1));
    GridSpec g;
    g.h = 0.3;
    g.radius = 0;
    g.dimension = 1;
    const WhiteNoiseGrid w(NoiseBox::cube(1, 0, 0), {1.0});
    const std::vector<double> x{0.2};
    const std::vector<double> y{-0.4};
    const std::vector<double> origin{0.0};
    EXPECT_NEAR(evaluate_field(f, g, w, x), std::sqrt(0.3) * f(x, origin), 1e-15);
    EXPECT_NEAR(discrete_covariance(f, g, x, y), 0.3 * f(x, origin) * f(y, origin), 1e-15);
}

TEST(field, missing_noise_is_an_error) {
    const auto f = gaussian_kernel(cov(1.0, 0.5, 1));
    const auto g = grid_for(0.5, 4, 1);
    const WhiteNoiseGrid w(NoiseBox::cube(1, -1, 1), {0.1, 0.2, 0.3});
    EXPECT_THROW(evaluate_field(f, g, w, std::vector<double>{0.0}), std::out_of_range);
}

TEST(field, linear_in_noise) {
    const auto f = gaussian_kernel(cov(1.3, 0.2, 2));
    const auto g = grid_for(0.2, 8, 2, Centering::centered_at_x);
    const std::vector<std::vector<double>> pts{{0.0, 0.0}, {0.31, 0.77}, {-0.4, 0.12}};
    const auto box = covering_box(g, pts);
    std::mt19937_64 rng(3);
    const auto w1 = normal_noise(box, rng);
    const auto w2 = normal_noise(box, rng);
    std::vector<double> sum(box.size());
    for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] = w1.values()[i] + w2.values()[i];
    }
    const WhiteNoiseGrid w12(box, sum);
    for (const auto &x : pts) {
        EXPECT_NEAR(evaluate_field(f, g, w12, x),
                    evaluate_field(f, g, w1, x) + evaluate_field(f, g, w2, x), 1e-12);
    }
}

TEST(field, rescaling_identity) {
    const double xi = 0.3;
    for (auto centering : {Centering::fixed_origin, Centering::centered_at_x}) {
        const auto f = gaussian_kernel(cov(1.0, 1.0, 2));
        const auto fs = f.rescaled(xi);
        auto g = grid_for(1.0, 6, 2, centering);
        auto gs = g;
        gs.h = xi * g.h;
        const std::vector<std::vector<double>> pts{{0.05, 0.11}, {-0.21, 0.37}, {0.48, -0.02}};
        std::vector<std::vector<double>> scaled;
        for (const auto &x : pts) {
            scaled.push_back({x[0] / xi, x[1] / xi});
        }
        const auto box = covering_box(g, scaled);
        std::mt19937_64 rng(17);
        const auto w = normal_noise(box, rng);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            EXPECT_NEAR(evaluate_field(fs, gs, w, pts[i]), evaluate_field(f, g, w, scaled[i]), 1e-12);
        }
    }
}

TEST(field, rescaled_gaussian_matches_shorter_length) {
    // Rescaling the unit-length kernel by xi gives the length-xi kernel.
    const auto f1 = gaussian_kernel(cov(2.0, 1.0, 2)).rescaled(0.25);
    const auto fq = gaussian_kernel(cov(2.0, 0.25, 2));
    const std::vector<double> x{0.1, 0.2};
    const std::vector<double> s{-0.05, 0.33};
    EXPECT_NEAR(f1(x, s), fq(x, s), 1e-13);
}

TEST(field, discrete_covariance_is_symmetric) {
    const auto f = gaussian_kernel(cov(1.0, 0.075, 2));
    const auto g = grid_for(0.075, 12, 2, Centering::centered_at_x);
    const std::vector<double> x{0.11, 0.52};
    const std::vector<double> y{0.17, 0.49};
    EXPECT_EQ(discrete_covariance(f, g, x, y), discrete_covariance(f, g, y, x));
}

TEST(field, discrete_covariance_matches_poisson_summation) {
    // For h = xi sqrt(2 pi / r), the lattice sum of the squared kernel at a
    // lattice point is (1 + 2 sum_k exp(-pi r k^2 / 4))^d by Poisson summation.
    const auto f = gaussian_kernel(cov(1.0, 0.075, 2));
    for (double r : {2.0, 4.0, 8.0, 12.0}) {
        const auto g = grid_for(0.075, r, 2);
        double one_d = 1.0;
        for (int k = 1; k < 20; ++k) {
            one_d += 2.0 * std::exp(-kPi * r * k * k / 4.0);
        }
        const std::vector<double> x{0.0, 0.0};
        EXPECT_NEAR(discrete_covariance(f, g, x, x), one_d * one_d, 1e-12) << "r=" << r;
    }
}

TEST(field, discrete_covariance_converges_monotonically) {
    const auto f = gaussian_kernel(cov(1.0, 0.075, 2));
    // At a lattice point the aliasing terms all carry the same sign; off the
    // lattice they oscillate with x / h and only their envelope is monotone.
    const std::vector<double> x{0.0, 0.0};
    double prev = INFINITY;
    bool reached = false;
    for (double r = 2.0; r <= 40.0; r += 2.0) {
        const auto g = grid_for(0.075, r, 2);
        const double err = std::abs(discrete_covariance(f, g, x, x) - 1.0);
        ASSERT_LT(err, prev) << "r=" << r;
        prev = err;
        if (err < 1e-10) {
            reached = true;
            break;
        }
    }
    EXPECT_TRUE(reached);
}

TEST(field, empirical_variance_matches_discrete_covariance) {
    const auto f = gaussian_kernel(cov(1.0, 0.3, 1));
    const auto g = grid_for(0.3, 8, 1, Centering::centered_at_x);
    const std::vector<double> x{0.37};
    const std::vector<double> y{0.52};
    const auto box = covering_box(g, {x, y});
    const auto p = PcgParams::pcg32();
    const int n = 10000;
    double sxx = 0, sxy = 0, sxx2 = 0, sxy2 = 0;
    for (int k = 0; k < n; ++k) {
        const auto w = sample_noise(box, NoiseDescriptor::pcg(derive_seed(p, 2024, k), p));
        const double a = evaluate_field(f, g, w, x);
        const double b = evaluate_field(f, g, w, y);
        sxx += a * a;
        sxx2 += a * a * a * a;
        sxy += a * b;
        sxy2 += a * b * a * b;
    }
    const double mxx = sxx / n;
    const double mxy = sxy / n;
    const double se_xx = std::sqrt((sxx2 / n - mxx * mxx) / n);
    const double se_xy = std::sqrt((sxy2 / n - mxy * mxy) / n);
    EXPECT_NEAR(mxx, discrete_covariance(f, g, x, x), 3 * se_xx);
    EXPECT_NEAR(mxy, discrete_covariance(f, g, x, y), 3 * se_xy);
}

TEST(field, derived_seeds_give_different_realizations) {
    const auto f = gaussian_kernel(cov(1.0, 0.2, 2));
    const auto g = grid_for(0.2, 4, 2, Centering::centered_at_x);
    const std::vector<std::vector<double>> pts{{0.1, 0.1}, {0.5, 0.5}, {0.9, 0.2}};
    const auto box = covering_box(g, pts);
    const auto p = PcgParams::small(6);
    const auto z0 = sample_noise(box, NoiseDescriptor::pcg(derive_seed(p, 45, 0), p));
    const auto z1 = sample_noise(box, NoiseDescriptor::pcg(derive_seed(p, 45, 1), p));
    int differ = 0;
    for (const auto &x : pts) {
        differ += evaluate_field(f, g, z0, x) != evaluate_field(f, g, z1, x);
    }
    EXPECT_GT(differ, 0);
}

TEST(field, field_map_matches_pointwise_evaluation) {
    const auto f = gaussian_kernel(cov(1.0, 0.2, 2));
    const auto g = grid_for(0.2, 4, 2, Centering::centered_at_x);
    const std::vector<std::vector<double>> pts{{0.0, 0.0}, {0.3, 0.8}, {0.6, 0.45}};
    const auto box = covering_box(g, pts);
    const auto w = sample_noise(box, NoiseDescriptor::clt(4, 9));
    const auto map = field_map(f, g, box, pts);
    const auto values = map.apply(w.values());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        EXPECT_NEAR(values[i], evaluate_field(f, g, w, pts[i]), 1e-12);
    }
}

TEST(coarsen, unit_factor_is_identity) {
    const auto box = NoiseBox::cube(2, -4, 5);
    const auto w = sample_noise(box, NoiseDescriptor::pcg(3));
    const auto c = coarsen_noise(w, 1, box);
    for (std::size_t i = 0; i < w.size(); ++i) {
        EXPECT_EQ(c.values()[i], w.values()[i]);
    }
}

TEST(coarsen, zero_noise_stays_zero) {
    const auto box = NoiseBox::cube(2, -20, 20);
    const WhiteNoiseGrid zero(box, std::vector<double>(box.size(), 0.0));
    const auto c = coarsen_noise(zero, 3, NoiseBox::cube(2, -5, 5));
    for (double v : c.values()) {
        EXPECT_EQ(v, 0.0);
    }
}

TEST(coarsen, matches_direct_double_sum) {
    const auto fine_box = NoiseBox{{-6, -4}, {7, 5}};
    const auto coarse_box = NoiseBox{{-2, -1}, {3, 2}};
    const auto w = sample_noise(fine_box, NoiseDescriptor::pcg(8));
    const int ell = 2;
    const auto c = coarsen_noise(w, ell, coarse_box);
    for (std::size_t r = 0; r < coarse_box.size(); ++r) {
        const Index j = coarse_box.site(r);
        double ref = 0.0;
        for (std::size_t p = 0; p < fine_box.size(); ++p) {
            const Index k = fine_box.site(p);
            const std::vector<double> s{static_cast<double>(k[0]) / ell - j[0],
                                        static_cast<double>(k[1]) / ell - j[1]};
            ref += sinc(s) * w.values()[p];
        }
        EXPECT_NEAR(c.values()[r], ref / ell, 1e-12);
    }
}

TEST(coarsen, unit_variance_in_one_dimension) {
    const auto fine_box = NoiseBox::cube(1, -400, 400);
    const auto coarse_box = NoiseBox::cube(1, 0, 0);
    const auto p = PcgParams::pcg32();
    const int n = 10000;
    double s2 = 0, s4 = 0;
    for (int k = 0; k < n; ++k) {
        const auto w = sample_noise(fine_box, NoiseDescriptor::pcg(derive_seed(p, 99, k), p));
        const double v = coarsen_noise(w, 2, coarse_box).values()[0];
        s2 += v * v;
        s4 += v * v * v * v;
    }
    const double var = s2 / n;
    const double se = std::sqrt((s4 / n - var * var) / n);
    EXPECT_NEAR(var, 1.0, 3 * se);
}

TEST(transform, examples) {
    EXPECT_EQ(transform_field(0.0, Transformation::cosine()), 1.0);
    EXPECT_EQ(transform_field(0.0, Transformation::sigmoid()), 0.5);
    const auto tp = Transformation::two_phase(0.1, 1.0, 10.0, 0.0);
    EXPECT_NEAR(transform_field(1e3, tp), 1.0, 1e-12);
    EXPECT_NEAR(transform_field(-1e3, tp), 0.1, 1e-12);
    EXPECT_NEAR(transform_field(0.0, tp), 0.55, 1e-15);
}

TEST(transform, ranges_hold_and_encodability_checked) {
    for (const auto &t : {Transformation::cosine(), Transformation::sigmoid(11.0),
                          Transformation::two_phase(0.1, 1.0, 10.0, 0.0)}) {
        for (double v = -30.0; v <= 30.0; v += 0.01) {
            const double z = t(v);
            EXPECT_GE(z, t.lo);
            EXPECT_LE(z, t.hi);
        }
    }
    EXPECT_NO_THROW(Transformation::cosine().require_encodable());
    EXPECT_NO_THROW(Transformation::sigmoid().require_encodable());
    EXPECT_THROW(Transformation::sigmoid(11.0).require_encodable(), std::invalid_argument);
    EXPECT_THROW(Transformation::identity().require_encodable(), std::invalid_argument);
}

TEST(export_, csv_layout) {
    std::ostringstream out;
    write_field_csv(out, {{0.5, 0.25}, {1.0, 0.0}}, std::vector<double>{0.125, -2.0}, "xi=0.1");
    EXPECT_EQ(out.str(), "# params: xi=0.1\nx0,x1,value\n0.5,0.25,0.125\n1,0,-2\n");
}

TEST(export_, pgm_layout) {
    std::ostringstream out;
    write_pgm(out, 3, 2, std::vector<double>{-1.0, 0.0, 1.0, 5.0, -5.0, 0.5}, -1.0, 1.0);
    EXPECT_EQ(out.str(), "P2\n3 2\n255\n0 128 255\n255 0 191\n");
    EXPECT_THROW(write_pgm(out, 1, 1, std::vector<double>{0.0}, 1.0, 1.0), std::invalid_argument);
}

TEST(export_, doubles_round_trip) {
    for (double v : {0.1, 1.0 / 3.0, -6.02e23, 5e-324}) {
        EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
    }
}

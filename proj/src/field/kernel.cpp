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

#include "qgrf/field/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qgrf {

namespace {

void check_dims(int d, std::span<const double> x, std::span<const double> y) {
    if (x.size() != static_cast<std::size_t>(d) || y.size() != static_cast<std::size_t>(d)) {
        throw std::invalid_argument("point dimension does not match the kernel dimension");
    }
}

}  // namespace

void CovarianceSpec::validate() const {
    if (kind != CovarianceKind::gaussian) {
        throw std::invalid_argument("only the gaussian covariance is supported");
    }
    if (!(variance > 0.0) || !std::isfinite(variance)) {
        throw std::invalid_argument("covariance variance must be positive");
    }
    if (!(correlation_length > 0.0) || !std::isfinite(correlation_length)) {
        throw std::invalid_argument("correlation length must be positive");
    }
    if (dimension < 1) {
        throw std::invalid_argument("dimension must be at least 1");
    }
}

double CovarianceSpec::operator()(std::span<const double> x, std::span<const double> y) const {
    check_dims(dimension, x, y);
    double dist2 = 0.0;
    for (int k = 0; k < dimension; ++k) {
        dist2 += (x[k] - y[k]) * (x[k] - y[k]);
    }
    return variance * std::exp(-dist2 / (2.0 * correlation_length * correlation_length));
}

double GaussianForm::factor(double t) const {
    return std::exp(-(t * t) / (length * length));
}

ConvolutionKernel::ConvolutionKernel(int dimension, Evaluator f, bool stationary, double gamma,
                                     double beta, std::optional<GaussianForm> gaussian)
    : dimension_(dimension),
      f_(std::move(f)),
      stationary_(stationary),
      gamma_(gamma),
      beta_(beta),
      gaussian_(gaussian) {
    if (dimension_ < 1) {
        throw std::invalid_argument("kernel dimension must be at least 1");
    }
    if (!f_) {
        throw std::invalid_argument("kernel evaluator is empty");
    }
}

double ConvolutionKernel::operator()(std::span<const double> x, std::span<const double> s) const {
    check_dims(dimension_, x, s);
    return f_(x, s);
}

ConvolutionKernel ConvolutionKernel::rescaled(double factor) const {
    if (!(factor > 0.0)) {
        throw std::invalid_argument("rescale factor must be positive");
    }
    const int d = dimension_;
    const double scale = std::pow(factor, -0.5 * d);
    Evaluator base = f_;
    Evaluator g = [base, factor, scale, d](std::span<const double> x, std::span<const double> s) {
        std::vector<double> xs(x.begin(), x.end());
        std::vector<double> ss(s.begin(), s.end());
        for (int k = 0; k < d; ++k) {
            xs[k] /= factor;
            ss[k] /= factor;
        }
        return scale * base(xs, ss);
    };
    std::optional<GaussianForm> form;
    if (gaussian_) {
        form = GaussianForm{gaussian_->amplitude * scale, gaussian_->length * factor};
    }
    return ConvolutionKernel(d, std::move(g), stationary_, gamma_ * scale, beta_ / factor, form);
}

ConvolutionKernel gaussian_kernel(const CovarianceSpec &cov) {
    cov.validate();
    const int d = cov.dimension;
    const double xi = cov.correlation_length;
    const double amplitude =
        std::sqrt(cov.variance) * std::pow(xi * xi * std::numbers::pi / 2.0, -0.25 * d);
    ConvolutionKernel::Evaluator f = [amplitude, xi, d](std::span<const double> x, std::span<const double> s) {
        double dist2 = 0.0;
        for (int k = 0; k < d; ++k) {
            dist2 += (x[k] - s[k]) * (x[k] - s[k]);
        }
        return amplitude * std::exp(-dist2 / (xi * xi));
    };
    // |x|^2 / xi^2 >= 2 |x| / xi - 1.
    return ConvolutionKernel(d, std::move(f), true, amplitude * std::numbers::e, 2.0 / xi,
                             GaussianForm{amplitude, xi});
}

}  // namespace qgrf

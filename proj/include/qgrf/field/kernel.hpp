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

#include <functional>
#include <optional>
#include <span>

namespace qgrf {

enum class CovarianceKind { gaussian };

/// c(x, y) = C exp(-|x - y|^2 / (2 xi^2)) on R^d.
struct CovarianceSpec {
    CovarianceKind kind = CovarianceKind::gaussian;
    double variance = 1.0;
    double correlation_length = 1.0;
    int dimension = 1;

    void validate() const;
    double operator()(std::span<const double> x, std::span<const double> y) const;
};

/// f(x, s) = amplitude * prod_k exp(-(x_k - s_k)^2 / length^2).
struct GaussianForm {
    double amplitude;
    double length;

    double factor(double t) const;
};

/// A kernel f(x, s) with documented exponential decay
/// |f(x, s)| <= gamma * exp(-beta |x - s|).
class ConvolutionKernel {
   public:
    using Evaluator = std::function<double(std::span<const double>, std::span<const double>)>;

    ConvolutionKernel(int dimension, Evaluator f, bool stationary, double gamma, double beta,
                      std::optional<GaussianForm> gaussian = std::nullopt);

    double operator()(std::span<const double> x, std::span<const double> s) const;

    int dimension() const { return dimension_; }
    bool stationary() const { return stationary_; }
    double gamma() const { return gamma_; }
    double beta() const { return beta_; }
    /// Present for separable Gaussian kernels; enables fast evaluators.
    const std::optional<GaussianForm> &gaussian_form() const { return gaussian_; }

    /// The kernel factor^{-d/2} f(x / factor, s / factor).
    ConvolutionKernel rescaled(double factor) const;

   private:
    int dimension_;
    Evaluator f_;
    bool stationary_;
    double gamma_;
    double beta_;
    std::optional<GaussianForm> gaussian_;
};

/// Convolutional square root of the Gaussian covariance:
/// f(x) = sqrt(C) (xi^2 pi / 2)^{-d/4} exp(-|x|^2 / xi^2).
ConvolutionKernel gaussian_kernel(const CovarianceSpec &cov);

}  // namespace qgrf

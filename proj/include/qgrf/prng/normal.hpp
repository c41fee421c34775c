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

/// Standard-normal quantile Phi^{-1}(p) for p in (0, 1). Wichura's PPND16
/// rational approximation refined by one Halley step against erfc, which
/// gives close to full double precision across the range.
double normal_quantile(double p);

/// Phi^{-1}((j + 1/2) / 2^bits) for 0 <= j < 2^bits, bits in [1, 52].
double inverse_cdf_sample(std::uint64_t j, unsigned bits);

}  // namespace qgrf

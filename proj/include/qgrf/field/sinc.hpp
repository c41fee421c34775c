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

#include <span>

namespace qgrf {

/// sin(pi s) / (pi s), exactly 1 at 0 and exactly 0 at nonzero integers.
double sinc(double s);

/// Product of sinc over the components of s.
double sinc(std::span<const double> s);

/// |sin(pi z)| / (pi |z|) for z = x + iy, equal to 1 at z = 0.
double sinc_complex_modulus(double x, double y);

}  // namespace qgrf

// Copyright 2026 The treekey authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace treekey {

// x^n by binary exponentiation with a fixed operation order, so results are
// bit-reproducible across call sites. pow_int(x, 0) == 1.0 for every x,
// including x == 0; several recursion boundary cases depend on 0^0 == 1.
//
// For x in [0, 1] the result is monotone non-decreasing in x: every
// intermediate is a product of non-negative values and IEEE rounding is
// monotone, which the optimizer's pruning bounds rely on.
double pow_int(double x, std::uint64_t n);

}  // namespace treekey

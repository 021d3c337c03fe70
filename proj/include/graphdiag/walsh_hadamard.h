// Copyright 2026 The graphdiag Authors
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

#ifndef GRAPHDIAG_WALSH_HADAMARD_H
#define GRAPHDIAG_WALSH_HADAMARD_H

#include <span>

namespace graphdiag {

/// In-place unnormalised Walsh-Hadamard transform:
/// out[x] = sum_y (-1)^{x.y} in[y]. Length must be a power of two.
void walsh_hadamard(std::span<double> data, int threads = 1);

/// XOR convolution out[m] = sum_v a[v] b[v ^ m], computed through two
/// transforms. Lengths must agree.
void xor_convolve_into(std::span<const double> a, std::span<const double> b, std::span<double> out);

}  // namespace graphdiag

#endif

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

#include "graphdiag/walsh_hadamard.h"

#include <bit>
#include <stdexcept>
#include <vector>

#include "graphdiag/summation.h"

namespace graphdiag {

void walsh_hadamard(std::span<double> data, int threads) {
    size_t len = data.size();
    if (len == 0 || !std::has_single_bit(len)) {
        throw std::invalid_argument("walsh_hadamard: length must be a power of two");
    }
    for (size_t h = 1; h < len; h <<= 1) {
        uint64_t groups = len / (2 * h);
        auto butterfly = [&](uint64_t g) {
            size_t base = g * 2 * h;
            for (size_t k = base; k < base + h; k++) {
                double a = data[k];
                double b = data[k + h];
                data[k] = a + b;
                data[k + h] = a - b;
            }
        };
        // Butterflies within a stage are independent, so thread count never
        // changes the arithmetic.
        if (threads > 1 && len >= (1u << 14)) {
            parallel_for(groups, threads, butterfly);
        } else {
            for (uint64_t g = 0; g < groups; g++) {
                butterfly(g);
            }
        }
    }
}

void xor_convolve_into(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    if (a.size() != b.size() || a.size() != out.size()) {
        throw std::invalid_argument("xor_convolve_into: length mismatch");
    }
    std::vector<double> fa(a.begin(), a.end()), fb(b.begin(), b.end());
    walsh_hadamard(fa);
    walsh_hadamard(fb);
    for (size_t k = 0; k < fa.size(); k++) {
        fa[k] *= fb[k];
    }
    walsh_hadamard(fa);
    double inv = 1.0 / (double)fa.size();
    for (size_t k = 0; k < fa.size(); k++) {
        out[k] = fa[k] * inv;
    }
}

}  // namespace graphdiag

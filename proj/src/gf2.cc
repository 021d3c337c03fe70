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

#include "graphdiag/gf2.h"

#include <bit>
#include <stdexcept>

#include "graphdiag/bitstring.h"

namespace graphdiag {

std::optional<Gf2Solution> gf2_solve(const std::vector<uint64_t> &rows, uint64_t rhs, int num_cols) {
    if (num_cols < 0 || num_cols > MAX_BITS) {
        throw std::invalid_argument("gf2_solve: column count outside [0, 63]");
    }
    if (rows.size() > 64) {
        throw std::invalid_argument("gf2_solve: at most 64 equations");
    }
    // Augment each row with its rhs bit in column 63.
    constexpr uint64_t RHS_BIT = uint64_t{1} << 63;
    std::vector<uint64_t> m;
    m.reserve(rows.size());
    for (size_t k = 0; k < rows.size(); k++) {
        if (rows[k] & ~low_mask(num_cols)) {
            throw std::invalid_argument("gf2_solve: row has bits beyond the column count");
        }
        m.push_back(rows[k] | (((rhs >> k) & 1) ? RHS_BIT : 0));
    }

    std::vector<int> pivot_cols;
    size_t r = 0;
    for (int c = 0; c < num_cols && r < m.size(); c++) {
        uint64_t bit = uint64_t{1} << c;
        size_t p = r;
        while (p < m.size() && !(m[p] & bit)) {
            p++;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[r], m[p]);
        for (size_t k = 0; k < m.size(); k++) {
            if (k != r && (m[k] & bit)) {
                m[k] ^= m[r];
            }
        }
        pivot_cols.push_back(c);
        r++;
    }
    for (size_t k = r; k < m.size(); k++) {
        if (m[k] == RHS_BIT) {
            return std::nullopt;
        }
    }

    Gf2Solution out;
    uint64_t pivot_mask = 0;
    for (size_t k = 0; k < pivot_cols.size(); k++) {
        pivot_mask |= uint64_t{1} << pivot_cols[k];
        if (m[k] & RHS_BIT) {
            out.particular |= uint64_t{1} << pivot_cols[k];
        }
    }
    for (int c = 0; c < num_cols; c++) {
        if ((pivot_mask >> c) & 1) {
            continue;
        }
        uint64_t v = uint64_t{1} << c;
        for (size_t k = 0; k < pivot_cols.size(); k++) {
            if ((m[k] >> c) & 1) {
                v |= uint64_t{1} << pivot_cols[k];
            }
        }
        out.nullspace.push_back(v);
    }
    return out;
}

int gf2_rank(std::vector<uint64_t> rows) {
    int rank = 0;
    for (size_t r = 0; r < rows.size(); r++) {
        if (!rows[r]) {
            continue;
        }
        rank++;
        uint64_t low = rows[r] & -rows[r];
        for (size_t k = r + 1; k < rows.size(); k++) {
            if (rows[k] & low) {
                rows[k] ^= rows[r];
            }
        }
    }
    return rank;
}

}  // namespace graphdiag

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

#ifndef GRAPHDIAG_GF2_H
#define GRAPHDIAG_GF2_H

#include <cstdint>
#include <optional>
#include <vector>

namespace graphdiag {

/// Solution set {particular + span(nullspace)} of a GF(2) linear system.
struct Gf2Solution {
    uint64_t particular = 0;
    std::vector<uint64_t> nullspace;
};

/// Solves rows * x = rhs over GF(2).
///
/// Row k is a bit mask over `num_cols` unknowns and bit k of `rhs` is its
/// right hand side. Returns nullopt when the system is inconsistent. The
/// nullspace basis is in reduced form: the highest set bit of each vector is
/// a free column that no other basis vector touches.
std::optional<Gf2Solution> gf2_solve(const std::vector<uint64_t> &rows, uint64_t rhs, int num_cols);

/// Rank of a set of row masks.
int gf2_rank(std::vector<uint64_t> rows);

}  // namespace graphdiag

#endif

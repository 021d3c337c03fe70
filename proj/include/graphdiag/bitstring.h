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

#ifndef GRAPHDIAG_BITSTRING_H
#define GRAPHDIAG_BITSTRING_H

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace graphdiag {

/// Largest supported number of vertices / qubits. Keeps every string in one word.
constexpr int MAX_BITS = 63;

inline constexpr uint64_t low_mask(int n) {
    return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

inline int popcount(uint64_t v) {
    return std::popcount(v);
}

/// Parity of the GF(2) inner product a.b.
inline int dot_parity(uint64_t a, uint64_t b) {
    return std::popcount(a & b) & 1;
}

/// An n-bit string. Bit i is vertex i; the text form lists vertex 0 first,
/// so "0101" has bits 1 and 3 set.
struct BitString {
    uint64_t bits = 0;
    int n = 0;

    BitString() = default;
    BitString(uint64_t bits, int n);

    static BitString zeros(int n);
    static BitString ones(int n);
    static BitString from_string(std::string_view text);

    bool operator[](int i) const {
        return (bits >> i) & 1;
    }
    BitString with_bit(int i, bool value) const;
    int weight() const {
        return std::popcount(bits);
    }
    bool is_zero() const {
        return bits == 0;
    }
    bool is_ones() const {
        return bits == low_mask(n);
    }
    BitString complement() const {
        return BitString(~bits & low_mask(n), n);
    }
    std::string str() const;

    BitString operator^(const BitString &other) const;
    BitString operator&(const BitString &other) const;
    bool operator==(const BitString &other) const = default;
};

std::ostream &operator<<(std::ostream &out, const BitString &b);

}  // namespace graphdiag

#endif

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

#include "graphdiag/bitstring.h"

#include <ostream>
#include <stdexcept>

namespace graphdiag {

static void check_length(int n) {
    if (n < 0 || n > MAX_BITS) {
        throw std::invalid_argument("bit string length " + std::to_string(n) + " outside [0, 63]");
    }
}

BitString::BitString(uint64_t bits, int n) : bits(bits), n(n) {
    check_length(n);
    if (bits & ~low_mask(n)) {
        throw std::invalid_argument("bit string has bits set above its length");
    }
}

BitString BitString::zeros(int n) {
    return BitString(0, n);
}

BitString BitString::ones(int n) {
    check_length(n);
    return BitString(low_mask(n), n);
}

BitString BitString::from_string(std::string_view text) {
    check_length((int)text.size());
    uint64_t bits = 0;
    for (size_t k = 0; k < text.size(); k++) {
        if (text[k] == '1') {
            bits |= uint64_t{1} << k;
        } else if (text[k] != '0') {
            throw std::invalid_argument("bit string '" + std::string(text) + "' contains a character other than 0/1");
        }
    }
    return BitString(bits, (int)text.size());
}

BitString BitString::with_bit(int i, bool value) const {
    if (i < 0 || i >= n) {
        throw std::out_of_range("bit index out of range");
    }
    uint64_t m = uint64_t{1} << i;
    return BitString(value ? (bits | m) : (bits & ~m), n);
}

std::string BitString::str() const {
    std::string result(n, '0');
    for (int k = 0; k < n; k++) {
        if ((bits >> k) & 1) {
            result[k] = '1';
        }
    }
    return result;
}

BitString BitString::operator^(const BitString &other) const {
    if (n != other.n) {
        throw std::invalid_argument("bit string length mismatch");
    }
    return BitString(bits ^ other.bits, n);
}

BitString BitString::operator&(const BitString &other) const {
    if (n != other.n) {
        throw std::invalid_argument("bit string length mismatch");
    }
    return BitString(bits & other.bits, n);
}

std::ostream &operator<<(std::ostream &out, const BitString &b) {
    return out << b.str();
}

}  // namespace graphdiag

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

#include <gtest/gtest.h>

namespace graphdiag {
namespace {

TEST(BitString, FromStringPutsVertexZeroFirst) {
    BitString b = BitString::from_string("1100");
    EXPECT_EQ(b.n, 4);
    EXPECT_TRUE(b[0]);
    EXPECT_TRUE(b[1]);
    EXPECT_FALSE(b[2]);
    EXPECT_EQ(b.str(), "1100");
    EXPECT_EQ(b.weight(), 2);
}

TEST(BitString, ComplementAndXor) {
    BitString a = BitString::from_string("1010");
    EXPECT_EQ(a.complement().str(), "0101");
    EXPECT_TRUE((a ^ a).is_zero());
    EXPECT_TRUE((a ^ a.complement()).is_ones());
}

TEST(BitString, DotParity) {
    EXPECT_EQ(dot_parity(0b1011, 0b0011), 0);
    EXPECT_EQ(dot_parity(0b1011, 0b0001), 1);
}

TEST(BitString, RejectsBadInput) {
    EXPECT_THROW(BitString::from_string("10a"), std::invalid_argument);
}

}  // namespace
}  // namespace graphdiag

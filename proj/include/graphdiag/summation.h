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

#ifndef GRAPHDIAG_SUMMATION_H
#define GRAPHDIAG_SUMMATION_H

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

namespace graphdiag {

/// Streaming pairwise (cascade) summation.
///
/// Terms are combined as a balanced binary tree in arrival order, so the
/// rounding pattern depends only on the term sequence. Summing aligned
/// power-of-two blocks separately and feeding the block totals to another
/// PairwiseSum gives bit-identical results.
class PairwiseSum {
   public:
    void add(double term) {
        abs_total_ += std::fabs(term);
        push(term, 0);
    }

    /// Adds the total of a block of 2^level terms, preserving the tree shape.
    void add_block(double block_sum, double block_abs, int level) {
        abs_total_ += block_abs;
        push(block_sum, level);
    }

    double total() const {
        // Collapse from the smallest partial upward so the result matches
        // the tree a full power-of-two block would have produced.
        double acc = 0;
        bool first = true;
        for (size_t k = stack_.size(); k-- > 0;) {
            acc = first ? stack_[k].value : stack_[k].value + acc;
            first = false;
        }
        return acc;
    }

    /// Sum of |terms|, the scale used for zero tolerances.
    double abs_total() const {
        return abs_total_;
    }

   private:
    struct Partial {
        double value;
        int level;
    };

    void push(double value, int level) {
        while (!stack_.empty() && stack_.back().level == level) {
            value = stack_.back().value + value;
            stack_.pop_back();
            level++;
        }
        stack_.push_back({value, level});
    }

    std::vector<Partial> stack_;
    double abs_total_ = 0;
};

/// Result of a reduction: value and the sum of absolute terms.
struct SumResult {
    double value = 0;
    double abs_total = 0;

    /// True when value is indistinguishable from zero at relative scale 1e-9.
    bool is_zero(double rel_tol = 1e-9) const {
        return std::fabs(value) <= rel_tol * abs_total;
    }
};

/// Runs fn(k) for k in [0, count) on up to `threads` workers, each taking a
/// contiguous index range.
template <typename Fn>
void parallel_for(uint64_t count, int threads, Fn &&fn) {
    uint64_t workers = std::max<uint64_t>(1, std::min<uint64_t>(threads <= 0 ? 1 : threads, count));
    if (workers <= 1) {
        for (uint64_t k = 0; k < count; k++) {
            fn(k);
        }
        return;
    }
    std::vector<std::thread> pool;
    uint64_t per = (count + workers - 1) / workers;
    for (uint64_t w = 0; w < workers; w++) {
        uint64_t lo = w * per;
        uint64_t hi = std::min(count, lo + per);
        if (lo >= hi) {
            break;
        }
        pool.emplace_back([lo, hi, &fn]() {
            for (uint64_t k = lo; k < hi; k++) {
                fn(k);
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
}

/// Pairwise reduction over [0, count) where block_fn(lo, hi, acc) feeds the
/// terms of one index range into `acc` in index order.
///
/// The range is cut into aligned blocks of 2^12 indices whose totals are
/// merged in block order, so the result does not depend on `threads`.
template <typename BlockFn>
SumResult parallel_pairwise_blocks(uint64_t count, int threads, BlockFn &&block_fn) {
    constexpr int BLOCK_LEVEL = 12;
    constexpr uint64_t BLOCK = uint64_t{1} << BLOCK_LEVEL;
    uint64_t num_blocks = count / BLOCK;
    std::vector<double> sums(num_blocks), abs_sums(num_blocks);
    parallel_for(num_blocks, threads, [&](uint64_t b) {
        PairwiseSum acc;
        block_fn(b * BLOCK, (b + 1) * BLOCK, acc);
        sums[b] = acc.total();
        abs_sums[b] = acc.abs_total();
    });
    PairwiseSum acc;
    for (uint64_t b = 0; b < num_blocks; b++) {
        acc.add_block(sums[b], abs_sums[b], BLOCK_LEVEL);
    }
    if (num_blocks * BLOCK < count) {
        block_fn(num_blocks * BLOCK, count, acc);
    }
    return {acc.total(), acc.abs_total()};
}

/// Pairwise sum of term(k) for k in [0, count), independent of `threads`.
template <typename Term>
SumResult parallel_pairwise_sum(uint64_t count, int threads, Term &&term) {
    return parallel_pairwise_blocks(count, threads, [&](uint64_t lo, uint64_t hi, PairwiseSum &acc) {
        for (uint64_t k = lo; k < hi; k++) {
            acc.add(term(k));
        }
    });
}

}  // namespace graphdiag

#endif

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

#include "graphdiag/distill.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "graphdiag/summation.h"
#include "graphdiag/walsh_hadamard.h"

namespace graphdiag {

namespace {

void check_sizes(int nA, int nB) {
    if (nA < 1 || nB < 1 || nA + nB > 20) {
        throw std::invalid_argument("distillation: need nA, nB >= 1 and nA + nB <= 20");
    }
}

void renormalise(std::vector<double> &v) {
    PairwiseSum sum;
    for (double x : v) {
        sum.add(x);
    }
    double total = sum.total();
    if (!(total > 0)) {
        throw std::runtime_error("distillation: table lost all weight");
    }
    for (double &x : v) {
        x /= total;
    }
}

/// XOR self-convolution of `width`-bit slices; stride selects the slice layout.
std::vector<double> self_convolve(const std::vector<double> &in, int nA, int nB, bool over_b) {
    uint64_t a = uint64_t{1} << nA;
    uint64_t b = uint64_t{1} << nB;
    std::vector<double> out(in.size());
    uint64_t slices = over_b ? a : b;
    uint64_t len = over_b ? b : a;
    std::vector<double> buf(len);
    for (uint64_t fixed = 0; fixed < slices; fixed++) {
        auto index = [&](uint64_t k) { return over_b ? (fixed | (k << nA)) : (k | (fixed << nA)); };
        for (uint64_t k = 0; k < len; k++) {
            buf[k] = in[index(k)];
        }
        // sum_v f(v) f(v ^ m) is the inverse transform of the squared spectrum.
        walsh_hadamard(buf);
        for (double &x : buf) {
            x *= x;
        }
        walsh_hadamard(buf);
        for (uint64_t k = 0; k < len; k++) {
            out[index(k)] = buf[k] / (double)len;
        }
    }
    renormalise(out);
    return out;
}

}  // namespace

DistillTable DistillTable::global_depolarised(int nA, int nB, double alpha) {
    return ReducedCoeffs::global_depolarised(nA, nB, alpha).to_table();
}

DistillTable p1_step(const DistillTable &t) {
    check_sizes(t.nA, t.nB);
    return {t.nA, t.nB, self_convolve(t.lambda, t.nA, t.nB, true)};
}

DistillTable p2_step(const DistillTable &t) {
    check_sizes(t.nA, t.nB);
    return {t.nA, t.nB, self_convolve(t.lambda, t.nA, t.nB, false)};
}

double ReducedCoeffs::norm() const {
    double a = std::ldexp(1.0, nA) - 1;
    double b = std::ldexp(1.0, nB) - 1;
    return l00 + a * lx0 + b * l0x + a * b * lxx;
}

ReducedCoeffs ReducedCoeffs::normalised() const {
    double t = norm();
    if (!(t > 0)) {
        throw std::runtime_error("ReducedCoeffs: zero total weight");
    }
    return {l00 / t, lx0 / t, l0x / t, lxx / t, nA, nB};
}

DistillTable ReducedCoeffs::to_table() const {
    check_sizes(nA, nB);
    DistillTable t{nA, nB, std::vector<double>(uint64_t{1} << (nA + nB))};
    uint64_t amask = (uint64_t{1} << nA) - 1;
    for (uint64_t k = 0; k < t.lambda.size(); k++) {
        bool ax = k & amask;
        bool bx = k >> nA;
        t.lambda[k] = ax ? (bx ? lxx : lx0) : (bx ? l0x : l00);
    }
    return t;
}

std::optional<ReducedCoeffs> ReducedCoeffs::from_table(const DistillTable &t, double tol) {
    check_sizes(t.nA, t.nB);
    uint64_t a = uint64_t{1} << t.nA;
    ReducedCoeffs c{t.lambda[0], t.lambda[1], t.lambda[a], t.lambda[a + 1], t.nA, t.nB};
    if (c.to_table().lambda.size() != t.lambda.size()) {
        return std::nullopt;
    }
    auto expected = c.to_table().lambda;
    for (size_t k = 0; k < expected.size(); k++) {
        if (std::fabs(expected[k] - t.lambda[k]) > tol) {
            return std::nullopt;
        }
    }
    return c;
}

ReducedCoeffs ReducedCoeffs::global_depolarised(int nA, int nB, double alpha) {
    check_sizes(nA, nB);
    if (!(alpha >= 0)) {
        throw std::invalid_argument("global depolarised alpha must be >= 0");
    }
    double d = std::ldexp(1.0, nA + nB) + alpha;
    double rest = 1 / d;
    return {(1 + alpha) / d, rest, rest, rest, nA, nB};
}

ReducedCoeffs reduced_step(const ReducedCoeffs &c) {
    check_sizes(c.nA, c.nB);
    double a = std::ldexp(1.0, c.nA);
    double b = std::ldexp(1.0, c.nB);
    // P1: convolution over the B index at fixed muA.
    double L00 = c.l00 * c.l00 + (b - 1) * c.l0x * c.l0x;
    double L0x = c.l0x * (2 * c.l00 + (b - 2) * c.l0x);
    double Lx0 = c.lx0 * c.lx0 + (b - 1) * c.lxx * c.lxx;
    double Lxx = c.lxx * (2 * c.lx0 + (b - 2) * c.lxx);
    // P2: convolution over the A index at fixed muB.
    ReducedCoeffs out;
    out.nA = c.nA;
    out.nB = c.nB;
    out.l00 = L00 * L00 + (a - 1) * Lx0 * Lx0;
    out.lx0 = Lx0 * (2 * L00 + (a - 2) * Lx0);
    out.l0x = L0x * L0x + (a - 1) * Lxx * Lxx;
    out.lxx = Lxx * (2 * L0x + (a - 2) * Lxx);
    return out.normalised();
}

std::string attractor_name(Attractor a) {
    switch (a) {
        case Attractor::Pure:
            return "pure";
        case Attractor::Mixed:
            return "mixed";
        case Attractor::HalfPurified:
            return "half-purified";
        default:
            return "undecided";
    }
}

namespace {

Attractor classify(const ReducedCoeffs &c) {
    if (c.l00 > 1 - 1e-9) {
        return Attractor::Pure;
    }
    double u = std::ldexp(1.0, -(c.nA + c.nB));
    double dev = std::max({std::fabs(c.l00 - u), std::fabs(c.lx0 - u), std::fabs(c.l0x - u), std::fabs(c.lxx - u)});
    if (dev < 1e-9) {
        return Attractor::Mixed;
    }
    // One colour class error free, the other uniformly random.
    double uA = std::ldexp(1.0, -c.nA);
    double uB = std::ldexp(1.0, -c.nB);
    double rowB = std::max({std::fabs(c.l00 - uB), std::fabs(c.l0x - uB), c.lx0, c.lxx});
    double colA = std::max({std::fabs(c.l00 - uA), std::fabs(c.lx0 - uA), c.l0x, c.lxx});
    return std::min(rowB, colA) < 1e-9 ? Attractor::HalfPurified : Attractor::Undecided;
}

}  // namespace

DistillRun iterate_to_attractor(const ReducedCoeffs &start, int max_steps) {
    DistillRun run;
    run.final = start.normalised();
    for (;;) {
        run.attractor = classify(run.final);
        if (run.attractor != Attractor::Undecided || run.steps >= max_steps) {
            return run;
        }
        run.final = reduced_step(run.final);
        run.steps++;
    }
}

DistillRun verify_distillation(int nA, int nB, double alpha, int max_steps) {
    return iterate_to_attractor(ReducedCoeffs::global_depolarised(nA, nB, alpha), max_steps);
}

std::optional<double> distillability_threshold(int nA, int nB) {
    check_sizes(nA, nB);
    if (nA != nB) {
        return std::nullopt;
    }
    return std::ldexp(1.0, nA);
}

double locate_attractor_flip(int nA, int nB, double lo, double hi, double tol) {
    Attractor lo_class = verify_distillation(nA, nB, lo).attractor;
    Attractor hi_class = verify_distillation(nA, nB, hi).attractor;
    if (lo_class == hi_class || lo_class == Attractor::Undecided || hi_class == Attractor::Undecided) {
        throw std::invalid_argument("locate_attractor_flip: ends of the bracket must reach different attractors");
    }
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        Attractor a = verify_distillation(nA, nB, mid).attractor;
        if (a == lo_class) {
            lo = mid;
        } else if (a == hi_class) {
            hi = mid;
        } else {
            throw std::runtime_error("locate_attractor_flip: bracket contains a third attractor at alpha = " +
                                     std::to_string(mid));
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<AttractorBoundary> scan_attractor_boundaries(int nA, int nB, double lo, double hi, int points,
                                                         double tol) {
    if (points < 2 || !(hi > lo)) {
        throw std::invalid_argument("scan_attractor_boundaries: need points >= 2 and hi > lo");
    }
    std::vector<AttractorBoundary> out;
    double prev_alpha = lo;
    Attractor prev = verify_distillation(nA, nB, lo).attractor;
    for (int k = 1; k < points; k++) {
        double alpha = lo + (hi - lo) * k / (points - 1);
        Attractor a = verify_distillation(nA, nB, alpha).attractor;
        if (a != prev) {
            double at = prev == Attractor::Undecided || a == Attractor::Undecided
                            ? 0.5 * (prev_alpha + alpha)
                            : locate_attractor_flip(nA, nB, prev_alpha, alpha, tol);
            out.push_back({at, prev, a});
        }
        prev = a;
        prev_alpha = alpha;
    }
    return out;
}

}  // namespace graphdiag

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

#ifndef GRAPHDIAG_DISTILL_H
#define GRAPHDIAG_DISTILL_H

#include <optional>
#include <string>
#include <vector>

namespace graphdiag {

/// Graph-basis weights lambda_{muA, muB} stored at index muA | (muB << nA).
struct DistillTable {
    int nA = 0;
    int nB = 0;
    std::vector<double> lambda;

    static DistillTable global_depolarised(int nA, int nB, double alpha);
};

/// lambda'_{muA,muB} = sum_{nuB} lambda_{muA,nuB} lambda_{muA,nuB ^ muB}, renormalised.
DistillTable p1_step(const DistillTable &t);
/// lambda'_{muA,muB} = sum_{nuA} lambda_{nuA,muB} lambda_{nuA ^ muA,muB}, renormalised.
DistillTable p2_step(const DistillTable &t);

/// Tables where lambda depends only on (muA != 0, muB != 0).
struct ReducedCoeffs {
    double l00 = 0;
    double lx0 = 0;
    double l0x = 0;
    double lxx = 0;
    int nA = 0;
    int nB = 0;

    double norm() const;
    ReducedCoeffs normalised() const;
    DistillTable to_table() const;
    /// nullopt when the table is not structured to within `tol`.
    static std::optional<ReducedCoeffs> from_table(const DistillTable &t, double tol = 1e-12);
    static ReducedCoeffs global_depolarised(int nA, int nB, double alpha);
};

/// P1 followed by P2 in closed form, renormalised.
ReducedCoeffs reduced_step(const ReducedCoeffs &c);

enum class Attractor { Pure, Mixed, HalfPurified, Undecided };

std::string attractor_name(Attractor a);

struct DistillRun {
    Attractor attractor = Attractor::Undecided;
    int steps = 0;
    ReducedCoeffs final;
};

/// Iterates reduced_step: pure once l00 > 1 - 1e-9, mixed once every weight is
/// within 1e-9 of 2^-N. Half-purified once one colour class is error free and
/// the other uniform (l00 = 2^-nB = l0x, lx0 = lxx = 0 or the mirror image).
/// That point attracts a window of alpha around 2^{N/2}. Undecided after `max_steps`.
DistillRun iterate_to_attractor(const ReducedCoeffs &start, int max_steps = 10000);

/// Global-depolarised run from rho = (1 + alpha |psi><psi|) / (2^N + alpha).
DistillRun verify_distillation(int nA, int nB, double alpha, int max_steps = 10000);

/// 2^{N/2} when nA = nB, from (1 + alpha)/(2^N + alpha) = 2^{-nA}; else nullopt.
std::optional<double> distillability_threshold(int nA, int nB);

/// Bisection in alpha for the boundary between the attractors reached at lo and hi.
double locate_attractor_flip(int nA, int nB, double lo, double hi, double tol = 1e-9);

struct AttractorBoundary {
    double alpha = 0;
    Attractor below = Attractor::Undecided;
    Attractor above = Attractor::Undecided;
};

/// Every change of attractor on a uniform alpha grid over [lo, hi], each refined by bisection.
std::vector<AttractorBoundary> scan_attractor_boundaries(int nA, int nB, double lo, double hi, int points = 201,
                                                         double tol = 1e-9);

}  // namespace graphdiag

#endif

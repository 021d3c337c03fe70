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

#include "graphdiag/chain.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "graphdiag/ppt.h"

namespace graphdiag {
namespace {

const double kLimit = 3 - 2 * std::sqrt(2.0);

TEST(ChainF, SmallCases) {
    EXPECT_NEAR(chain_f(1, 0.4), 0.6, 1e-15);
    EXPECT_NEAR(chain_f(3, 0.2), 0.352, 1e-15);
    EXPECT_NEAR(chain_f(4, 0.2), 0.1984, 1e-15);
}

TEST(ChainF, AgreesWithBothGenericEvaluators) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> unit(0.0, 0.99);
    for (int n = 2; n <= 16; n++) {
        Graph g = Graph::chain(n);
        uint64_t z = two_colouring(g).colouring->bits;
        for (int k = 0; k < 20; k++) {
            double s = unit(rng);
            double f = chain_f(n, s);
            EXPECT_NEAR(f, fast_bipartite_f(g, s), 1e-10);
            EXPECT_NEAR(f, pt_eigenvalue_sum(DiagonalState::thermal(g, s), g.all_vertices(), z).value, 1e-10);
        }
    }
}

TEST(ChainF, EigenvalueEnvelopeDecay) {
    // Complex roots with |r|^2 = 2s: f^n oscillates under an envelope shrinking by 2s every two sites.
    double s = 0.4;
    auto envelope = [&](int n) {
        double m = 0;
        for (int k = n; k < n + 20; k++) {
            m = std::max(m, std::fabs(chain_f(k, s)));
        }
        return m;
    };
    double per_two_sites = std::pow(envelope(120) / envelope(60), 2.0 / 60);
    EXPECT_NEAR(per_two_sites, 2 * s, 0.05 * 2 * s);
}

TEST(ChainRoots, DoubleRootAtLimit) {
    auto [a, b] = chain_roots(kLimit);
    EXPECT_NEAR(a.real(), 2 - std::sqrt(2.0), 1e-7);
    EXPECT_NEAR(b.real(), 2 - std::sqrt(2.0), 1e-7);
    EXPECT_EQ(a.imag(), 0);
}

TEST(ChainRoots, ZeroAndComplexPair) {
    auto [a, b] = chain_roots(0);
    EXPECT_NEAR(std::max(a.real(), b.real()), 1, 1e-15);
    EXPECT_NEAR(std::min(a.real(), b.real()), 0, 1e-15);
    auto [c, d] = chain_roots(0.5);
    EXPECT_NE(c.imag(), 0);
    EXPECT_NEAR(std::norm(c), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(c - std::conj(d)), 0, 1e-15);
}

TEST(ChainCritical, LimitAndFirstTerm) {
    EXPECT_NEAR(chain_critical_limit(), 0.17157287525381, 1e-13);
    EXPECT_NEAR(chain_critical_s(2), std::sqrt(2.0) - 1, 1e-12);
    EXPECT_GT(chain_critical_s(12) - kLimit, 0);
}

TEST(ChainCritical, DecreasesMonotonicallyToLimit) {
    auto series = chain_critical_series(40);
    for (int n = 2; n <= 40; n++) {
        EXPECT_GT(series[n - 1], kLimit);
        EXPECT_LT(series[n - 1], series[n - 2]);
        EXPECT_NEAR(chain_f(n, series[n - 1]), 0, 1e-9);
    }
}

TEST(ChainInhomogeneous, ReducesToHomogeneous) {
    std::vector<double> one{0.37};
    EXPECT_NEAR(chain_f_inhomogeneous(one), 0.63, 1e-15);
    std::vector<double> three{0.2, 0.2, 0.2};
    EXPECT_NEAR(chain_f_inhomogeneous(three), 0.352, 1e-15);
}

TEST(ChainInhomogeneous, MatchesDirectEvaluator) {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> unit(0.0, 0.95);
    for (int k = 0; k < 30; k++) {
        int n = 1 + k % 10;
        std::vector<double> s(n);
        for (double &v : s) {
            v = unit(rng);
        }
        Graph g = Graph::chain(n);
        double direct = n == 1 ? 1 - s[0]
                               : pt_eigenvalue_sum(DiagonalState::inhomogeneous(g, s), g.all_vertices(),
                                                   two_colouring(g).colouring->bits)
                                     .value;
        EXPECT_NEAR(chain_f_inhomogeneous(s), direct, 1e-12);
    }
}

TEST(Perturbation, ZeroSigmaReproducesUnperturbed) {
    PerturbationStats st = perturbation_scan(8, 0, 5, 42);
    for (double t : st.t_over_delta) {
        EXPECT_NEAR(t, st.unperturbed, 1e-10);
    }
    EXPECT_NEAR(st.unperturbed, Temperature::from_s(chain_critical_s(8)).t_over_delta, 1e-10);
    EXPECT_NEAR(st.std_dev, 0, 1e-10);
}

TEST(Perturbation, UniformGapsMatchChainThreshold) {
    std::vector<double> deltas(6, 2.0);
    double beta = inhomogeneous_critical_beta(deltas);
    EXPECT_NEAR(std::tanh(beta * 2.0 / 2), chain_critical_s(6), 1e-10);
}

TEST(Perturbation, EachSampleIsARoot) {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> gap(1.0, 0.1);
    for (int k = 0; k < 10; k++) {
        std::vector<double> deltas(7);
        for (double &d : deltas) {
            d = gap(rng);
        }
        double beta = inhomogeneous_critical_beta(deltas);
        auto f_at = [&](double b) {
            std::vector<double> s(deltas.size());
            for (size_t i = 0; i < s.size(); i++) {
                s[i] = std::tanh(b * deltas[i] / 2);
            }
            return chain_f_inhomogeneous(s);
        };
        EXPECT_NEAR(f_at(beta), 0, 1e-9);
        // First root: positive on a fine grid below it.
        for (int j = 1; j < 200; j++) {
            ASSERT_GT(f_at(beta * j / 200), 0);
        }
    }
}

TEST(Perturbation, StatisticsAreSampleMoments) {
    PerturbationStats st = perturbation_scan(10, 0.1, 100, 7);
    ASSERT_EQ(st.t_over_delta.size(), 100u);
    double mean = std::accumulate(st.t_over_delta.begin(), st.t_over_delta.end(), 0.0) / 100;
    double ss = 0;
    for (double t : st.t_over_delta) {
        ss += (t - mean) * (t - mean);
    }
    EXPECT_NEAR(st.mean, mean, 1e-12);
    EXPECT_NEAR(st.std_dev, std::sqrt(ss / 99), 1e-12);
    EXPECT_EQ(st.min, *std::min_element(st.t_over_delta.begin(), st.t_over_delta.end()));
    EXPECT_EQ(st.max, *std::max_element(st.t_over_delta.begin(), st.t_over_delta.end()));
    // Distribution overlaps the unperturbed point.
    EXPECT_LT(st.min, st.unperturbed);
    EXPECT_GT(st.max, st.unperturbed);
}

TEST(Perturbation, ReproducibleAndThreadIndependent) {
    PerturbationStats a = perturbation_scan(9, 0.1, 40, 123, 1);
    PerturbationStats b = perturbation_scan(9, 0.1, 40, 123, 3);
    PerturbationStats c = perturbation_scan(9, 0.1, 40, 124, 1);
    EXPECT_EQ(a.t_over_delta, b.t_over_delta);
    EXPECT_NE(a.t_over_delta, c.t_over_delta);
}

TEST(ZField, NoFieldIsIdentity) {
    ZFieldResult r = zfield_effective_beta(0.7, 0);
    ASSERT_TRUE(r.solvable);
    EXPECT_NEAR(r.beta, 0.7, 1e-12);
}

TEST(ZField, InfiniteChainRatio) {
    double beta0 = std::log(std::sqrt(2.0));
    ZFieldResult r = zfield_effective_beta(beta0, 1.0);
    ASSERT_TRUE(r.solvable);
    double root = std::sqrt(2.0);
    // Defining relation, checked directly.
    EXPECT_NEAR(std::tanh(0.5 * r.beta * root) / root, std::tanh(0.5 * beta0), 1e-14);
    EXPECT_NEAR(beta0 / r.beta, 0.990, 0.002);
}

TEST(ZField, LargeFieldSaturates) {
    EXPECT_FALSE(zfield_effective_beta(2.0, 10).solvable);
}

}  // namespace
}  // namespace graphdiag

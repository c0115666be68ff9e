// Copyright 2026 The chainbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chainbell/randomness.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chainbell/rng.h"

namespace chainbell {
namespace {

constexpr double kPi = std::numbers::pi;

// Oracle: P(a,b) = (1 + ab <A_i B_j>)/4 with zero marginals, using the
// closed-form correlation at the reference realization.
double oracle_bits(int n, int i, int j) {
    double c = predicted_correlation(n, j - i);
    double pmax = 0;
    for (int ab : {1, -1}) {
        pmax = std::max(pmax, (1 + ab * c) / 4);
    }
    return -std::log2(pmax);
}

// Oracle for the normalized noise model: P(a,b) = (s + b eps + ab C)/(4 s).
double oracle_noisy_bits(int n, int i, int j, double eps) {
    double s = std::sqrt(1 + eps * eps);
    double c = predicted_correlation(n, j - i);
    double pmax = 0;
    for (int a : {1, -1}) {
        for (int b : {1, -1}) {
            pmax = std::max(pmax, (s + b * eps + a * b * c) / (4 * s));
        }
    }
    return -std::log2(pmax);
}

TEST(OutcomeProbability, Examples) {
    for (int n : {3, 4, 7}) {
        Realization r = reference_realization(n);
        EXPECT_NEAR(outcome_probability(r, 2, 2, 1, 1), (1 + std::cos(kPi / (2 * n))) / 4, 1e-12);
    }
    for (int n : {3, 5, 9}) {
        Realization r = reference_realization(n);
        for (int a : {1, -1}) {
            for (int b : {1, -1}) {
                EXPECT_NEAR(outcome_probability(r, 1, 1 + (n - 1) / 2, a, b), 0.25, 1e-12);
            }
        }
    }
    EXPECT_THROW(outcome_probability(reference_realization(3), 1, 1, 0, 1), std::invalid_argument);
    EXPECT_THROW(outcome_probability(reference_realization(3), 1, 1, 1, 2), std::invalid_argument);
}

TEST(OutcomeProbability, MarginalsOnMaximallyEntangledState) {
    // Traceless observables have zero marginal on |phi+>.
    std::vector<Observable> a, b;
    for (int i = 1; i <= 3; i++) {
        a.push_back(Observable::dichotomic(xz_observable(0.7 * i), Party::alice, i));
        b.push_back(Observable::dichotomic(xz_observable(0.3 * i), Party::bob, i));
    }
    Realization r(ChainScenario(3, 2), maximally_entangled(2), a, b);
    for (int i = 1; i <= 3; i++) {
        for (int j = 1; j <= 3; j++) {
            for (int x : {1, -1}) {
                EXPECT_NEAR(outcome_probability(r, i, j, x, 1) + outcome_probability(r, i, j, x, -1), 0.5, 1e-12);
                EXPECT_NEAR(outcome_probability(r, i, j, 1, x) + outcome_probability(r, i, j, -1, x), 0.5, 1e-12);
            }
        }
    }
}

TEST(OutcomeProbability, Normalization) {
    Rng rng(12);
    for (int t = 0; t < 20; t++) {
        std::vector<Observable> a, b;
        for (int i = 1; i <= 4; i++) {
            a.push_back(Observable::dichotomic(random_balanced_dichotomic(rng, 2), Party::alice, i));
            b.push_back(Observable::dichotomic(random_balanced_dichotomic(rng, 2), Party::bob, i));
        }
        Realization r(ChainScenario(4, 2), random_state(rng, 4), a, b);
        for (int i = 1; i <= 4; i++) {
            for (int j = 1; j <= 4; j++) {
                double total = 0;
                for (int x : {1, -1}) {
                    for (int y : {1, -1}) {
                        double p = outcome_probability(r, i, j, x, y);
                        EXPECT_GE(p, -1e-12);
                        EXPECT_LE(p, 1 + 1e-12);
                        total += p;
                    }
                }
                EXPECT_NEAR(total, 1, 1e-12);
                double bits = randomness_bits(r, i, j);
                EXPECT_GE(bits, 0);
                EXPECT_LE(bits, 2 + 1e-12);
            }
        }
    }
}

TEST(RandomnessBits, Examples) {
    EXPECT_NEAR(randomness_bits(reference_realization(3), 2, 3), 2, 1e-12);
    for (int n : {3, 6, 10}) {
        EXPECT_NEAR(randomness_bits(reference_realization(n), 1, 1), std::log2(4 / (1 + std::cos(kPi / (2 * n)))),
                    1e-10);
    }
    // Brute-force table for n = 3, j = i.
    Realization r = reference_realization(3);
    double pmax = 0;
    for (int a : {1, -1}) {
        for (int b : {1, -1}) {
            pmax = std::max(pmax, outcome_probability(r, 1, 1, a, b));
        }
    }
    EXPECT_NEAR(-std::log2(pmax), 1.1001, 1e-4);
    EXPECT_NEAR(randomness_bits(r, 1, 1), std::log2(4 / (1 + std::cos(kPi / 6))), 1e-12);
}

TEST(RandomnessBits, ExhaustiveOracle) {
    for (int n = 2; n <= 11; n++) {
        Realization r = reference_realization(n);
        for (int i = 1; i <= n; i++) {
            for (int j = 1; j <= n; j++) {
                EXPECT_NEAR(randomness_bits(r, i, j), oracle_bits(n, i, j), 1e-10) << n << " " << i << " " << j;
            }
        }
    }
}

TEST(ClosedForms, Examples) {
    EXPECT_NEAR(r_min_closed(3), 1.1001, 1e-4);
    EXPECT_EQ(r_max_closed(3), 2);
    EXPECT_NEAR(r_min_closed(101), 1, 1e-3);
    EXPECT_THROW(r_max_closed(4), std::invalid_argument);
    for (int n = 3; n < 40; n++) {
        EXPECT_GT(r_min_closed(n), r_min_closed(n + 1));
        EXPECT_GT(r_min_closed(n), 1);
    }
}

TEST(NoisyClosedForms, Examples) {
    for (int n : {3, 5, 7}) {
        NoisyRandomness z = noisy_randomness(n, 0);
        EXPECT_NEAR(z.r_min, r_min_closed(n), 1e-15);
        ASSERT_TRUE(z.r_max.has_value());
        EXPECT_NEAR(*z.r_max, 2, 1e-15);
    }
    NoisyRandomness p = noisy_randomness(3, 0.1);
    EXPECT_NEAR(*p.r_max, std::log2(4 * std::sqrt(1.01) / (std::sqrt(1.01) + 0.1)), 1e-15);
    EXPECT_NEAR(*p.r_max, 1.86315, 1e-5);
    EXPECT_LT(noisy_randomness(5, 0.05).r_min, r_min_closed(5));
    EXPECT_FALSE(noisy_randomness(4, 0.1).r_max.has_value());
    EXPECT_THROW(noisy_randomness(3, -0.01), std::invalid_argument);
}

TEST(NoisyClosedForms, Monotone) {
    for (int n : {3, 5, 11}) {
        NoisyRandomness prev = noisy_randomness(n, 0);
        for (int k = 1; k <= 300; k++) {
            NoisyRandomness cur = noisy_randomness(n, 0.001 * k);
            EXPECT_LE(cur.r_min, prev.r_min + 1e-15);
            EXPECT_LE(*cur.r_max, *prev.r_max + 1e-15);
            prev = cur;
        }
    }
}

TEST(Report, FiveSettingsNoiseless) {
    RandomnessReport rep = empirical_randomness(reference_realization(5), NoiseModel{0, true});
    EXPECT_EQ(rep.n, 5);
    EXPECT_EQ(rep.epsilon, 0);
    for (int i = 1; i <= 5; i++) {
        for (int j = 1; j <= 5; j++) {
            EXPECT_NEAR(rep.per_pair_bits[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)],
                        oracle_bits(5, i, j), 1e-10);
        }
    }
    EXPECT_NEAR(rep.r_max, 2, 1e-12);
    for (auto [i, j] : rep.max_pairs) {
        int d = ((j - i) % 5 + 5) % 5;
        EXPECT_TRUE(d == 2 || d == 3) << i << "," << j;
    }
    EXPECT_NEAR(rep.r_min, r_min_closed(5), 1e-10);
}

TEST(Report, NineSettingsPairing) {
    RandomnessReport rep = randomness_report(reference_realization(9));
    EXPECT_NEAR(rep.r_max, 2, 1e-12);
    for (int i = 1; i + 4 <= 9; i++) {
        EXPECT_NEAR(rep.per_pair_bits[static_cast<size_t>(i - 1)][static_cast<size_t>(i + 3)], 2, 1e-12);
    }
}

TEST(Report, RMinOverBellPairsOnly) {
    RandomnessReport rep = randomness_report(reference_realization(4));
    auto [i, j] = rep.min_pair;
    EXPECT_TRUE(j == i || (i == 1 && j == 4) || j == i - 1);
    double m = 3;
    for (const auto &row : rep.per_pair_bits) {
        m = std::min(m, *std::min_element(row.begin(), row.end()));
    }
    EXPECT_LE(m, rep.r_min);
}

TEST(Empirical, NoisyMatchesClosedForms) {
    for (int n : {3, 5, 7, 9, 11}) {
        for (double eps : {0.0, 0.02, 0.05, 0.1}) {
            RandomnessReport rep = empirical_randomness(reference_realization(n), NoiseModel{eps, true});
            NoisyRandomness closed = noisy_randomness(n, eps);
            EXPECT_NEAR(rep.r_min, closed.r_min, 1e-10);
            EXPECT_NEAR(rep.r_max, *closed.r_max, 1e-10);
            EXPECT_NEAR(rep.per_pair_bits[0][0], oracle_noisy_bits(n, 1, 1, eps), 1e-10);
        }
    }
}

TEST(Empirical, RejectsUnnormalizedModel) {
    EXPECT_THROW(empirical_randomness(reference_realization(3), NoiseModel{0.1, false}), std::invalid_argument);
}

}  // namespace
}  // namespace chainbell

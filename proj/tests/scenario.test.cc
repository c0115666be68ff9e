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

#include "chainbell/scenario.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "chainbell/rng.h"
#include "test_util.h"

namespace chainbell {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(ChainScenario, Validates) {
    EXPECT_NO_THROW(ChainScenario(2, 2));
    EXPECT_NO_THROW(ChainScenario(5, 4));
    EXPECT_THROW(ChainScenario(1, 2), std::invalid_argument);
    EXPECT_THROW(ChainScenario(3, 3), std::invalid_argument);
    EXPECT_THROW(reference_realization(1), std::invalid_argument);
}

TEST(Observable, DichotomicRejectsNonInvolution) {
    EXPECT_THROW(Observable::dichotomic(2.0 * pauli::Z(), Party::alice, 1), std::invalid_argument);
    EXPECT_THROW(Observable::dichotomic(CMat{{0, 1}, {0, 0}}, Party::bob, 1), std::invalid_argument);
    EXPECT_NO_THROW(Observable::general(2.0 * pauli::Z(), Party::alice, 1));
    EXPECT_EQ(Observable::dichotomic(pauli::X(), Party::bob, 3).label(), "B3");
}

TEST(ReferenceRealization, ThreeSettingForms) {
    Realization r = reference_realization(3);
    const double h = std::sqrt(3.0) / 2;
    EXPECT_LE(max_abs_diff(r.A(1), pauli::Z()), 1e-15);
    EXPECT_LE(max_abs_diff(r.A(2), h * pauli::X() + 0.5 * pauli::Z()), 1e-15);
    EXPECT_LE(max_abs_diff(r.A(3), h * pauli::X() - 0.5 * pauli::Z()), 1e-15);
    EXPECT_LE(max_abs_diff(r.B(2), pauli::X()), 1e-15);
    EXPECT_THROW(r.A(0), std::invalid_argument);
    EXPECT_THROW(r.B(4), std::invalid_argument);
}

TEST(ReferenceRealization, FourSettingBobAngle) {
    Realization r = reference_realization(4);
    EXPECT_LE(max_abs_diff(r.B(3), testing::bloch_xz(5 * kPi / 8)), 1e-15);
}

TEST(ReferenceRealization, AllObservablesDichotomic) {
    for (int n = 2; n <= 16; n++) {
        Realization r = reference_realization(n);
        EXPECT_TRUE(r.all_dichotomic());
        for (int i = 1; i <= n; i++) {
            EXPECT_TRUE(is_involutory(r.A(i)));
            EXPECT_TRUE(is_involutory(r.B(i)));
        }
        EXPECT_NEAR(vec_norm(r.state()), 1, 1e-12);
    }
}

TEST(Bounds, Values) {
    EXPECT_DOUBLE_EQ(classical_bound(3), 4);
    EXPECT_NEAR(quantum_optimum(3), 3 * std::sqrt(3.0), 1e-14);
    EXPECT_DOUBLE_EQ(classical_bound(11), 20);
    EXPECT_NEAR(quantum_optimum(11), 22 * std::cos(kPi / 22), 1e-14);
    EXPECT_NEAR(quantum_optimum(11), 21.77607, 1e-5);
    EXPECT_DOUBLE_EQ(classical_bound(2), 2);
    EXPECT_NEAR(quantum_optimum(2), 2 * std::sqrt(2.0), 1e-14);
    for (int n = 2; n <= 40; n++) {
        EXPECT_GT(quantum_optimum(n), classical_bound(n));
    }
}

TEST(BellOperator, TopEigenvalueAndValues) {
    EXPECT_NEAR(testing::eigen_top(bell_operator(reference_realization(3))), 3 * std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(bell_value(reference_realization(3)), 3 * std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(bell_value(reference_realization(5)), 10 * std::cos(kPi / 10), 1e-12);
    EXPECT_NEAR(bell_value(reference_realization(4)), 4 * std::sqrt(2 + std::sqrt(2.0)), 1e-12);
    EXPECT_NEAR(bell_value(reference_realization(7)), 14 * std::cos(kPi / 14), 1e-12);
    EXPECT_NEAR(bell_value(reference_realization(7)), 13.64899, 1e-5);
}

TEST(BellOperator, ReferenceMatchesOptimumForAllN) {
    for (int n = 2; n <= 16; n++) {
        EXPECT_NEAR(bell_value(reference_realization(n)), quantum_optimum(n), 1e-10) << "n=" << n;
    }
}

TEST(BellOperator, HermitianAndVariational) {
    Rng rng(8);
    for (int n : {3, 4, 6}) {
        std::vector<Observable> a, b;
        for (int i = 1; i <= n; i++) {
            a.push_back(Observable::dichotomic(random_balanced_dichotomic(rng, 2), Party::alice, i));
            b.push_back(Observable::dichotomic(random_balanced_dichotomic(rng, 2), Party::bob, i));
        }
        Realization r(ChainScenario(n, 2), random_state(rng, 4), a, b);
        CMat c = bell_operator(r);
        EXPECT_LE(hermiticity_defect(c), 1e-12);
        EXPECT_GE(testing::eigen_top(c) + 1e-12, bell_value(r));
    }
}

TEST(BellOperator, ProductStateStaysClassical) {
    for (int n = 2; n <= 11; n++) {
        Realization r = reference_realization(n).with_state(CVec::basis(4, 0));
        EXPECT_LE(bell_value(r), classical_bound(n) + 1e-9);
    }
}

TEST(BellOperator, OracleFromHandBuiltObservables) {
    // Independent construction with an explicit wrap-around term.
    for (int n : {3, 4, 5}) {
        CMat sum = CMat::zeros(4, 4);
        for (int i = 1; i <= n; i++) {
            CMat ai = testing::bloch_xz((i - 1) * kPi / n);
            CMat anext = i < n ? testing::bloch_xz(i * kPi / n) : -1.0 * testing::bloch_xz(0);
            CMat bi = testing::bloch_xz((2 * i - 1) * kPi / (2 * n));
            sum += kron(ai + anext, bi);
        }
        EXPECT_LE(max_abs_diff(sum, bell_operator(reference_realization(n))), 1e-14);
    }
}

TEST(Correlation, Examples) {
    for (int n : {3, 5, 8}) {
        Realization r = reference_realization(n);
        for (int i = 1; i <= n; i++) {
            EXPECT_NEAR(correlation(r, i, i), std::cos(kPi / (2 * n)), 1e-12);
        }
    }
    for (int n : {3, 5, 7, 9}) {
        Realization r = reference_realization(n);
        for (int i = 1; i + (n - 1) / 2 <= n; i++) {
            EXPECT_NEAR(correlation(r, i, i + (n - 1) / 2), 0, 1e-12);
        }
    }
    EXPECT_NEAR(correlation(reference_realization(3), 1, 3), -std::sqrt(3.0) / 2, 1e-12);
    EXPECT_THROW(correlation(reference_realization(3), 1, 4), std::invalid_argument);
}

TEST(Correlation, PredictedForm) {
    for (int n : {3, 4, 5, 11}) {
        EXPECT_NEAR(predicted_correlation(n, 0), std::cos(kPi / (2 * n)), 1e-14);
        EXPECT_NEAR(predicted_correlation(n, -1), std::cos(kPi / (2 * n)), 1e-14);
    }
    EXPECT_NEAR(predicted_correlation(5, 2), 0, 1e-15);
}

TEST(Correlation, ExhaustiveAgainstClosedForm) {
    for (int n = 2; n <= 11; n++) {
        Realization r = reference_realization(n);
        for (int i = 1; i <= n; i++) {
            for (int j = 1; j <= n; j++) {
                EXPECT_NEAR(correlation(r, i, j), predicted_correlation(n, j - i), 1e-10) << n << " " << i << " " << j;
            }
        }
    }
}

TEST(ReferenceRealization, FourDimensionalEmbedding) {
    for (int n : {3, 4}) {
        Realization r = reference_realization(n, 4);
        EXPECT_EQ(r.dim(), 4u);
        EXPECT_NEAR(bell_value(r), quantum_optimum(n), 1e-10);
        EXPECT_NEAR(testing::eigen_top(bell_operator(r)), quantum_optimum(n), 1e-10);
    }
}

TEST(Realization, ValidatesInputs) {
    Realization r = reference_realization(3);
    EXPECT_THROW(r.with_state(CVec{1, 1, 0, 0}), std::invalid_argument);
    EXPECT_THROW(Realization(ChainScenario(3, 2), r.state(), r.alice(), {r.bob()[0], r.bob()[1]}),
                 std::invalid_argument);
    EXPECT_THROW(Realization(ChainScenario(3, 2), r.state(), r.bob(), r.alice()), std::invalid_argument);
}

}  // namespace
}  // namespace chainbell

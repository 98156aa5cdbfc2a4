// Copyright 2026 The etensor Authors
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

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace etensor {
namespace {

const double kEq = 1 / std::sqrt(3.0);

PureState qutrit_ghz(int n, double a, double b, double c) {
    const std::vector<double> coeffs{a, b, c};
    return ghz_state(3, n, coeffs);
}

TEST(Measure, EqualThreeQutritGhzValue) {
    const auto r = et_pure(qutrit_ghz(3, kEq, kEq, kEq));
    EXPECT_NEAR(r.tensor_norm, std::sqrt(67.5), 1e-12);
    EXPECT_NEAR(r.baseline, std::sqrt(27.0), 1e-12);
    EXPECT_NEAR(r.et, 3.0196, 5e-4);
    EXPECT_NEAR(r.et, std::sqrt(67.5) - std::sqrt(27.0), 1e-12);
}

TEST(Measure, KnownStatesAgainstIndependentBruteForce) {
    // Values computed with an independent numpy implementation.
    VectorXcd w = VectorXcd::Zero(27);
    w(9) = w(3) = w(1) = kEq;
    EXPECT_NEAR(et_pure(PureState(3, 3, w)).et, 2.1523168056429034, 1e-12);

    VectorXcd bell = VectorXcd::Zero(4);
    bell(0) = bell(3) = 1 / std::sqrt(2.0);
    EXPECT_NEAR(et_pure(PureState(2, 2, bell)).et, std::sqrt(3.0) - 1, 1e-12);

    VectorXcd mes = VectorXcd::Zero(16);
    for (int i = 0; i < 4; ++i) mes(5 * i) = 0.5;
    EXPECT_NEAR(et_pure(PureState(4, 2, mes)).et, 1.745966692414834, 1e-12);
}

TEST(Measure, BaselineIsProductStateNorm) {
    EXPECT_NEAR(product_baseline(3, 3), std::sqrt(27.0), 1e-12);
    EXPECT_NEAR(product_baseline(2, 5), 1.0, 1e-15);
    EXPECT_NEAR(product_baseline(4, 2), 6.0, 1e-12);
    for (int d : {2, 3, 4})
        for (int n : {1, 2, 3}) {
            const auto p = random_product_state(d, n, static_cast<std::uint64_t>(10 * d + n));
            const auto r = et_pure(p);
            EXPECT_NEAR(r.et, 0.0, 1e-10);
            EXPECT_LT(factorization_residual(p), 1e-10);
        }
}

TEST(Measure, EntangledStatesHaveNonzeroFactorizationResidual) {
    EXPECT_GT(factorization_residual(qutrit_ghz(3, kEq, kEq, kEq)), 1.0);
}

TEST(GhzClosedForm, MatchesBruteForceAcrossSizes) {
    // Frozen from the independent implementation, coefficients (0.6, 0.48, 0.64).
    const double want[] = {1.215310152290102, 2.956134284714789, 8.263510132067577, 20.17212420366267};
    for (int n = 2; n <= 5; ++n) {
        const double closed = et_ghz_closed_form(n, 0.6, 0.48, 0.64);
        EXPECT_NEAR(closed, want[n - 2], 1e-10) << "n = " << n;
        EXPECT_NEAR(et_pure(qutrit_ghz(n, 0.6, 0.48, 0.64)).et, closed, 1e-10) << "n = " << n;
    }
}

TEST(GhzClosedForm, TruncatedOddRangeDropsTheAllDiagonalEntry) {
    // alpha != beta exposes the (alpha^2 - beta^2) term at odd n.
    EXPECT_NEAR(et_pure(qutrit_ghz(3, 0.8, 0.6, 0.0)).et, 2.2196145639239475, 1e-12);
    EXPECT_NEAR(et_ghz_closed_form(3, 0.8, 0.6, 0.0), 2.2196145639239475, 1e-12);
    EXPECT_NEAR(et_ghz_truncated_odd_range(3, 0.8, 0.6, 0.0), 2.1591568841818276, 1e-12);
    for (int n : {2, 4, 6})
        EXPECT_NEAR(et_ghz_truncated_odd_range(n, 0.8, 0.6, 0.0), et_ghz_closed_form(n, 0.8, 0.6, 0.0), 1e-12);
    // With alpha = beta the missing term vanishes.
    EXPECT_NEAR(et_ghz_truncated_odd_range(5, kEq, kEq, kEq), et_ghz_closed_form(5, kEq, kEq, kEq), 1e-12);
}

TEST(GhzClosedForm, ThreeQutritFormulaAgreesWithGeneralForm) {
    Rng rng(4);
    std::normal_distribution<double> g;
    for (int t = 0; t < 20; ++t) {
        double a = g(rng), b = g(rng), c = g(rng);
        const double s = std::sqrt(a * a + b * b + c * c);
        a /= s, b /= s, c /= s;
        EXPECT_NEAR(et_ghz3_formula(a, b, c), et_ghz_closed_form(3, a, b, c), 1e-10);
    }
}

TEST(GhzClosedForm, ProductLimitsAndValidation) {
    EXPECT_NEAR(et_ghz_closed_form(3, 0, 0, 1), 0.0, 1e-12);
    EXPECT_NEAR(et_ghz_closed_form(4, 1, 0, 0), 0.0, 1e-12);
    EXPECT_THROW(et_ghz_closed_form(3, 1, 1, 0), std::invalid_argument);
    EXPECT_THROW(et_ghz_closed_form(1, 1, 0, 0), std::invalid_argument);
    EXPECT_TRUE(std::isfinite(et_ghz_closed_form(40, kEq, kEq, kEq)));
}

TEST(TwoQutrit, ConcurrenceFormMatchesBruteForce) {
    Rng rng(8);
    std::normal_distribution<double> g;
    for (int t = 0; t < 25; ++t) {
        double a = g(rng), b = g(rng), c = g(rng);
        const double s = std::sqrt(a * a + b * b + c * c);
        a /= s, b /= s, c /= s;
        EXPECT_NEAR(et_from_concurrence_2qutrit(a, b, c), et_pure(qutrit_ghz(2, a, b, c)).et, 1e-10);
    }
    EXPECT_NEAR(concurrence_2qutrit(kEq, kEq, kEq), std::sqrt(4.0 / 3.0), 1e-12);
    EXPECT_NEAR(et_from_concurrence_2qutrit(kEq, kEq, kEq), 3 * std::sqrt(2.0) - 3, 1e-12);
    EXPECT_NEAR(concurrence_2qutrit(0, 1, 0), 0.0, 1e-15);
    EXPECT_NEAR(et_from_concurrence_2qutrit(0, 1, 0), 0.0, 1e-12);
}

TEST(Superadditivity, HoldsAndNormsMultiply) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto r = check_superadditivity(random_pure_state(3, 2, 2 * s), random_pure_state(3, 2, 2 * s + 1));
        EXPECT_TRUE(r.holds());
        EXPECT_LT(r.multiplicativity_gap, 1e-10);
    }
}

TEST(Superadditivity, EnforcesEntryBudget) {
    const auto a = random_pure_state(3, 4, 1);
    EXPECT_THROW(check_superadditivity(a, a), BudgetError);
    EXPECT_THROW(check_superadditivity(random_pure_state(2, 2, 1), a), std::invalid_argument);
    EXPECT_NO_THROW(check_superadditivity(random_pure_state(3, 2, 1), random_pure_state(3, 2, 2), 4096));
}

TEST(SymmetricFastPath, MeasureAgreesWithDefaultPath) {
    const auto g = qutrit_ghz(4, 0.6, 0.48, 0.64);
    EXPECT_NEAR(et_pure(g, {.symmetric_fastpath = true}).et, et_pure(g).et, 1e-10);
}

}  // namespace
}  // namespace etensor

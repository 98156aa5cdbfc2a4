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

#include "etensor/su_algebra.hpp"

#include <gtest/gtest.h>

namespace etensor {
namespace {

MatrixXcd m3(std::initializer_list<Complex> v) {
    MatrixXcd m(3, 3);
    auto it = v.begin();
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m(r, c) = *it++;
    return m;
}

TEST(SuAlgebra, QubitGeneratorsArePauliMatrices) {
    const auto& gs = generators(2);
    ASSERT_EQ(gs.count(), 3);
    const Complex i(0, 1);
    MatrixXcd x(2, 2), y(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    y << 0, -i, i, 0;
    z << 1, 0, 0, -1;
    EXPECT_LT((gs[0] - x).norm(), 1e-15);
    EXPECT_LT((gs[1] - y).norm(), 1e-15);
    EXPECT_LT((gs[2] - z).norm(), 1e-15);
}

TEST(SuAlgebra, QutritGeneratorsFollowGellMannOrder) {
    const auto& gs = generators(3);
    ASSERT_EQ(gs.count(), 8);
    const Complex i(0, 1), o(0, 0), l(1, 0);
    const double r3 = 1 / std::sqrt(3.0);
    const std::vector<MatrixXcd> want{
        m3({o, l, o, l, o, o, o, o, o}),   m3({o, -i, o, i, o, o, o, o, o}),
        m3({l, o, o, o, -l, o, o, o, o}),  m3({o, o, l, o, o, o, l, o, o}),
        m3({o, o, -i, o, o, o, i, o, o}),  m3({o, o, o, o, o, l, o, l, o}),
        m3({o, o, o, o, o, -i, o, i, o}),  m3({r3 * l, o, o, o, r3 * l, o, o, o, -2 * r3 * l}),
    };
    for (int k = 0; k < 8; ++k) EXPECT_LT((gs[k] - want[static_cast<std::size_t>(k)]).norm(), 1e-15) << "generator " << k;
}

TEST(SuAlgebra, QutritStructureConstantsMatchTabulatedValues) {
    const auto& gs = generators(3);
    const double s3 = std::sqrt(3.0);
    // 0-based indices: f(0,1,2) is f_123 in the usual 1-based labelling.
    EXPECT_NEAR(gs.f()(0, 1, 2), 1.0, 1e-14);
    EXPECT_NEAR(gs.f()(0, 3, 6), 0.5, 1e-14);
    EXPECT_NEAR(gs.f()(0, 4, 5), -0.5, 1e-14);
    EXPECT_NEAR(gs.f()(1, 3, 5), 0.5, 1e-14);
    EXPECT_NEAR(gs.f()(2, 3, 4), 0.5, 1e-14);
    EXPECT_NEAR(gs.f()(3, 4, 7), s3 / 2, 1e-14);
    EXPECT_NEAR(gs.f()(5, 6, 7), s3 / 2, 1e-14);
    EXPECT_NEAR(gs.g()(0, 0, 7), 1 / s3, 1e-14);
    EXPECT_NEAR(gs.g()(3, 3, 7), -1 / (2 * s3), 1e-14);
    EXPECT_NEAR(gs.g()(7, 7, 7), -1 / s3, 1e-14);
    EXPECT_NEAR(gs.g()(0, 3, 5), 0.5, 1e-14);
    EXPECT_NEAR(gs.g()(1, 4, 5), 0.5, 1e-14);
}

TEST(SuAlgebra, InvariantsHoldForSeveralDimensions) {
    for (int d = 2; d <= 6; ++d) {
        const auto c = check_algebra(generators(d));
        EXPECT_TRUE(c.passed()) << "d = " << d;
        EXPECT_EQ(c.count, d * d - 1);
        EXPECT_LE(c.max_orthonormality, 1e-12);
        EXPECT_LE(c.max_reconstruction, 1e-10);
    }
}

TEST(SuAlgebra, SparseFormMatchesDenseGenerators) {
    for (int d : {2, 3, 4}) {
        const auto& gs = generators(d);
        for (int a = 0; a < gs.count(); ++a) {
            MatrixXcd m = MatrixXcd::Zero(d, d);
            for (const auto& e : gs.sparse(a)) m(e.row, e.col) += e.value;
            EXPECT_LT((m - gs[a]).norm(), 1e-15);
        }
    }
}

TEST(SuAlgebra, DiagonalGeneratorsAreLastForGeneralDimension) {
    const auto& gs = generators(4);
    for (int a = 12; a < 15; ++a) EXPECT_LT((gs[a] - MatrixXcd(gs[a].diagonal().asDiagonal())).norm(), 1e-15);
    const double s6 = std::sqrt(6.0);
    EXPECT_NEAR(gs[14](3, 3).real(), -3 / s6, 1e-15);
}

TEST(SuAlgebra, CachedSetIsSharedAndFreshBuildAgrees) {
    EXPECT_EQ(&generators(3), &generators(3));
    const auto fresh = build_generators(3);
    for (int a = 0; a < 8; ++a) EXPECT_EQ(fresh[a], generators(3)[a]);
}

TEST(SuAlgebra, RejectsDimensionBelowTwo) {
    EXPECT_THROW(build_generators(1), std::domain_error);
    EXPECT_THROW(build_generators(0), std::domain_error);
}

}  // namespace
}  // namespace etensor

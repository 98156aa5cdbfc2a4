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

void expect_matches_oracle(const PureState& psi, const std::vector<int>& sites, double tol = 1e-12) {
    const auto got = correlation_tensor(psi, sites);
    const auto want = oracle::tensor(psi.amplitudes(), psi.d(), psi.n(), sites);
    ASSERT_EQ(got.size(), want.size());
    double worst = 0;
    for (std::size_t f = 0; f < want.size(); ++f) worst = std::max(worst, std::abs(got[f] - want[f]));
    EXPECT_LT(worst, tol) << "d=" << psi.d() << " n=" << psi.n() << " order=" << sites.size();
}

TEST(CorrelationTensor, FullTensorMatchesKroneckerObservables) {
    std::uint64_t seed = 100;
    for (int d : {2, 3, 4})
        for (int n = 1; n <= 3; ++n) {
            std::vector<int> all(static_cast<std::size_t>(n));
            std::iota(all.begin(), all.end(), 0);
            expect_matches_oracle(random_pure_state(d, n, seed++), all);
        }
}

TEST(CorrelationTensor, LeadingSitesBeyondGramTailMatchOracle) {
    // d=3, n=4 and d=2, n=6 both need generator application on leading sites.
    expect_matches_oracle(random_pure_state(3, 4, 1), {0, 1, 2, 3});
    expect_matches_oracle(random_pure_state(2, 6, 2), {0, 1, 2, 3, 4, 5});
}

TEST(CorrelationTensor, SubsystemTensorsMatchOracle) {
    const auto psi = random_pure_state(3, 4, 77);
    for (const std::vector<int>& s : std::vector<std::vector<int>>{{0}, {2}, {0, 3}, {1, 2}, {0, 1, 3}})
        expect_matches_oracle(psi, s);
}

TEST(CorrelationTensor, DensityRouteMatchesPureRoute) {
    const auto psi = random_pure_state(3, 3, 4);
    const auto rho = to_density(psi);
    for (const std::vector<int>& s : std::vector<std::vector<int>>{{1}, {0, 2}, {0, 1, 2}}) {
        const auto a = correlation_tensor(psi, s);
        const auto b = correlation_tensor(rho, s);
        for (std::size_t f = 0; f < a.size(); ++f) EXPECT_NEAR(a[f], b[f], 1e-12);
    }
}

TEST(CorrelationTensor, SingleEntryMatchesFullTensor) {
    const auto psi = random_pure_state(3, 3, 8);
    const auto t = correlation_tensor(psi);
    const std::vector<int> all{0, 1, 2};
    for (std::size_t f : {std::size_t{0}, std::size_t{73}, std::size_t{511}}) {
        const auto idx = t.unflat(f);
        EXPECT_NEAR(correlation_entry(psi, all, idx), t[f], 1e-12);
    }
}

TEST(CorrelationTensor, RejectsBadSubsystems) {
    const auto psi = random_pure_state(3, 3, 1);
    EXPECT_THROW(correlation_tensor(psi, std::vector<int>{2, 1}), std::invalid_argument);
    EXPECT_THROW(correlation_tensor(psi, std::vector<int>{0, 0}), std::invalid_argument);
    EXPECT_THROW(correlation_tensor(psi, std::vector<int>{3}), std::invalid_argument);
}

TEST(CorrelationTensor, EqualGhzThreeQutritEntries) {
    const double c = 1 / std::sqrt(3.0);
    const std::vector<double> coeffs{c, c, c};
    const auto t = correlation_tensor(ghz_state(3, 3, coeffs));
    // (27/8) <l1 l1 l1> with <l1 l1 l1> = 2 alpha beta; symmetric and antisymmetric mixes
    EXPECT_NEAR(t.at({0, 0, 0}), 27.0 / 8.0 * 2 * c * c, 1e-12);
    EXPECT_NEAR(t.at({0, 1, 1}), -27.0 / 8.0 * 2 * c * c, 1e-12);
    EXPECT_NEAR(t.at({1, 1, 1}), 0.0, 1e-12);
    EXPECT_NEAR(t.at({2, 2, 2}), 0.0, 1e-12);
    EXPECT_NEAR(t.at({7, 7, 7}), 27.0 / 8.0 * (c * c + c * c - 8 * c * c) / (3 * std::sqrt(3.0)), 1e-12);
    EXPECT_NEAR(tensor_norm(t), std::sqrt(67.5), 1e-12);
}

TEST(BlochVector, PureStatesReachOuterRadius) {
    for (int d : {2, 3, 4}) {
        const auto psi = random_pure_state(d, 1, static_cast<std::uint64_t>(d));
        EXPECT_NEAR(bloch_vector(psi, 0).norm(), bloch_outer_radius(d), 1e-12);
    }
    const auto mixed = DensityMatrix(3, 1, MatrixXcd::Identity(3, 3) / 3.0);
    EXPECT_NEAR(bloch_vector(mixed).norm(), 0.0, 1e-15);
    EXPECT_NEAR(bloch_inner_radius(3), std::sqrt(0.75), 1e-15);
}

TEST(BlochVector, ProductStateTensorIsOuterProduct) {
    const auto p = random_product_state(3, 3, 21);
    std::vector<BlochVector> s;
    for (int q = 0; q < 3; ++q) s.push_back(bloch_vector(p, q));
    const auto o = outer_product(s, {0, 1, 2});
    const auto t = correlation_tensor(p);
    for (std::size_t f = 0; f < t.size(); ++f) EXPECT_NEAR(t[f], o[f], 1e-12);
}

TEST(Unfolding, PreservesNormAndFoldsBack) {
    const auto t = correlation_tensor(random_pure_state(3, 3, 5));
    for (int k = 0; k < 3; ++k) {
        const MatrixXd m = matrix_unfolding(t, k);
        EXPECT_EQ(m.rows(), 8);
        EXPECT_EQ(m.cols(), 64);
        EXPECT_NEAR(m.norm(), tensor_norm(t), 1e-12);
        EXPECT_EQ(fold(m, k, t).values(), t.values());
    }
    EXPECT_THROW(matrix_unfolding(t, 3), std::invalid_argument);
}

TEST(Unfolding, ModeProductContractsTheChosenAxis) {
    const auto t = correlation_tensor(random_pure_state(2, 3, 6));
    MatrixXd m = MatrixXd::Zero(3, 3);
    m(0, 2) = 1;
    m(1, 1) = 2;
    m(2, 0) = -1;
    const auto r = k_mode_product(t, m, 1);
    for (int a = 0; a < 3; ++a)
        for (int c = 0; c < 3; ++c) {
            EXPECT_NEAR(r.at({a, 0, c}), t.at({a, 2, c}), 1e-15);
            EXPECT_NEAR(r.at({a, 1, c}), 2 * t.at({a, 1, c}), 1e-15);
            EXPECT_NEAR(r.at({a, 2, c}), -t.at({a, 0, c}), 1e-15);
        }
    const auto id = k_mode_product(t, MatrixXd::Identity(3, 3), 2);
    EXPECT_EQ(id.values(), t.values());
}

TEST(SymmetricTensor, MatchesFullTensorWithFewerEvaluations) {
    // Symmetrized random state on 4 qutrits.
    const auto seed_state = random_pure_state(3, 4, 31);
    VectorXcd sym = VectorXcd::Zero(81);
    std::vector<int> perm{0, 1, 2, 3};
    do {
        VectorXcd v = seed_state.amplitudes();
        // Apply the permutation as a sequence of adjacent swaps via bubble sort.
        std::vector<int> p = perm;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j + 1 < p.size() - i; ++j)
                if (p[j] > p[j + 1]) {
                    std::swap(p[j], p[j + 1]);
                    v = detail::swap_sites(v, 3, 4, static_cast<int>(j), static_cast<int>(j) + 1);
                }
        sym += v;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto psi = PureState::normalized(3, 4, sym);
    ASSERT_EQ(exchange_symmetry(psi), 1);
    const auto fast = correlation_tensor_symmetric(psi);
    const auto full = correlation_tensor(psi);
    EXPECT_EQ(fast.representatives, 330u);
    for (std::size_t f = 0; f < full.size(); ++f) EXPECT_NEAR(fast.tensor[f], full[f], 1e-10);
}

TEST(SymmetricTensor, AntisymmetricStatesAreAccepted) {
    VectorXcd v = VectorXcd::Zero(9);
    v(1) = 1 / std::sqrt(2.0);
    v(3) = -1 / std::sqrt(2.0);
    const PureState psi(3, 2, v);
    EXPECT_EQ(exchange_symmetry(psi), -1);
    const auto fast = correlation_tensor_symmetric(psi);
    const auto full = correlation_tensor(psi);
    for (std::size_t f = 0; f < full.size(); ++f) EXPECT_NEAR(fast.tensor[f], full[f], 1e-12);
}

TEST(SymmetricTensor, RejectsStatesWithoutExchangeSymmetry) {
    const auto psi = random_pure_state(3, 3, 2);
    EXPECT_EQ(exchange_symmetry(psi), 0);
    EXPECT_THROW(correlation_tensor_symmetric(psi), SymmetryError);
}

TEST(ExtendedTensor, ReconstructsRandomDensityMatrices) {
    for (int m = 1; m <= 2; ++m)
        for (std::uint64_t s = 0; s < 5; ++s) {
            Rng rng(s);
            const auto dim = static_cast<Eigen::Index>(std::pow(3, m));
            const MatrixXcd g = ginibre(dim, dim, rng);
            MatrixXcd rho = g * g.adjoint();
            rho /= rho.trace().real();
            const DensityMatrix dm(3, m, rho);
            const auto ext = extended_tensor(dm);
            EXPECT_EQ(ext.sectors().size(), std::size_t{1} << m);
            EXPECT_DOUBLE_EQ(ext.sector({})[0], 1.0);
            EXPECT_LT((ext.reconstruct() - rho).cwiseAbs().maxCoeff(), 1e-12);
        }
}

}  // namespace
}  // namespace etensor

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

///
/// \file local_ops.hpp
/// \brief Local unitaries, local measurements and the monotonicity harnesses.
///
#pragma once

#include "etensor/measure.hpp"
#include "etensor/random.hpp"

#include <set>

namespace etensor {

class LocalUnitary {
public:
    LocalUnitary(int d, int site, MatrixXcd matrix) : d_(d), site_(site), u_(std::move(matrix)) {
        if (u_.rows() != d_ || u_.cols() != d_) throw std::invalid_argument("LocalUnitary: expected a d x d matrix");
        if (site_ < 0) throw std::invalid_argument("LocalUnitary: negative site");
        const double res = (u_.adjoint() * u_ - MatrixXcd::Identity(d_, d_)).cwiseAbs().maxCoeff();
        if (res > tol::kUnitary) throw std::invalid_argument("LocalUnitary: matrix is not unitary (residual " + detail::str(res) + ")");
    }

    int d() const { return d_; }
    int site() const { return site_; }
    const MatrixXcd& matrix() const { return u_; }

private:
    int d_;
    int site_;
    MatrixXcd u_;
};

inline LocalUnitary random_local_unitary(int d, int site, std::uint64_t seed) {
    Rng rng(seed);
    return LocalUnitary(d, site, haar_unitary(d, rng));
}

/// Rotates each listed site by its unitary; at most one unitary per site.
inline PureState apply_local_unitaries(const PureState& psi, std::span<const LocalUnitary> us) {
    std::set<int> seen;
    VectorXcd v = psi.amplitudes();
    for (const auto& u : us) {
        if (u.d() != psi.d()) throw std::invalid_argument("apply_local_unitaries: dimension mismatch");
        if (u.site() >= psi.n()) throw std::invalid_argument("apply_local_unitaries: site out of range");
        if (!seen.insert(u.site()).second)
            throw std::invalid_argument("apply_local_unitaries: duplicate site " + std::to_string(u.site()));
        v = detail::apply_site(v, psi.d(), psi.n(), u.site(), u.matrix());
    }
    return PureState::normalized(psi.d(), psi.n(), std::move(v));
}

/// O(a, b) = Tr(U l_a U^dagger l_b) / 2, so that U l_a U^dagger = sum_b O(a, b) l_b.
/// The tensor of U|psi> at that site is T x_k O^T.
inline MatrixXd induced_rotation(const LocalUnitary& u, const GeneratorSet& gs) {
    if (u.d() != gs.d()) throw std::invalid_argument("induced_rotation: dimension mismatch");
    const int n = gs.count();
    MatrixXd o(n, n);
    for (int a = 0; a < n; ++a) {
        const MatrixXcd rotated = u.matrix() * gs[a] * u.matrix().adjoint();
        for (int b = 0; b < n; ++b) o(a, b) = detail::real_entry((rotated * gs[b]).trace() / 2.0);
    }
    return o;
}

enum class KrausFamily {
    normal,   // every Kraus operator commutes with its adjoint
    general,  // arbitrary Kraus operators; exploratory use only
};

class LocalPOVM {
public:
    LocalPOVM(int d, int site, std::vector<MatrixXcd> kraus, KrausFamily family = KrausFamily::normal)
        : d_(d), site_(site), kraus_(std::move(kraus)), family_(family) {
        if (kraus_.empty()) throw std::invalid_argument("LocalPOVM: no Kraus operators");
        MatrixXcd sum = MatrixXcd::Zero(d_, d_);
        for (const auto& l : kraus_) {
            if (l.rows() != d_ || l.cols() != d_) throw std::invalid_argument("LocalPOVM: expected d x d Kraus operators");
            sum += l.adjoint() * l;
            if (family_ == KrausFamily::normal) {
                const double comm = (l * l.adjoint() - l.adjoint() * l).cwiseAbs().maxCoeff();
                if (comm > tol::kPovm) throw std::invalid_argument("LocalPOVM: Kraus operator is not normal");
            }
        }
        const double res = (sum - MatrixXcd::Identity(d_, d_)).cwiseAbs().maxCoeff();
        if (res > tol::kPovm) throw std::invalid_argument("LocalPOVM: sum of L^dagger L is not the identity");
    }

    int d() const { return d_; }
    int site() const { return site_; }
    const std::vector<MatrixXcd>& kraus() const { return kraus_; }
    KrausFamily family() const { return family_; }

private:
    int d_;
    int site_;
    std::vector<MatrixXcd> kraus_;
    KrausFamily family_;
};

/// Normal family: projectors U P_i U^dagger onto groups of a Haar-random
/// basis, `outcomes` <= d groups, each nonempty. General family: A_i S^(-1/2)
/// with Ginibre A_i and S = sum A_i^dagger A_i.
inline LocalPOVM random_local_povm(int d, int site, int outcomes, std::uint64_t seed,
                                   KrausFamily family = KrausFamily::normal) {
    if (outcomes < 1) throw std::invalid_argument("random_local_povm: need at least one outcome");
    Rng rng(seed);
    std::vector<MatrixXcd> kraus;
    if (family == KrausFamily::normal) {
        if (outcomes > d) throw std::invalid_argument("random_local_povm: projective family needs outcomes <= d");
        const MatrixXcd u = haar_unitary(d, rng);
        std::vector<int> group(static_cast<std::size_t>(d));
        std::uniform_int_distribution<int> pick(0, outcomes - 1);
        for (int i = 0; i < d; ++i) group[static_cast<std::size_t>(i)] = i < outcomes ? i : pick(rng);
        kraus.assign(static_cast<std::size_t>(outcomes), MatrixXcd::Zero(d, d));
        for (int i = 0; i < d; ++i) kraus[static_cast<std::size_t>(group[static_cast<std::size_t>(i)])] += u.col(i) * u.col(i).adjoint();
    } else {
        MatrixXcd s = MatrixXcd::Zero(d, d);
        for (int i = 0; i < outcomes; ++i) {
            kraus.push_back(ginibre(d, d, rng));
            s += kraus.back().adjoint() * kraus.back();
        }
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(s);
        const MatrixXcd inv_sqrt =
            es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors().adjoint();
        for (auto& a : kraus) a = a * inv_sqrt;
    }
    return LocalPOVM(d, site, std::move(kraus), family);
}

struct Outcome {
    int index;
    double probability;
    PureState state;
};

/// Outcomes of measuring `povm` on psi; branches with p < 1e-12 are dropped
/// and residual states are renormalized.
inline std::vector<Outcome> measure_local(const PureState& psi, const LocalPOVM& povm) {
    if (povm.d() != psi.d() || povm.site() >= psi.n()) throw std::invalid_argument("measure_local: POVM does not fit the state");
    std::vector<Outcome> out;
    double total = 0;
    for (std::size_t i = 0; i < povm.kraus().size(); ++i) {
        VectorXcd v = detail::apply_site(psi.amplitudes(), psi.d(), psi.n(), povm.site(), povm.kraus()[i]);
        const double p = v.squaredNorm();
        total += p;
        if (p < tol::kOutcomePrune) continue;
        out.push_back({static_cast<int>(i), p, PureState::normalized(psi.d(), psi.n(), std::move(v))});
    }
    if (std::abs(total - 1.0) > tol::kPovm) throw std::logic_error("measure_local: outcome probabilities do not sum to 1");
    return out;
}

struct MixedOutcome {
    int index;
    double probability;
    DensityMatrix state;
};

/// Same as measure_local for a density matrix: rho_i = L rho L^dagger / p_i.
inline std::vector<MixedOutcome> measure_local(const DensityMatrix& rho, const LocalPOVM& povm) {
    if (povm.d() != rho.d() || povm.site() >= rho.m()) throw std::invalid_argument("measure_local: POVM does not fit the state");
    std::vector<MixedOutcome> out;
    for (std::size_t i = 0; i < povm.kraus().size(); ++i) {
        const auto& l = povm.kraus()[i];
        MatrixXcd left(rho.dim(), rho.dim());
        for (Eigen::Index c = 0; c < rho.dim(); ++c)
            left.col(c) = detail::apply_site(rho.matrix().col(c), rho.d(), rho.m(), povm.site(), l);
        MatrixXcd both(rho.dim(), rho.dim());
        const MatrixXcd left_adj = left.adjoint();
        for (Eigen::Index c = 0; c < rho.dim(); ++c)
            both.col(c) = detail::apply_site(left_adj.col(c), rho.d(), rho.m(), povm.site(), l);
        both = both.adjoint().eval();
        const double p = both.trace().real();
        if (p < tol::kOutcomePrune) continue;
        MatrixXcd normalized = both / p;
        normalized = (0.5 * (normalized + normalized.adjoint())).eval();
        out.push_back({static_cast<int>(i), p, DensityMatrix::trusted(rho.d(), rho.m(), std::move(normalized))});
    }
    return out;
}

struct TraceOutReport {
    double norm_before = 0;  // ||T^(N)|| of psi
    double norm_after = 0;   // ||T^(N-1)|| of the reduced state
    // Each norm divided by its product-state baseline. Appending a product
    // factor leaves this ratio unchanged, so it is where the equality case
    // shows up for every d.
    double normalized_before = 0;
    double normalized_after = 0;

    double margin() const { return norm_before - norm_after; }
    double normalized_margin() const { return normalized_before - normalized_after; }
};

inline TraceOutReport trace_out_and_compare(const PureState& psi, int site) {
    if (psi.n() < 2) throw std::invalid_argument("trace_out_and_compare: need at least two qudits");
    if (site < 0 || site >= psi.n()) throw std::invalid_argument("trace_out_and_compare: site out of range");
    std::vector<int> keep;
    for (int q = 0; q < psi.n(); ++q)
        if (q != site) keep.push_back(q);
    TraceOutReport r;
    r.norm_before = tensor_norm(correlation_tensor(psi));
    r.norm_after = tensor_norm(correlation_tensor(reduced_density(psi, keep)));
    r.normalized_before = r.norm_before / product_baseline(psi.d(), psi.n());
    r.normalized_after = r.norm_after / product_baseline(psi.d(), psi.n() - 1);
    return r;
}

struct LuReport {
    double et_before = 0;
    double et_after = 0;
    double delta() const { return std::abs(et_after - et_before); }
};

inline LuReport lu_invariance(const PureState& psi, std::span<const LocalUnitary> us) {
    return {et_pure(psi).et, et_pure(apply_local_unitaries(psi, us)).et};
}

struct MonotonicityReport {
    double et_before = 0;
    double expected_after = 0;  // sum_i p_i E_T(phi_i)
    std::size_t outcomes = 0;

    double margin() const { return et_before - expected_after; }
};

inline MonotonicityReport povm_monotonicity(const PureState& psi, const LocalPOVM& povm) {
    MonotonicityReport r;
    r.et_before = et_pure(psi).et;
    for (const auto& o : measure_local(psi, povm)) {
        r.expected_after += o.probability * et_pure(o.state).et;
        ++r.outcomes;
    }
    return r;
}

}  // namespace etensor

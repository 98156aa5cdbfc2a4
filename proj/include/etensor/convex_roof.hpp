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
/// \file convex_roof.hpp
/// \brief Convex-roof extension of E_T to mixed states.
///
/// Every length-L pure-state decomposition of a rank-r state rho arises from
/// an L x r isometry V applied to the scaled eigenvectors:
///    |psi~_i> = sum_j V_ij sqrt(q_j) |e_j>,   p_i = <psi~_i|psi~_i>.
/// The search runs over V = W [I_r; 0] with W unitary, moving W by complex
/// Givens rotations between pairs of rows. A rotation on rows (a, b) changes
/// only states a and b, so each line-search probe costs two evaluations of
/// the pure measure. All reported values are upper bounds on the roof.
///
#pragma once

#include "etensor/local_ops.hpp"

#include <numbers>

namespace etensor {

struct Decomposition {
    std::vector<double> weights;
    std::vector<PureState> states;

    MatrixXcd mixture() const {
        const auto dim = states.front().dim();
        MatrixXcd m = MatrixXcd::Zero(dim, dim);
        for (std::size_t i = 0; i < states.size(); ++i)
            m += weights[i] * states[i].amplitudes() * states[i].amplitudes().adjoint();
        return m;
    }

    double reconstruction_error(const DensityMatrix& rho) const {
        return (mixture() - rho.matrix()).cwiseAbs().maxCoeff();
    }

    double average_et() const {
        double s = 0;
        for (std::size_t i = 0; i < states.size(); ++i) s += weights[i] * et_pure(states[i]).et;
        return s;
    }
};

/// Eigenvalues above the rank cutoff, descending, with their eigenvectors.
struct Spectrum {
    VectorXd values;
    MatrixXcd vectors;

    int rank() const { return static_cast<int>(values.size()); }
};

inline Spectrum spectrum(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho.matrix());
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = es.eigenvalues().size() - 1; i >= 0; --i)
        if (es.eigenvalues()(i) > tol::kRank) keep.push_back(i);
    Spectrum s{VectorXd(static_cast<Eigen::Index>(keep.size())), MatrixXcd(rho.dim(), static_cast<Eigen::Index>(keep.size()))};
    for (std::size_t j = 0; j < keep.size(); ++j) {
        s.values(static_cast<Eigen::Index>(j)) = es.eigenvalues()(keep[j]);
        s.vectors.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]);
    }
    return s;
}

namespace detail {

// Zero-weight rows carry no state and are left out.
inline constexpr double kWeightFloor = 1e-14;

inline Decomposition assemble(const DensityMatrix& rho, const MatrixXcd& scaled, const MatrixXcd& v) {
    Decomposition dec;
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        VectorXcd s = scaled * v.row(i).transpose();
        const double p = s.squaredNorm();
        if (p < kWeightFloor) continue;
        dec.weights.push_back(p);
        dec.states.push_back(PureState::normalized(rho.d(), rho.m(), std::move(s)));
    }
    return dec;
}

}  // namespace detail

/// Decomposition generated by an L x r isometry V (r = numerical rank).
inline Decomposition decomposition_from_isometry(const DensityMatrix& rho, const MatrixXcd& v) {
    const Spectrum sp = spectrum(rho);
    if (v.cols() != sp.rank())
        throw std::invalid_argument("decomposition_from_isometry: V must have rank(rho) = " + std::to_string(sp.rank()) + " columns");
    const double res = (v.adjoint() * v - MatrixXcd::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff();
    if (res > tol::kIsometry) throw std::invalid_argument("decomposition_from_isometry: V is not an isometry");
    const MatrixXcd scaled = sp.vectors * sp.values.cwiseSqrt().asDiagonal();
    return detail::assemble(rho, scaled, v);
}

struct RoofBudget {
    int restarts = 20;
    int iterations = 500;  // sweeps over all rotation coordinates, per start
    int max_length = 0;    // decomposition length L; 0 selects rank^2
    std::uint64_t seed = 0;
};

struct RoofResult {
    double value = 0;
    double eigendecomposition_value = 0;
    Decomposition decomposition;
    int restarts_used = 0;
    int iterations = 0;  // sweeps summed over all starts
    bool converged = false;
};

namespace detail {

class RoofSearch {
public:
    RoofSearch(const DensityMatrix& rho, const Spectrum& sp)
        : rho_(rho), scaled_(sp.vectors * sp.values.cwiseSqrt().asDiagonal()) {}

    double row_cost(const MatrixXcd& v, Eigen::Index i) const {
        VectorXcd s = scaled_ * v.row(i).transpose();
        const double p = s.squaredNorm();
        if (p < kWeightFloor) return 0.0;
        return p * et_pure(PureState::normalized(rho_.d(), rho_.m(), std::move(s))).et;
    }

    double total(const MatrixXcd& v, std::vector<double>& costs) const {
        costs.resize(static_cast<std::size_t>(v.rows()));
        double t = 0;
        for (Eigen::Index i = 0; i < v.rows(); ++i) t += costs[static_cast<std::size_t>(i)] = row_cost(v, i);
        return t;
    }

    // Rows a and b of v after the rotation [[c, -s e^{-i phi}], [s e^{i phi}, c]].
    static void rotate(MatrixXcd& v, Eigen::Index a, Eigen::Index b, double theta, double phi) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const Complex e = std::polar(1.0, phi);
        const Eigen::RowVectorXcd ra = v.row(a);
        const Eigen::RowVectorXcd rb = v.row(b);
        v.row(a) = c * ra - s * std::conj(e) * rb;
        v.row(b) = s * e * ra + c * rb;
    }

    struct Local {
        double value;
        int sweeps;
        bool converged;
    };

    // Coordinate descent; v is updated in place and never gets worse.
    Local descend(MatrixXcd& v, int max_sweeps) const {
        std::vector<double> costs;
        double current = total(v, costs);
        const Eigen::Index len = v.rows();
        int sweeps = 0;
        bool converged = len < 2;
        while (!converged && sweeps < max_sweeps) {
            const double start = current;
            for (Eigen::Index a = 0; a < len; ++a)
                for (Eigen::Index b = a + 1; b < len; ++b)
                    for (const double phi : {0.0, std::numbers::pi / 2}) {
                        const double base = costs[static_cast<std::size_t>(a)] + costs[static_cast<std::size_t>(b)];
                        auto probe = [&](double theta) {
                            MatrixXcd w = v;
                            rotate(w, a, b, theta, phi);
                            return row_cost(w, a) + row_cost(w, b);
                        };
                        const auto [theta, value] = line_search(probe, base);
                        if (value < base - 1e-15) {
                            rotate(v, a, b, theta, phi);
                            costs[static_cast<std::size_t>(a)] = row_cost(v, a);
                            costs[static_cast<std::size_t>(b)] = row_cost(v, b);
                            current = 0;
                            for (double c : costs) current += c;
                        }
                    }
            ++sweeps;
            const double improvement = (start - current) / std::max(std::abs(start), 1e-12);
            converged = improvement < 1e-7;
        }
        return {current, sweeps, converged};
    }

    Decomposition decomposition(const MatrixXcd& v) const { return assemble(rho_, scaled_, v); }

private:
    // The rotation has period pi in theta. Coarse grid, then golden-section
    // refinement around the best grid point. Returns (theta, value), with
    // theta = 0 (value = base) when nothing better is found.
    template <typename F>
    static std::pair<double, double> line_search(F&& f, double base) {
        constexpr int kGrid = 8;
        const double step = std::numbers::pi / kGrid;
        double best_theta = 0;
        double best = base;
        for (int k = 1; k < kGrid; ++k) {
            const double theta = -std::numbers::pi / 2 + k * step;
            if (theta == 0.0) continue;
            const double val = f(theta);
            if (val < best) best = val, best_theta = theta;
        }
        const double invphi = (std::sqrt(5.0) - 1) / 2;
        double lo = best_theta - step;
        double hi = best_theta + step;
        double x1 = hi - invphi * (hi - lo);
        double x2 = lo + invphi * (hi - lo);
        double f1 = f(x1);
        double f2 = f(x2);
        while (hi - lo > 1e-6) {
            if (f1 < f2) {
                hi = x2, x2 = x1, f2 = f1;
                x1 = hi - invphi * (hi - lo);
                f1 = f(x1);
            } else {
                lo = x1, x1 = x2, f1 = f2;
                x2 = lo + invphi * (hi - lo);
                f2 = f(x2);
            }
        }
        if (f1 < best) best = f1, best_theta = x1;
        if (f2 < best) best = f2, best_theta = x2;
        return {best_theta, best};
    }

    const DensityMatrix& rho_;
    MatrixXcd scaled_;
};

inline void check_roof_input(const DensityMatrix& rho) {
    // Re-validate: trusted constructors skip the checks.
    DensityMatrix(rho.d(), rho.m(), rho.matrix());
}

}  // namespace detail

/// Upper bound on the convex roof of E_T at rho: the best average over the
/// eigendecomposition and `restarts` random isometries, each refined by
/// derivative-free coordinate descent. Deterministic for a fixed seed.
inline RoofResult et_mixed(const DensityMatrix& rho, const RoofBudget& budget = {}) {
    detail::check_roof_input(rho);
    if (budget.restarts < 0 || budget.iterations < 0) throw std::invalid_argument("et_mixed: negative budget");
    const Spectrum sp = spectrum(rho);
    const int r = sp.rank();
    const int len = budget.max_length > 0 ? budget.max_length : r * r;
    if (len < r) throw std::invalid_argument("et_mixed: decomposition length must be >= rank");
    const detail::RoofSearch search(rho, sp);

    RoofResult result;
    MatrixXcd eig = MatrixXcd::Identity(len, r);
    std::vector<double> scratch;
    result.eigendecomposition_value = search.total(eig, scratch);

    auto run = [&](MatrixXcd v) {
        const auto local = search.descend(v, budget.iterations);
        result.iterations += local.sweeps;
        const bool first = result.decomposition.states.empty();
        if (first || local.value < result.value) {
            result.value = local.value;
            result.decomposition = search.decomposition(v);
            result.converged = local.converged;
        }
    };

    run(eig);
    for (int k = 0; k < budget.restarts; ++k) {
        Rng rng(derive_seed(budget.seed, static_cast<std::uint64_t>(k)));
        run(haar_unitary(len, rng).leftCols(r));
        ++result.restarts_used;
    }
    return result;
}

struct MixedMonotonicityReport {
    double et_before = 0;
    double expected_after = 0;
    bool all_converged = false;
    bool pure_delegate = false;  // rank-1 input evaluated by the pure-state harness
    std::size_t outcomes = 0;

    double margin() const { return et_before - expected_after; }
};

/// Compares sum_k p_k E(rho_k) with E(rho) under one local POVM. Both sides
/// are upper-bound estimates computed with the same budget.
inline MixedMonotonicityReport check_mixed_monotonicity(const DensityMatrix& rho, const LocalPOVM& povm,
                                                        const RoofBudget& budget = {}) {
    detail::check_roof_input(rho);
    MixedMonotonicityReport r;
    const Spectrum sp = spectrum(rho);
    if (sp.rank() == 1) {
        const PureState psi = PureState::normalized(rho.d(), rho.m(), sp.vectors.col(0));
        const auto pure = povm_monotonicity(psi, povm);
        r.et_before = pure.et_before;
        r.expected_after = pure.expected_after;
        r.outcomes = pure.outcomes;
        r.all_converged = true;
        r.pure_delegate = true;
        return r;
    }
    const auto before = et_mixed(rho, budget);
    r.et_before = before.value;
    r.all_converged = before.converged;
    for (const auto& o : measure_local(rho, povm)) {
        const auto after = et_mixed(o.state, budget);
        r.expected_after += o.probability * after.value;
        r.all_converged = r.all_converged && after.converged;
        ++r.outcomes;
    }
    return r;
}

}  // namespace etensor

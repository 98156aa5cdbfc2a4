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
/// \file qudit_state.hpp
/// \brief Pure states and density matrices of N qudits.
///
/// Basis index encoding is big-endian base d: qudit 0 is the most significant
/// digit, so |i_0 i_1 ... i_{n-1}> sits at sum_k i_k d^(n-1-k). Qudit indices
/// in this API are 0-based.
///
#pragma once

#include "etensor/random.hpp"
#include "etensor/types.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <span>

namespace etensor {

class PureState {
public:
    /// Validates length d^n and unit norm (within 1e-10).
    PureState(int d, int n, VectorXcd amplitudes) : d_(d), n_(n), amps_(std::move(amplitudes)) {
        check_shape();
        const double norm = amps_.norm();
        if (std::abs(norm - 1.0) > tol::kNorm)
            throw std::invalid_argument("PureState: amplitudes are not normalized (norm = " + detail::str(norm) + ")");
    }

    /// Rescales the amplitudes to unit norm; rejects the zero vector.
    static PureState normalized(int d, int n, VectorXcd amplitudes) {
        const double norm = amplitudes.norm();
        if (!(norm > 0) || !std::isfinite(norm)) throw std::invalid_argument("PureState: cannot normalize a zero vector");
        amplitudes /= norm;
        return PureState(d, n, std::move(amplitudes));
    }

    /// Computational basis state |digits[0] digits[1] ...>.
    static PureState basis(int d, std::span<const int> levels) {
        const int n = static_cast<int>(levels.size());
        std::size_t index = 0;
        for (int v : levels) {
            if (v < 0 || v >= d) throw std::invalid_argument("PureState::basis: level out of range");
            index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(v);
        }
        VectorXcd a = VectorXcd::Zero(static_cast<Eigen::Index>(detail::ipow(static_cast<std::size_t>(d), n)));
        a(static_cast<Eigen::Index>(index)) = 1.0;
        return PureState(d, n, std::move(a));
    }

    int d() const { return d_; }
    int n() const { return n_; }
    Eigen::Index dim() const { return amps_.size(); }
    const VectorXcd& amplitudes() const { return amps_; }
    Complex operator[](Eigen::Index i) const { return amps_(i); }

private:
    void check_shape() const {
        if (d_ < 2) throw std::invalid_argument("PureState: d must be >= 2");
        if (n_ < 1) throw std::invalid_argument("PureState: n must be >= 1");
        const auto expected = detail::ipow(static_cast<std::size_t>(d_), n_);
        if (static_cast<std::size_t>(amps_.size()) != expected)
            throw std::invalid_argument("PureState: amplitude count mismatch (expected " + std::to_string(expected) +
                                        ", got " + std::to_string(amps_.size()) + ")");
    }

    int d_;
    int n_;
    VectorXcd amps_;
};

/// Tolerances applied when validating a density matrix.
struct DensityTolerance {
    double hermitian = tol::kHermitian;
    double trace = tol::kTrace;
    double eigen_floor = tol::kEigenFloor;

    static DensityTolerance file_load() { return {tol::kFileLoad, tol::kFileLoad, -tol::kFileLoad}; }
};

class DensityMatrix {
public:
    /// Validates shape, Hermiticity, unit trace and positive semidefiniteness.
    DensityMatrix(int d, int m, MatrixXcd matrix, DensityTolerance t = {}) : d_(d), m_(m), mat_(std::move(matrix)) {
        if (d_ < 2 || m_ < 1) throw std::invalid_argument("DensityMatrix: need d >= 2 and m >= 1");
        const auto dim = static_cast<Eigen::Index>(detail::ipow(static_cast<std::size_t>(d_), m_));
        if (mat_.rows() != dim || mat_.cols() != dim)
            throw std::invalid_argument("DensityMatrix: expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                                        " matrix");
        const double herm = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
        if (herm > t.hermitian) throw std::invalid_argument("DensityMatrix: not Hermitian (residual " + detail::str(herm) + ")");
        const Complex tr = mat_.trace();
        if (std::abs(tr - 1.0) > t.trace) throw std::invalid_argument("DensityMatrix: trace is not 1");
        const double min_eig = Eigen::SelfAdjointEigenSolver<MatrixXcd>(mat_, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
        if (min_eig < t.eigen_floor)
            throw std::invalid_argument("DensityMatrix: not positive semidefinite (min eigenvalue " + detail::str(min_eig) + ")");
    }

    int d() const { return d_; }
    int m() const { return m_; }
    Eigen::Index dim() const { return mat_.rows(); }
    const MatrixXcd& matrix() const { return mat_; }

    /// Skips validation; for results that are density matrices by construction.
    static DensityMatrix trusted(int d, int m, MatrixXcd matrix) { return DensityMatrix(d, m, std::move(matrix), Trusted{}); }

private:
    struct Trusted {};
    DensityMatrix(int d, int m, MatrixXcd matrix, Trusted) : d_(d), m_(m), mat_(std::move(matrix)) {}

    int d_;
    int m_;
    MatrixXcd mat_;
};

/// alpha|00..0> + beta|11..1> + ... over the d all-equal basis strings.
inline PureState ghz_state(int d, int n, std::span<const double> coeffs) {
    if (d < 2 || n < 1) throw std::invalid_argument("ghz_state: need d >= 2 and n >= 1");
    if (static_cast<int>(coeffs.size()) != d) throw std::invalid_argument("ghz_state: expected d coefficients");
    double s = 0;
    for (double c : coeffs) s += c * c;
    if (std::abs(s - 1.0) > tol::kNorm) throw std::invalid_argument("ghz_state: coefficients are not normalized");
    const auto dim = detail::ipow(static_cast<std::size_t>(d), n);
    // index of |jj..j> is j * (1 + d + ... + d^(n-1))
    const std::size_t repunit = (dim - 1) / static_cast<std::size_t>(d - 1);
    VectorXcd a = VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    for (int j = 0; j < d; ++j) a(static_cast<Eigen::Index>(static_cast<std::size_t>(j) * repunit)) = coeffs[static_cast<std::size_t>(j)];
    return PureState(d, n, std::move(a));
}

inline PureState tensor_product(const PureState& a, const PureState& b) {
    if (a.d() != b.d()) throw std::invalid_argument("tensor_product: local dimensions differ");
    VectorXcd out(a.dim() * b.dim());
    for (Eigen::Index i = 0; i < a.dim(); ++i) out.segment(i * b.dim(), b.dim()) = a[i] * b.amplitudes();
    return PureState(a.d(), a.n() + b.n(), std::move(out));
}

inline DensityMatrix to_density(const PureState& psi) {
    return DensityMatrix::trusted(psi.d(), psi.n(), psi.amplitudes() * psi.amplitudes().adjoint());
}

namespace detail {

inline void check_keep(std::span<const int> keep, int m) {
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= m)
            throw std::invalid_argument("partial_trace: qudit index " + std::to_string(keep[i]) + " out of range");
        if (i > 0 && keep[i] <= keep[i - 1]) throw std::invalid_argument("partial_trace: keep set must be sorted and distinct");
    }
}

// table[a][r] = full index of kept multi-index a combined with traced multi-index r.
inline std::vector<std::vector<std::size_t>> split_table(int d, int m, std::span<const int> keep) {
    std::vector<bool> kept(static_cast<std::size_t>(m), false);
    for (int k : keep) kept[static_cast<std::size_t>(k)] = true;
    const int nk = static_cast<int>(keep.size());
    const auto dk = ipow(static_cast<std::size_t>(d), nk);
    const auto dr = ipow(static_cast<std::size_t>(d), m - nk);
    std::vector<std::vector<std::size_t>> table(dk, std::vector<std::size_t>(dr));
    for (std::size_t full = 0; full < ipow(static_cast<std::size_t>(d), m); ++full) {
        const auto dg = digits(full, d, m);
        std::size_t a = 0, r = 0;
        for (int q = 0; q < m; ++q) {
            if (kept[static_cast<std::size_t>(q)])
                a = a * static_cast<std::size_t>(d) + static_cast<std::size_t>(dg[static_cast<std::size_t>(q)]);
            else
                r = r * static_cast<std::size_t>(d) + static_cast<std::size_t>(dg[static_cast<std::size_t>(q)]);
        }
        table[a][r] = full;
    }
    return table;
}

}  // namespace detail

/// Reduction of rho onto the sorted qudit set `keep`.
inline DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    detail::check_keep(keep, rho.m());
    const auto table = detail::split_table(rho.d(), rho.m(), keep);
    const auto dk = static_cast<Eigen::Index>(table.size());
    const std::size_t dr = table.front().size();
    MatrixXcd out = MatrixXcd::Zero(dk, dk);
    const MatrixXcd& m = rho.matrix();
    for (Eigen::Index a = 0; a < dk; ++a)
        for (Eigen::Index b = 0; b < dk; ++b) {
            Complex s = 0;
            for (std::size_t r = 0; r < dr; ++r)
                s += m(static_cast<Eigen::Index>(table[static_cast<std::size_t>(a)][r]),
                       static_cast<Eigen::Index>(table[static_cast<std::size_t>(b)][r]));
            out(a, b) = s;
        }
    return DensityMatrix::trusted(rho.d(), static_cast<int>(keep.size()), std::move(out));
}

/// Reduced state of a pure state without forming the full density matrix.
inline DensityMatrix reduced_density(const PureState& psi, std::span<const int> keep) {
    detail::check_keep(keep, psi.n());
    const auto table = detail::split_table(psi.d(), psi.n(), keep);
    const auto dk = static_cast<Eigen::Index>(table.size());
    const auto dr = static_cast<Eigen::Index>(table.front().size());
    MatrixXcd block(dk, dr);
    for (Eigen::Index a = 0; a < dk; ++a)
        for (Eigen::Index r = 0; r < dr; ++r)
            block(a, r) = psi[static_cast<Eigen::Index>(table[static_cast<std::size_t>(a)][static_cast<std::size_t>(r)])];
    return DensityMatrix::trusted(psi.d(), static_cast<int>(keep.size()), block * block.adjoint());
}

/// Rotation-invariant random pure state: i.i.d. standard complex normals,
/// normalized. Deterministic in `seed`.
inline PureState random_pure_state(int d, int n, std::uint64_t seed) {
    if (d < 2 || n < 1) throw std::invalid_argument("random_pure_state: need d >= 2 and n >= 1");
    Rng rng(seed);
    const auto dim = static_cast<Eigen::Index>(detail::ipow(static_cast<std::size_t>(d), n));
    return PureState::normalized(d, n, ginibre(dim, 1, rng).col(0));
}

/// Random product state of n single-qudit random states.
inline PureState random_product_state(int d, int n, std::uint64_t seed) {
    PureState out = random_pure_state(d, 1, derive_seed(seed, 0));
    for (int k = 1; k < n; ++k) out = tensor_product(out, random_pure_state(d, 1, derive_seed(seed, static_cast<std::uint64_t>(k))));
    return out;
}

namespace detail {

// Applies a d x d operator to qudit `site` of an amplitude vector.
inline VectorXcd apply_site(const VectorXcd& amps, int d, int n, int site, const MatrixXcd& op) {
    const auto stride = static_cast<Eigen::Index>(ipow(static_cast<std::size_t>(d), n - 1 - site));
    const Eigen::Index block = stride * d;
    VectorXcd out = VectorXcd::Zero(amps.size());
    for (Eigen::Index base = 0; base < amps.size(); base += block)
        for (Eigen::Index low = 0; low < stride; ++low)
            for (int r = 0; r < d; ++r) {
                Complex s = 0;
                for (int c = 0; c < d; ++c) s += op(r, c) * amps(base + c * stride + low);
                out(base + r * stride + low) = s;
            }
    return out;
}

// Exchanges qudits i and j.
inline VectorXcd swap_sites(const VectorXcd& amps, int d, int n, int i, int j) {
    VectorXcd out(amps.size());
    for (Eigen::Index idx = 0; idx < amps.size(); ++idx) {
        auto dg = digits(static_cast<std::size_t>(idx), d, n);
        std::swap(dg[static_cast<std::size_t>(i)], dg[static_cast<std::size_t>(j)]);
        std::size_t t = 0;
        for (int v : dg) t = t * static_cast<std::size_t>(d) + static_cast<std::size_t>(v);
        out(static_cast<Eigen::Index>(t)) = amps(idx);
    }
    return out;
}

}  // namespace detail

}  // namespace etensor

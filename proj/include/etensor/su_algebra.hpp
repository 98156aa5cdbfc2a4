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
/// \file su_algebra.hpp
/// \brief Generalized Gell-Mann generators of SU(d) and their structure constants.
///
/// The generators are traceless Hermitian d x d matrices normalized so that
///    \f$ \mathrm{Tr}(\lambda_i \lambda_j) = 2\delta_{ij} \f$
/// and they close under
///    \f$ \lambda_i\lambda_j = \frac{2}{d}\delta_{ij} I + i f_{ijk}\lambda_k + g_{ijk}\lambda_k \f$.
///
/// Ordering: for d = 3 the canonical Gell-Mann order
///    l1 = |0><1|+|1><0|, l2 = -i(|0><1|-|1><0|), l3 = diag(1,-1,0),
///    l4/l5 on the (0,2) pair, l6/l7 on the (1,2) pair, l8 = diag(1,1,-2)/sqrt(3).
/// For every other d: each pair j<k in lexicographic order contributes the
/// symmetric then the antisymmetric generator, followed by the d-1 diagonal
/// generators. At d = 2 this is (X, Y, Z).
///
#pragma once

#include "etensor/types.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace etensor {

/// Dense rank-3 real array indexed (i, j, k), all axes of equal length.
class Rank3 {
public:
    Rank3() = default;
    explicit Rank3(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n, 0.0) {}

    int size() const { return n_; }
    double operator()(int i, int j, int k) const { return data_[offset(i, j, k)]; }
    double& operator()(int i, int j, int k) { return data_[offset(i, j, k)]; }

private:
    std::size_t offset(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
    }
    int n_ = 0;
    std::vector<double> data_;
};

struct StructureConstants {
    Rank3 f;  // totally antisymmetric
    Rank3 g;  // totally symmetric
};

/// Nonzero entry of a generator, used for matrix-free application.
struct SparseEntry {
    int row;
    int col;
    Complex value;
};

class GeneratorSet;
GeneratorSet build_generators(int d);
StructureConstants structure_constants(const GeneratorSet& gs);

/// The d^2-1 generators of SU(d) for one local dimension. Immutable.
class GeneratorSet {
public:
    int d() const { return d_; }
    int count() const { return static_cast<int>(lambdas_.size()); }
    const std::vector<MatrixXcd>& lambdas() const { return lambdas_; }
    const MatrixXcd& operator[](int i) const { return lambdas_[static_cast<std::size_t>(i)]; }
    const std::vector<SparseEntry>& sparse(int i) const { return sparse_[static_cast<std::size_t>(i)]; }
    const Rank3& f() const { return sc_.f; }
    const Rank3& g() const { return sc_.g; }

private:
    friend GeneratorSet build_generators(int d);
    GeneratorSet() = default;

    int d_ = 0;
    std::vector<MatrixXcd> lambdas_;
    std::vector<std::vector<SparseEntry>> sparse_;
    StructureConstants sc_;
};

namespace detail {

inline MatrixXcd unit(int d, int j, int k) {
    MatrixXcd m = MatrixXcd::Zero(d, d);
    m(j, k) = 1.0;
    return m;
}

inline MatrixXcd symmetric_generator(int d, int j, int k) { return unit(d, j, k) + unit(d, k, j); }

inline MatrixXcd antisymmetric_generator(int d, int j, int k) {
    return Complex(0, -1) * (unit(d, j, k) - unit(d, k, j));
}

// l-th diagonal generator, 1 <= l <= d-1.
inline MatrixXcd diagonal_generator(int d, int l) {
    MatrixXcd m = MatrixXcd::Zero(d, d);
    const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int i = 0; i < l; ++i) m(i, i) = scale;
    m(l, l) = -scale * l;
    return m;
}

}  // namespace detail

/// Constructs the generator set for local dimension d (d >= 2).
inline GeneratorSet build_generators(int d) {
    if (d < 2) throw std::domain_error("build_generators: d must be >= 2, got " + std::to_string(d));
    GeneratorSet gs;
    gs.d_ = d;
    auto& ls = gs.lambdas_;
    if (d == 3) {
        ls.push_back(detail::symmetric_generator(3, 0, 1));
        ls.push_back(detail::antisymmetric_generator(3, 0, 1));
        ls.push_back(detail::diagonal_generator(3, 1));
        ls.push_back(detail::symmetric_generator(3, 0, 2));
        ls.push_back(detail::antisymmetric_generator(3, 0, 2));
        ls.push_back(detail::symmetric_generator(3, 1, 2));
        ls.push_back(detail::antisymmetric_generator(3, 1, 2));
        ls.push_back(detail::diagonal_generator(3, 2));
    } else {
        for (int j = 0; j < d; ++j) {
            for (int k = j + 1; k < d; ++k) {
                ls.push_back(detail::symmetric_generator(d, j, k));
                ls.push_back(detail::antisymmetric_generator(d, j, k));
            }
        }
        for (int l = 1; l < d; ++l) ls.push_back(detail::diagonal_generator(d, l));
    }
    for (const auto& m : ls) {
        std::vector<SparseEntry> entries;
        for (int c = 0; c < d; ++c)
            for (int r = 0; r < d; ++r)
                if (m(r, c) != Complex(0, 0)) entries.push_back({r, c, m(r, c)});
        gs.sparse_.push_back(std::move(entries));
    }
    gs.sc_ = structure_constants(gs);
    return gs;
}

/// f_ijk = Tr([l_i, l_j] l_k) / 4i and g_ijk = Tr({l_i, l_j} l_k) / 4.
inline StructureConstants structure_constants(const GeneratorSet& gs) {
    const int n = gs.count();
    StructureConstants sc{Rank3(n), Rank3(n)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const MatrixXcd ab = gs[i] * gs[j];
            const MatrixXcd ba = gs[j] * gs[i];
            const MatrixXcd comm = ab - ba;
            const MatrixXcd anti = ab + ba;
            for (int k = 0; k < n; ++k) {
                const Complex tc = (comm * gs[k]).trace() / Complex(0, 4);
                const Complex ta = (anti * gs[k]).trace() / 4.0;
                sc.f(i, j, k) = tc.real();
                sc.g(i, j, k) = ta.real();
            }
        }
    }
    return sc;
}

/// Process-wide cache of generator sets; the returned reference stays valid
/// for the lifetime of the program.
inline const GeneratorSet& generators(int d) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GeneratorSet>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it == cache.end())
        it = cache.emplace(d, std::make_unique<GeneratorSet>(build_generators(d))).first;
    return *it->second;
}

/// Residuals of the algebra invariants, as reported by `gen-check`.
struct AlgebraCheck {
    int d = 0;
    int count = 0;
    double max_trace = 0;          // |Tr l_i|
    double max_hermiticity = 0;    // |l_i - l_i^dagger|
    double max_orthonormality = 0; // |Tr(l_i l_j) - 2 delta_ij|
    double max_reconstruction = 0; // product rule residual
    double max_f_antisymmetry = 0;
    double max_g_symmetry = 0;

    bool passed() const {
        return count == d * d - 1 && max_trace <= tol::kGenerator && max_hermiticity <= tol::kGenerator &&
               max_orthonormality <= tol::kGenerator && max_reconstruction <= 1e-10 &&
               max_f_antisymmetry <= 1e-12 && max_g_symmetry <= 1e-12;
    }
};

inline AlgebraCheck check_algebra(const GeneratorSet& gs) {
    AlgebraCheck c;
    c.d = gs.d();
    c.count = gs.count();
    const int n = gs.count();
    const int d = gs.d();
    const MatrixXcd id = MatrixXcd::Identity(d, d);
    for (int i = 0; i < n; ++i) {
        c.max_trace = std::max(c.max_trace, std::abs(gs[i].trace()));
        c.max_hermiticity = std::max(c.max_hermiticity, (gs[i] - gs[i].adjoint()).cwiseAbs().maxCoeff());
        for (int j = 0; j < n; ++j) {
            const double expect = i == j ? 2.0 : 0.0;
            c.max_orthonormality = std::max(c.max_orthonormality, std::abs((gs[i] * gs[j]).trace() - expect));
            MatrixXcd rebuilt = (i == j ? 2.0 / d : 0.0) * id;
            for (int k = 0; k < n; ++k)
                rebuilt += Complex(gs.g()(i, j, k), gs.f()(i, j, k)) * gs[k];
            c.max_reconstruction = std::max(c.max_reconstruction, (gs[i] * gs[j] - rebuilt).cwiseAbs().maxCoeff());
            for (int k = 0; k < n; ++k) {
                const double f = gs.f()(i, j, k);
                const double g = gs.g()(i, j, k);
                for (const double other : {gs.f()(j, i, k), gs.f()(i, k, j), gs.f()(k, j, i)})
                    c.max_f_antisymmetry = std::max(c.max_f_antisymmetry, std::abs(f + other));
                for (const double other : {gs.g()(j, i, k), gs.g()(i, k, j), gs.g()(k, j, i)})
                    c.max_g_symmetry = std::max(c.max_g_symmetry, std::abs(g - other));
            }
        }
    }
    return c;
}

}  // namespace etensor

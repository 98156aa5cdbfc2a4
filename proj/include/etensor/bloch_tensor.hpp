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
/// \file bloch_tensor.hpp
/// \brief Bloch vectors, correlation tensors and the tensor algebra on them.
///
/// For a state rho and an ordered set of qudits S = (k_1 < ... < k_M) the
/// correlation tensor has entries
///    \f$ t_{a_1 \dots a_M} = (d/2)^M \, \mathrm{Tr}[\rho_S\, \lambda_{a_1}\otimes\cdots\otimes\lambda_{a_M}] \f$
/// stored densely in row-major order, axis i belonging to qudit k_i. The
/// single-qudit case (M = 1) is the Bloch vector.
///
#pragma once

#include "etensor/qudit_state.hpp"
#include "etensor/su_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <span>

namespace etensor {

/// Radius of the smallest ball containing every Bloch vector; pure states
/// lie on its surface.
inline double bloch_outer_radius(int d) { return std::sqrt(d * (d - 1) / 2.0); }

/// Radius of the largest ball of Bloch vectors that are all valid states.
/// Documented only; nothing in the library consumes it.
inline double bloch_inner_radius(int d) { return std::sqrt(d / (2.0 * (d - 1))); }

class CorrelationTensor {
public:
    CorrelationTensor(int d, std::vector<int> subsystem, std::vector<double> values)
        : d_(d), subsystem_(std::move(subsystem)), values_(std::move(values)) {
        if (d_ < 2) throw std::invalid_argument("CorrelationTensor: d must be >= 2");
        if (values_.size() != detail::ipow(static_cast<std::size_t>(axis()), order()))
            throw std::invalid_argument("CorrelationTensor: value count does not match (d^2-1)^M");
    }

    static CorrelationTensor zeros(int d, std::vector<int> subsystem) {
        const auto size = detail::ipow(static_cast<std::size_t>(d * d - 1), static_cast<int>(subsystem.size()));
        return CorrelationTensor(d, std::move(subsystem), std::vector<double>(size, 0.0));
    }

    int d() const { return d_; }
    int order() const { return static_cast<int>(subsystem_.size()); }
    int axis() const { return d_ * d_ - 1; }
    const std::vector<int>& subsystem() const { return subsystem_; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }
    std::size_t size() const { return values_.size(); }

    std::size_t flat(std::span<const int> index) const {
        if (static_cast<int>(index.size()) != order()) throw std::invalid_argument("CorrelationTensor: index rank mismatch");
        std::size_t f = 0;
        for (int a : index) {
            if (a < 0 || a >= axis()) throw std::out_of_range("CorrelationTensor: index out of range");
            f = f * static_cast<std::size_t>(axis()) + static_cast<std::size_t>(a);
        }
        return f;
    }
    std::vector<int> unflat(std::size_t f) const { return detail::digits(f, axis(), order()); }

    double at(std::span<const int> index) const { return values_[flat(index)]; }
    double at(std::initializer_list<int> index) const { return at(std::span<const int>(index.begin(), index.size())); }
    double operator[](std::size_t f) const { return values_[f]; }

private:
    int d_;
    std::vector<int> subsystem_;
    std::vector<double> values_;
};

/// Hilbert-Schmidt (Euclidean) norm over all entries.
inline double tensor_norm(const CorrelationTensor& t) {
    double s = 0;
    for (double v : t.values()) s += v * v;
    return std::sqrt(s);
}

struct BlochVector {
    int d;
    VectorXd s;

    double norm() const { return s.norm(); }
};

/// s_i = (d/2) Tr(rho l_i) for a single-qudit density matrix.
inline BlochVector bloch_vector(const DensityMatrix& rho) {
    if (rho.m() != 1) throw std::invalid_argument("bloch_vector: expected a single-qudit density matrix");
    const auto& gs = generators(rho.d());
    BlochVector b{rho.d(), VectorXd(gs.count())};
    for (int i = 0; i < gs.count(); ++i) {
        const Complex tr = (rho.matrix() * gs[i]).trace();
        if (std::abs(tr.imag()) > tol::kImagResidue) throw std::logic_error("bloch_vector: non-real trace");
        b.s(i) = rho.d() / 2.0 * tr.real();
    }
    return b;
}

/// Bloch vector of qudit `site` of a pure state.
inline BlochVector bloch_vector(const PureState& psi, int site) {
    const int keep[] = {site};
    return bloch_vector(reduced_density(psi, keep));
}

/// Outer product s1 o s2 o ... as an order-M tensor on `subsystem`.
inline CorrelationTensor outer_product(std::span<const BlochVector> vs, std::vector<int> subsystem) {
    if (vs.empty() || vs.size() != subsystem.size()) throw std::invalid_argument("outer_product: need one vector per qudit");
    const int d = vs.front().d;
    std::vector<double> vals{1.0};
    for (const auto& v : vs) {
        if (v.d != d) throw std::invalid_argument("outer_product: mixed local dimensions");
        std::vector<double> next;
        next.reserve(vals.size() * static_cast<std::size_t>(v.s.size()));
        for (double x : vals)
            for (Eigen::Index i = 0; i < v.s.size(); ++i) next.push_back(x * v.s(i));
        vals = std::move(next);
    }
    return CorrelationTensor(d, std::move(subsystem), std::move(vals));
}

namespace detail {

inline void check_subsystem(std::span<const int> subsystem, int n) {
    if (subsystem.empty()) throw std::invalid_argument("correlation_tensor: empty subsystem");
    for (std::size_t i = 0; i < subsystem.size(); ++i) {
        if (subsystem[i] < 0 || subsystem[i] >= n)
            throw std::invalid_argument("correlation_tensor: qudit index " + std::to_string(subsystem[i]) + " out of range");
        if (i > 0 && subsystem[i] <= subsystem[i - 1])
            throw std::invalid_argument("correlation_tensor: subsystem must be sorted and distinct");
    }
}

// Applies generator `a` to qudit `site`, touching only its nonzero entries.
inline VectorXcd apply_generator(const VectorXcd& v, int d, int n, int site, const std::vector<SparseEntry>& op) {
    const auto stride = static_cast<Eigen::Index>(ipow(static_cast<std::size_t>(d), n - 1 - site));
    const Eigen::Index block = stride * d;
    VectorXcd out = VectorXcd::Zero(v.size());
    for (Eigen::Index base = 0; base < v.size(); base += block)
        for (const auto& e : op) {
            const Eigen::Index dst = base + e.row * stride;
            const Eigen::Index src = base + e.col * stride;
            for (Eigen::Index low = 0; low < stride; ++low) out(dst + low) += e.value * v(src + low);
        }
    return out;
}

// Writes Tr(R . l_{b_1} x ... x l_{b_h}) for every b into out[0 .. D^h), b_1
// most significant. R acts on h qudits.
inline void contract_operator(const MatrixXcd& r, int h, const GeneratorSet& gs, Complex* out) {
    if (h == 0) {
        out[0] = r(0, 0);
        return;
    }
    const int d = gs.d();
    const Eigen::Index sub = r.rows() / d;
    const std::size_t span = ipow(static_cast<std::size_t>(gs.count()), h - 1);
    MatrixXcd reduced(sub, sub);
    for (int a = 0; a < gs.count(); ++a) {
        reduced.setZero();
        // Tr(R (l x rest)) = Tr(R' rest) with R'(y', x') = sum l(x1, y1) R(y1 y', x1 x')
        for (const auto& e : gs.sparse(a)) reduced += e.value * r.block(e.col * sub, e.row * sub, sub, sub);
        contract_operator(reduced, h - 1, gs, out + static_cast<std::size_t>(a) * span);
    }
}

inline double real_entry(Complex c) {
    if (std::abs(c.imag()) > tol::kImagResidue)
        throw std::logic_error("correlation tensor entry has imaginary residue " + str(c.imag()));
    return c.real();
}

// Number of trailing qudits contracted through a small Gram operator instead
// of per-entry inner products; the operator is d^h x d^h.
inline int tail_width(int d, int order) {
    int h = 1;
    while (h < order && ipow(static_cast<std::size_t>(d), 2 * (h + 1)) <= 1024) ++h;
    return std::min(h, order);
}

}  // namespace detail

/// Single entry of the correlation tensor of psi on `subsystem`, evaluated
/// matrix-free as (d/2)^M <psi| l_{a_1} x ... x l_{a_M} |psi>. Safe to call
/// concurrently on a shared state.
inline double correlation_entry(const PureState& psi, std::span<const int> subsystem, std::span<const int> index) {
    detail::check_subsystem(subsystem, psi.n());
    if (index.size() != subsystem.size()) throw std::invalid_argument("correlation_entry: index rank mismatch");
    const auto& gs = generators(psi.d());
    VectorXcd v = psi.amplitudes();
    for (std::size_t k = 0; k < subsystem.size(); ++k) {
        if (index[k] < 0 || index[k] >= gs.count()) throw std::out_of_range("correlation_entry: generator index");
        v = detail::apply_generator(v, psi.d(), psi.n(), subsystem[k], gs.sparse(index[k]));
    }
    const double scale = std::pow(psi.d() / 2.0, static_cast<double>(subsystem.size()));
    return scale * detail::real_entry(psi.amplitudes().dot(v));
}

/// Correlation tensor of a pure state on a sorted qudit subset.
///
/// Generators on the leading subsystem qudits are applied to the state
/// vector; the trailing few qudits are contracted through a d^h x d^h Gram
/// operator so the inner product with psi is shared across their entries.
/// No d^N x d^N matrix is ever formed.
inline CorrelationTensor correlation_tensor(const PureState& psi, std::span<const int> subsystem) {
    detail::check_subsystem(subsystem, psi.n());
    const int d = psi.d();
    const int n = psi.n();
    const int order = static_cast<int>(subsystem.size());
    const auto& gs = generators(d);
    const int h = detail::tail_width(d, order);
    const int prefix = order - h;
    const std::span<const int> tail = subsystem.subspan(static_cast<std::size_t>(prefix));

    const auto table = detail::split_table(d, n, tail);
    const auto dx = static_cast<Eigen::Index>(table.size());
    const auto dothers = static_cast<Eigen::Index>(table.front().size());
    auto reshape = [&](const VectorXcd& v) {
        MatrixXcd m(dothers, dx);
        for (Eigen::Index x = 0; x < dx; ++x)
            for (Eigen::Index o = 0; o < dothers; ++o)
                m(o, x) = v(static_cast<Eigen::Index>(table[static_cast<std::size_t>(x)][static_cast<std::size_t>(o)]));
        return m;
    };
    const MatrixXcd p_conj = reshape(psi.amplitudes()).conjugate();

    const std::size_t tail_size = detail::ipow(static_cast<std::size_t>(gs.count()), h);
    std::vector<Complex> raw(detail::ipow(static_cast<std::size_t>(gs.count()), order));

    auto recurse = [&](auto&& self, const VectorXcd& v, int depth, std::size_t prefix_flat) -> void {
        if (depth == prefix) {
            // R(y, x) = sum_o conj(psi[o, x]) v[o, y]
            const MatrixXcd r = reshape(v).transpose() * p_conj;
            detail::contract_operator(r, h, gs, raw.data() + prefix_flat * tail_size);
            return;
        }
        for (int a = 0; a < gs.count(); ++a) {
            const VectorXcd next = detail::apply_generator(v, d, n, subsystem[static_cast<std::size_t>(depth)], gs.sparse(a));
            self(self, next, depth + 1, prefix_flat * static_cast<std::size_t>(gs.count()) + static_cast<std::size_t>(a));
        }
    };
    recurse(recurse, psi.amplitudes(), 0, 0);

    const double scale = std::pow(d / 2.0, order);
    std::vector<double> vals(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) vals[i] = scale * detail::real_entry(raw[i]);
    return CorrelationTensor(d, std::vector<int>(subsystem.begin(), subsystem.end()), std::move(vals));
}

/// Full-system tensor T^(N).
inline CorrelationTensor correlation_tensor(const PureState& psi) {
    std::vector<int> all(static_cast<std::size_t>(psi.n()));
    std::iota(all.begin(), all.end(), 0);
    return correlation_tensor(psi, all);
}

/// Correlation tensor of a (possibly mixed) state on a sorted qudit subset,
/// via the reduced density matrix of that subset.
inline CorrelationTensor correlation_tensor(const DensityMatrix& rho, std::span<const int> subsystem) {
    detail::check_subsystem(subsystem, rho.m());
    const auto& gs = generators(rho.d());
    const int order = static_cast<int>(subsystem.size());
    const MatrixXcd reduced = order == rho.m() ? rho.matrix() : partial_trace(rho, subsystem).matrix();
    std::vector<Complex> raw(detail::ipow(static_cast<std::size_t>(gs.count()), order));
    detail::contract_operator(reduced, order, gs, raw.data());
    const double scale = std::pow(rho.d() / 2.0, order);
    std::vector<double> vals(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) vals[i] = scale * detail::real_entry(raw[i]);
    return CorrelationTensor(rho.d(), std::vector<int>(subsystem.begin(), subsystem.end()), std::move(vals));
}

inline CorrelationTensor correlation_tensor(const DensityMatrix& rho) {
    std::vector<int> all(static_cast<std::size_t>(rho.m()));
    std::iota(all.begin(), all.end(), 0);
    return correlation_tensor(rho, all);
}

/// Whether psi is symmetric (+1) or antisymmetric (-1) under every exchange
/// of two qudits, or neither (0). Adjacent transpositions generate the full
/// permutation group, so they are the ones tested.
inline int exchange_symmetry(const PureState& psi, double tolerance = tol::kSymmetry) {
    if (psi.n() == 1) return 1;
    int sign = 0;
    for (int k = 0; k + 1 < psi.n(); ++k) {
        const VectorXcd swapped = detail::swap_sites(psi.amplitudes(), psi.d(), psi.n(), k, k + 1);
        int s = 0;
        if ((swapped - psi.amplitudes()).cwiseAbs().maxCoeff() <= tolerance)
            s = 1;
        else if ((swapped + psi.amplitudes()).cwiseAbs().maxCoeff() <= tolerance)
            s = -1;
        if (s == 0 || (sign != 0 && s != sign)) return 0;
        sign = s;
    }
    return sign;
}

struct SymmetricTensor {
    CorrelationTensor tensor;
    std::size_t representatives;  // entries actually evaluated
};

/// Full-system tensor of a permutation (anti)symmetric state. Only one entry
/// per index multiset is evaluated; the rest follow by permutation
/// invariance. Throws SymmetryError for other states.
inline SymmetricTensor correlation_tensor_symmetric(const PureState& psi) {
    if (exchange_symmetry(psi) == 0) throw SymmetryError("correlation_tensor_symmetric: state is not permutation (anti)symmetric");
    const int d = psi.d();
    const int n = psi.n();
    const auto& gs = generators(d);
    const auto axis = static_cast<std::size_t>(gs.count());
    auto result = CorrelationTensor::zeros(d, [&] {
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        return all;
    }());
    auto& vals = result.values();
    const double scale = std::pow(d / 2.0, n);
    std::size_t evaluated = 0;

    // Non-decreasing index tuples only.
    auto recurse = [&](auto&& self, const VectorXcd& v, int depth, int lowest, std::size_t flat) -> void {
        if (depth == n) {
            vals[flat] = scale * detail::real_entry(psi.amplitudes().dot(v));
            ++evaluated;
            return;
        }
        for (int a = lowest; a < gs.count(); ++a) {
            const VectorXcd next = detail::apply_generator(v, d, n, depth, gs.sparse(a));
            self(self, next, depth + 1, a, flat * axis + static_cast<std::size_t>(a));
        }
    };
    recurse(recurse, psi.amplitudes(), 0, 0, 0);

    std::vector<int> idx;
    for (std::size_t f = 0; f < vals.size(); ++f) {
        idx = result.unflat(f);
        if (std::is_sorted(idx.begin(), idx.end())) continue;
        std::sort(idx.begin(), idx.end());
        vals[f] = vals[result.flat(idx)];
    }
    return {std::move(result), evaluated};
}

/// Bloch expansion of rho over all 2^N qudit subsets. The empty subset maps
/// to the order-0 tensor holding 1.
class ExtendedTensor {
public:
    ExtendedTensor(int d, int n, std::map<std::vector<int>, CorrelationTensor> sectors)
        : d_(d), n_(n), sectors_(std::move(sectors)) {}

    int d() const { return d_; }
    int n() const { return n_; }
    const std::map<std::vector<int>, CorrelationTensor>& sectors() const { return sectors_; }
    const CorrelationTensor& sector(const std::vector<int>& subset) const { return sectors_.at(subset); }

    /// rho = d^-N sum_S sum_a t^S_a (l_a placed on S, identity elsewhere).
    MatrixXcd reconstruct() const {
        const auto& gs = generators(d_);
        const auto dim = static_cast<Eigen::Index>(detail::ipow(static_cast<std::size_t>(d_), n_));
        MatrixXcd rho = MatrixXcd::Zero(dim, dim);
        const MatrixXcd id = MatrixXcd::Identity(d_, d_);
        for (const auto& [subset, t] : sectors_) {
            for (std::size_t f = 0; f < t.size(); ++f) {
                if (t[f] == 0.0) continue;
                const auto idx = t.unflat(f);
                MatrixXcd op = MatrixXcd::Identity(1, 1);
                std::size_t next = 0;
                for (int q = 0; q < n_; ++q) {
                    const bool on = next < subset.size() && subset[next] == q;
                    const MatrixXcd& local = on ? gs[idx[next++]] : id;
                    MatrixXcd k(op.rows() * d_, op.cols() * d_);
                    for (Eigen::Index r = 0; r < op.rows(); ++r)
                        for (Eigen::Index c = 0; c < op.cols(); ++c) k.block(r * d_, c * d_, d_, d_) = op(r, c) * local;
                    op = std::move(k);
                }
                rho += t[f] * op;
            }
        }
        return rho / static_cast<double>(dim);
    }

private:
    int d_;
    int n_;
    std::map<std::vector<int>, CorrelationTensor> sectors_;
};

inline ExtendedTensor extended_tensor(const DensityMatrix& rho) {
    std::map<std::vector<int>, CorrelationTensor> sectors;
    sectors.emplace(std::vector<int>{}, CorrelationTensor(rho.d(), {}, {1.0}));
    for (unsigned mask = 1; mask < (1u << rho.m()); ++mask) {
        std::vector<int> subset;
        for (int q = 0; q < rho.m(); ++q)
            if (mask & (1u << q)) subset.push_back(q);
        sectors.emplace(subset, correlation_tensor(rho, subset));
    }
    return ExtendedTensor(rho.d(), rho.m(), std::move(sectors));
}

/// Mode-k unfolding (k is 0-based): row = index along mode k, column = the
/// remaining indices in order, last fastest.
inline MatrixXd matrix_unfolding(const CorrelationTensor& t, int k) {
    if (k < 0 || k >= t.order()) throw std::invalid_argument("matrix_unfolding: mode " + std::to_string(k) + " out of range");
    const int axis = t.axis();
    const auto cols = static_cast<Eigen::Index>(t.size() / static_cast<std::size_t>(axis));
    const auto inner = static_cast<Eigen::Index>(detail::ipow(static_cast<std::size_t>(axis), t.order() - 1 - k));
    MatrixXd m(axis, cols);
    for (std::size_t f = 0; f < t.size(); ++f) {
        const auto fi = static_cast<Eigen::Index>(f);
        const Eigen::Index outer = fi / (inner * axis);
        const Eigen::Index row = (fi / inner) % axis;
        const Eigen::Index low = fi % inner;
        m(row, outer * inner + low) = t[f];
    }
    return m;
}

/// Inverse of matrix_unfolding for a tensor with the shape of `like`.
inline CorrelationTensor fold(const MatrixXd& m, int k, const CorrelationTensor& like) {
    const int axis = like.axis();
    if (k < 0 || k >= like.order()) throw std::invalid_argument("fold: mode out of range");
    if (m.rows() != axis || static_cast<std::size_t>(m.size()) != like.size()) throw std::invalid_argument("fold: shape mismatch");
    const auto inner = static_cast<Eigen::Index>(detail::ipow(static_cast<std::size_t>(axis), like.order() - 1 - k));
    std::vector<double> vals(like.size());
    for (std::size_t f = 0; f < vals.size(); ++f) {
        const auto fi = static_cast<Eigen::Index>(f);
        vals[f] = m((fi / inner) % axis, (fi / (inner * axis)) * inner + fi % inner);
    }
    return CorrelationTensor(like.d(), like.subsystem(), std::move(vals));
}

/// (T x_k M)_{.. j ..} = sum_i M(j, i) T_{.. i ..}.
inline CorrelationTensor k_mode_product(const CorrelationTensor& t, const MatrixXd& m, int k) {
    if (m.rows() != t.axis() || m.cols() != t.axis())
        throw std::invalid_argument("k_mode_product: matrix must be (d^2-1) x (d^2-1)");
    return fold(m * matrix_unfolding(t, k), k, t);
}

}  // namespace etensor

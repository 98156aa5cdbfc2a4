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

#pragma once

#include "etensor/types.hpp"

#include <random>

namespace etensor {

using Rng = std::mt19937_64;

/// Derives an independent child seed (splitmix64 finalizer), so that trial i
/// of an experiment does not depend on how many trials run before it.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline Complex complex_normal(Rng& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    const double re = dist(rng);
    const double im = dist(rng);
    return {re, im};
}

inline MatrixXcd ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    MatrixXcd m(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c)
        for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = complex_normal(rng);
    return m;
}

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's
/// diagonal absorbed into Q.
inline MatrixXcd haar_unitary(int dim, Rng& rng) {
    const MatrixXcd z = ginibre(dim, dim, rng);
    Eigen::HouseholderQR<MatrixXcd> qr(z);
    MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(dim, dim);
    const MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        const double mag = std::abs(r(i, i));
        if (mag > 0) q.col(i) *= r(i, i) / mag;
    }
    return q;
}

}  // namespace etensor

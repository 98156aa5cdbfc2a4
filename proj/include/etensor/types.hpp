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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace etensor {

using Complex = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

/// Numerical tolerances shared by the validating constructors.
namespace tol {
inline constexpr double kGenerator = 1e-12;
inline constexpr double kNorm = 1e-10;
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kEigenFloor = -1e-9;
inline constexpr double kImagResidue = 1e-9;
inline constexpr double kSymmetry = 1e-8;
inline constexpr double kFileLoad = 1e-8;
inline constexpr double kRank = 1e-10;
inline constexpr double kIsometry = 1e-9;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kPovm = 1e-9;
inline constexpr double kOutcomePrune = 1e-12;
}  // namespace tol

/// Raised when a state is required to be (anti)symmetric under qudit
/// permutations and is not.
class SymmetryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a requested computation exceeds its configured size budget.
class BudgetError : public std::length_error {
public:
    using std::length_error::length_error;
};

namespace detail {

inline std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Base-d digits of `index`, most significant first (qudit 0 is the leading digit).
inline std::vector<int> digits(std::size_t index, int d, int n) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::size_t>(d));
        index /= static_cast<std::size_t>(d);
    }
    return out;
}

inline std::string str(double x) { return std::to_string(x); }

}  // namespace detail

}  // namespace etensor

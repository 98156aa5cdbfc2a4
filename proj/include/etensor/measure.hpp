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
/// \file measure.hpp
/// \brief The tensor-norm entanglement measure of N-qudit pure states.
///
/// E_T(psi) = ||T^(N)|| - (d(d-1)/2)^(N/2), where the subtracted term is the
/// norm every product state attains. Closed forms for the qutrit GHZ family
///    alpha|00..0> + beta|11..1> + gamma|22..2>
/// are provided alongside the brute-force evaluation so the two can be
/// compared.
///
#pragma once

#include "etensor/bloch_tensor.hpp"

#include <cmath>

namespace etensor {

/// Norm attained by every product state, (d(d-1)/2)^(n/2).
inline double product_baseline(int d, int n) { return std::pow(d * (d - 1) / 2.0, n / 2.0); }

struct MeasureReport {
    double tensor_norm = 0;
    double baseline = 0;
    double et = 0;
};

struct MeasureOptions {
    bool symmetric_fastpath = false;
};

inline MeasureReport et_pure(const PureState& psi, MeasureOptions opts = {}) {
    const double norm = opts.symmetric_fastpath ? tensor_norm(correlation_tensor_symmetric(psi).tensor)
                                                : tensor_norm(correlation_tensor(psi));
    const double base = product_baseline(psi.d(), psi.n());
    return {norm, base, norm - base};
}

/// ||T - s^(1) o ... o s^(N)||, zero exactly for product states.
inline double factorization_residual(const PureState& psi) {
    std::vector<BlochVector> singles;
    std::vector<int> all;
    for (int k = 0; k < psi.n(); ++k) {
        singles.push_back(bloch_vector(psi, k));
        all.push_back(k);
    }
    const auto t = correlation_tensor(psi);
    const auto o = outer_product(singles, all);
    double s = 0;
    for (std::size_t i = 0; i < t.size(); ++i) s += (t[i] - o[i]) * (t[i] - o[i]);
    return std::sqrt(s);
}

namespace detail {

inline void check_ghz_coeffs(double a, double b, double c, const char* who) {
    if (std::abs(a * a + b * b + c * c - 1.0) > tol::kNorm)
        throw std::invalid_argument(std::string(who) + ": coefficients are not normalized");
}

inline double binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Squared norm of the qutrit GHZ tensor without the (3/2)^(2N) prefactor.
// odd_family_top is the last k of the (2k+1)-lambda3 family.
inline double ghz_bracket(int n, double a, double b, double c, int odd_family_top) {
    const double a2 = a * a, b2 = b * b, c2 = c * c;
    double s = 0;
    // lambda1/lambda2, lambda4/lambda5 and lambda6/lambda7 families
    for (int k = 0; k <= n / 2; ++k) s += binom(n, 2 * k) * 4.0 * (a2 * b2 + a2 * c2 + b2 * c2);
    // 2k lambda3 and (N-2k) lambda8
    for (int k = 1; k <= n / 2; ++k) s += binom(n, 2 * k) * std::pow(1.0 / 3.0, n - 2 * k) * (a2 + b2) * (a2 + b2);
    // 2k+1 lambda3 and (N-2k-1) lambda8
    for (int k = 0; k <= odd_family_top; ++k)
        s += binom(n, 2 * k + 1) * std::pow(1.0 / 3.0, n - 2 * k - 1) * (a2 - b2) * (a2 - b2);
    const double all8 = a2 + b2 + std::pow(-2.0, n) * c2;
    s += std::pow(1.0 / 3.0, n) * all8 * all8;
    return s;
}

}  // namespace detail

/// Closed-form E_T of the N-qutrit GHZ family from its nonzero tensor
/// entries. Every family runs over its full range, including the
/// all-lambda3 entry (alpha^2 - beta^2) that exists for odd N.
inline double et_ghz_closed_form(int n, double alpha, double beta, double gamma) {
    if (n < 2) throw std::invalid_argument("et_ghz_closed_form: n must be >= 2");
    detail::check_ghz_coeffs(alpha, beta, gamma, "et_ghz_closed_form");
    const double s = detail::ghz_bracket(n, alpha, beta, gamma, (n - 1) / 2);
    return std::pow(1.5, n) * std::sqrt(s) - std::pow(3.0, n / 2.0);
}

/// The binomial-sum form with the odd lambda3 family stopping at
/// k = floor(N/2) - 1. Equal to et_ghz_closed_form for even N; for odd N it
/// omits the all-lambda3 entry. Kept for comparison reports only.
inline double et_ghz_truncated_odd_range(int n, double alpha, double beta, double gamma) {
    if (n < 2) throw std::invalid_argument("et_ghz_truncated_odd_range: n must be >= 2");
    detail::check_ghz_coeffs(alpha, beta, gamma, "et_ghz_truncated_odd_range");
    const double s = detail::ghz_bracket(n, alpha, beta, gamma, n / 2 - 1);
    return std::pow(1.5, n) * std::sqrt(s) - std::pow(3.0, n / 2.0);
}

/// Three-qutrit GHZ closed form,
/// (sqrt(27)/2)[27 P + 9/4 (a2-b2)^2 + 27/16 (a2+b2)^2 + 1/16 (a2+b2-8c2)^2]^(1/2) - sqrt(27).
inline double et_ghz3_formula(double alpha, double beta, double gamma) {
    detail::check_ghz_coeffs(alpha, beta, gamma, "et_ghz3_formula");
    const double a2 = alpha * alpha, b2 = beta * beta, c2 = gamma * gamma;
    const double p = a2 * b2 + a2 * c2 + b2 * c2;
    const double bracket = 27.0 * p + 9.0 / 4.0 * (a2 - b2) * (a2 - b2) + 27.0 / 16.0 * (a2 + b2) * (a2 + b2) +
                           1.0 / 16.0 * (a2 + b2 - 8 * c2) * (a2 + b2 - 8 * c2);
    return std::sqrt(27.0) / 2.0 * std::sqrt(bracket) - std::sqrt(27.0);
}

/// Concurrence of alpha|00> + beta|11> + gamma|22>.
inline double concurrence_2qutrit(double alpha, double beta, double gamma) {
    detail::check_ghz_coeffs(alpha, beta, gamma, "concurrence_2qutrit");
    const double a2 = alpha * alpha, b2 = beta * beta, c2 = gamma * gamma;
    return std::sqrt(4.0 * (a2 * b2 + a2 * c2 + b2 * c2));
}

/// E_T of the two-qutrit GHZ family written through its concurrence.
inline double et_from_concurrence_2qutrit(double alpha, double beta, double gamma) {
    const double c = concurrence_2qutrit(alpha, beta, gamma);
    const double a2 = alpha * alpha, b2 = beta * beta, c2 = gamma * gamma;
    const double bracket = 2.0 * c * c + (1.0 - c2) * (1.0 - c2) + 2.0 / 3.0 * (a2 - b2) * (a2 - b2) +
                           1.0 / 9.0 * (1.0 + 3.0 * c2) * (1.0 + 3.0 * c2);
    return 9.0 / 4.0 * std::sqrt(bracket) - 3.0;
}

struct SuperadditivityReport {
    double et_psi = 0;
    double et_phi = 0;
    double et_combined = 0;
    double margin = 0;               // et_combined - et_psi - et_phi
    double combined_norm = 0;        // brute force over psi (x) phi
    double product_of_norms = 0;     // ||T_psi|| ||T_phi||
    double multiplicativity_gap = 0; // relative |combined_norm - product_of_norms|

    bool holds(double slack = 1e-9) const { return margin >= -slack; }
};

/// Default cap on the number of tensor entries enumerated for psi (x) phi.
inline constexpr std::size_t kDefaultEntryBudget = std::size_t{1} << 21;

inline SuperadditivityReport check_superadditivity(const PureState& psi, const PureState& phi,
                                                   std::size_t entry_budget = kDefaultEntryBudget) {
    if (psi.d() != phi.d()) throw std::invalid_argument("check_superadditivity: local dimensions differ");
    const auto entries = detail::ipow(static_cast<std::size_t>(psi.d() * psi.d() - 1), psi.n() + phi.n());
    if (entries > entry_budget)
        throw BudgetError("check_superadditivity: combined tensor has " + std::to_string(entries) +
                          " entries, budget is " + std::to_string(entry_budget));
    const auto a = et_pure(psi);
    const auto b = et_pure(phi);
    const auto c = et_pure(tensor_product(psi, phi));
    SuperadditivityReport r;
    r.et_psi = a.et;
    r.et_phi = b.et;
    r.et_combined = c.et;
    r.margin = c.et - a.et - b.et;
    r.combined_norm = c.tensor_norm;
    r.product_of_norms = a.tensor_norm * b.tensor_norm;
    r.multiplicativity_gap = std::abs(r.combined_norm - r.product_of_norms) / r.product_of_norms;
    return r;
}

}  // namespace etensor

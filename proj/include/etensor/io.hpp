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
/// \file io.hpp
/// \brief JSON state files and report serialization.
///
/// State file:    {"d": 3, "n": 2, "amplitudes": [[re, im], ...], "normalize": false}
/// Density file:  {"d": 3, "m": 2, "matrix": [[[re, im], ...], ...]}
///
/// Amplitudes are listed in big-endian base-d order, the first qudit being
/// the most significant digit. Report numbers carry 12 significant digits.
///
#pragma once

#include "etensor/convex_roof.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace etensor::io {

using Json = nlohmann::ordered_json;

/// Bad input: unreadable file, malformed JSON, or a state that fails validation.
class InputError : public std::runtime_error {
public:
    InputError(std::string code, const std::string& message) : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("io_error", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
        throw InputError("parse_error", e.what());
    }
}

/// x rounded to 12 significant digits; non-finite values are refused.
inline double round12(double x) {
    if (!std::isfinite(x)) throw std::logic_error("refusing to serialize a non-finite number");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

inline Json number(double x) { return round12(x); }

namespace detail {

inline int require_int(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError("missing_field", std::string("missing field \"") + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw InputError("invalid_field", std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

inline Complex complex_pair(const Json& p) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
        throw InputError("invalid_field", "complex numbers are written as [re, im]");
    const Complex z(p[0].get<double>(), p[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InputError("invalid_field", "non-finite amplitude");
    return z;
}

inline void check_dims(int d, int n, const char* what) {
    if (d < 2) throw InputError("invalid_field", "d must be >= 2");
    if (n < 1) throw InputError("invalid_field", std::string(what) + " must be >= 1");
    if (static_cast<double>(std::pow(d, n)) > 1e7) throw InputError("budget_exceeded", "state dimension d^n is too large");
}

}  // namespace detail

/// Parses a state file. Off-norm amplitudes are accepted within 1e-8, or at
/// any norm when normalization is requested by the file or the caller.
inline PureState parse_state(const Json& j, bool normalize = false) {
    const int d = detail::require_int(j, "d");
    const int n = detail::require_int(j, "n");
    detail::check_dims(d, n, "n");
    if (!j.contains("amplitudes") || !j.at("amplitudes").is_array())
        throw InputError("missing_field", "missing field \"amplitudes\"");
    if (j.contains("normalize")) {
        if (!j.at("normalize").is_boolean()) throw InputError("invalid_field", "field \"normalize\" must be a boolean");
        normalize = normalize || j.at("normalize").get<bool>();
    }
    const auto& a = j.at("amplitudes");
    const std::size_t dim = etensor::detail::ipow(static_cast<std::size_t>(d), n);
    if (a.size() != dim)
        throw InputError("amplitude_count_mismatch", "amplitude count mismatch: expected " + std::to_string(dim) + ", got " +
                                                         std::to_string(a.size()));
    VectorXcd v(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) v(static_cast<Eigen::Index>(i)) = detail::complex_pair(a[i]);
    const double norm = v.norm();
    if (norm == 0.0) throw InputError("not_normalized", "state vector is zero");
    if (!normalize && std::abs(norm - 1.0) > tol::kFileLoad)
        throw InputError("not_normalized", "state norm is " + etensor::detail::str(norm) + "; pass --normalize to rescale");
    return PureState::normalized(d, n, std::move(v));
}

inline DensityMatrix parse_density(const Json& j) {
    const int d = detail::require_int(j, "d");
    const int m = detail::require_int(j, "m");
    detail::check_dims(d, 2 * m, "m");
    if (!j.contains("matrix") || !j.at("matrix").is_array()) throw InputError("missing_field", "missing field \"matrix\"");
    const auto& rows = j.at("matrix");
    const std::size_t dim = etensor::detail::ipow(static_cast<std::size_t>(d), m);
    if (rows.size() != dim) throw InputError("shape_mismatch", "matrix must have d^m = " + std::to_string(dim) + " rows");
    MatrixXcd mat(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
        if (!rows[r].is_array() || rows[r].size() != dim)
            throw InputError("shape_mismatch", "row " + std::to_string(r) + " must have " + std::to_string(dim) + " entries");
        for (std::size_t c = 0; c < dim; ++c)
            mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = detail::complex_pair(rows[r][c]);
    }
    try {
        return DensityMatrix(d, m, std::move(mat), DensityTolerance::file_load());
    } catch (const std::invalid_argument& e) {
        throw InputError("invalid_density", e.what());
    }
}

inline Json complex_array(const VectorXcd& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(Json::array({number(v(i).real()), number(v(i).imag())}));
    return out;
}

inline Json state_to_json(const PureState& psi) {
    return Json{{"d", psi.d()}, {"n", psi.n()}, {"amplitudes", complex_array(psi.amplitudes())}};
}

inline Json density_to_json(const DensityMatrix& rho) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < rho.dim(); ++r) rows.push_back(complex_array(rho.matrix().row(r).transpose()));
    return Json{{"d", rho.d()}, {"m", rho.m()}, {"matrix", rows}};
}

inline Json to_json(const MeasureReport& r) {
    // Product states land within rounding of the baseline; report those as 0.
    const double et = std::abs(r.et) < 1e-12 * r.baseline ? 0.0 : r.et;
    return Json{{"tensor_norm", number(r.tensor_norm)}, {"baseline", number(r.baseline)}, {"et", number(et)}};
}

inline Json to_json(const RoofResult& r) {
    Json weights = Json::array();
    Json states = Json::array();
    for (std::size_t i = 0; i < r.decomposition.states.size(); ++i) {
        weights.push_back(number(r.decomposition.weights[i]));
        states.push_back(complex_array(r.decomposition.states[i].amplitudes()));
    }
    return Json{{"value", number(r.value)},
                {"upper_bound", true},
                {"eigendecomposition_value", number(r.eigendecomposition_value)},
                {"restarts", r.restarts_used},
                {"iterations", r.iterations},
                {"converged", r.converged},
                {"decomposition", Json{{"weights", weights}, {"states", states}}}};
}

inline Json to_json(const AlgebraCheck& c) {
    return Json{{"d", c.d},
                {"generators", c.count},
                {"max_trace", number(c.max_trace)},
                {"max_hermiticity", number(c.max_hermiticity)},
                {"max_orthonormality", number(c.max_orthonormality)},
                {"max_reconstruction", number(c.max_reconstruction)},
                {"max_f_antisymmetry", number(c.max_f_antisymmetry)},
                {"max_g_symmetry", number(c.max_g_symmetry)},
                {"passed", c.passed()}};
}

}  // namespace etensor::io

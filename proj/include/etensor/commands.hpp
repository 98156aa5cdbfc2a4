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
/// \file commands.hpp
/// \brief Subcommands of the etensor tool, callable without a process.
///
/// Each command returns a JSON report and an exit code: 0 on success, 1 when
/// a gating property suite fails, 2 for rejected input. `guarded` turns
/// exceptions into {"error": {"code", "message"}} reports.
///
#pragma once

#include "etensor/io.hpp"

#include <functional>

namespace etensor::cmd {

using io::Json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitGateFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitInternal = 3;

struct Result {
    Json body;
    int exit_code = kExitOk;
};

inline Result error(const std::string& code, const std::string& message, int exit_code = kExitBadInput) {
    return {Json{{"error", Json{{"code", code}, {"message", message}}}}, exit_code};
}

inline Result guarded(const std::function<Result()>& fn) {
    try {
        return fn();
    } catch (const io::InputError& e) {
        return error(e.code(), e.what());
    } catch (const SymmetryError& e) {
        return error("not_symmetric", e.what());
    } catch (const BudgetError& e) {
        return error("budget_exceeded", e.what());
    } catch (const std::invalid_argument& e) {
        return error("invalid_argument", e.what());
    } catch (const std::domain_error& e) {
        return error("invalid_argument", e.what());
    } catch (const std::exception& e) {
        return error("internal_error", e.what(), kExitInternal);
    }
}

// ---------------------------------------------------------------- et

struct EtOptions {
    bool normalize = false;
    bool symmetric_fastpath = false;
};

inline Result et(const Json& state_file, const EtOptions& opt = {}) {
    const PureState psi = io::parse_state(state_file, opt.normalize);
    Json body{{"d", psi.d()}, {"n", psi.n()}, {"symmetric_fastpath", opt.symmetric_fastpath}};
    body.update(io::to_json(et_pure(psi, {opt.symmetric_fastpath})));
    return {body};
}

// ---------------------------------------------------------------- ghz

enum class Compare { none, eq11, bruteforce };

inline Compare parse_compare(const std::string& s) {
    if (s.empty() || s == "none") return Compare::none;
    if (s == "eq11") return Compare::eq11;
    if (s == "bruteforce") return Compare::bruteforce;
    throw io::InputError("invalid_argument", "--compare must be eq11 or bruteforce");
}

struct GhzOptions {
    int n = 3;
    double alpha = 1 / std::sqrt(3.0);
    double beta = 1 / std::sqrt(3.0);
    double gamma = 1 / std::sqrt(3.0);
    Compare compare = Compare::none;
    bool normalize = false;
};

/// Largest n for which the brute-force comparison enumerates at most 2^21 entries.
inline constexpr int kGhzBruteForceMaxN = 7;

inline Result ghz(GhzOptions o) {
    if (o.n < 2) throw io::InputError("invalid_argument", "n must be >= 2");
    if (o.n > 64) throw io::InputError("budget_exceeded", "n must be <= 64");
    if (o.normalize) {
        const double s = std::sqrt(o.alpha * o.alpha + o.beta * o.beta + o.gamma * o.gamma);
        if (s == 0.0) throw io::InputError("invalid_argument", "coefficients are all zero");
        o.alpha /= s, o.beta /= s, o.gamma /= s;
    }
    if (std::abs(o.alpha * o.alpha + o.beta * o.beta + o.gamma * o.gamma - 1.0) > tol::kNorm)
        throw io::InputError("not_normalized", "alpha^2 + beta^2 + gamma^2 must be 1; pass --normalize to rescale");
    if (o.compare == Compare::eq11 && o.n != 3) throw io::InputError("invalid_argument", "--compare eq11 requires n = 3");
    if (o.compare == Compare::bruteforce && o.n > kGhzBruteForceMaxN)
        throw io::InputError("budget_exceeded", "--compare bruteforce supports n <= " + std::to_string(kGhzBruteForceMaxN));

    const double closed = et_ghz_closed_form(o.n, o.alpha, o.beta, o.gamma);
    Json body{{"n", o.n},
              {"alpha", io::number(o.alpha)},
              {"beta", io::number(o.beta)},
              {"gamma", io::number(o.gamma)},
              {"et", io::number(std::abs(closed) < 1e-12 ? 0.0 : closed)}};
    if (o.compare == Compare::eq11) {
        const double v = et_ghz3_formula(o.alpha, o.beta, o.gamma);
        body["eq11"] = Json{{"value", io::number(v)}, {"delta", io::number(std::abs(v - closed))}};
    }
    if (o.compare == Compare::bruteforce) {
        const std::array<double, 3> c{o.alpha, o.beta, o.gamma};
        const double v = et_pure(ghz_state(3, o.n, c)).et;
        body["bruteforce"] = Json{{"value", io::number(v)}, {"delta", io::number(std::abs(v - closed))}};
    }
    return {body};
}

// ---------------------------------------------------------------- properties

struct PropertiesOptions {
    std::uint64_t seed = 0;
    int trials = 100;
    int d = 3;
    int n = 3;
    KrausFamily kraus = KrausFamily::normal;
};

namespace detail {

// Pass/fail tally of one property suite; margin >= -slack passes.
class Suite {
public:
    Suite(double slack, bool gating) : slack_(slack), gating_(gating) {}

    void record(double margin) {
        ++trials_;
        if (margin >= -slack_) ++passed_;
        worst_ = std::min(worst_, margin);
    }

    bool failed() const { return gating_ && passed_ != trials_; }

    Json report(Json extra = Json::object()) const {
        Json j{{"trials", trials_},
               {"passed", passed_},
               {"failed", trials_ - passed_},
               {"worst_margin", io::number(trials_ ? worst_ : 0.0)},
               {"slack", slack_},
               {"gating", gating_}};
        if (!gating_) j["exploratory"] = true;
        j.update(extra);
        return j;
    }

private:
    double slack_;
    bool gating_;
    int trials_ = 0;
    int passed_ = 0;
    double worst_ = std::numeric_limits<double>::infinity();
};

inline std::vector<double> random_unit_reals(int count, Rng& rng) {
    std::normal_distribution<double> g;
    std::vector<double> v(static_cast<std::size_t>(count));
    double s = 0;
    for (auto& x : v) {
        x = g(rng);
        s += x * x;
    }
    for (auto& x : v) x /= std::sqrt(s);
    return v;
}

enum Stream : std::uint64_t { kPositivity = 1, kLu, kPovm, kTraceOut, kTraceOutRandom, kSuperadditivity };

}  // namespace detail

/// Qudit counts of the superadditivity pairs: (n, n) when the combined tensor
/// fits the entry budget, otherwise (ceil(n/2), floor(n/2)).
inline std::pair<int, int> superadditivity_split(int d, int n) {
    const auto side = static_cast<std::size_t>(d * d - 1);
    if (etensor::detail::ipow(side, 2 * n) <= kDefaultEntryBudget) return {n, n};
    return {(n + 1) / 2, n / 2};
}

inline Result properties(const PropertiesOptions& o) {
    if (o.d < 2 || o.d > 4) throw io::InputError("invalid_argument", "d must be 2, 3 or 4");
    if (o.n < 2) throw io::InputError("invalid_argument", "n must be >= 2");
    if (o.trials < 0) throw io::InputError("invalid_argument", "trials must be >= 0");
    if (std::pow(o.d, o.n) > 1e5) throw io::InputError("budget_exceeded", "d^n must be <= 1e5");
    if (etensor::detail::ipow(static_cast<std::size_t>(o.d * o.d - 1), o.n) > kDefaultEntryBudget)
        throw io::InputError("budget_exceeded", "(d^2-1)^n tensor entries exceed 2^21");

    Json body{{"seed", o.seed}, {"trials", o.trials}, {"d", o.d}, {"n", o.n}, {"suites", Json::object()}};
    if (o.trials == 0) return {body};

    const int d = o.d, n = o.n;
    auto seed_of = [&](detail::Stream s, int t) {
        return derive_seed(derive_seed(o.seed, s), static_cast<std::uint64_t>(t));
    };

    detail::Suite positivity(1e-9, true);
    for (int t = 0; t < o.trials; ++t) positivity.record(et_pure(random_pure_state(d, n, seed_of(detail::kPositivity, t))).et);

    detail::Suite lu(1e-8, true);
    for (int t = 0; t < o.trials; ++t) {
        const auto s = seed_of(detail::kLu, t);
        std::vector<LocalUnitary> us;
        for (int k = 0; k < n; ++k) us.push_back(random_local_unitary(d, k, derive_seed(s, static_cast<std::uint64_t>(k + 1))));
        lu.record(-lu_invariance(random_pure_state(d, n, derive_seed(s, 0)), us).delta());
    }

    detail::Suite povm(1e-8, o.kraus == KrausFamily::normal);
    for (int t = 0; t < o.trials; ++t) {
        const auto s = seed_of(detail::kPovm, t);
        Rng rng(derive_seed(s, 0));
        const int site = std::uniform_int_distribution<int>(0, n - 1)(rng);
        const int outcomes = std::uniform_int_distribution<int>(2, d)(rng);
        const auto m = random_local_povm(d, site, outcomes, derive_seed(s, 1), o.kraus);
        povm.record(povm_monotonicity(random_pure_state(d, n, derive_seed(s, 2)), m).margin());
    }

    detail::Suite trace_out(1e-9, true);
    detail::Suite trace_out_random(1e-9, false);
    for (int t = 0; t < o.trials; ++t) {
        Rng rng(seed_of(detail::kTraceOut, t));
        const int site = std::uniform_int_distribution<int>(0, n - 1)(rng);
        trace_out.record(trace_out_and_compare(ghz_state(d, n, detail::random_unit_reals(d, rng)), site).margin());
        const auto s = seed_of(detail::kTraceOutRandom, t);
        trace_out_random.record(trace_out_and_compare(random_pure_state(d, n, s), site).margin());
    }

    const auto [na, nb] = superadditivity_split(d, n);
    detail::Suite super(1e-9, true);
    double worst_gap = 0;
    for (int t = 0; t < o.trials; ++t) {
        const auto s = seed_of(detail::kSuperadditivity, t);
        const auto r = check_superadditivity(random_pure_state(d, na, derive_seed(s, 0)), random_pure_state(d, nb, derive_seed(s, 1)));
        super.record(r.margin);
        worst_gap = std::max(worst_gap, r.multiplicativity_gap);
    }

    Json& suites = body["suites"];
    suites["positivity"] = positivity.report();
    suites["lu_invariance"] = lu.report();
    suites["povm_monotonicity"] =
        povm.report(Json{{"kraus", o.kraus == KrausFamily::normal ? "normal" : "general"}});
    suites["trace_out"] = trace_out.report(Json{{"family", "ghz"}});
    suites["trace_out_random"] = trace_out_random.report(Json{{"family", "random"}});
    suites["superadditivity"] =
        super.report(Json{{"pair", Json::array({na, nb})}, {"max_multiplicativity_gap", io::number(worst_gap)}});

    const bool failed = positivity.failed() || lu.failed() || povm.failed() || trace_out.failed() || super.failed();
    body["passed"] = !failed;
    return {body, failed ? kExitGateFailed : kExitOk};
}

// ---------------------------------------------------------------- roof

inline Result roof(const Json& density_file, const RoofBudget& budget = {}) {
    const DensityMatrix rho = io::parse_density(density_file);
    Json body{{"d", rho.d()},
              {"m", rho.m()},
              {"rank", spectrum(rho).rank()},
              {"seed", budget.seed},
              {"budget", Json{{"restarts", budget.restarts}, {"iterations", budget.iterations}}}};
    body.update(io::to_json(et_mixed(rho, budget)));
    return {body};
}

// ---------------------------------------------------------------- gen-check

inline Result gen_check(int d) {
    if (d < 2 || d > 10) throw io::InputError("invalid_argument", "d must be between 2 and 10");
    const auto c = check_algebra(generators(d));
    return {io::to_json(c), c.passed() ? kExitOk : kExitGateFailed};
}

}  // namespace etensor::cmd

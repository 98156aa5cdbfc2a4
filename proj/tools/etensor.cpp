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

// Command-line front end. Argument parsing only; the commands live in
// etensor/commands.hpp.

#include "etensor/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using etensor::cmd::Json;
using etensor::cmd::Result;

int emit(const Result& r, const std::string& json_out) {
    const std::string text = r.body.dump(2) + "\n";
    if (r.body.contains("error")) {
        std::cerr << text;
        return r.exit_code;
    }
    if (json_out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(json_out);
        if (!out) {
            std::cerr << etensor::cmd::error("io_error", "cannot write " + json_out).body.dump(2) << "\n";
            return etensor::cmd::kExitBadInput;
        }
        out << text;
    }
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Correlation-tensor entanglement measure for qudit states"};
    app.require_subcommand(1);
    std::string json_out;
    app.add_option("--json-out", json_out, "Write the JSON report to this file instead of stdout");

    std::string state_path;
    etensor::cmd::EtOptions et_opt;
    auto* et = app.add_subcommand("et", "E_T of a pure state file");
    et->add_option("state", state_path, "State file (JSON)")->required();
    et->add_flag("--normalize", et_opt.normalize, "Rescale amplitudes to unit norm");
    et->add_flag("--symmetric-fastpath", et_opt.symmetric_fastpath, "Evaluate symmetric states on sorted indices only");

    etensor::cmd::GhzOptions ghz_opt;
    std::string compare;
    auto* ghz = app.add_subcommand("ghz", "Closed-form E_T of the N-qutrit GHZ family");
    ghz->add_option("--n", ghz_opt.n, "Number of qutrits")->capture_default_str();
    ghz->add_option("--alpha", ghz_opt.alpha, "Coefficient of |00..0>");
    ghz->add_option("--beta", ghz_opt.beta, "Coefficient of |11..1>");
    ghz->add_option("--gamma", ghz_opt.gamma, "Coefficient of |22..2>");
    ghz->add_option("--compare", compare, "Also evaluate eq11 (n = 3) or bruteforce")
        ->check(CLI::IsMember({"eq11", "bruteforce"}));
    ghz->add_flag("--normalize", ghz_opt.normalize, "Rescale the coefficients to unit norm");

    etensor::cmd::PropertiesOptions prop_opt;
    std::string kraus = "normal";
    auto* prop = app.add_subcommand("properties", "Randomized property suites");
    prop->add_option("--seed", prop_opt.seed, "Master seed")->capture_default_str();
    prop->add_option("--trials", prop_opt.trials, "Trials per suite")->capture_default_str();
    prop->add_option("--d", prop_opt.d, "Local dimension (2, 3 or 4)")->capture_default_str();
    prop->add_option("--n", prop_opt.n, "Number of qudits")->capture_default_str();
    prop->add_option("--kraus", kraus, "POVM family: normal (gating) or general (exploratory)")
        ->check(CLI::IsMember({"normal", "general"}))
        ->capture_default_str();

    std::string density_path;
    etensor::RoofBudget budget;
    auto* roof = app.add_subcommand("roof", "Convex-roof upper bound for a density matrix file");
    roof->add_option("density", density_path, "Density file (JSON)")->required();
    roof->add_option("--restarts", budget.restarts, "Random restarts")->capture_default_str();
    roof->add_option("--iterations", budget.iterations, "Maximum sweeps per start")->capture_default_str();
    roof->add_option("--seed", budget.seed, "Master seed")->capture_default_str();

    int gen_d = 3;
    auto* gen = app.add_subcommand("gen-check", "Check the SU(d) generator invariants");
    gen->add_option("--d", gen_d, "Local dimension")->capture_default_str();

    for (auto* sub : {et, ghz, prop, roof, gen})
        sub->add_option("--json-out", json_out, "Write the JSON report to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << etensor::cmd::error("usage", e.what()).body.dump(2) << "\n";
        return etensor::cmd::kExitBadInput;
    }

    using etensor::cmd::guarded;
    Result r;
    if (*et) {
        r = guarded([&] { return etensor::cmd::et(etensor::io::read_json_file(state_path), et_opt); });
    } else if (*ghz) {
        r = guarded([&] {
            ghz_opt.compare = etensor::cmd::parse_compare(compare);
            return etensor::cmd::ghz(ghz_opt);
        });
    } else if (*prop) {
        prop_opt.kraus = kraus == "general" ? etensor::KrausFamily::general : etensor::KrausFamily::normal;
        r = guarded([&] { return etensor::cmd::properties(prop_opt); });
    } else if (*roof) {
        r = guarded([&] { return etensor::cmd::roof(etensor::io::read_json_file(density_path), budget); });
    } else {
        r = guarded([&] { return etensor::cmd::gen_check(gen_d); });
    }
    return emit(r, json_out);
}

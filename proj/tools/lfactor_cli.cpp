// Copyright 2026 The lfactor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include <lfactor/runner.hpp>

namespace
{

constexpr int exit_usage = 2;

const std::map<std::string, std::string> commands = {
    {"alpha", "classical normalization factor alpha_{c,a}(s)"},
    {"beta", "classical normalization factor beta_{c,a}(s)"},
    {"alpha-gl", "GL normalization factor alpha_GL(s, rho_c(tau_a), rho_d(tau_b))"},
    {"discrepancy", "discrepancy P of one decomposition way"},
    {"verify-closed-forms", "regression of every catalogued closed form"},
    {"common-poles", "shared pole loci of two ways"},
    {"strategy", "induction strategy check at one point"},
    {"gcd-corollary", "gcd of the inverse normalization factors"},
    {"sweep", "grid sweep with per-point verdicts"},
};

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact symbolic bookkeeping for normalized intertwining operators", "lfactor"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", lfactor::engine_version);

    lfactor::RunRequest req;
    std::string format = "text";
    std::string out_path;
    std::string tau_pole;
    std::string sigma_pole;

    app.add_option("--c", req.c, "c (number of twists of tau_a)");
    app.add_option("--a", req.a, "a (Steinberg length)");
    app.add_option("--d", req.d, "d for GL ways");
    app.add_option("--b", req.b, "b for GL ways");
    app.add_option("--param", req.param, "discrete series parameter, e.g. \"5,1\"");
    app.add_option("--group", req.group, "u-even, u-odd, so-odd, sp or so-even");
    app.add_option("--tau-pole", tau_pole, "restrict to configurations with this pole side")
        ->check(CLI::IsMember({"rho", "rho-minus"}));
    app.add_option("--sigma-pole", sigma_pole, "restrict to configurations with or without the sigma pole")
        ->check(CLI::IsMember({"true", "false"}));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write the report to a file instead of standard output");
    app.add_option("--way", req.way, "way for discrepancy");
    app.add_option("--way1", req.way1, "first way for common-poles");
    app.add_option("--way2", req.way2, "second way for common-poles");
    app.add_option("--pair", req.pair, "index of the segment pair for cl3");
    app.add_option("--suite", req.suite, "closed-form suite: all, gl, degenerate, segment, general, steinberg");
    app.add_option("--grid", req.grid,
                   "sweep grid: common-poles, gl-recursion, alpha-gl-recursion, consistency, strategy, sign-class, pair-identity");
    app.add_option("--max-c", req.max_c, "upper bound on c for sweeps");
    app.add_option("--max-a", req.max_a, "upper bound on a for sweeps");
    app.add_option("--jobs", req.jobs, "worker tasks for sweeps");

    for (const auto &[name, help] : commands) {
        app.add_subcommand(name, help);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    req.command = app.get_subcommands().front()->get_name();
    req.c_given = app.count("--c") > 0;
    if (!tau_pole.empty()) {
        req.tau_pole = tau_pole == "rho" ? lfactor::Sign::plus : lfactor::Sign::minus;
    }
    if (!sigma_pole.empty()) {
        req.sigma_pole = sigma_pole == "true";
    }

    lfactor::Report report;
    try {
        report = lfactor::run(req);
    } catch (const lfactor::UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    const std::string body = format == "json" ? report.document.dump(2) + "\n" : report.text;
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return exit_usage;
        }
        out << body;
    }
    return report.exit_code;
}

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

#ifndef LFACTOR_RUNNER_HPP
#define LFACTOR_RUNNER_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "closed_forms.hpp"
#include "decompositions.hpp"
#include "expand.hpp"
#include "group.hpp"
#include "normalization.hpp"
#include "param.hpp"
#include "poles.hpp"
#include "report.hpp"

namespace lfactor
{

/// Raised for malformed or out-of-domain requests. Maps to exit status 2.
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct RunRequest {
    std::string command;
    int c = 1;
    int a = 1;
    int d = 1;
    int b = 1;
    std::string param;
    std::string group = "sp";
    std::optional<Sign> tau_pole;
    std::optional<bool> sigma_pole;
    std::string way = "cl1";
    std::string way1 = "cl1";
    std::string way2 = "cl2";
    std::string suite = "all";
    std::string grid = "common-poles";
    int pair = 0;
    int max_c = 0;
    int max_a = 0;
    unsigned jobs = 1;
    // gcd-corollary runs c = 1..8 unless a single c was asked for.
    bool c_given = false;
};

struct Report {
    json document;
    std::string text;
    int exit_code = 0;
};

/// L(z, tau_a, rho) L(z, tau_a, rho^-) against L(z, tau_a x tau_a) after atomizing both.
inline bool consistency_holds(int a, int z_coeff, const Rational &z_shift)
{
    const LProduct lhs = single(z_coeff, z_shift, kernels::TwistedExt{a, Sign::plus})
                         * single(z_coeff, z_shift, kernels::TwistedExt{a, Sign::minus});
    const LProduct rhs = single(z_coeff, z_shift, kernels::SteinbergTensor{a, a});
    return atomize(lhs) == atomize(rhs);
}

/// Twenty arguments z = k s + t, k in {1, 2, -1, -2}, t in {0, 1/2, -1, 3/4, -5/2}.
inline std::vector<std::pair<int, Rational>> consistency_arguments()
{
    std::vector<std::pair<int, Rational>> out;
    for (int k : {1, 2, -1, -2}) {
        for (const Rational &t : {Rational(0), half(1), Rational(-1), quarter(3), half(-5)}) {
            out.emplace_back(k, t);
        }
    }
    return out;
}

namespace detail
{

inline std::vector<TauConfig> selected_configs(const RunRequest &req)
{
    std::vector<TauConfig> out;
    for (const auto &cfg : all_configs) {
        if (req.tau_pole && cfg.pole_side != *req.tau_pole) {
            continue;
        }
        if (req.sigma_pole && cfg.sigma_pole != *req.sigma_pole) {
            continue;
        }
        out.push_back(cfg);
    }
    return out;
}

inline DiscreteSeriesParam checked_param(const std::string &text)
{
    DiscreteSeriesParam p;
    try {
        p = parse_param(text);
    } catch (const std::exception &e) {
        throw UsageError(std::string("--param: ") + e.what());
    }
    if (auto v = validate_param(p)) {
        throw UsageError("--param " + param_text(p) + " violates " + clause_name(v->clause) + ": " + v->message);
    }
    return p;
}

inline GroupType checked_group(const std::string &name)
{
    try {
        return parse_group(name);
    } catch (const std::exception &e) {
        throw UsageError(std::string("--group: ") + e.what());
    }
}

inline WayFamily checked_way(const std::string &name, const char *option)
{
    try {
        return parse_way(name);
    } catch (const std::exception &e) {
        throw UsageError(std::string(option) + ": " + e.what());
    }
}

inline void require_positive_option(int v, const char *option)
{
    if (v < 1) {
        throw UsageError(std::string(option) + " must be >= 1");
    }
}

inline json request_echo(const RunRequest &req)
{
    json out = {{"command", req.command}};
    if (req.command == "alpha" || req.command == "beta" || req.command == "strategy") {
        out["c"] = req.c;
        out["a"] = req.a;
        out["param"] = req.param;
        out["group"] = req.group;
    } else if (req.command == "alpha-gl") {
        out["c"] = req.c;
        out["d"] = req.d;
        out["a"] = req.a;
        out["b"] = req.b;
    } else if (req.command == "discrepancy" || req.command == "common-poles") {
        if (req.command == "discrepancy") {
            out["way"] = req.way;
        } else {
            out["way1"] = req.way1;
            out["way2"] = req.way2;
        }
        out["c"] = req.c;
        out["a"] = req.a;
        out["d"] = req.d;
        out["b"] = req.b;
        out["param"] = req.param;
        out["group"] = req.group;
        out["pair"] = req.pair;
    } else if (req.command == "verify-closed-forms") {
        out["suite"] = req.suite;
    } else if (req.command == "gcd-corollary") {
        if (req.c_given) {
            out["c"] = req.c;
        }
    } else if (req.command == "sweep") {
        out["grid"] = req.grid;
        out["max_c"] = req.max_c;
        out["max_a"] = req.max_a;
    }
    json configs = json::array();
    for (const auto &cfg : selected_configs(req)) {
        configs.push_back(to_json(cfg));
    }
    out["tau_configs"] = configs;
    return out;
}

inline WaySpec way_from(const RunRequest &req, WayFamily family)
{
    WaySpec w;
    w.family = family;
    w.c = req.c;
    w.a = req.a;
    w.d = req.d;
    w.b = req.b;
    w.param = checked_param(req.param);
    w.group = checked_group(req.group);
    w.pair = req.pair;
    return w;
}

inline DiscrepancyReport checked_discrepancy(const WaySpec &w)
{
    try {
        return discrepancy(w);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

inline json loci_under(const LProduct &P, const std::vector<TauConfig> &configs, bool poles)
{
    json out = json::array();
    for (const auto &cfg : configs) {
        out.push_back({{"config", to_json(cfg)}, {"loci", to_json(poles ? pole_loci(P, cfg) : zero_loci(P, cfg))}});
    }
    return out;
}

inline std::string loci_line(const std::vector<PoleLocus> &loci)
{
    if (loci.empty()) {
        return "none";
    }
    std::string out;
    for (const auto &l : loci) {
        if (!out.empty()) {
            out += ", ";
        }
        out += to_short(l.re_s);
    }
    return out;
}

inline CommonPoleReport restricted(CommonPoleReport r, const std::vector<TauConfig> &configs)
{
    std::vector<SharedLocus> kept;
    bool zero_only = true;
    for (auto &l : r.shared) {
        std::vector<TauConfig> cfgs;
        for (const auto &cfg : l.configs) {
            if (std::find(configs.begin(), configs.end(), cfg) != configs.end()) {
                cfgs.push_back(cfg);
            }
        }
        if (!cfgs.empty()) {
            zero_only = zero_only && l.re_s == Rational(0);
            kept.push_back({l.re_s, cfgs});
        }
    }
    r.shared = kept;
    r.verdict = kept.empty() ? Verdict::coprime : (zero_only ? Verdict::common_at_zero_only : Verdict::other);
    return r;
}

inline json summary(int pass, int fail)
{
    return {{"pass", pass}, {"fail", fail}};
}

inline Report finish(const RunRequest &req, json result, int pass, int fail, std::string text)
{
    Report rep;
    rep.document = {{"engine", "lfactor"},
                    {"version", engine_version},
                    {"request", request_echo(req)},
                    {"result", std::move(result)},
                    {"summary", summary(pass, fail)}};
    rep.text = std::move(text);
    rep.exit_code = fail > 0 ? 1 : 0;
    return rep;
}

// Commands.

inline Report run_normalization(const RunRequest &req)
{
    require_positive_option(req.c, "--c");
    require_positive_option(req.a, "--a");
    const DiscreteSeriesParam p = checked_param(req.param);
    const GroupType g = checked_group(req.group);
    const bool is_alpha = req.command == "alpha";
    const LProduct f = is_alpha ? alpha_classical(req.c, req.a, p) : beta_classical(req.c, req.a, p);
    const LProduct at = atomize(f);
    json result = {{"factors", to_json(f)},
                   {"text", product_text(f)},
                   {"atomized", to_json(at)},
                   {"atomized_text", product_text(at)},
                   {"metadata",
                    {{"group", group_name(g)},
                     {"rho", rho_label(g)},
                     {"rho_minus", rho_minus_label(g)},
                     {"n0", n0_meaning(g)}}}};
    std::ostringstream os;
    os << req.command << " c=" << req.c << " a=" << req.a << " param=" << param_text(p) << " group=" << group_name(g)
       << "\n"
       << "  rho = " << rho_label(g) << ", rho- = " << rho_minus_label(g) << "\n"
       << "  " << product_text(f) << "\n"
       << "  atomized: " << product_text(at) << "\n";
    return finish(req, std::move(result), 1, 0, os.str());
}

inline Report run_alpha_gl(const RunRequest &req)
{
    if (req.c < 0 || req.d < 0 || req.a < 0 || req.b < 0) {
        throw UsageError("alpha-gl: indices must be non-negative");
    }
    const LProduct f = alpha_gl(req.c, req.d, req.a, req.b);
    const LProduct at = atomize(f);
    json result = {{"factors", to_json(f)},
                   {"text", product_text(f)},
                   {"atomized", to_json(at)},
                   {"atomized_text", product_text(at)}};
    std::ostringstream os;
    os << "alpha-gl c=" << req.c << " d=" << req.d << " a=" << req.a << " b=" << req.b << "\n"
       << "  " << product_text(f) << "\n"
       << "  atomized: " << product_text(at) << "\n";
    return finish(req, std::move(result), 1, 0, os.str());
}

inline Report run_discrepancy(const RunRequest &req)
{
    const WaySpec w = way_from(req, checked_way(req.way, "--way"));
    const DiscrepancyReport d = checked_discrepancy(w);
    const auto configs = selected_configs(req);
    json result = to_json(d);
    result["poles_by_config"] = loci_under(d.P, configs, true);
    std::ostringstream os;
    os << way_text(w) << "\n";
    for (const auto &part : d.constituents) {
        os << "  " << part.label << " = " << product_text(part.factor) << "\n";
    }
    os << "  target = " << product_text(d.target) << "\n"
       << "  P = " << product_text(d.P) << "\n"
       << "  sign class: " << sign_class_name(sign_class(d.P)) << "\n";
    for (const auto &cfg : configs) {
        os << "  poles under " << config_text(cfg) << ": " << loci_line(pole_loci(d.P, cfg)) << "\n";
    }
    int fail = 0;
    if (auto form = closed_form(w)) {
        const bool match = atomize(form->product) == d.P;
        fail = match ? 0 : 1;
        os << "  closed form " << form_name(form->id) << ": " << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    return finish(req, std::move(result), 1 - fail, fail, os.str());
}

inline Report run_verify(const RunRequest &req)
{
    std::vector<FormCheck> checks;
    try {
        checks = verify_closed_forms(req.suite);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--suite: ") + e.what());
    }
    std::map<std::string, std::map<std::string, int>> tally;
    std::vector<std::string> order;
    json details = json::array();
    int pass = 0;
    int fail = 0;
    int literal = 0;
    for (const auto &chk : checks) {
        const std::string name = form_name(chk.form);
        if (tally.find(name) == tally.end()) {
            order.push_back(name);
        }
        const std::string key = chk.status == MatchStatus::reconciled ? std::string("RECONCILED(") + chk.reading + ")"
                                                                       : match_status_name(chk.status);
        ++tally[name][key];
        if (chk.status == MatchStatus::mismatch) {
            ++fail;
        } else {
            ++pass;
        }
        if (chk.status == MatchStatus::match) {
            ++literal;
        }
        details.push_back(to_json(chk));
    }
    std::ostringstream os;
    json forms = json::array();
    for (const auto &name : order) {
        json counts = json::object();
        os << name << ":";
        for (const auto &[k, n] : tally[name]) {
            counts[k] = n;
            os << " " << k << "=" << n;
        }
        os << "\n";
        forms.push_back({{"form", name}, {"counts", counts}});
    }
    for (const auto &chk : checks) {
        if (chk.status == MatchStatus::mismatch) {
            os << "  MISMATCH " << form_name(chk.form) << " " << way_text(chk.way) << "\n"
               << "    computed " << product_text(chk.computed) << "\n"
               << "    printed  " << product_text(chk.printed) << "\n";
        }
    }
    json result = {{"forms", forms}, {"literal_matches", literal}, {"checks", details}};
    if (req.suite == "all") {
        const IdentityAudit audit = pair_identity_audit();
        const bool ok = audit.exactly_one();
        const char *balancing = audit.printed_uniform ? reading_name(ShiftReading::printed)
                                                      : (audit.alternative_uniform ? reading_name(ShiftReading::alternative)
                                                                                   : "none");
        result["pair_identity"] = {{"points", audit.points.size()},
                                {"printed_reading", reading_name(ShiftReading::printed)},
                                {"printed_failures", audit.printed_failures},
                                {"alternative_reading", reading_name(ShiftReading::alternative)},
                                {"alternative_failures", audit.alternative_failures},
                                {"balancing_reading", balancing},
                                {"verdict", ok ? "PASS" : "FAIL"}};
        os << "pair identity: " << audit.points.size() << " points; second shift "
           << reading_name(ShiftReading::printed) << " fails " << audit.printed_failures << ", "
           << reading_name(ShiftReading::alternative) << " fails " << audit.alternative_failures
           << "; balancing reading " << balancing << " -> " << (ok ? "PASS" : "FAIL") << "\n";
        ok ? ++pass : ++fail;
    }
    os << "summary: " << checks.size() << " checks, " << literal << " literal, " << pass << " pass, " << fail
       << " fail\n";
    return finish(req, std::move(result), pass, fail, os.str());
}

inline Report run_common_poles(const RunRequest &req)
{
    const WaySpec w1 = way_from(req, checked_way(req.way1, "--way1"));
    const WaySpec w2 = way_from(req, checked_way(req.way2, "--way2"));
    const auto d1 = checked_discrepancy(w1);
    const auto d2 = checked_discrepancy(w2);
    const auto cp = restricted(common_poles(d1.P, d2.P), selected_configs(req));
    json result = {{"way1", to_json(w1)},
                   {"P1", to_json(d1.P)},
                   {"way2", to_json(w2)},
                   {"P2", to_json(d2.P)},
                   {"common", to_json(cp)}};
    std::ostringstream os;
    os << way_text(w1) << "\n  P = " << product_text(d1.P) << "\n"
       << way_text(w2) << "\n  P = " << product_text(d2.P) << "\n"
       << "shared: " << shared_text(cp) << "\n"
       << "verdict: " << verdict_name(cp.verdict) << "\n";
    return finish(req, std::move(result), 1, 0, os.str());
}

inline std::string strategy_line(const StrategyReport &r)
{
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " c=" << r.c << " a=" << r.a << " param=" << param_text(r.param) << " ["
       << r.comparison << "]";
    if (!r.common.shared.empty()) {
        os << " shared: " << shared_text(r.common);
    }
    if (r.zero_axiom_used) {
        os << " (Re(s)=0 discharged by the multiplicity-free axiom)";
    }
    if (!r.offending.empty()) {
        os << " offending:";
        for (const auto &o : r.offending) {
            os << " " << to_short(o);
        }
    }
    return os.str();
}

inline Report run_strategy(const RunRequest &req)
{
    require_positive_option(req.c, "--c");
    require_positive_option(req.a, "--a");
    const DiscreteSeriesParam p = checked_param(req.param);
    const GroupType g = checked_group(req.group);
    const StrategyReport r = strategy_check(req.c, req.a, p, g);
    return finish(req, to_json(r), r.pass ? 1 : 0, r.pass ? 0 : 1, strategy_line(r) + "\n");
}

inline Report run_gcd(const RunRequest &req)
{
    std::vector<int> cs;
    if (req.c_given) {
        require_positive_option(req.c, "--c");
        cs.push_back(req.c);
    } else {
        for (int c = 1; c <= 8; ++c) {
            cs.push_back(c);
        }
    }
    json rows = json::array();
    std::ostringstream os;
    int pass = 0;
    int fail = 0;
    for (int c : cs) {
        const InverseFactorGcd g = inverse_factor_gcd(c);
        rows.push_back(to_json(g));
        const bool ok = g.locus_match();
        ok ? ++pass : ++fail;
        os << "c=" << c << " locus: computed " << shared_text(g.locus) << " | printed " << shared_text(g.printed_locus)
           << " -> " << (ok ? "MATCH" : "MISMATCH") << "; structural: computed " << product_text(g.structural)
           << " | printed " << product_text(g.printed_structural) << " -> "
           << (g.structural_match() ? "MATCH" : "MISMATCH") << "\n";
    }
    return finish(req, {{"rows", rows}}, pass, fail, os.str());
}

inline int or_default(int v, int fallback)
{
    return v > 0 ? v : fallback;
}

inline Report run_sweep(const RunRequest &req)
{
    std::ostringstream os;
    json points = json::array();
    int pass = 0;
    int fail = 0;
    auto tally = [&](bool ok) { ok ? ++pass : ++fail; };

    if (req.grid == "common-poles") {
        const int max_c = or_default(req.max_c, 10);
        std::vector<int> nonempty;
        for (const auto &[c, cp] : degenerate_common_poles(max_c)) {
            const auto r = restricted(cp, selected_configs(req));
            points.push_back({{"c", c}, {"common", to_json(r)}});
            os << "c=" << c << ": " << shared_text(r) << "\n";
            if (!r.shared.empty()) {
                nonempty.push_back(c);
            }
            ++pass;
        }
        os << "nonempty at c in {" << join_ints(nonempty) << "}\n";
    } else if (req.grid == "gl-recursion") {
        const int max_a = or_default(req.max_a, 12);
        for (int a = 1; a <= max_a; ++a) {
            for (int b = 1; b <= max_a; ++b) {
                const auto sides = expand_gl_tensor_recursion(a, b);
                const bool ok = atomize(sides.lhs) == atomize(sides.rhs);
                tally(ok);
                if (!ok) {
                    points.push_back({{"a", a}, {"b", b}, {"lhs", to_json(sides.lhs)}, {"rhs", to_json(sides.rhs)}});
                    os << "FAIL a=" << a << " b=" << b << "\n";
                }
            }
        }
    } else if (req.grid == "alpha-gl-recursion") {
        const int max_c = or_default(req.max_c, 12);
        for (int c = 1; c <= max_c; ++c) {
            for (int d = 1; d <= max_c; ++d) {
                const bool ok = gl_alpha_recursion_holds(c, d);
                tally(ok);
                if (!ok) {
                    points.push_back({{"c", c}, {"d", d}});
                    os << "FAIL c=" << c << " d=" << d << "\n";
                }
            }
        }
    } else if (req.grid == "consistency") {
        const int max_a = or_default(req.max_a, 12);
        for (int a = 1; a <= max_a; ++a) {
            for (const auto &[k, t] : consistency_arguments()) {
                const bool ok = consistency_holds(a, k, t);
                tally(ok);
                if (!ok) {
                    points.push_back({{"a", a}, {"z", argument_text(k, t)}});
                    os << "FAIL a=" << a << " z=" << argument_text(k, t) << "\n";
                }
            }
        }
    } else if (req.grid == "strategy") {
        const auto grid = strategy_grid(or_default(req.max_c, 6), or_default(req.max_a, 6));
        const auto reports = parallel_map(
            grid, [](const StrategyPoint &pt) { return strategy_check(pt.c, pt.a, pt.param); }, req.jobs);
        for (const auto &r : reports) {
            tally(r.pass);
            if (!r.pass) {
                points.push_back(to_json(r));
                os << strategy_line(r) << "\n";
            }
        }
    } else if (req.grid == "sign-class") {
        const auto rows = sign_class_sweep(or_default(req.max_c, 8), or_default(req.max_a, 6), req.jobs);
        for (const auto &row : rows) {
            tally(row.ok());
            if (!row.ok()) {
                points.push_back({{"way", to_json(row.way)},
                                  {"class", sign_class_name(row.cls)},
                                  {"expected", row.expected_nonpositive ? "nonpositive" : "nonnegative"}});
                os << "FAIL " << way_text(row.way) << " class " << sign_class_name(row.cls) << "\n";
            }
        }
    } else if (req.grid == "pair-identity") {
        const IdentityAudit audit = pair_identity_audit(or_default(req.max_a, 8), or_default(req.max_c, 10));
        for (const auto &pt : audit.points) {
            points.push_back({{"a", pt.a}, {"r1", pt.r1}, {"r2", pt.r2}, {"printed", pt.printed},
                              {"alternative", pt.alternative}});
        }
        tally(audit.exactly_one());
        os << "printed reading fails " << audit.printed_failures << ", alternative fails "
           << audit.alternative_failures << " of " << audit.points.size() << "\n";
    } else {
        throw UsageError("--grid must be one of common-poles, gl-recursion, alpha-gl-recursion, consistency, strategy, "
                         "sign-class, pair-identity");
    }
    os << "summary: " << pass << " pass, " << fail << " fail\n";
    return finish(req, {{"grid", req.grid}, {"points", points}}, pass, fail, os.str());
}

} // namespace detail

/// Dispatches one request. Throws UsageError for invalid input.
inline Report run(const RunRequest &req)
{
    using namespace detail;
    if (req.jobs < 1) {
        throw UsageError("--jobs must be >= 1");
    }
    if (req.command == "alpha" || req.command == "beta") {
        return run_normalization(req);
    }
    if (req.command == "alpha-gl") {
        return run_alpha_gl(req);
    }
    if (req.command == "discrepancy") {
        return run_discrepancy(req);
    }
    if (req.command == "verify-closed-forms") {
        return run_verify(req);
    }
    if (req.command == "common-poles") {
        return run_common_poles(req);
    }
    if (req.command == "strategy") {
        return run_strategy(req);
    }
    if (req.command == "gcd-corollary") {
        return run_gcd(req);
    }
    if (req.command == "sweep") {
        return run_sweep(req);
    }
    throw UsageError("unknown command '" + req.command + "'");
}

} // namespace lfactor

#endif // LFACTOR_RUNNER_HPP

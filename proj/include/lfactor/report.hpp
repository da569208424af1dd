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

#ifndef LFACTOR_REPORT_HPP
#define LFACTOR_REPORT_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "analysis.hpp"
#include "closed_forms.hpp"
#include "decompositions.hpp"
#include "kernel.hpp"
#include "lproduct.hpp"
#include "poles.hpp"

namespace lfactor
{

inline constexpr const char *engine_version = "1.0.0";

using json = nlohmann::ordered_json;

// Serialization.

inline json to_json(const LFactor &f, int exponent)
{
    return {{"s_coeff", f.s_coeff()}, {"shift", to_pq(f.shift())}, {"kernel", kernel_id(f.kernel())},
            {"exponent", exponent}};
}

inline json to_json(const LProduct &p)
{
    json out = json::array();
    for (const auto &[f, e] : p) {
        out.push_back(to_json(f, e));
    }
    return out;
}

inline json to_json(const PoleLocus &l)
{
    return {{"re_s", to_pq(l.re_s)}, {"kernel", kernel_id(l.kernel)}, {"gate", gate_name(l.gated_by)}};
}

inline json to_json(const std::vector<PoleLocus> &loci)
{
    json out = json::array();
    for (const auto &l : loci) {
        out.push_back(to_json(l));
    }
    return out;
}

inline json to_json(const TauConfig &cfg)
{
    return {{"pole_side", sign_name(cfg.pole_side)}, {"sigma_pole", cfg.sigma_pole}};
}

inline json to_json(const CommonPoleReport &r)
{
    json shared = json::array();
    for (const auto &l : r.shared) {
        json configs = json::array();
        for (const auto &cfg : l.configs) {
            configs.push_back(to_json(cfg));
        }
        shared.push_back({{"re_s", to_pq(l.re_s)}, {"gate", l.gate()}, {"configs", configs}});
    }
    return {{"verdict", verdict_name(r.verdict)}, {"shared", shared}};
}

inline json to_json(const DiscreteSeriesParam &p)
{
    return {{"r", p.r}, {"sigma_present", p.sigma_present}};
}

inline json to_json(const WaySpec &w)
{
    json out = {{"way", way_name(w.family)}, {"c", w.c}, {"a", w.a}};
    if (is_gl(w.family)) {
        out["d"] = w.d;
        out["b"] = w.b;
    } else {
        out["param"] = to_json(w.param);
        out["group"] = group_name(w.group);
        if (w.family == WayFamily::cl_way3) {
            out["pair"] = w.pair;
        }
    }
    return out;
}

inline json to_json(const DiscrepancyReport &r)
{
    json constituents = json::array();
    for (const auto &part : r.constituents) {
        constituents.push_back({{"label", part.label}, {"factors", to_json(part.factor)}});
    }
    json out = {{"way", to_json(r.way)},
                {"P", to_json(r.P)},
                {"P_text", product_text(r.P)},
                {"constituents", constituents},
                {"target", to_json(r.target)},
                {"sign_class", sign_class_name(sign_class(r.P))},
                {"poles", to_json(pole_loci(r.P))},
                {"zeros", to_json(zero_loci(r.P))}};
    if (auto form = closed_form(r.way)) {
        const bool match = atomize(form->product) == r.P;
        out["closed_form"] = {{"form", form_name(form->id)},
                              {"factors", to_json(form->product)},
                              {"text", product_text(form->product)},
                              {"predicates", form->predicates},
                              {"match", match}};
    }
    return out;
}

inline json to_json(const FormCheck &c)
{
    json out = {{"form", form_name(c.form)}, {"way", to_json(c.way)}, {"status", match_status_name(c.status)}};
    if (!c.reading.empty()) {
        out["reading"] = c.reading;
    }
    if (c.status != MatchStatus::match) {
        out["computed"] = to_json(c.computed);
        out["printed"] = to_json(c.printed);
    }
    if (!c.predicates.empty()) {
        out["predicates"] = c.predicates;
    }
    return out;
}

inline json to_json(const StrategyReport &r)
{
    json peeled = json::array();
    for (const auto &[w, P] : r.peeled) {
        peeled.push_back({{"way", to_json(w)}, {"P", to_json(P)}});
    }
    json offending = json::array();
    for (const auto &o : r.offending) {
        offending.push_back(to_pq(o));
    }
    return {{"c", r.c},
            {"a", r.a},
            {"param", to_json(r.param)},
            {"group", group_name(r.group)},
            {"verdict", r.pass ? "PASS" : "FAIL"},
            {"comparison", r.comparison},
            {"peeled", peeled},
            {"reduced_param", to_json(r.reduced)},
            {"common", to_json(r.common)},
            {"offending", offending},
            {"zero_locus_axiom", r.zero_axiom_used}};
}

inline json to_json(const InverseFactorGcd &g)
{
    return {{"c", g.c},
            {"structural", {{"computed", to_json(g.structural)},
                            {"printed", to_json(g.printed_structural)},
                            {"match", g.structural_match()}}},
            {"locus", {{"computed", to_json(g.locus)}, {"printed", to_json(g.printed_locus)}, {"match", g.locus_match()}}}};
}

// Parsing.

namespace detail
{

inline int parse_int(std::string_view s)
{
    std::size_t pos = 0;
    const std::string owned(s);
    const int v = std::stoi(owned, &pos);
    if (pos != owned.size()) {
        throw std::invalid_argument("malformed integer '" + owned + "'");
    }
    return v;
}

inline std::vector<int> parse_int_list(std::string_view s)
{
    std::vector<int> out;
    while (!s.empty()) {
        const auto comma = s.find(',');
        out.push_back(parse_int(s.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        s.remove_prefix(comma + 1);
    }
    return out;
}

inline std::string_view inside(std::string_view s, std::string_view prefix)
{
    if (s.substr(0, prefix.size()) != prefix || s.back() != ')') {
        throw std::invalid_argument("malformed kernel '" + std::string(s) + "'");
    }
    return s.substr(prefix.size(), s.size() - prefix.size() - 1);
}

inline int parse_tau_index(std::string_view s)
{
    if (s == "tau") {
        return 1;
    }
    if (s.substr(0, 4) != "tau_") {
        throw std::invalid_argument("expected tau or tau_n, got '" + std::string(s) + "'");
    }
    return parse_int(s.substr(4));
}

inline Rational parse_shift_text(std::string_view s)
{
    if (s.empty()) {
        return Rational(0);
    }
    const char sign = s.front();
    if (sign != '+' && sign != '-') {
        throw std::invalid_argument("malformed shift '" + std::string(s) + "'");
    }
    const Rational v = parse_rational(s.substr(1));
    return sign == '-' ? -v : v;
}

} // namespace detail

/// Inverse of kernel_id.
inline Kernel parse_kernel_id(std::string_view id)
{
    using namespace kernels;
    if (id == "rho") {
        return Rho{};
    }
    if (id == "rho_minus") {
        return RhoMinus{};
    }
    if (id == "tau_sigma") {
        return TauSigma{};
    }
    if (id == "tau_tau") {
        return SteinbergTensor{1, 1};
    }
    if (id.rfind("steinberg_tensor(", 0) == 0) {
        const auto v = detail::parse_int_list(detail::inside(id, "steinberg_tensor("));
        if (v.size() != 2) {
            throw std::invalid_argument("steinberg_tensor needs two indices");
        }
        return canonical(SteinbergTensor{v[0], v[1]});
    }
    if (id.rfind("twisted(", 0) == 0) {
        const auto body = detail::inside(id, "twisted(");
        const auto comma = body.find(',');
        if (comma == std::string_view::npos) {
            throw std::invalid_argument("twisted needs an index and a sign");
        }
        const auto sign = body.substr(comma + 1);
        if (sign != "plus" && sign != "minus") {
            throw std::invalid_argument("twisted sign must be plus or minus");
        }
        return canonical(TwistedExt{detail::parse_int(body.substr(0, comma)), sign == "plus" ? Sign::plus : Sign::minus});
    }
    if (id.rfind("segment(", 0) == 0) {
        const auto v = detail::parse_int_list(detail::inside(id, "segment("));
        if (v.size() != 2) {
            throw std::invalid_argument("segment needs two indices");
        }
        return canonical(TensorSegment{v[0], v[1]});
    }
    if (id.rfind("discrete(", 0) == 0) {
        const auto body = detail::inside(id, "discrete(");
        const auto semi = body.find(';');
        if (semi == std::string_view::npos) {
            throw std::invalid_argument("discrete needs 'a;r1,r2,...'");
        }
        return canonical(TensorDiscrete{detail::parse_int(body.substr(0, semi)), detail::parse_int_list(body.substr(semi + 1))});
    }
    throw std::invalid_argument("unknown kernel id '" + std::string(id) + "'");
}

inline LProduct product_from_json(const json &j)
{
    LProduct out;
    for (const auto &f : j) {
        out.add(LFactor(f.at("s_coeff").get<int>(), parse_rational(f.at("shift").get<std::string>()),
                        parse_kernel_id(f.at("kernel").get<std::string>())),
                f.at("exponent").get<int>());
    }
    return out;
}

/// Inverse of kernel_text.
inline Kernel parse_kernel_text(std::string_view text)
{
    using namespace kernels;
    if (const auto comma = text.find(", "); comma != std::string_view::npos) {
        const int a = detail::parse_tau_index(text.substr(0, comma));
        const auto rho = text.substr(comma + 2);
        if (rho != "rho" && rho != "rho-") {
            throw std::invalid_argument("malformed twisted kernel '" + std::string(text) + "'");
        }
        return canonical(TwistedExt{a, rho == "rho" ? Sign::plus : Sign::minus});
    }
    const auto cross = text.find(" x ");
    if (cross == std::string_view::npos) {
        throw std::invalid_argument("malformed kernel '" + std::string(text) + "'");
    }
    const int a = detail::parse_tau_index(text.substr(0, cross));
    const auto rhs = text.substr(cross + 3);
    if (rhs == "sigma") {
        return canonical(TensorDiscrete{a, {}});
    }
    if (rhs.rfind("sigma(", 0) == 0) {
        return canonical(TensorDiscrete{a, detail::parse_int_list(detail::inside(rhs, "sigma("))});
    }
    const int b = detail::parse_tau_index(rhs);
    if (b >= 1) {
        return SteinbergTensor{a, b};
    }
    return canonical(TensorSegment{a, b});
}

/// Inverse of argument_text: "2s-1", "-s+1/2", "s".
inline std::pair<int, Rational> parse_argument(std::string_view text)
{
    const auto s = text.find('s');
    if (s == std::string_view::npos) {
        throw std::invalid_argument("argument needs s: '" + std::string(text) + "'");
    }
    const auto coeff = text.substr(0, s);
    int a = 1;
    if (coeff == "-") {
        a = -1;
    } else if (!coeff.empty()) {
        a = detail::parse_int(coeff);
    }
    return {a, detail::parse_shift_text(text.substr(s + 1))};
}

/// Inverse of product_text.
inline LProduct parse_product_text(std::string_view text)
{
    LProduct out;
    if (text == "1") {
        return out;
    }
    while (!text.empty()) {
        const auto sep = text.find(" * ");
        std::string_view item = text.substr(0, sep);
        text = sep == std::string_view::npos ? std::string_view{} : text.substr(sep + 3);
        int exponent = 1;
        const auto close = item.rfind(')');
        if (item.substr(0, 2) != "L(" || close == std::string_view::npos) {
            throw std::invalid_argument("malformed factor '" + std::string(item) + "'");
        }
        if (close + 1 < item.size()) {
            if (item[close + 1] != '^') {
                throw std::invalid_argument("malformed exponent in '" + std::string(item) + "'");
            }
            exponent = detail::parse_int(item.substr(close + 2));
        }
        const auto body = item.substr(2, close - 2);
        const auto comma = body.find(", ");
        if (comma == std::string_view::npos) {
            throw std::invalid_argument("malformed factor '" + std::string(item) + "'");
        }
        const auto [coeff, shift] = parse_argument(body.substr(0, comma));
        out.add(LFactor(coeff, shift, parse_kernel_text(body.substr(comma + 2))), exponent);
    }
    return out;
}

// Text rendering of loci.

inline std::string locus_text(const PoleLocus &l)
{
    return "Re(s) = " + to_short(l.re_s) + " [" + kernel_text(l.kernel) + ", " + gate_name(l.gated_by) + "]";
}

inline std::string shared_text(const CommonPoleReport &r)
{
    if (r.shared.empty()) {
        return "none";
    }
    std::string out;
    for (const auto &l : r.shared) {
        if (!out.empty()) {
            out += "; ";
        }
        out += "Re(s) = " + to_short(l.re_s) + " when " + l.gate();
    }
    return out;
}

} // namespace lfactor

#endif // LFACTOR_REPORT_HPP

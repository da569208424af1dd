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

#ifndef LFACTOR_POLES_HPP
#define LFACTOR_POLES_HPP

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kernel.hpp"
#include "lproduct.hpp"
#include "rational.hpp"

namespace lfactor
{

/// Which of L(z, tau, rho), L(z, tau, rho^-) has a pole at z = 0, and whether L(z, tau x sigma) has one.
struct TauConfig {
    Sign pole_side = Sign::plus;
    bool sigma_pole = false;

    friend bool operator==(const TauConfig &, const TauConfig &) = default;
    friend auto operator<=>(const TauConfig &, const TauConfig &) = default;
};

inline constexpr std::array<TauConfig, 4> all_configs = {
    TauConfig{Sign::plus, false}, TauConfig{Sign::plus, true}, TauConfig{Sign::minus, false},
    TauConfig{Sign::minus, true}};

inline std::string config_text(const TauConfig &cfg)
{
    return std::string(cfg.pole_side == Sign::plus ? "rho" : "rho-minus") + "/"
           + (cfg.sigma_pole ? "sigma-pole" : "no-sigma-pole");
}

enum class Gate { always, pole_side_plus, pole_side_minus, sigma_pole };

inline const char *gate_name(Gate g) noexcept
{
    switch (g) {
        case Gate::always:
            return "always";
        case Gate::pole_side_plus:
            return "pole_side=plus";
        case Gate::pole_side_minus:
            return "pole_side=minus";
        case Gate::sigma_pole:
            return "sigma_pole";
    }
    return "unknown";
}

inline Gate gate_of(const Kernel &k)
{
    if (std::holds_alternative<kernels::Rho>(k)) {
        return Gate::pole_side_plus;
    }
    if (std::holds_alternative<kernels::RhoMinus>(k)) {
        return Gate::pole_side_minus;
    }
    if (std::holds_alternative<kernels::TauSigma>(k)) {
        return Gate::sigma_pole;
    }
    throw std::invalid_argument("pole analysis needs atomized input, got kernel " + kernel_id(k));
}

inline bool fires(Gate g, const TauConfig &cfg) noexcept
{
    switch (g) {
        case Gate::always:
            return true;
        case Gate::pole_side_plus:
            return cfg.pole_side == Sign::plus;
        case Gate::pole_side_minus:
            return cfg.pole_side == Sign::minus;
        case Gate::sigma_pole:
            return cfg.sigma_pole;
    }
    return false;
}

struct PoleLocus {
    Rational re_s;
    Kernel kernel;
    Gate gated_by;

    friend bool operator==(const PoleLocus &, const PoleLocus &) = default;
};

namespace detail
{

inline std::vector<PoleLocus> loci_by_sign(const LProduct &p, const TauConfig *cfg, bool poles)
{
    std::vector<PoleLocus> out;
    for (const auto &[f, e] : p) {
        const Gate g = gate_of(f.kernel());
        if ((poles && e <= 0) || (!poles && e >= 0)) {
            continue;
        }
        if (cfg != nullptr && !fires(g, *cfg)) {
            continue;
        }
        for (int k = 0; k < std::abs(e); ++k) {
            out.push_back({f.locus(), f.kernel(), g});
        }
    }
    return out;
}

} // namespace detail

/// Loci of the positive-exponent factors whose gate is open under cfg, one per unit of exponent.
inline std::vector<PoleLocus> pole_loci(const LProduct &p, const TauConfig &cfg)
{
    return detail::loci_by_sign(p, &cfg, true);
}

/// Every potential pole locus, with its gate.
inline std::vector<PoleLocus> pole_loci(const LProduct &p)
{
    return detail::loci_by_sign(p, nullptr, true);
}

/// Loci contributed by negative exponents.
inline std::vector<PoleLocus> zero_loci(const LProduct &p, const TauConfig &cfg)
{
    return detail::loci_by_sign(p, &cfg, false);
}

inline std::vector<PoleLocus> zero_loci(const LProduct &p)
{
    return detail::loci_by_sign(p, nullptr, false);
}

enum class SignClass { empty, zero_only, nonpositive, nonnegative, mixed };

inline const char *sign_class_name(SignClass c) noexcept
{
    switch (c) {
        case SignClass::empty:
            return "empty";
        case SignClass::zero_only:
            return "zero-only";
        case SignClass::nonpositive:
            return "nonpositive";
        case SignClass::nonnegative:
            return "nonnegative";
        case SignClass::mixed:
            return "mixed";
    }
    return "unknown";
}

/// Classifies the real parts of every pole that fires under some configuration.
inline SignClass sign_class(const LProduct &p)
{
    const auto loci = pole_loci(p);
    if (loci.empty()) {
        return SignClass::empty;
    }
    bool neg = false;
    bool pos = false;
    for (const auto &l : loci) {
        neg = neg || l.re_s < 0;
        pos = pos || l.re_s > 0;
    }
    if (neg && pos) {
        return SignClass::mixed;
    }
    if (neg) {
        return SignClass::nonpositive;
    }
    if (pos) {
        return SignClass::nonnegative;
    }
    return SignClass::zero_only;
}

inline bool is_nonpositive(SignClass c) noexcept
{
    return c == SignClass::empty || c == SignClass::zero_only || c == SignClass::nonpositive;
}

inline bool is_nonnegative(SignClass c) noexcept
{
    return c == SignClass::empty || c == SignClass::zero_only || c == SignClass::nonnegative;
}

/// Shortest description of a set of configurations in terms of the pole flags.
inline std::string gate_expression(const std::vector<TauConfig> &configs)
{
    const std::set<TauConfig> want(configs.begin(), configs.end());
    if (want.empty()) {
        return "never";
    }
    if (want.size() == all_configs.size()) {
        return "always";
    }
    struct Literal {
        const char *text;
        bool (*test)(const TauConfig &);
    };
    static const std::array<Literal, 4> literals = {{
        {"rho-pole", [](const TauConfig &c) { return c.pole_side == Sign::plus; }},
        {"rho-minus-pole", [](const TauConfig &c) { return c.pole_side == Sign::minus; }},
        {"sigma-pole", [](const TauConfig &c) { return c.sigma_pole; }},
        {"NOT sigma-pole", [](const TauConfig &c) { return !c.sigma_pole; }},
    }};
    auto matches = [&](auto pred) {
        for (const auto &cfg : all_configs) {
            if (pred(cfg) != (want.count(cfg) != 0)) {
                return false;
            }
        }
        return true;
    };
    for (const auto &l : literals) {
        if (matches(l.test)) {
            return l.text;
        }
    }
    for (int i = 0; i < 2; ++i) {
        for (int j = 2; j < 4; ++j) {
            const auto &x = literals[i];
            const auto &y = literals[j];
            if (matches([&](const TauConfig &c) { return x.test(c) && y.test(c); })) {
                return std::string(x.text) + " AND " + y.text;
            }
            if (matches([&](const TauConfig &c) { return x.test(c) || y.test(c); })) {
                return std::string(x.text) + " OR " + y.text;
            }
        }
    }
    std::string out;
    for (const auto &cfg : want) {
        if (!out.empty()) {
            out += " OR ";
        }
        out += "(" + std::string(cfg.pole_side == Sign::plus ? "rho-pole" : "rho-minus-pole")
               + (cfg.sigma_pole ? " AND sigma-pole" : " AND NOT sigma-pole") + ")";
    }
    return out;
}

struct SharedLocus {
    Rational re_s;
    std::vector<TauConfig> configs;

    std::string gate() const
    {
        return gate_expression(configs);
    }
};

enum class Verdict { coprime, common_at_zero_only, other };

inline const char *verdict_name(Verdict v) noexcept
{
    switch (v) {
        case Verdict::coprime:
            return "coprime";
        case Verdict::common_at_zero_only:
            return "common-at-zero-only";
        case Verdict::other:
            return "other";
    }
    return "unknown";
}

struct CommonPoleReport {
    std::vector<SharedLocus> shared;
    Verdict verdict = Verdict::coprime;
};

namespace detail
{

using LocusFn = std::vector<PoleLocus> (*)(const LProduct &, const TauConfig &);

inline CommonPoleReport intersect_loci(const LProduct &x, const LProduct &y, LocusFn fn)
{
    std::map<Rational, std::vector<TauConfig>> shared;
    for (const auto &cfg : all_configs) {
        std::set<Rational> xs;
        for (const auto &l : fn(x, cfg)) {
            xs.insert(l.re_s);
        }
        std::set<Rational> seen;
        for (const auto &l : fn(y, cfg)) {
            if (xs.count(l.re_s) != 0 && seen.insert(l.re_s).second) {
                shared[l.re_s].push_back(cfg);
            }
        }
    }
    CommonPoleReport out;
    bool zero_only = true;
    for (auto it = shared.rbegin(); it != shared.rend(); ++it) {
        out.shared.push_back({it->first, it->second});
        zero_only = zero_only && it->first == Rational(0);
    }
    if (out.shared.empty()) {
        out.verdict = Verdict::coprime;
    } else {
        out.verdict = zero_only ? Verdict::common_at_zero_only : Verdict::other;
    }
    return out;
}

} // namespace detail

/// Pole loci shared by two atomized products, configuration by configuration.
/// Shared loci are listed by decreasing real part.
inline CommonPoleReport common_poles(const LProduct &x, const LProduct &y)
{
    return detail::intersect_loci(x, y, [](const LProduct &p, const TauConfig &c) { return pole_loci(p, c); });
}

/// Zero loci shared by two atomized products.
inline CommonPoleReport common_zeros(const LProduct &x, const LProduct &y)
{
    return detail::intersect_loci(x, y, [](const LProduct &p, const TauConfig &c) { return zero_loci(p, c); });
}

} // namespace lfactor

#endif // LFACTOR_POLES_HPP

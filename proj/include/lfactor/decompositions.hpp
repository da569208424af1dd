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

#ifndef LFACTOR_DECOMPOSITIONS_HPP
#define LFACTOR_DECOMPOSITIONS_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "expand.hpp"
#include "group.hpp"
#include "lproduct.hpp"
#include "normalization.hpp"
#include "param.hpp"

namespace lfactor
{

enum class WayFamily {
    gl_way1,
    gl_way2,
    gl_way3,
    gl_way4,
    gl_way1p,
    gl_way2p,
    gl_way3p,
    gl_way4p,
    cl_way1,
    cl_way2,
    cl_way1p,
    cl_way2p,
    cl_way3
};

inline constexpr std::array<WayFamily, 8> gl_families = {WayFamily::gl_way1,  WayFamily::gl_way2,  WayFamily::gl_way3,
                                                         WayFamily::gl_way4,  WayFamily::gl_way1p, WayFamily::gl_way2p,
                                                         WayFamily::gl_way3p, WayFamily::gl_way4p};

inline constexpr std::array<WayFamily, 5> classical_families = {WayFamily::cl_way1, WayFamily::cl_way2,
                                                                WayFamily::cl_way1p, WayFamily::cl_way2p,
                                                                WayFamily::cl_way3};

inline bool is_gl(WayFamily f) noexcept
{
    return f <= WayFamily::gl_way4p;
}

/// Short names used on the command line: gl1..gl4, gl1p..gl4p, cl1, cl2, cl1p, cl2p, cl3.
inline const char *way_name(WayFamily f) noexcept
{
    switch (f) {
        case WayFamily::gl_way1:
            return "gl1";
        case WayFamily::gl_way2:
            return "gl2";
        case WayFamily::gl_way3:
            return "gl3";
        case WayFamily::gl_way4:
            return "gl4";
        case WayFamily::gl_way1p:
            return "gl1p";
        case WayFamily::gl_way2p:
            return "gl2p";
        case WayFamily::gl_way3p:
            return "gl3p";
        case WayFamily::gl_way4p:
            return "gl4p";
        case WayFamily::cl_way1:
            return "cl1";
        case WayFamily::cl_way2:
            return "cl2";
        case WayFamily::cl_way1p:
            return "cl1p";
        case WayFamily::cl_way2p:
            return "cl2p";
        case WayFamily::cl_way3:
            return "cl3";
    }
    return "unknown";
}

inline WayFamily parse_way(std::string_view name)
{
    for (WayFamily f : gl_families) {
        if (name == way_name(f)) {
            return f;
        }
    }
    for (WayFamily f : classical_families) {
        if (name == way_name(f)) {
            return f;
        }
    }
    throw std::invalid_argument("unknown way '" + std::string(name) + "'");
}

/// A reduced-decomposition recipe.
///
/// GL ways act on |det|^s rho_c(tau_a) x |det|^-s rho_d(tau_b). Classical ways act on
/// |det|^s rho_c(tau_a) x| sigma_r; d and b are ignored there. For cl3, pair selects which
/// consecutive pair (r_{2k+1}, r_{2k+2}) of the parameter is split off.
struct WaySpec {
    WayFamily family = WayFamily::cl_way1;
    int c = 1;
    int a = 1;
    int d = 1;
    int b = 1;
    DiscreteSeriesParam param;
    GroupType group = GroupType::sp;
    int pair = 0;
};

struct Constituent {
    std::string label;
    LProduct factor;
};

struct DiscrepancyReport {
    WaySpec way;
    LProduct P;
    std::vector<Constituent> constituents;
    LProduct target;
};

inline std::string way_text(const WaySpec &w)
{
    std::string out = std::string(way_name(w.family)) + " c=" + std::to_string(w.c) + " a=" + std::to_string(w.a);
    if (is_gl(w.family)) {
        out += " d=" + std::to_string(w.d) + " b=" + std::to_string(w.b);
    } else {
        out += " param=" + param_text(w.param) + " group=" + group_name(w.group);
        if (w.family == WayFamily::cl_way3) {
            out += " pair=" + std::to_string(w.pair);
        }
    }
    return out;
}

namespace detail
{

inline void require(bool ok, const std::string &message)
{
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

inline std::string shifted(std::string_view var, const Rational &delta)
{
    return argument_text(1, delta).replace(0, 1, var);
}

inline std::string gl_label(const Rational &offset, int c, int d, int a, int b)
{
    return "alpha_GL(" + shifted("s", offset) + "; c=" + std::to_string(c) + ", d=" + std::to_string(d)
           + ", a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")";
}

inline std::string cl_label(int c, int a, const Rational &offset, const DiscreteSeriesParam &p)
{
    return "alpha_{" + std::to_string(c) + "," + std::to_string(a) + "}(" + shifted("s", offset) + ", sigma"
           + param_text(p) + ")";
}

inline Constituent gl_constituent(const Rational &offset, int c, int d, int a, int b)
{
    return {gl_label(offset, c, d, a, b), alpha_gl(c, d, a, b, offset)};
}

inline Constituent cl_constituent(int c, int a, const Rational &offset, const DiscreteSeriesParam &p)
{
    return {cl_label(c, a, offset, p), alpha_classical(c, a, p, offset)};
}

inline DiscreteSeriesParam without_pair(const DiscreteSeriesParam &p, int pair)
{
    DiscreteSeriesParam out{{}, p.sigma_present};
    for (std::size_t i = 0; i < p.r.size(); ++i) {
        if (i != static_cast<std::size_t>(2 * pair) && i != static_cast<std::size_t>(2 * pair + 1)) {
            out.r.push_back(p.r[i]);
        }
    }
    return out;
}

inline std::vector<Constituent> gl_constituents(const WaySpec &w)
{
    const int c = w.c, d = w.d, a = w.a, b = w.b;
    const Rational q = quarter(1);
    switch (w.family) {
        case WayFamily::gl_way1:
            require(c >= 2, "gl1 needs c >= 2");
            return {gl_constituent(quarter(c - 1), 1, d, a, b), gl_constituent(-q, c - 1, d, a, b)};
        case WayFamily::gl_way2:
            require(c >= 2, "gl2 needs c >= 2");
            return {gl_constituent(q, c - 1, d, a, b), gl_constituent(-quarter(c - 1), 1, d, a, b)};
        case WayFamily::gl_way3:
            require(d >= 2, "gl3 needs d >= 2");
            return {gl_constituent(q, c, d - 1, a, b), gl_constituent(-quarter(d - 1), c, 1, a, b)};
        case WayFamily::gl_way4:
            require(d >= 2, "gl4 needs d >= 2");
            return {gl_constituent(quarter(d - 1), c, 1, a, b), gl_constituent(-q, c, d - 1, a, b)};
        case WayFamily::gl_way1p:
            require(a >= 2, "gl1p needs a >= 2");
            return {gl_constituent(-quarter(a - 1), c, d, 1, b), gl_constituent(q, c, d, a - 1, b)};
        case WayFamily::gl_way2p:
            require(a >= 2, "gl2p needs a >= 2");
            return {gl_constituent(-q, c, d, a - 1, b), gl_constituent(quarter(a - 1), c, d, 1, b)};
        case WayFamily::gl_way3p:
            require(b >= 2, "gl3p needs b >= 2");
            return {gl_constituent(-q, c, d, a, b - 1), gl_constituent(quarter(b - 1), c, d, a, 1)};
        case WayFamily::gl_way4p:
            require(b >= 2, "gl4p needs b >= 2");
            return {gl_constituent(-quarter(b - 1), c, d, a, 1), gl_constituent(q, c, d, a, b - 1)};
        default:
            break;
    }
    throw std::invalid_argument("not a GL way");
}

inline std::vector<Constituent> classical_constituents(const WaySpec &w)
{
    const int c = w.c, a = w.a;
    const auto &p = w.param;
    switch (w.family) {
        case WayFamily::cl_way1:
            require(c >= 2, "cl1 needs c >= 2");
            return {cl_constituent(c - 1, a, -half(1), p), gl_constituent(quarter(c - 2), c - 1, 1, a, a),
                    cl_constituent(1, a, half(c - 1), p)};
        case WayFamily::cl_way2:
            require(c >= 2, "cl2 needs c >= 2");
            return {cl_constituent(1, a, -half(c - 1), p), gl_constituent(-quarter(c - 2), 1, c - 1, a, a),
                    cl_constituent(c - 1, a, half(1), p)};
        case WayFamily::cl_way1p:
            require(a >= 2, "cl1p needs a >= 2");
            return {cl_constituent(c, a - 1, half(1), p), gl_constituent(-quarter(a - 2), c, c, a - 1, 1),
                    cl_constituent(c, 1, -half(a - 1), p)};
        case WayFamily::cl_way2p:
            require(a >= 2, "cl2p needs a >= 2");
            return {cl_constituent(c, 1, half(a - 1), p), gl_constituent(quarter(a - 2), c, c, 1, a - 1),
                    cl_constituent(c, a - 1, -half(1), p)};
        case WayFamily::cl_way3: {
            require(w.pair >= 0 && static_cast<std::size_t>(2 * w.pair + 1) < p.r.size(),
                    "cl3 needs a parameter with the selected pair of segments");
            const int r1 = p.r[2 * w.pair];
            const int r2 = p.r[2 * w.pair + 1];
            const Rational e = quarter(r1 - r2);
            const int m = (r1 + r2) / 2;
            const Rational base = -half(c - 1);
            const std::string tail = ", tau_" + std::to_string(a) + " x tau_" + std::to_string(m) + ")";
            return {
                {"L(" + argument_text(1, base - e) + tail, single(1, base - e, kernels::TensorSegment{a, m})},
                cl_constituent(c, a, Rational(0), without_pair(p, w.pair)),
                {"L(" + argument_text(1, base + e) + tail, single(1, base + e, kernels::TensorSegment{a, m})},
            };
        }
        default:
            break;
    }
    throw std::invalid_argument("not a classical way");
}

} // namespace detail

/// The target normalization factor of the operator a way decomposes.
inline LProduct way_target(const WaySpec &w)
{
    if (is_gl(w.family)) {
        return alpha_gl(w.c, w.d, w.a, w.b);
    }
    return alpha_classical(w.c, w.a, w.param);
}

/// P = (product of constituent normalizations) / target, atomized.
inline DiscrepancyReport discrepancy(const WaySpec &way)
{
    detail::require(way.c >= 1 && way.a >= 1, "c and a must be >= 1");
    if (is_gl(way.family)) {
        detail::require(way.d >= 1 && way.b >= 1, "d and b must be >= 1");
    } else {
        require_valid(way.param);
    }
    DiscrepancyReport report;
    report.way = way;
    report.constituents =
        is_gl(way.family) ? detail::gl_constituents(way) : detail::classical_constituents(way);
    report.target = way_target(way);
    LProduct numerator;
    for (const auto &part : report.constituents) {
        numerator *= part.factor;
    }
    report.P = atomize(numerator / report.target);
    return report;
}

/// alpha_GL(s, rho_c, rho_d) against the one-step recursion in c (c >= d) or d (c < d).
inline IdentityPair gl_alpha_recursion_sides(int c, int d, int a = 1, int b = 1)
{
    IdentityPair out;
    out.lhs = alpha_gl(c, d, a, b);
    if (c >= d) {
        out.rhs = alpha_gl(c, 1, a, b, quarter(d - 1)) * alpha_gl(c, d - 1, a, b, -quarter(1));
    } else {
        out.rhs = alpha_gl(1, d, a, b, quarter(c - 1)) * alpha_gl(c - 1, d, a, b, -quarter(1));
    }
    return out;
}

inline bool gl_alpha_recursion_holds(int c, int d, int a = 1, int b = 1)
{
    const auto sides = gl_alpha_recursion_sides(c, d, a, b);
    return atomize(sides.lhs) == atomize(sides.rhs);
}

enum class ShiftReading { printed, alternative };

inline const char *reading_name(ShiftReading r) noexcept
{
    return r == ShiftReading::printed ? "(r1+r2)/4" : "(r1-r2)/4";
}

/// Both sides of the pair identity
/// L(s - (r1-r2)/4, tau_a x tau_m) L(s + delta, tau_a x tau_m) = L(s, tau_a x tau_r1) L(s, tau_a x tau_r2)
/// with m = (r1+r2)/2 and delta = (r1+r2)/4 (printed) or (r1-r2)/4 (alternative).
inline IdentityPair pair_identity_sides(int a, int r1, int r2, ShiftReading reading)
{
    const int m = (r1 + r2) / 2;
    const Rational second = reading == ShiftReading::printed ? quarter(r1 + r2) : quarter(r1 - r2);
    IdentityPair out;
    out.lhs = single(1, -quarter(r1 - r2), kernels::TensorSegment{a, m})
              * single(1, second, kernels::TensorSegment{a, m});
    out.rhs = single(1, Rational(0), kernels::TensorSegment{a, r1}) * single(1, Rational(0), kernels::TensorSegment{a, r2});
    return out;
}

inline bool pair_identity_holds(int a, int r1, int r2, ShiftReading reading)
{
    const auto sides = pair_identity_sides(a, r1, r2, reading);
    return atomize(sides.lhs) == atomize(sides.rhs);
}

struct IdentityAuditPoint {
    int a;
    int r1;
    int r2;
    bool printed;
    bool alternative;
};

struct IdentityAudit {
    std::vector<IdentityAuditPoint> points;
    bool printed_uniform = true;
    bool alternative_uniform = true;
    int printed_failures = 0;
    int alternative_failures = 0;

    /// True iff exactly one reading balances at every point.
    bool exactly_one() const noexcept
    {
        return printed_uniform != alternative_uniform;
    }
};

/// Runs the pair identity over a <= max_a and -1 <= r2 < r1 <= max_r of equal parity, restricted
/// to pairs that do not straddle a (a >= r1 or r2 >= a); a straddling pair is exactly where the
/// decomposition leaves a genuine discrepancy.
inline IdentityAudit pair_identity_audit(int max_a = 8, int max_r = 10)
{
    IdentityAudit audit;
    for (int a = 1; a <= max_a; ++a) {
        for (int r1 = 0; r1 <= max_r; ++r1) {
            for (int r2 = -1; r2 < r1; ++r2) {
                if ((r1 - r2) % 2 != 0 || (r1 > a && a > r2)) {
                    continue;
                }
                IdentityAuditPoint pt{a, r1, r2, pair_identity_holds(a, r1, r2, ShiftReading::printed),
                                      pair_identity_holds(a, r1, r2, ShiftReading::alternative)};
                if (!pt.printed) {
                    audit.printed_uniform = false;
                    ++audit.printed_failures;
                }
                if (!pt.alternative) {
                    audit.alternative_uniform = false;
                    ++audit.alternative_failures;
                }
                audit.points.push_back(pt);
            }
        }
    }
    return audit;
}

} // namespace lfactor

#endif // LFACTOR_DECOMPOSITIONS_HPP

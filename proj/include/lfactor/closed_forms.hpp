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

#ifndef LFACTOR_CLOSED_FORMS_HPP
#define LFACTOR_CLOSED_FORMS_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "decompositions.hpp"
#include "expand.hpp"
#include "lproduct.hpp"

namespace lfactor
{

/// Catalogued discrepancy formulas, keyed by the setting they describe.
enum class FormId {
    gl_p1prime,      // tau_a x tau, Way 1'
    gl_p1,           // rho_c(tau) x tau, Way 1
    gl_p2,           // rho_c(tau) x tau, Way 2
    degenerate_p1,   // rho_c(tau) x| sigma, Way 1
    degenerate_p2,   // rho_c(tau) x| sigma, Way 2
    segment_p1,      // rho_c(tau) x| sigma_r, Way 1
    segment_p3,      // rho_c(tau) x| sigma_r, Way 3
    general_p1,      // rho_c(tau_a) x| sigma_r, Way 1
    general_p1prime, // rho_c(tau_a) x| sigma_r, Way 1'
    steinberg_p1prime, // tau_a x| sigma_r, Way 1'
    steinberg_p3       // tau x| sigma_r, Way 3
};

inline const char *form_name(FormId id) noexcept
{
    switch (id) {
        case FormId::gl_p1prime:
            return "gl-p1prime";
        case FormId::gl_p1:
            return "gl-p1";
        case FormId::gl_p2:
            return "gl-p2";
        case FormId::degenerate_p1:
            return "degenerate-p1";
        case FormId::degenerate_p2:
            return "degenerate-p2";
        case FormId::segment_p1:
            return "segment-p1";
        case FormId::segment_p3:
            return "segment-p3";
        case FormId::general_p1:
            return "general-p1";
        case FormId::general_p1prime:
            return "general-p1prime";
        case FormId::steinberg_p1prime:
            return "steinberg-p1prime";
        case FormId::steinberg_p3:
            return "steinberg-p3";
    }
    return "unknown";
}

/// A transcribed formula together with the bracket predicates that selected its optional factors.
struct PrintedForm {
    FormId id;
    LProduct product;
    std::vector<std::string> predicates;
};

namespace detail
{

using namespace kernels;

inline int sign_of(int v)
{
    return (v > 0) - (v < 0);
}

/// Two-entry parameter with r1 > a > r2.
inline bool straddles(const DiscreteSeriesParam &p, int a)
{
    return p.r.size() == 2 && p.r[0] > a && a > p.r[1];
}

inline LProduct tail_p1(int c, int a, const Kernel &sigma_kernel)
{
    LProduct out;
    out.add(LFactor(2, Rational(0), TwistedExt{a, c % 2 == 1 ? Sign::minus : Sign::plus}));
    out.add(LFactor(2, Rational(c - 1), TwistedExt{a, Sign::plus}));
    out.add(LFactor(1, half(c - 1), sigma_kernel));
    return out;
}

inline PrintedForm form_gl(FormId id, const WaySpec &w)
{
    Rational shift;
    if (id == FormId::gl_p1prime) {
        shift = -half(w.a - 1);
    } else if (id == FormId::gl_p1) {
        shift = half(w.c - 1);
    } else {
        shift = -half(w.c - 3);
    }
    return {id, single(2, shift, SteinbergTensor{1, 1}), {}};
}

inline PrintedForm form_degenerate_p2(const WaySpec &w)
{
    const int c = w.c;
    LProduct out;
    out.add(LFactor(2, Rational(2 - c), Rho{}));
    out.add(LFactor(2, Rational(1), c % 2 == 0 ? Kernel(Rho{}) : Kernel(RhoMinus{})));
    out.add(LFactor(1, -half(c - 3), TauSigma{}));
    return {FormId::degenerate_p2, out, {}};
}

inline PrintedForm form_segment_p3(const WaySpec &w)
{
    const int c = w.c;
    const int r2 = w.param.r[1];
    LProduct out;
    if (r2 == 0) {
        out.add(LFactor(1, -half(c - r2), SteinbergTensor{1, 1}));
        return {FormId::segment_p3, out, {"r2 = 0"}};
    }
    if (r2 < 0) {
        out.add(LFactor(1, -half(c - 1), TauSigma{}));
        out.add(LFactor(1, -half(c - r2), SteinbergTensor{1, 1}));
        return {FormId::segment_p3, out, {"r2 < 0"}};
    }
    return {FormId::segment_p3, out, {"r2 > 0"}};
}

inline PrintedForm form_general_p1(const WaySpec &w)
{
    LProduct out;
    for (int j = 1; j <= w.c - 2; ++j) {
        out.add(LFactor(2, Rational(j), SteinbergTensor{w.a, w.a}));
    }
    out *= tail_p1(w.c, w.a, TensorDiscrete{w.a, w.param.r});
    return {FormId::general_p1, out, {}};
}

/// The optional tau x tau factor follows the segment conventions for r2: present for r2 > 0,
/// absent for r2 = 0, inverted for r2 = -1. The tau x sigma factor is present whenever sigma is.
inline PrintedForm form_general_p1prime(const WaySpec &w, bool parity_corrected = false,
                                        bool segment_bracket = false)
{
    const int c = w.c, a = w.a;
    const int r2 = w.param.r[1];
    const Rational z = -half(a - 1) - half(c - 1);
    PrintedForm form{FormId::general_p1prime, {}, {}};
    if (segment_bracket) {
        form.product *= single(1, z, TensorSegment{1, r2});
        form.predicates.push_back("tau x tau bracket read as L(s-(a-1)/2-(c-1)/2, tau x tau_r2)");
    } else {
        const int e = sign_of(r2);
        form.product.add(LFactor(1, -half(a - r2) - half(c - 1), SteinbergTensor{1, 1}), e);
        form.predicates.push_back("tau x tau bracket exponent " + std::to_string(e) + " (r2 = " + std::to_string(r2)
                                  + ")");
    }
    if (w.param.sigma_present) {
        form.product.add(LFactor(1, z, TauSigma{}));
        form.predicates.push_back("tau x sigma bracket present");
    } else {
        form.predicates.push_back("tau x sigma bracket absent");
    }
    const bool swap = parity_corrected && a % 2 == 0;
    const Kernel plain_minus = swap ? Kernel(Rho{}) : Kernel(RhoMinus{});
    const Kernel plain_plus = swap ? Kernel(RhoMinus{}) : Kernel(Rho{});
    if (swap) {
        form.predicates.push_back("rho and rho- interchanged in the 2s factors (a even)");
    }
    for (int i = 1; i <= (c + 1) / 2; ++i) {
        form.product.add(LFactor(2, Rational(-c - 1 + 2 * i), plain_minus));
        form.product.add(LFactor(2, Rational(-(a - 1) - c - 1 + 2 * i), Rho{}));
    }
    for (int i = 1; i <= c / 2; ++i) {
        form.product.add(LFactor(2, Rational(-c + 2 * i), plain_plus));
        form.product.add(LFactor(2, Rational(-(a - 1) - c + 2 * i), RhoMinus{}));
    }
    return form;
}

inline PrintedForm form_steinberg_p1prime(const WaySpec &w)
{
    const int a = w.a;
    const int r2 = w.param.r[1];
    PrintedForm form{FormId::steinberg_p1prime, {}, {}};
    form.product.add(LFactor(2, Rational(0), a % 2 == 1 ? Kernel(RhoMinus{}) : Kernel(Rho{})));
    form.product.add(LFactor(2, Rational(-(a - 1)), Rho{}));
    if (r2 > 0) {
        form.product.add(LFactor(1, -half(a - r2), SteinbergTensor{1, 1}));
        form.product.add(LFactor(1, -half(a - 1), TauSigma{}));
    }
    form.predicates.push_back(std::string(a % 2 == 1 ? "a odd" : "a even") + (r2 > 0 ? ", r2 > 0" : ", r2 <= 0"));
    return form;
}

inline PrintedForm form_steinberg_p3(const WaySpec &w)
{
    const int r2 = w.param.r[1];
    LProduct out;
    out.add(LFactor(1, Rational(0), TauSigma{}));
    out.add(LFactor(1, half(r2 - 1), SteinbergTensor{1, 1}));
    return {FormId::steinberg_p3, out, {}};
}

} // namespace detail

/// Whether a catalogued formula describes this way and parameter point.
inline bool form_applies(FormId id, const WaySpec &w)
{
    const auto &r = w.param.r;
    switch (id) {
        case FormId::gl_p1prime:
            return w.family == WayFamily::gl_way1p && w.a >= 2 && w.c == 1 && w.d == 1 && w.b == 1;
        case FormId::gl_p1:
            return w.family == WayFamily::gl_way1 && w.c >= 2 && w.a == 1 && w.b == 1 && w.d == 1;
        case FormId::gl_p2:
            return w.family == WayFamily::gl_way2 && w.c >= 2 && w.a == 1 && w.b == 1 && w.d == 1;
        case FormId::degenerate_p1:
            return w.family == WayFamily::cl_way1 && w.c >= 2 && w.a == 1 && r.empty();
        case FormId::degenerate_p2:
            return w.family == WayFamily::cl_way2 && w.c >= 2 && w.a == 1 && r.empty();
        case FormId::segment_p1:
            return w.family == WayFamily::cl_way1 && w.c >= 2 && w.a == 1 && r.size() == 2;
        case FormId::segment_p3:
            return w.family == WayFamily::cl_way3 && w.c >= 2 && w.a == 1 && r.size() == 2 && w.pair == 0;
        case FormId::general_p1:
            return w.family == WayFamily::cl_way1 && w.c >= 2 && w.a >= 2 && detail::straddles(w.param, w.a);
        case FormId::general_p1prime:
            return w.family == WayFamily::cl_way1p && w.c >= 2 && w.a >= 2 && detail::straddles(w.param, w.a);
        case FormId::steinberg_p1prime:
            return w.family == WayFamily::cl_way1p && w.c == 1 && w.a >= 2 && detail::straddles(w.param, w.a);
        case FormId::steinberg_p3:
            return w.family == WayFamily::cl_way3 && w.c == 1 && w.a == 1 && detail::straddles(w.param, 1)
                   && w.pair == 0;
    }
    return false;
}

inline PrintedForm printed_form(FormId id, const WaySpec &w)
{
    using namespace kernels;
    switch (id) {
        case FormId::gl_p1prime:
        case FormId::gl_p1:
        case FormId::gl_p2:
            return detail::form_gl(id, w);
        case FormId::degenerate_p1:
            return {id, detail::tail_p1(w.c, 1, TauSigma{}), {}};
        case FormId::degenerate_p2:
            return detail::form_degenerate_p2(w);
        case FormId::segment_p1:
            return {id, detail::tail_p1(w.c, 1, TensorDiscrete{1, w.param.r}), {}};
        case FormId::segment_p3:
            return detail::form_segment_p3(w);
        case FormId::general_p1:
            return detail::form_general_p1(w);
        case FormId::general_p1prime:
            return detail::form_general_p1prime(w);
        case FormId::steinberg_p1prime:
            return detail::form_steinberg_p1prime(w);
        case FormId::steinberg_p3:
            return detail::form_steinberg_p3(w);
    }
    throw std::invalid_argument("unknown form");
}

inline constexpr std::array<FormId, 11> all_forms = {
    FormId::gl_p1prime,      FormId::gl_p1,        FormId::gl_p2,           FormId::degenerate_p1,
    FormId::degenerate_p2,   FormId::segment_p1,   FormId::steinberg_p3,    FormId::segment_p3,
    FormId::general_p1,      FormId::general_p1prime, FormId::steinberg_p1prime};

/// The catalogued formula for a way, if one exists.
inline std::optional<PrintedForm> closed_form(const WaySpec &w)
{
    for (FormId id : all_forms) {
        if (form_applies(id, w)) {
            return printed_form(id, w);
        }
    }
    return std::nullopt;
}

// Alternative readings tried on a mismatch.

/// Replaces L(z, tau x sigma) by 1 when the last segment is r_t = 0 and by L(z, tau x tau) when
/// r_t = -1, i.e. evaluates the rank-one sigma factor as though sigma carried the trailing segment.
inline std::optional<LProduct> sigma_substitution(const LProduct &atomized, const DiscreteSeriesParam &param)
{
    if (param.r.empty() || param.r.back() > 0) {
        return std::nullopt;
    }
    const int rt = param.r.back();
    LProduct out;
    for (const auto &[f, e] : atomized) {
        if (!std::holds_alternative<kernels::TauSigma>(f.kernel())) {
            out.add(f, e);
        } else if (rt == -1) {
            out *= power(atomize(single(f.s_coeff(), f.shift(), kernels::SteinbergTensor{1, 1})), e);
        }
    }
    return out;
}

enum class MatchStatus { match, reconciled, mismatch };

inline const char *match_status_name(MatchStatus m) noexcept
{
    switch (m) {
        case MatchStatus::match:
            return "MATCH";
        case MatchStatus::reconciled:
            return "RECONCILED";
        case MatchStatus::mismatch:
            return "MISMATCH";
    }
    return "unknown";
}

struct FormCheck {
    FormId form;
    WaySpec way;
    MatchStatus status = MatchStatus::mismatch;
    std::string reading;
    LProduct computed;
    LProduct printed;
    std::vector<std::string> predicates;
};

/// Compares a computed discrepancy with the catalogued formula, then with its alternative readings.
inline FormCheck check_form(FormId id, const WaySpec &w)
{
    FormCheck out;
    out.form = id;
    out.way = w;
    out.computed = discrepancy(w).P;
    const PrintedForm printed = printed_form(id, w);
    out.printed = atomize(printed.product);
    out.predicates = printed.predicates;
    if (out.computed == out.printed) {
        out.status = MatchStatus::match;
        return out;
    }
    std::vector<std::pair<std::string, std::function<bool()>>> readings;
    readings.emplace_back("sigma-substitution", [&] {
        auto lhs = sigma_substitution(out.computed, w.param);
        auto rhs = sigma_substitution(out.printed, w.param);
        return lhs && rhs && *lhs == *rhs;
    });
    if (id == FormId::general_p1) {
        readings.emplace_back("without-product", [&] {
            LProduct drop;
            for (int j = 1; j <= w.c - 2; ++j) {
                drop.add(LFactor(2, Rational(j), kernels::SteinbergTensor{w.a, w.a}));
            }
            return out.computed == atomize(printed.product / drop);
        });
    }
    if (id == FormId::general_p1prime) {
        readings.emplace_back("parity-corrected", [&] {
            return out.computed == atomize(detail::form_general_p1prime(w, true, false).product);
        });
        readings.emplace_back("segment-bracket", [&] {
            return out.computed == atomize(detail::form_general_p1prime(w, false, true).product);
        });
        readings.emplace_back("parity-corrected+segment-bracket", [&] {
            return out.computed == atomize(detail::form_general_p1prime(w, true, true).product);
        });
    }
    for (const auto &[name, test] : readings) {
        if (test()) {
            out.status = MatchStatus::reconciled;
            out.reading = name;
            return out;
        }
    }
    return out;
}

namespace detail
{

/// Two-entry parameters with r1 > a > r2, r2 >= -1, r1 <= a + 5.
inline std::vector<DiscreteSeriesParam> straddling_params(int a)
{
    std::vector<DiscreteSeriesParam> out;
    for (int r2 = -1; r2 < a; ++r2) {
        for (int r1 = a + 1; r1 <= a + 5; ++r1) {
            if ((r1 - r2) % 2 == 0) {
                out.push_back({{r1, r2}, true});
            }
        }
    }
    return out;
}

/// Two-entry parameters r1 > r2 >= -1 with r1 <= max_r1 and (r1 + r2)/2 >= 1.
inline std::vector<DiscreteSeriesParam> pair_params(int max_r1)
{
    std::vector<DiscreteSeriesParam> out;
    for (int r1 = 1; r1 <= max_r1; ++r1) {
        for (int r2 = -1; r2 < r1; ++r2) {
            if ((r1 - r2) % 2 == 0 && r1 + r2 >= 2) {
                out.push_back({{r1, r2}, true});
            }
        }
    }
    return out;
}

} // namespace detail

/// Grid of way specifications on which a catalogued formula is checked.
inline std::vector<WaySpec> form_grid(FormId id)
{
    std::vector<WaySpec> out;
    auto way = [](WayFamily f, int c, int a, DiscreteSeriesParam p = {}) {
        WaySpec w;
        w.family = f;
        w.c = c;
        w.a = a;
        w.param = std::move(p);
        return w;
    };
    switch (id) {
        case FormId::gl_p1prime:
            for (int a = 2; a <= 12; ++a) {
                out.push_back(way(WayFamily::gl_way1p, 1, a));
            }
            break;
        case FormId::gl_p1:
        case FormId::gl_p2:
            for (int c = 2; c <= 12; ++c) {
                out.push_back(way(id == FormId::gl_p1 ? WayFamily::gl_way1 : WayFamily::gl_way2, c, 1));
            }
            break;
        case FormId::degenerate_p1:
        case FormId::degenerate_p2:
            for (int c = 2; c <= 10; ++c) {
                out.push_back(way(id == FormId::degenerate_p1 ? WayFamily::cl_way1 : WayFamily::cl_way2, c, 1));
            }
            break;
        case FormId::segment_p1:
            for (int c = 2; c <= 8; ++c) {
                for (const auto &p : detail::pair_params(7)) {
                    out.push_back(way(WayFamily::cl_way1, c, 1, p));
                }
            }
            break;
        case FormId::segment_p3:
            for (int c = 2; c <= 8; ++c) {
                for (const auto &p : detail::pair_params(7)) {
                    out.push_back(way(WayFamily::cl_way3, c, 1, p));
                }
            }
            break;
        case FormId::general_p1:
        case FormId::general_p1prime:
            for (int c = 2; c <= 6; ++c) {
                for (int a = 2; a <= 6; ++a) {
                    for (const auto &p : detail::straddling_params(a)) {
                        out.push_back(
                            way(id == FormId::general_p1 ? WayFamily::cl_way1 : WayFamily::cl_way1p, c, a, p));
                    }
                }
            }
            break;
        case FormId::steinberg_p1prime:
            for (int a = 2; a <= 6; ++a) {
                for (const auto &p : detail::straddling_params(a)) {
                    out.push_back(way(WayFamily::cl_way1p, 1, a, p));
                }
            }
            break;
        case FormId::steinberg_p3:
            for (const auto &p : detail::straddling_params(1)) {
                out.push_back(way(WayFamily::cl_way3, 1, 1, p));
            }
            break;
    }
    return out;
}

/// Forms belonging to a named suite: all, gl, degenerate, segment, general, steinberg.
inline std::vector<FormId> suite_forms(std::string_view suite)
{
    std::vector<FormId> out;
    for (FormId id : all_forms) {
        const std::string name = form_name(id);
        if (suite == "all" || name.rfind(std::string(suite) + "-", 0) == 0) {
            out.push_back(id);
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    }
    return out;
}

inline std::vector<FormCheck> verify_closed_forms(std::string_view suite = "all")
{
    std::vector<FormCheck> out;
    for (FormId id : suite_forms(suite)) {
        for (const auto &w : form_grid(id)) {
            out.push_back(check_form(id, w));
        }
    }
    return out;
}

} // namespace lfactor

#endif // LFACTOR_CLOSED_FORMS_HPP

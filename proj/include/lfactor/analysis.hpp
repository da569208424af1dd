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

#ifndef LFACTOR_ANALYSIS_HPP
#define LFACTOR_ANALYSIS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "decompositions.hpp"
#include "normalization.hpp"
#include "poles.hpp"

namespace lfactor
{

/// Applies fn to every item on up to jobs worker tasks. Results keep the input order.
template <class T, class Fn>
auto parallel_map(const std::vector<T> &items, Fn fn, unsigned jobs = 1) -> std::vector<decltype(fn(items[0]))>
{
    using R = decltype(fn(items[0]));
    std::vector<R> out(items.size());
    if (jobs <= 1 || items.size() < 2) {
        for (std::size_t i = 0; i < items.size(); ++i) {
            out[i] = fn(items[i]);
        }
        return out;
    }
    const std::size_t n = std::min<std::size_t>(jobs, items.size());
    std::vector<std::future<void>> workers;
    workers.reserve(n);
    for (std::size_t w = 0; w < n; ++w) {
        workers.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < items.size(); i += n) {
                out[i] = fn(items[i]);
            }
        }));
    }
    for (auto &f : workers) {
        f.get();
    }
    return out;
}

// Shared zeros of the inverse normalization factors of rho_c(tau) x| sigma.

struct InverseFactorGcd {
    int c = 1;
    LProduct alpha_inverse;
    LProduct beta_pair_inverse;
    // Structural reading: per-key gcd of the formal products.
    LProduct structural;
    LProduct printed_structural;
    // Locus reading: shared zero loci configuration by configuration.
    CommonPoleReport locus;
    CommonPoleReport printed_locus;

    bool structural_match() const
    {
        return structural == printed_structural;
    }

    bool locus_match() const
    {
        if (locus.shared.size() != printed_locus.shared.size()) {
            return false;
        }
        for (std::size_t i = 0; i < locus.shared.size(); ++i) {
            if (locus.shared[i].re_s != printed_locus.shared[i].re_s
                || locus.shared[i].configs != printed_locus.shared[i].configs) {
                return false;
            }
        }
        return true;
    }
};

/// gcd of alpha_c(s)^-1 and (beta_c(s) beta_c(-s))^-1 for a = 1 and the bare sigma, against
/// gcd(L(s - (c-1)/2, tau x sigma)^-1, L(-2s + c - 1, tau, rho^-)^-1).
inline InverseFactorGcd inverse_factor_gcd(int c)
{
    const DiscreteSeriesParam bare;
    InverseFactorGcd out;
    out.c = c;
    out.alpha_inverse = inverse(atomize(alpha_classical(c, 1, bare)));
    const LProduct beta = atomize(beta_classical(c, 1, bare));
    out.beta_pair_inverse = inverse(beta * reflect(beta));
    out.structural = gcd_products(out.alpha_inverse, out.beta_pair_inverse);
    out.locus = common_zeros(out.alpha_inverse, out.beta_pair_inverse);

    const LProduct px = single(1, -half(c - 1), kernels::TauSigma{}, -1);
    const LProduct py = single(-2, Rational(c - 1), kernels::RhoMinus{}, -1);
    out.printed_structural = gcd_products(px, py);
    out.printed_locus = common_zeros(px, py);
    return out;
}

// Induction strategy.

struct StrategyReport {
    int c = 1;
    int a = 1;
    DiscreteSeriesParam param;
    GroupType group = GroupType::sp;
    bool pass = true;
    std::string comparison;
    // Pairs of segments that do not straddle a, peeled off by Way 3. Each must leave P = 1.
    std::vector<std::pair<WaySpec, LProduct>> peeled;
    DiscreteSeriesParam reduced;
    CommonPoleReport common;
    std::vector<Rational> offending;
    bool zero_axiom_used = false;
};

namespace detail
{

inline WaySpec classical_way(WayFamily f, int c, int a, const DiscreteSeriesParam &p, GroupType g, int pair = 0)
{
    WaySpec w;
    w.family = f;
    w.c = c;
    w.a = a;
    w.param = p;
    w.group = g;
    w.pair = pair;
    return w;
}

inline void settle(StrategyReport &rep, const std::vector<Rational> &loci)
{
    for (const auto &r : loci) {
        if (r == Rational(0)) {
            rep.zero_axiom_used = true;
        } else if (std::find(rep.offending.begin(), rep.offending.end(), r) == rep.offending.end()) {
            rep.offending.push_back(r);
        }
    }
}

} // namespace detail

/// Runs the designated comparison for (c, a, sigma_r) and passes iff every locus left over lies
/// on Re(s) = 0, where multiplicity-freeness is taken as an axiom.
///
/// c, a >= 2: Way 1 against Way 1'. a = 1: Way 1 against Way 3 (or Way 2 without segments).
/// c = 1: the poles of Way 1' (a >= 2) or Way 3 (a = 1) must avoid Re(s) < 0, since the
/// unnormalized operator is holomorphic on Re(s) > 0.
inline StrategyReport strategy_check(int c, int a, const DiscreteSeriesParam &param, GroupType group = GroupType::sp)
{
    require_valid(param);
    StrategyReport rep;
    rep.c = c;
    rep.a = a;
    rep.param = param;
    rep.group = group;

    DiscreteSeriesParam reduced = param;
    for (;;) {
        int pick = -1;
        for (std::size_t k = 0; 2 * k + 1 < reduced.r.size(); ++k) {
            const int r1 = reduced.r[2 * k];
            const int r2 = reduced.r[2 * k + 1];
            if (!(r1 > a && a > r2)) {
                pick = static_cast<int>(k);
                break;
            }
        }
        if (pick < 0) {
            break;
        }
        const WaySpec w = detail::classical_way(WayFamily::cl_way3, c, a, reduced, group, pick);
        const LProduct P = discrepancy(w).P;
        rep.peeled.emplace_back(w, P);
        if (!P.empty()) {
            rep.pass = false;
        }
        reduced = detail::without_pair(reduced, pick);
    }
    rep.reduced = reduced;

    auto P_of = [&](WayFamily f) { return discrepancy(detail::classical_way(f, c, a, reduced, group)).P; };
    auto shared_res = [&](const CommonPoleReport &cp) {
        std::vector<Rational> out;
        for (const auto &l : cp.shared) {
            out.push_back(l.re_s);
        }
        return out;
    };
    auto negative_half_plane = [](const LProduct &P) {
        std::vector<Rational> out;
        for (const auto &l : pole_loci(P)) {
            if (l.re_s <= 0) {
                out.push_back(l.re_s);
            }
        }
        return out;
    };

    if (c >= 2 && a >= 2) {
        rep.comparison = "cl1 vs cl1p";
        rep.common = common_poles(P_of(WayFamily::cl_way1), P_of(WayFamily::cl_way1p));
        detail::settle(rep, shared_res(rep.common));
    } else if (c >= 2 && !reduced.r.empty()) {
        rep.comparison = "cl1 vs cl3";
        rep.common = common_poles(P_of(WayFamily::cl_way1), P_of(WayFamily::cl_way3));
        detail::settle(rep, shared_res(rep.common));
    } else if (c >= 2) {
        rep.comparison = "cl1 vs cl2";
        rep.common = common_poles(P_of(WayFamily::cl_way1), P_of(WayFamily::cl_way2));
        detail::settle(rep, shared_res(rep.common));
    } else if (a >= 2) {
        rep.comparison = "cl1p against Re(s) > 0";
        detail::settle(rep, negative_half_plane(P_of(WayFamily::cl_way1p)));
    } else if (!reduced.r.empty()) {
        rep.comparison = "cl3 against Re(s) > 0";
        detail::settle(rep, negative_half_plane(P_of(WayFamily::cl_way3)));
    } else {
        rep.comparison = "base case";
    }
    if (!rep.offending.empty()) {
        rep.pass = false;
    }
    return rep;
}

// Parameter grids shared by the sweeps.

/// The empty parameter, every two-entry parameter with r1 > a > r2 and r1 <= a + 5, and each of
/// those with a leading pair above a that Way 3 peels off.
inline std::vector<DiscreteSeriesParam> strategy_params(int a)
{
    std::vector<DiscreteSeriesParam> out{DiscreteSeriesParam{}};
    for (const auto &p : detail::straddling_params(a)) {
        out.push_back(p);
    }
    for (const auto &p : detail::straddling_params(a)) {
        out.push_back({{p.r[0] + 4, p.r[0] + 2, p.r[0], p.r[1]}, true});
    }
    return out;
}

struct StrategyPoint {
    int c;
    int a;
    DiscreteSeriesParam param;
};

inline std::vector<StrategyPoint> strategy_grid(int max_c = 6, int max_a = 6)
{
    std::vector<StrategyPoint> out;
    for (int c = 1; c <= max_c; ++c) {
        for (int a = 1; a <= max_a; ++a) {
            for (const auto &p : strategy_params(a)) {
                out.push_back({c, a, p});
            }
        }
    }
    return out;
}

struct SignClassPoint {
    WaySpec way;
    SignClass cls;
    bool expected_nonpositive;

    bool ok() const noexcept
    {
        return expected_nonpositive ? is_nonpositive(cls) : is_nonnegative(cls);
    }
};

/// P1 of Way 1 (c <= max_c, a <= max_a) should be non-positive; P1' of Way 1' and P3 of Way 3
/// with a = 1 should be non-negative. Parameters straddle a, plus the empty parameter for P1.
inline std::vector<SignClassPoint> sign_class_sweep(int max_c = 8, int max_a = 6, unsigned jobs = 1)
{
    std::vector<std::pair<WaySpec, bool>> grid;
    for (int c = 1; c <= max_c; ++c) {
        for (int a = 1; a <= max_a; ++a) {
            std::vector<DiscreteSeriesParam> params{DiscreteSeriesParam{}};
            for (const auto &p : detail::straddling_params(a)) {
                params.push_back(p);
            }
            for (const auto &p : params) {
                if (c >= 2) {
                    grid.emplace_back(detail::classical_way(WayFamily::cl_way1, c, a, p, GroupType::sp), true);
                }
                if (a >= 2 && !p.r.empty()) {
                    grid.emplace_back(detail::classical_way(WayFamily::cl_way1p, c, a, p, GroupType::sp), false);
                }
                if (a == 1 && !p.r.empty()) {
                    grid.emplace_back(detail::classical_way(WayFamily::cl_way3, c, a, p, GroupType::sp), false);
                }
            }
        }
    }
    return parallel_map(
        grid,
        [](const std::pair<WaySpec, bool> &g) {
            return SignClassPoint{g.first, sign_class(discrepancy(g.first).P), g.second};
        },
        jobs);
}

/// common_poles(Way 1, Way 2) for a = 1 and the bare sigma, c = 2..max_c.
inline std::vector<std::pair<int, CommonPoleReport>> degenerate_common_poles(int max_c = 10)
{
    std::vector<std::pair<int, CommonPoleReport>> out;
    for (int c = 2; c <= max_c; ++c) {
        const auto p1 = discrepancy(detail::classical_way(WayFamily::cl_way1, c, 1, {}, GroupType::sp)).P;
        const auto p2 = discrepancy(detail::classical_way(WayFamily::cl_way2, c, 1, {}, GroupType::sp)).P;
        out.emplace_back(c, common_poles(p1, p2));
    }
    return out;
}

} // namespace lfactor

#endif // LFACTOR_ANALYSIS_HPP

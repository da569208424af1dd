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

#ifndef LFACTOR_NORMALIZATION_HPP
#define LFACTOR_NORMALIZATION_HPP

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "expand.hpp"
#include "kernel.hpp"
#include "lproduct.hpp"
#include "param.hpp"
#include "rational.hpp"

namespace lfactor
{

namespace detail
{

inline void require_positive(int v, const char *what)
{
    if (v < 1) {
        throw std::invalid_argument(std::string(what) + " must be >= 1");
    }
}

} // namespace detail

/// alpha_{c,a}(s + s_offset, tau, sigma_r) over composite kernels.
inline LProduct alpha_classical(int c, int a, const DiscreteSeriesParam &param, const Rational &s_offset = Rational(0))
{
    detail::require_positive(c, "c");
    detail::require_positive(a, "a");
    require_valid(param);
    LProduct out;
    for (int i = 1; i <= (c + 1) / 2; ++i) {
        out.add(LFactor(2, Rational(-1 - c + 2 * i), kernels::TwistedExt{a, Sign::plus}));
    }
    for (int i = 1; i <= c / 2; ++i) {
        out.add(LFactor(2, Rational(-c + 2 * i), kernels::TwistedExt{a, Sign::minus}));
    }
    out.add(LFactor(1, -half(c - 1), kernels::TensorDiscrete{a, param.r}));
    return substitute(out, s_offset);
}

/// beta_{c,a}(s + s_offset, tau, sigma_r) over composite kernels.
inline LProduct beta_classical(int c, int a, const DiscreteSeriesParam &param, const Rational &s_offset = Rational(0))
{
    detail::require_positive(c, "c");
    detail::require_positive(a, "a");
    require_valid(param);
    LProduct out;
    for (int i = 1; i <= (c + 1) / 2; ++i) {
        out.add(LFactor(2, Rational(c + 2 - 2 * i), kernels::TwistedExt{a, Sign::plus}));
    }
    for (int i = 1; i <= c / 2; ++i) {
        out.add(LFactor(2, Rational(c + 1 - 2 * i), kernels::TwistedExt{a, Sign::minus}));
    }
    out.add(LFactor(1, half(c + 1), kernels::TensorDiscrete{a, param.r}));
    return substitute(out, s_offset);
}

/// alpha_GL(s + s_offset, rho_c(tau_a), rho_d(tau_b)) = prod_j L(2(s + s_offset) - j, tau_a x tau_b),
/// j = |c-d|/2, |c-d|/2 + 1, ..., (c+d-2)/2.
///
/// An index of zero on either side denotes the trivial representation and gives the empty product.
inline LProduct alpha_gl(int c, int d, int a, int b, const Rational &s_offset = Rational(0))
{
    if (c < 0 || d < 0 || a < 0 || b < 0) {
        throw std::invalid_argument("alpha_gl: indices must be non-negative");
    }
    LProduct out;
    if (c == 0 || d == 0 || a == 0 || b == 0) {
        return out;
    }
    const int count = std::min(c, d);
    for (int k = 0; k < count; ++k) {
        const Rational j = half(std::abs(c - d)) + Rational(k);
        out.add(LFactor(2, Rational(2) * s_offset - j, kernels::SteinbergTensor{a, b}));
    }
    return out;
}

/// Per-key gcd of two products: keys present in both with the same sign keep the exponent of
/// smaller magnitude. Intended for atomized inverse products.
inline LProduct gcd_products(const LProduct &x, const LProduct &y)
{
    LProduct out;
    for (const auto &[f, ex] : x) {
        const int ey = y.exponent(f);
        if (ey == 0 || (ex > 0) != (ey > 0)) {
            continue;
        }
        const int m = std::min(std::abs(ex), std::abs(ey));
        out.add(f, ex > 0 ? m : -m);
    }
    return out;
}

} // namespace lfactor

#endif // LFACTOR_NORMALIZATION_HPP

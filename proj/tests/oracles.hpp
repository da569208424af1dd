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

// Reference expansions for the tests, written from the Steinberg exponent sets directly
// rather than from the library's recursions.

#ifndef LFACTOR_TESTS_ORACLES_HPP
#define LFACTOR_TESTS_ORACLES_HPP

#include <algorithm>
#include <vector>

#include <lfactor/lproduct.hpp>

namespace oracle
{

using lfactor::LFactor;
using lfactor::LProduct;
using lfactor::Rational;
using lfactor::Sign;
namespace k = lfactor::kernels;

inline LProduct rho(int zc, const Rational &zs, int e = 1)
{
    LProduct out;
    out.add(LFactor(zc, zs, k::Rho{}), e);
    return out;
}

inline LProduct rho_minus(int zc, const Rational &zs, int e = 1)
{
    LProduct out;
    out.add(LFactor(zc, zs, k::RhoMinus{}), e);
    return out;
}

inline LProduct tau_sigma(int zc, const Rational &zs, int e = 1)
{
    LProduct out;
    out.add(LFactor(zc, zs, k::TauSigma{}), e);
    return out;
}

/// L(z, tau x tau) = L(z, tau, rho) L(z, tau, rho^-).
inline LProduct tau_tau(int zc, const Rational &zs, int e = 1)
{
    return rho(zc, zs, e) * rho_minus(zc, zs, e);
}

/// The Steinberg tau_a has exponents (a-1)/2 - k, k = 0..a-1. The Rankin-Selberg factor of
/// tau_a x tau_b keeps one term per diagonal: z + (a+b)/2 - 1 - j, j = 0..min(a,b)-1.
inline LProduct rankin_selberg(int zc, const Rational &zs, int a, int b)
{
    LProduct out;
    for (int j = 0; j < std::min(a, b); ++j) {
        out *= tau_tau(zc, zs + Rational(a + b, 2) - Rational(1) - Rational(j));
    }
    return out;
}

/// L(z, tau_a, rho) alternates rho and rho^- going down from z + a - 1.
inline LProduct twisted(int zc, const Rational &zs, int a, Sign sign)
{
    LProduct out;
    for (int k = 0; k < a; ++k) {
        const bool same = k % 2 == 0;
        const bool plus = (sign == Sign::plus) == same;
        out *= plus ? rho(zc, zs + Rational(a - 1 - k)) : rho_minus(zc, zs + Rational(a - 1 - k));
    }
    return out;
}

/// L(z, tau_a x sigma_r): one Rankin-Selberg block per segment (r = 0 empty, r = -1 inverted)
/// times L(z + (a-1)/2, tau x sigma).
inline LProduct tensor_discrete(int zc, const Rational &zs, int a, const std::vector<int> &r)
{
    LProduct out = tau_sigma(zc, zs + Rational(a - 1, 2));
    for (int ri : r) {
        if (ri >= 1) {
            out *= rankin_selberg(zc, zs, a, ri);
        } else if (ri == -1) {
            out /= rankin_selberg(zc, zs, a, 1);
        }
    }
    return out;
}

/// alpha_{c,a}(s) of the bare sigma expanded by hand: the 2s-factors run over
/// 2s - c + 1 + 2m (same sign as Tw(a,+)) and 2s - c + 2 + 2m (Tw(a,-)).
inline LProduct alpha(int c, int a, const std::vector<int> &r)
{
    LProduct out;
    for (int m = 0; 2 * m < c; ++m) {
        out *= twisted(2, Rational(-c + 1 + 2 * m), a, Sign::plus);
    }
    for (int m = 0; 2 * m + 1 < c; ++m) {
        out *= twisted(2, Rational(-c + 2 + 2 * m), a, Sign::minus);
    }
    return out * tensor_discrete(1, -Rational(c - 1, 2), a, r);
}

inline LProduct beta(int c, int a, const std::vector<int> &r)
{
    LProduct out;
    for (int m = 0; 2 * m < c; ++m) {
        out *= twisted(2, Rational(c - 2 * m), a, Sign::plus);
    }
    for (int m = 0; 2 * m + 1 < c; ++m) {
        out *= twisted(2, Rational(c - 1 - 2 * m), a, Sign::minus);
    }
    return out * tensor_discrete(1, Rational(c + 1, 2), a, r);
}

/// alpha_GL for rho_c(tau_a), rho_d(tau_b): the 2s-shifts are -(c+d)/2 + 1 + k for k < min(c,d).
inline LProduct alpha_gl(int c, int d, int a, int b, const Rational &offset = Rational(0))
{
    LProduct out;
    for (int k = 0; k < std::min(c, d); ++k) {
        out *= rankin_selberg(2, Rational(2) * offset - Rational(c + d, 2) + Rational(1) + Rational(k), a, b);
    }
    return out;
}

} // namespace oracle

#endif // LFACTOR_TESTS_ORACLES_HPP

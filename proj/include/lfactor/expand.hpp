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

#ifndef LFACTOR_EXPAND_HPP
#define LFACTOR_EXPAND_HPP

#include <algorithm>
#include <stdexcept>

#include "kernel.hpp"
#include "lproduct.hpp"
#include "param.hpp"
#include "rational.hpp"

namespace lfactor
{

/// L(z, tau_a, rho_sign) with z = z_coeff * s + z_shift, written over rank-one factors.
///
/// The factor at z + a - 1 carries rho_sign and the signs alternate downwards to z.
inline LProduct expand_twisted(int z_coeff, const Rational &z_shift, int a, Sign sign)
{
    if (a < 1) {
        throw std::invalid_argument("expand_twisted: a must be >= 1");
    }
    LProduct out;
    for (int i = 1; i <= (a + 1) / 2; ++i) {
        out.add(LFactor(z_coeff, z_shift + Rational(a + 1 - 2 * i), twisted_atom(sign)));
    }
    for (int i = 1; i <= a / 2; ++i) {
        out.add(LFactor(z_coeff, z_shift + Rational(a - 2 * i), twisted_atom(opposite(sign))));
    }
    return out;
}

/// L(z, tau_a x tau_r) as a product of L(., tau x tau). r = 0 is empty, r = -1 inverts r = 1.
inline LProduct expand_segment(int z_coeff, const Rational &z_shift, int a, int r)
{
    if (a < 1) {
        throw std::invalid_argument("expand_segment: a must be >= 1");
    }
    if (r < -1) {
        throw std::invalid_argument("expand_segment: r must be >= -1");
    }
    if (r == 0) {
        return {};
    }
    if (r == -1) {
        return inverse(expand_segment(z_coeff, z_shift, a, 1));
    }
    const int lo = std::min(a, r);
    const int hi = std::max(a, r);
    LProduct out;
    // i runs over -(lo-1)/2, ..., (lo-1)/2 around the center (hi-1)/2.
    for (int k = 0; k < lo; ++k) {
        const Rational i = half(2 * k - (lo - 1));
        out.add(LFactor(z_coeff, z_shift + half(hi - 1) + i, kernels::SteinbergTensor{1, 1}));
    }
    return out;
}

/// L(z, tau_a x tau_a) = L(z, tau_a, rho) L(z, tau_a, rho^-).
inline LProduct expand_tautau(int z_coeff, const Rational &z_shift, int a)
{
    LProduct out;
    out.add(LFactor(z_coeff, z_shift, kernels::TwistedExt{a, Sign::plus}));
    out.add(LFactor(z_coeff, z_shift, kernels::TwistedExt{a, Sign::minus}));
    return out;
}

/// L(z, tau_a x sigma_r) = prod_i L(z, tau_a x tau_{r_i}) * L(z + (a-1)/2, tau x sigma).
inline LProduct expand_tensor_discrete(int z_coeff, const Rational &z_shift, int a, const DiscreteSeriesParam &param)
{
    require_valid(param);
    if (a < 1) {
        throw std::invalid_argument("expand_tensor_discrete: a must be >= 1");
    }
    LProduct out;
    for (int r : param.r) {
        out *= expand_segment(z_coeff, z_shift, a, r);
    }
    out.add(LFactor(z_coeff, z_shift + half(a - 1), kernels::TauSigma{}));
    return out;
}

namespace detail
{

inline LProduct expand_once(const LFactor &f)
{
    using namespace kernels;
    const int A = f.s_coeff();
    const Rational &B = f.shift();
    return std::visit(overloaded{
                          [&](const Rho &) { return LProduct(f); },
                          [&](const RhoMinus &) { return LProduct(f); },
                          [&](const TauSigma &) { return LProduct(f); },
                          [&](const SteinbergTensor &t) {
                              if (t.a == 1 && t.b == 1) {
                                  return expand_tautau(A, B, 1);
                              }
                              return expand_segment(A, B, t.a, t.b);
                          },
                          [&](const TwistedExt &t) { return expand_twisted(A, B, t.a, t.sign); },
                          [&](const TensorSegment &t) { return expand_segment(A, B, t.a, t.r); },
                          [&](const TensorDiscrete &t) { return expand_tensor_discrete(A, B, t.a, {t.r, true}); },
                      },
                      f.kernel());
}

} // namespace detail

/// Rewrites every composite kernel over rho, rho^- and tau x sigma.
inline LProduct atomize(const LProduct &p)
{
    LProduct out;
    for (const auto &[f, e] : p) {
        if (f.atomic()) {
            out.add(f, e);
            continue;
        }
        const LProduct expanded = atomize(detail::expand_once(f));
        for (const auto &[g, ge] : expanded) {
            out.add(g, ge * e);
        }
    }
    return out;
}

struct IdentityPair {
    LProduct lhs;
    LProduct rhs;
};

/// L(2s, tau_a x tau_b) peeled by one Steinberg step on the larger index.
///
/// a >= b: L(2s - (b-1)/2, tau_a x tau) L(2s + 1/2, tau_a x tau_{b-1});
/// a <  b: L(2s - (a-1)/2, tau x tau_b) L(2s + 1/2, tau_{a-1} x tau_b).
/// A zero index contributes nothing.
inline IdentityPair expand_gl_tensor_recursion(int a, int b)
{
    if (a < 1 || b < 1) {
        throw std::invalid_argument("expand_gl_tensor_recursion: a, b must be >= 1");
    }
    IdentityPair out;
    out.lhs.add(LFactor(2, Rational(0), kernels::SteinbergTensor{a, b}));
    if (a >= b) {
        out.rhs.add(LFactor(2, -half(b - 1), kernels::SteinbergTensor{a, 1}));
        if (b > 1) {
            out.rhs.add(LFactor(2, half(1), kernels::SteinbergTensor{a, b - 1}));
        }
    } else {
        out.rhs.add(LFactor(2, -half(a - 1), kernels::SteinbergTensor{1, b}));
        if (a > 1) {
            out.rhs.add(LFactor(2, half(1), kernels::SteinbergTensor{a - 1, b}));
        }
    }
    return out;
}

} // namespace lfactor

#endif // LFACTOR_EXPAND_HPP

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

#include <gtest/gtest.h>

#include <lfactor/expand.hpp>
#include <lfactor/runner.hpp>

#include "oracles.hpp"

using namespace lfactor;
namespace k = lfactor::kernels;

namespace
{

const std::vector<std::pair<int, Rational>> arguments = {
    {1, Rational(0)}, {2, Rational(-1)}, {2, half(1)}, {-2, Rational(3)}, {1, quarter(-5)}, {-1, half(7)}};

} // namespace

TEST(Expand, TwistedMatchesOracle)
{
    for (int a = 1; a <= 12; ++a) {
        for (Sign s : {Sign::plus, Sign::minus}) {
            for (const auto &[zc, zs] : arguments) {
                EXPECT_EQ(atomize(single(zc, zs, k::TwistedExt{a, s})), oracle::twisted(zc, zs, a, s))
                    << "a=" << a << " z=" << argument_text(zc, zs);
            }
        }
    }
}

TEST(Expand, TwistedSmallCases)
{
    // L(z, tau_2, rho) = L(z+1, tau, rho) L(z, tau, rho^-).
    EXPECT_EQ(product_text(atomize(single(1, Rational(0), k::TwistedExt{2, Sign::plus}))),
              "L(s+1, tau, rho) * L(s, tau, rho-)");
    EXPECT_EQ(expand_twisted(2, Rational(0), 3, Sign::minus).degree(), 3);
}

TEST(Expand, SegmentMatchesRankinSelberg)
{
    for (int a = 1; a <= 12; ++a) {
        for (int b = 1; b <= 12; ++b) {
            for (const auto &[zc, zs] : arguments) {
                EXPECT_EQ(atomize(single(zc, zs, k::SteinbergTensor{a, b})), oracle::rankin_selberg(zc, zs, a, b))
                    << "a=" << a << " b=" << b;
            }
        }
    }
}

TEST(Expand, SegmentConventions)
{
    EXPECT_TRUE(expand_segment(1, Rational(0), 4, 0).empty());
    EXPECT_EQ(atomize(expand_segment(1, Rational(0), 4, -1)), inverse(atomize(expand_segment(1, Rational(0), 4, 1))));
    EXPECT_EQ(atomize(single(1, Rational(0), k::TensorSegment{3, -1})),
              inverse(oracle::rankin_selberg(1, Rational(0), 3, 1)));
}

TEST(Expand, TensorDiscreteMatchesOracle)
{
    const std::vector<std::vector<int>> params = {{}, {2, 0}, {3, -1}, {5, 1}, {7, 5, 3, 1}, {6, 4, 2, 0}};
    for (int a = 1; a <= 8; ++a) {
        for (const auto &r : params) {
            for (const auto &[zc, zs] : arguments) {
                EXPECT_EQ(atomize(single(zc, zs, k::TensorDiscrete{a, r})), oracle::tensor_discrete(zc, zs, a, r))
                    << "a=" << a;
            }
        }
    }
}

TEST(Expand, BareSigmaIsAtomic)
{
    EXPECT_EQ(atomize(single(1, half(1), k::TensorDiscrete{1, {}})), single(1, half(1), k::TauSigma{}));
}

TEST(Expand, TwistedPairGivesTensorSquare)
{
    for (int a = 1; a <= 12; ++a) {
        for (const auto &[zc, zs] : consistency_arguments()) {
            EXPECT_TRUE(consistency_holds(a, zc, zs)) << "a=" << a;
        }
    }
}

TEST(Expand, GlTensorRecursion)
{
    for (int a = 1; a <= 12; ++a) {
        for (int b = 1; b <= 12; ++b) {
            const auto sides = expand_gl_tensor_recursion(a, b);
            EXPECT_EQ(atomize(sides.lhs), atomize(sides.rhs)) << "a=" << a << " b=" << b;
            EXPECT_EQ(atomize(sides.lhs), oracle::rankin_selberg(2, Rational(0), a, b));
        }
    }
    EXPECT_THROW(expand_gl_tensor_recursion(0, 2), std::invalid_argument);
}

TEST(ExpandProperty, AtomizeIsMultiplicative)
{
    const std::vector<Kernel> kernels = {k::TwistedExt{3, Sign::plus}, k::SteinbergTensor{4, 2},
                                         k::TensorSegment{2, -1}, k::TensorDiscrete{2, {5, 1}}, k::Rho{}};
    for (std::size_t i = 0; i < kernels.size(); ++i) {
        for (std::size_t j = 0; j < kernels.size(); ++j) {
            const LProduct x = single(2, half(1), kernels[i], 2);
            const LProduct y = single(-1, Rational(3), kernels[j], -1);
            EXPECT_EQ(atomize(x * y), atomize(x) * atomize(y));
            EXPECT_EQ(atomize(inverse(x)), inverse(atomize(x)));
            EXPECT_EQ(atomize(reflect(x)), reflect(atomize(x)));
            EXPECT_EQ(atomize(atomize(x)), atomize(x));
            EXPECT_TRUE(atomize(x).is_atomic());
        }
    }
}

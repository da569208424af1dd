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
#include <lfactor/normalization.hpp>

#include "oracles.hpp"

using namespace lfactor;
namespace k = lfactor::kernels;

TEST(Alpha, SmallExample)
{
    EXPECT_EQ(product_text(alpha_classical(2, 1, {})), "L(2s-1, tau, rho) * L(2s, tau, rho-) * L(s-1/2, tau x sigma)");
    EXPECT_EQ(product_text(beta_classical(1, 1, {})), "L(2s+1, tau, rho) * L(s+1, tau x sigma)");
}

TEST(Alpha, DegreeIsCPlusOne)
{
    for (int c = 1; c <= 10; ++c) {
        EXPECT_EQ(alpha_classical(c, 3, {{5, 1}, true}).degree(), c + 1);
        EXPECT_EQ(beta_classical(c, 3, {{5, 1}, true}).degree(), c + 1);
    }
}

TEST(Alpha, MatchesOracle)
{
    const std::vector<std::vector<int>> params = {{}, {2, 0}, {3, -1}, {5, 1}, {8, 6, 4, 2}};
    for (int c = 1; c <= 8; ++c) {
        for (int a = 1; a <= 6; ++a) {
            for (const auto &r : params) {
                const DiscreteSeriesParam p{r, true};
                EXPECT_EQ(atomize(alpha_classical(c, a, p)), oracle::alpha(c, a, r)) << "c=" << c << " a=" << a;
                EXPECT_EQ(atomize(beta_classical(c, a, p)), oracle::beta(c, a, r)) << "c=" << c << " a=" << a;
            }
        }
    }
}

TEST(Alpha, OffsetIsSubstitution)
{
    const DiscreteSeriesParam p{{5, 1}, true};
    EXPECT_EQ(alpha_classical(3, 2, p, half(1)), substitute(alpha_classical(3, 2, p), half(1)));
    EXPECT_EQ(beta_classical(3, 2, p, quarter(-3)), substitute(beta_classical(3, 2, p), quarter(-3)));
}

TEST(Alpha, RejectsBadInput)
{
    EXPECT_THROW(alpha_classical(0, 1, {}), std::invalid_argument);
    EXPECT_THROW(alpha_classical(1, 1, {{1, 5}, true}), std::invalid_argument);
    EXPECT_THROW(beta_classical(1, 0, {}), std::invalid_argument);
}

TEST(AlphaGl, MatchesOracle)
{
    for (int c = 1; c <= 8; ++c) {
        for (int d = 1; d <= 8; ++d) {
            for (int a = 1; a <= 4; ++a) {
                for (int b = 1; b <= 4; ++b) {
                    EXPECT_EQ(atomize(alpha_gl(c, d, a, b, quarter(1))), oracle::alpha_gl(c, d, a, b, quarter(1)))
                        << c << d << a << b;
                }
            }
        }
    }
}

TEST(AlphaGl, ZeroIndexIsTrivial)
{
    EXPECT_TRUE(alpha_gl(0, 3, 1, 1).empty());
    EXPECT_TRUE(alpha_gl(3, 2, 0, 1).empty());
    EXPECT_THROW(alpha_gl(-1, 1, 1, 1), std::invalid_argument);
}

TEST(AlphaGl, RankOneCase)
{
    EXPECT_EQ(alpha_gl(1, 1, 1, 1), single(2, Rational(0), k::SteinbergTensor{1, 1}));
    EXPECT_EQ(product_text(alpha_gl(3, 1, 1, 1)), "L(2s-1, tau x tau)");
}

TEST(Gcd, SameSignMinimum)
{
    const LProduct x = single(1, Rational(0), k::Rho{}, 2) * single(1, Rational(1), k::RhoMinus{}, -1);
    const LProduct y = single(1, Rational(0), k::Rho{}, 1) * single(1, Rational(1), k::RhoMinus{}, 1);
    EXPECT_EQ(gcd_products(x, y), single(1, Rational(0), k::Rho{}));
    EXPECT_TRUE(gcd_products(x, LProduct{}).empty());
}

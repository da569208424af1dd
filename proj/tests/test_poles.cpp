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

#include <set>

#include <gtest/gtest.h>

#include <lfactor/analysis.hpp>

#include "oracles.hpp"

using namespace lfactor;
namespace k = lfactor::kernels;

namespace
{

WaySpec cl(WayFamily f, int c, int a, std::vector<int> r = {})
{
    WaySpec w;
    w.family = f;
    w.c = c;
    w.a = a;
    w.param = {std::move(r), true};
    return w;
}

std::set<Rational> res(const CommonPoleReport &r)
{
    std::set<Rational> out;
    for (const auto &l : r.shared) {
        out.insert(l.re_s);
    }
    return out;
}

} // namespace

TEST(Gate, FollowsKernel)
{
    EXPECT_EQ(gate_of(k::Rho{}), Gate::pole_side_plus);
    EXPECT_EQ(gate_of(k::RhoMinus{}), Gate::pole_side_minus);
    EXPECT_EQ(gate_of(k::TauSigma{}), Gate::sigma_pole);
    EXPECT_THROW(gate_of(k::SteinbergTensor{1, 1}), std::invalid_argument);
}

TEST(Loci, ConfigurationFiltering)
{
    const LProduct p = oracle::rho(2, Rational(1)) * oracle::rho_minus(2, Rational(0)) * oracle::tau_sigma(1, half(1))
                       * oracle::rho(1, Rational(3), -1);
    const TauConfig plus_sigma{Sign::plus, true};
    const auto loci = pole_loci(p, plus_sigma);
    ASSERT_EQ(loci.size(), 2u);
    EXPECT_EQ(pole_loci(p).size(), 3u);
    EXPECT_EQ(pole_loci(p, TauConfig{Sign::minus, false}).size(), 1u);
    EXPECT_EQ(zero_loci(p).size(), 1u);
    EXPECT_EQ(zero_loci(p).front().re_s, Rational(-3));
}

TEST(Loci, MultiplicityRepeats)
{
    EXPECT_EQ(pole_loci(oracle::tau_sigma(1, Rational(0), 3)).size(), 3u);
}

TEST(SignClassTest, Classification)
{
    EXPECT_EQ(sign_class(LProduct{}), SignClass::empty);
    EXPECT_EQ(sign_class(oracle::rho(2, Rational(0))), SignClass::zero_only);
    EXPECT_EQ(sign_class(oracle::rho(2, Rational(1))), SignClass::nonpositive);
    EXPECT_EQ(sign_class(oracle::rho(2, Rational(-1))), SignClass::nonnegative);
    EXPECT_EQ(sign_class(oracle::rho(2, Rational(-1)) * oracle::rho(2, Rational(1))), SignClass::mixed);
    EXPECT_EQ(sign_class(oracle::rho(2, Rational(1), -1)), SignClass::empty);
}

TEST(GateExpression, MinimalForms)
{
    EXPECT_EQ(gate_expression({all_configs.begin(), all_configs.end()}), "always");
    EXPECT_EQ(gate_expression({}), "never");
    EXPECT_EQ(gate_expression({{Sign::plus, false}, {Sign::plus, true}}), "rho-pole");
    EXPECT_EQ(gate_expression({{Sign::plus, true}, {Sign::minus, true}}), "sigma-pole");
    EXPECT_EQ(gate_expression({{Sign::minus, true}}), "rho-minus-pole AND sigma-pole");
    EXPECT_EQ(gate_expression({{Sign::plus, false}, {Sign::plus, true}, {Sign::minus, true}}), "rho-pole OR sigma-pole");
    EXPECT_EQ(gate_expression({{Sign::plus, false}, {Sign::minus, true}}),
              "(rho-pole AND NOT sigma-pole) OR (rho-minus-pole AND sigma-pole)");
}

TEST(CommonPoles, DegenerateEnumeration)
{
    for (const auto &[c, rep] : degenerate_common_poles(10)) {
        if (c == 2) {
            EXPECT_EQ(res(rep), (std::set<Rational>{Rational(0), half(-1)}));
            EXPECT_EQ(rep.verdict, Verdict::other);
            EXPECT_EQ(rep.shared.front().re_s, Rational(0));
            EXPECT_EQ(rep.shared.front().gate(), "rho-pole");
            EXPECT_EQ(rep.shared.back().gate(), "rho-pole OR sigma-pole");
        } else if (c == 3) {
            ASSERT_EQ(rep.shared.size(), 1u);
            EXPECT_EQ(rep.shared.front().re_s, Rational(0));
            EXPECT_EQ(rep.shared.front().gate(), "rho-minus-pole AND sigma-pole");
            EXPECT_EQ(rep.verdict, Verdict::common_at_zero_only);
        } else {
            EXPECT_TRUE(rep.shared.empty()) << "c=" << c;
            EXPECT_EQ(rep.verdict, Verdict::coprime);
        }
    }
}

TEST(CommonPoles, GlWaysMeetOnlyAtTwoLowRanks)
{
    for (int c = 2; c <= 12; ++c) {
        WaySpec w1;
        w1.family = WayFamily::gl_way1;
        w1.c = c;
        WaySpec w2 = w1;
        w2.family = WayFamily::gl_way2;
        const auto rep = common_poles(discrepancy(w1).P, discrepancy(w2).P);
        if (c == 2) {
            ASSERT_EQ(rep.shared.size(), 1u);
            EXPECT_EQ(rep.shared.front().re_s, quarter(-1));
            EXPECT_EQ(rep.shared.front().gate(), "always");
        } else {
            EXPECT_TRUE(rep.shared.empty()) << "c=" << c;
        }
    }
}

TEST(CommonPoles, Symmetric)
{
    const auto x = discrepancy(cl(WayFamily::cl_way1, 3, 2, {5, 1})).P;
    const auto y = discrepancy(cl(WayFamily::cl_way1p, 3, 2, {5, 1})).P;
    EXPECT_EQ(res(common_poles(x, y)), res(common_poles(y, x)));
    EXPECT_TRUE(common_poles(x, LProduct{}).shared.empty());
}

TEST(InverseFactorGcd, LocusReadingFromTwoOnward)
{
    for (int c = 2; c <= 8; ++c) {
        const auto g = inverse_factor_gcd(c);
        EXPECT_TRUE(g.locus_match()) << "c=" << c;
        ASSERT_EQ(g.locus.shared.size(), 1u);
        EXPECT_EQ(g.locus.shared.front().re_s, half(c - 1));
        EXPECT_EQ(g.locus.shared.front().gate(), "rho-minus-pole AND sigma-pole");
    }
}

TEST(InverseFactorGcd, RankOneHasNoCommonZero)
{
    const auto g = inverse_factor_gcd(1);
    EXPECT_TRUE(g.locus.shared.empty());
    ASSERT_EQ(g.printed_locus.shared.size(), 1u);
    EXPECT_EQ(g.printed_locus.shared.front().re_s, Rational(0));
    EXPECT_FALSE(g.locus_match());
}

TEST(InverseFactorGcd, StructuralReadingIsEmpty)
{
    for (int c = 1; c <= 8; ++c) {
        const auto g = inverse_factor_gcd(c);
        EXPECT_TRUE(g.structural.empty());
        EXPECT_TRUE(g.structural_match());
    }
}

TEST(Strategy, PassesAwayFromTheLowRankException)
{
    const auto grid = strategy_grid(6, 6);
    const auto reports =
        parallel_map(grid, [](const StrategyPoint &pt) { return strategy_check(pt.c, pt.a, pt.param); }, 4);
    int failures = 0;
    for (const auto &r : reports) {
        if (!r.pass) {
            ++failures;
            EXPECT_EQ(r.c, 2);
            EXPECT_EQ(r.a, 1);
            EXPECT_TRUE(r.param.r.empty());
            EXPECT_EQ(r.offending, (std::vector<Rational>{half(-1)}));
        }
    }
    EXPECT_EQ(failures, 1);
}

TEST(Strategy, PeelsLeadingPairs)
{
    const auto r = strategy_check(3, 2, {{9, 7, 5, 1}, true});
    ASSERT_EQ(r.peeled.size(), 1u);
    EXPECT_TRUE(r.peeled.front().second.empty());
    EXPECT_EQ(r.reduced.r, (std::vector<int>{5, 1}));
    EXPECT_EQ(r.comparison, "cl1 vs cl1p");
    EXPECT_TRUE(r.pass);
}

TEST(Strategy, ZeroLocusUsesAxiom)
{
    const auto r = strategy_check(3, 1, {});
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.zero_axiom_used);
}

TEST(SignClassSweep, AllPointsBehave)
{
    const auto rows = sign_class_sweep(8, 6, 4);
    EXPECT_GT(rows.size(), 1000u);
    for (const auto &row : rows) {
        EXPECT_TRUE(row.ok()) << way_text(row.way) << " " << sign_class_name(row.cls);
    }
}

TEST(ParallelMap, KeepsOrder)
{
    std::vector<int> in(100);
    for (int i = 0; i < 100; ++i) {
        in[i] = i;
    }
    const auto out = parallel_map(in, [](int v) { return v * v; }, 7);
    for (int i = 0; i < 100; ++i) {
        EXPECT_EQ(out[i], i * i);
    }
}

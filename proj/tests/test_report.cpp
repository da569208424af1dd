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

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include <lfactor/runner.hpp>

using namespace lfactor;
namespace k = lfactor::kernels;

namespace
{

LProduct random_composite(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> pick(0, 6);
    std::uniform_int_distribution<int> idx(1, 5);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> exp(-3, 3);
    LProduct out;
    for (int i = 0; i < 6; ++i) {
        Kernel kern;
        switch (pick(rng)) {
            case 0:
                kern = k::Rho{};
                break;
            case 1:
                kern = k::RhoMinus{};
                break;
            case 2:
                kern = k::TauSigma{};
                break;
            case 3:
                kern = k::SteinbergTensor{idx(rng), idx(rng)};
                break;
            case 4:
                kern = k::TwistedExt{idx(rng), idx(rng) % 2 == 0 ? Sign::plus : Sign::minus};
                break;
            case 5:
                kern = k::TensorSegment{idx(rng), idx(rng) % 2 == 0 ? 0 : -1};
                break;
            default:
                kern = k::TensorDiscrete{idx(rng), {idx(rng) + 4, idx(rng) % 2 == 0 ? 0 : -1}};
                if ((std::get<k::TensorDiscrete>(kern).r[0] - std::get<k::TensorDiscrete>(kern).r[1]) % 2 != 0) {
                    std::get<k::TensorDiscrete>(kern).r[0] += 1;
                }
                break;
        }
        int c = coeff(rng);
        if (c == 0) {
            c = 1;
        }
        out.add(LFactor(c, Rational(num(rng), den(rng)), kern), exp(rng));
    }
    return out;
}

RunRequest request(std::string command)
{
    RunRequest r;
    r.command = std::move(command);
    return r;
}

} // namespace

TEST(Report, FactorSchema)
{
    const json j = to_json(single(2, half(-1), k::TwistedExt{3, Sign::minus}, -2));
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["s_coeff"], 2);
    EXPECT_EQ(j[0]["shift"], "-1/2");
    EXPECT_EQ(j[0]["kernel"], "twisted(3,minus)");
    EXPECT_EQ(j[0]["exponent"], -2);
}

TEST(Report, LocusSchema)
{
    const auto loci = pole_loci(single(2, Rational(1), k::Rho{}));
    const json j = to_json(loci);
    EXPECT_EQ(j[0]["re_s"], "-1/2");
    EXPECT_EQ(j[0]["kernel"], "rho");
    EXPECT_EQ(j[0]["gate"], "pole_side=plus");
}

TEST(ReportProperty, JsonAndTextRoundTrip)
{
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        const LProduct p = random_composite(rng);
        EXPECT_EQ(product_from_json(to_json(p)), p);
        EXPECT_EQ(parse_product_text(product_text(p)), p) << product_text(p);
        EXPECT_EQ(product_from_json(json::parse(to_json(p).dump())), parse_product_text(product_text(p)));
    }
}

TEST(Report, KernelIdParserCoversEveryKind)
{
    for (const Kernel &kern : std::vector<Kernel>{k::Rho{}, k::RhoMinus{}, k::TauSigma{}, k::SteinbergTensor{1, 1},
                                                  k::SteinbergTensor{3, 2}, k::TwistedExt{4, Sign::plus},
                                                  k::TensorSegment{2, -1}, k::TensorDiscrete{3, {6, 0}}}) {
        EXPECT_EQ(parse_kernel_id(kernel_id(kern)), kern);
        EXPECT_EQ(parse_kernel_text(kernel_text(kern)), kern);
    }
    EXPECT_THROW(parse_kernel_id("nope"), std::invalid_argument);
    EXPECT_THROW(parse_product_text("L(2s, tau, rho"), std::invalid_argument);
}

TEST(Report, NoFloatsAnywhere)
{
    RunRequest r = request("discrepancy");
    r.way = "cl1p";
    r.c = 3;
    r.a = 2;
    r.param = "5,1";
    const std::string dump = run(r).document.dump();
    const json j = json::parse(dump);
    std::function<void(const json &)> walk = [&](const json &node) {
        EXPECT_FALSE(node.is_number_float());
        if (node.is_structured()) {
            for (const auto &child : node) {
                walk(child);
            }
        }
    };
    walk(j);
}

TEST(Runner, AlphaExample)
{
    RunRequest r = request("alpha");
    r.c = 2;
    const Report rep = run(r);
    EXPECT_EQ(rep.exit_code, 0);
    EXPECT_NE(rep.text.find("L(2s-1, tau, rho) * L(2s, tau, rho-) * L(s-1/2, tau x sigma)"), std::string::npos);
    EXPECT_NE(rep.text.find("rho = Wedge^2"), std::string::npos);
    EXPECT_EQ(rep.document["result"]["metadata"]["rho"], "Wedge^2");
    EXPECT_EQ(rep.document["version"], engine_version);
}

TEST(Runner, CommonPolesExample)
{
    RunRequest r = request("common-poles");
    r.c = 3;
    const Report rep = run(r);
    const auto &shared = rep.document["result"]["common"]["shared"];
    ASSERT_EQ(shared.size(), 1u);
    EXPECT_EQ(shared[0]["re_s"], "0/1");
    EXPECT_EQ(shared[0]["gate"], "rho-minus-pole AND sigma-pole");
}

TEST(Runner, TauConfigRestriction)
{
    RunRequest r = request("common-poles");
    r.c = 3;
    r.tau_pole = Sign::plus;
    EXPECT_TRUE(run(r).document["result"]["common"]["shared"].empty());
    r.tau_pole = Sign::minus;
    r.sigma_pole = true;
    EXPECT_EQ(run(r).document["request"]["tau_configs"].size(), 1u);
    EXPECT_EQ(run(r).document["result"]["common"]["shared"].size(), 1u);
}

TEST(Runner, VerdictsDriveExitCode)
{
    RunRequest pass = request("strategy");
    pass.c = 3;
    pass.a = 2;
    pass.param = "5,1";
    EXPECT_EQ(run(pass).exit_code, 0);
    RunRequest fail = request("strategy");
    fail.c = 2;
    EXPECT_EQ(run(fail).exit_code, 1);
    EXPECT_EQ(run(fail).document["summary"]["fail"], 1);
}

TEST(Runner, UsageErrorsNameTheClause)
{
    RunRequest r = request("alpha");
    r.param = "1,5";
    try {
        run(r);
        FAIL() << "expected a usage error";
    } catch (const UsageError &e) {
        EXPECT_NE(std::string(e.what()).find("strict-decrease"), std::string::npos);
    }
    r.param = "5,3,1";
    EXPECT_THROW(run(r), UsageError);
    r.param = "";
    r.group = "gl";
    EXPECT_THROW(run(r), UsageError);
    EXPECT_THROW(run(request("frobnicate")), UsageError);
    RunRequest w = request("discrepancy");
    w.way = "cl1";
    w.c = 1;
    EXPECT_THROW(run(w), UsageError);
}

TEST(Runner, Deterministic)
{
    for (const char *grid : {"strategy", "sign-class"}) {
        RunRequest r = request("sweep");
        r.grid = grid;
        r.max_c = 4;
        r.max_a = 3;
        r.jobs = 1;
        const std::string serial = run(r).document.dump();
        r.jobs = 6;
        EXPECT_EQ(run(r).document.dump(), serial);
        EXPECT_EQ(run(r).document.dump(), serial);
    }
}

namespace
{

struct GoldenCase {
    const char *file;
    RunRequest req;
};

std::vector<GoldenCase> golden_cases()
{
    std::vector<GoldenCase> out;
    RunRequest r = request("alpha");
    r.c = 2;
    out.push_back({"alpha_c2_a1_sp.json", r});
    r = request("beta");
    r.c = 3;
    r.a = 2;
    r.param = "5,1";
    r.group = "so-odd";
    out.push_back({"beta_c3_a2_r51_so_odd.json", r});
    r = request("alpha-gl");
    r.c = 3;
    r.d = 2;
    out.push_back({"alpha_gl_c3_d2.json", r});
    r = request("discrepancy");
    r.way = "cl1";
    r.c = 4;
    out.push_back({"discrepancy_cl1_c4_a1.json", r});
    r = request("discrepancy");
    r.way = "cl1p";
    r.c = 2;
    r.a = 3;
    r.param = "5,1";
    out.push_back({"discrepancy_cl1p_c2_a3_r51.json", r});
    r = request("common-poles");
    r.c = 3;
    out.push_back({"common_poles_cl1_cl2_c3.json", r});
    r = request("common-poles");
    r.c = 2;
    out.push_back({"common_poles_cl1_cl2_c2.json", r});
    r = request("gcd-corollary");
    out.push_back({"gcd_corollary.json", r});
    r = request("strategy");
    r.c = 3;
    r.a = 2;
    r.param = "9,7,5,1";
    out.push_back({"strategy_c3_a2_r9751.json", r});
    r = request("verify-closed-forms");
    r.suite = "gl";
    out.push_back({"verify_gl.json", r});
    r = request("sweep");
    r.grid = "common-poles";
    out.push_back({"sweep_common_poles.json", r});
    return out;
}

} // namespace

TEST(Golden, ReportsMatchStoredFiles)
{
    const bool update = std::getenv("LFACTOR_UPDATE_GOLDEN") != nullptr;
    for (const auto &gc : golden_cases()) {
        const std::string path = std::string(LFACTOR_GOLDEN_DIR) + "/" + gc.file;
        const std::string actual = run(gc.req).document.dump(2) + "\n";
        if (update) {
            std::ofstream(path, std::ios::binary) << actual;
            continue;
        }
        std::ifstream in(path, std::ios::binary);
        ASSERT_TRUE(in) << "missing golden file " << path;
        std::stringstream expected;
        expected << in.rdbuf();
        EXPECT_EQ(actual, expected.str()) << gc.file;
    }
}

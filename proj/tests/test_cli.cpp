/*
   Copyright 2026 The twistgab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + TWISTGAB_CLI + std::string(" ") + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string sample(const std::string& name) { return std::string(TWISTGAB_SAMPLES) + "/" + name; }

std::string f16() { return "--field " + sample("f16.json"); }

}  // namespace

TEST(Cli, ClassifyGabidulin) {
    const auto r = run("classify " + f16() + " --code " + sample("gabidulin.json"));
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("schema"), "twistgab/1");
    EXPECT_EQ(j.at("complete"), true);
    EXPECT_EQ(j.at("result").at("distances").at("is_mrd"), true);
    EXPECT_EQ(j.at("result").at("distances").at("label"), "MDS");
}

TEST(Cli, SweepTableMatchesGolden) {
    const auto r = run("classify " + f16() + " --sweep " + sample("sweep_c1.json"));
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    std::ifstream g(sample("golden/sweep_c1_table.json"));
    ASSERT_TRUE(g);
    EXPECT_EQ(j.at("table"), json::parse(g));
    EXPECT_EQ(j.at("table").size(), 15u);
}

TEST(Cli, InputErrorsExitTwo) {
    const std::string bad = std::string(TWISTGAB_BINARY_DIR) + "/malformed.json";
    std::ofstream(bad) << "{\"alpha\": [1, 2";
    EXPECT_EQ(run("classify " + f16() + " --code " + bad).code, 2);
    EXPECT_EQ(run("classify " + f16() + " --code /nonexistent.json").code, 2);
    EXPECT_EQ(run("classify " + f16()).code, 2);
    EXPECT_EQ(run("bogus").code, 2);
    EXPECT_EQ(run("classify " + f16() + " --code " + sample("gabidulin.json") + " --workers 0").code, 2);
    EXPECT_EQ(run("deephole " + f16() + " --code " + sample("c2.json")).code, 2);
}

TEST(Cli, BudgetExitThreeWithPartialReport) {
    const auto r = run("covering " + f16() + " --code " + sample("c1_h0.json") + " --budget-ambient 100");
    ASSERT_EQ(r.code, 3);
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("complete"), false);
    EXPECT_EQ(j.at("covering").at("method"), "theorem-bound");
    EXPECT_EQ(j.at("covering").at("lower_bound").at("value"), 2);
}

TEST(Cli, BudgetPrecedence) {
    const std::string args = "classify " + f16() + " --code " + sample("c1_h0.json");
    EXPECT_EQ(run(args).code, 0);
    EXPECT_EQ(run(args, "TWISTGAB_BUDGET_CODEWORDS=5").code, 3);
    EXPECT_EQ(run(args + " --budget-codewords 1000", "TWISTGAB_BUDGET_CODEWORDS=5").code, 0);
    EXPECT_EQ(run(args, "TWISTGAB_BUDGET_CODEWORDS=abc").code, 2);
}

TEST(Cli, ConstructThenClassify) {
    const std::string out = std::string(TWISTGAB_BINARY_DIR) + "/constructed.json";
    const auto c = run("construct --field " + sample("f256.json") + " --code " + sample("construct_chain.json") + " --out " + out);
    ASSERT_EQ(c.code, 0);
    const auto r = run("classify --field " + sample("f256.json") + " --code " + out);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out).at("result").at("distances").at("is_mrd"), true);
    const auto s = run("construct --field " + sample("f256.json") + " --code " + sample("construct_scalar.json"));
    ASSERT_EQ(s.code, 0);
    EXPECT_EQ(json::parse(s.out).at("construction").at("verified_mrd"), true);
}

TEST(Cli, CoveringAndDeepHoles) {
    const auto c = run("covering " + f16() + " --code " + sample("c1_h0.json"));
    ASSERT_EQ(c.code, 0);
    const json j = json::parse(c.out);
    EXPECT_EQ(j.at("covering").at("rho"), 2);
    EXPECT_EQ(j.at("covering").at("method"), "exhaustive");
    const auto d = run("deephole " + f16() + " --code " + sample("deephole_c1.json"));
    ASSERT_EQ(d.code, 0);
    const json k = json::parse(d.out);
    EXPECT_EQ(k.at("family").at("verified"), true);
    EXPECT_EQ(k.at("samples").at("iff_agreement"), true);
}

TEST(Cli, ForbiddenReport) {
    const auto r = run("forbidden " + f16() + " --code " + sample("c1_h0.json"));
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("ratio_set").at("size"), 15);
    EXPECT_EQ(j.at("mrd_etas").at("count"), 0);
    EXPECT_FALSE(j.at("omega_1_prime").is_null());
}

TEST(Cli, ReportsIndependentOfWorkers) {
    for (const std::string& args : {"classify " + f16() + " --sweep " + sample("sweep_c2.json"),
                                   "deephole " + f16() + " --code " + sample("deephole_c1.json") + " --seed 9",
                                   "covering " + f16() + " --code " + sample("c2.json")}) {
        const auto a = run(args + " --workers 1");
        const auto b = run(args + " --workers 4");
        ASSERT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out) << args;
    }
}

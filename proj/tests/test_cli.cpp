#include <gtest/gtest.h>

#include <json.hpp>

#include "support/golden.hpp"

using layoutalg::testing::run_cli;
using layoutalg::testing::transcripts;

TEST(Cli, GoldenTranscripts) {
    for (const auto& t : transcripts()) {
        const auto r = run_cli(t.args);
        EXPECT_EQ(r.code, 0) << t.label << ": " << r.err;
        EXPECT_EQ(r.out, t.expected) << t.label;
    }
}

TEST(Cli, WorkedCompositions) {
    const std::vector<std::array<const char*, 3>> cases = {
        {"(4):(1)", "(2,2):(2,1)", "((2,2)):((2,1))"},
        {"(6,6):(6,1)", "(12,3,6):(1,72,12)", "((2,3),6):((6,72),1)"},
        {"(8,8):(8,1)", "(16,16):(16,1)", "((2,4),8):((128,1),16)"},
        {"(16,16):(16,1)", "(8,8,8):(64,8,1)", "((4,4),(8,2)):((16,1),(64,8))"},
        {"(6,6):(5,60)", "(10,360):(2,60)", "((2,3),6):((10,60),360)"},
    };
    for (const auto& [a, b, c] : cases) {
        const auto r = run_cli({"compose", a, b});
        EXPECT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(r.out, c);
    }
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli({"tractable", "(2,2,2):(1,7,4)"}).code, 0);

    const auto not_complementable = run_cli({"complement", "(2,2):(1,3)", "12"});
    EXPECT_EQ(not_complementable.code, 1);
    EXPECT_EQ(not_complementable.err.rfind("error: not-complementable: ", 0), 0u) << not_complementable.err;

    const auto not_composable = run_cli({"compose", "(8,8):(1,8)", "(3,8,8):(1,24,3)"});
    EXPECT_EQ(not_composable.code, 1);
    EXPECT_EQ(not_composable.err.rfind("error: not-composable: ", 0), 0u);

    EXPECT_EQ(run_cli({"compose", "(2,2,2):(1,7,4)", "(8,8):(1,16)"}).code, 1);

    const auto bad_parse = run_cli({"compose", "(2,2", "(4):(1)"});
    EXPECT_EQ(bad_parse.code, 2);
    EXPECT_EQ(bad_parse.err.rfind("error: parse-error: ", 0), 0u);

    EXPECT_EQ(run_cli({"frobnicate", "(2):(1)"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"coalesce"}).code, 2);
    EXPECT_EQ(run_cli({"complement", "(2):(1)", "x"}).code, 2);
}

TEST(Cli, JsonOutput) {
    using nlohmann::json;
    auto r = run_cli({"--json", "compose", "(6,6):(6,1)", "(12,3,6):(1,72,12)"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out), json::parse(R"({"shape":[[2,3],6],"stride":[[6,72],1]})"));

    r = run_cli({"--json", "morphism", "(2,2):(3,30)"});
    EXPECT_EQ(json::parse(r.out), json::parse(R"({"domain":[2,2],"codomain":[3,2,5,2],"map":[2,4]})"));

    r = run_cli({"--json", "tractable", "(2,2,2):(1,7,4)"});
    EXPECT_EQ(json::parse(r.out), json::parse(R"({"result":false})"));

    r = run_cli({"--json", "coalesce", "(1):(5)"});
    EXPECT_EQ(json::parse(r.out), json::parse(R"({"shape":1,"stride":0})"));

    r = run_cli({"--json", "mutual-refine", "(8,8)", "(3,8,8)"});
    EXPECT_EQ(json::parse(r.out), json::parse(R"({"result":null})"));

    r = run_cli({"--json", "mutual-refine", "(6,6)", "(12,3,6)"});
    EXPECT_EQ(json::parse(r.out), json::parse(R"({"t_refined":[6,[2,3]],"u_refined":[[6,2],3,6]})"));

    r = run_cli({"--json", "eval", "(2,3):(1,5)", "4"});
    EXPECT_EQ(json::parse(r.out), json::parse(R"({"value":10})"));

    // --json may also follow the verb.
    r = run_cli({"tractable", "--json", "(2,2,2):(1,2,4)"});
    EXPECT_EQ(json::parse(r.out), json::parse(R"({"result":true})"));
}

TEST(Cli, MorphismsViaMapFlag) {
    const auto r = run_cli({"layout-of", "--map", "1,3,2", "((5,5),8)", "(5,8,5)"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "((5,5),8):((1,40),5)");
    const auto c = run_cli({"complement", "--map", "1,3", "(2,2)", "(2,5,2,5)"});
    EXPECT_EQ(c.out, "(5,5)--(2,4)-->(2,5,2,5)");
}

TEST(Cli, MutualRefine) {
    EXPECT_EQ(run_cli({"mutual-refine", "(4,2,2,32)", "(32,32)"}).out, "(4,2,2,(2,16)) ((4,2,2,2),(16,2))");
    const auto none = run_cli({"mutual-refine", "(8,8)", "(3,8,8)"});
    EXPECT_EQ(none.code, 0);
    EXPECT_EQ(none.out, "none");
}

TEST(Cli, EvalAndCheck) {
    EXPECT_EQ(run_cli({"eval", "(2,3):(1,5)", "4"}).out, "10");
    EXPECT_EQ(run_cli({"eval", "(4,4)--(1,3)-->(4,4,4)", "5"}).out, "17");
    EXPECT_EQ(run_cli({"eval", "(2,3):(1,5)", "6"}).code, 1);
    EXPECT_EQ(run_cli({"check", "compose", "(6,6):(6,1)", "(12,3,6):(1,72,12)", "((2,3),6):((6,72),1)"}).out, "true");
    EXPECT_EQ(run_cli({"check", "compose", "(6,6):(6,1)", "(12,3,6):(1,72,12)", "((2,3),6):((6,72),2)"}).out,
              "false");
    EXPECT_EQ(run_cli({"check", "complement", "(3):(5)", "(5):(1)", "15"}).out, "true");
    EXPECT_EQ(run_cli({"check", "equal", "(7,7):(1,7)", "(49):(1)"}).out, "true");
    EXPECT_EQ(run_cli({"check", "equal", "(2,2):(1,2)", "(2,2):(2,1)"}).out, "false");
    EXPECT_EQ(run_cli({"check", "frobnicate", "(2):(1)", "(2):(1)"}).code, 2);
}

TEST(Cli, Render) {
    EXPECT_EQ(run_cli({"render", "(3,5):(2,10)"}).out,
              " 0 10 20 30 40\n 2 12 22 32 42\n 4 14 24 34 44");
    EXPECT_EQ(run_cli({"render", "(8):(5)"}).out, " 0\n 5\n10\n15\n20\n25\n30\n35");
    EXPECT_EQ(run_cli({"render", "1:0"}).out, "0");

    const auto rank3 = run_cli({"render", "(2,2,2):(1,2,4)"});
    EXPECT_EQ(rank3.code, 1);
    EXPECT_NE(rank3.err.find("--flatten-to 2"), std::string::npos);
    EXPECT_EQ(run_cli({"render", "--flatten-to", "2", "(2,2,2):(1,2,4)"}).out, "0 2 4 6\n1 3 5 7");

    const auto tikz = run_cli({"render", "--tikz", "(2,2):(1,2)"});
    EXPECT_EQ(tikz.out.rfind("\\begin{tikzpicture}", 0), 0u);
    EXPECT_NE(tikz.out.find("node[pos=.5] {3}"), std::string::npos);

    const auto json = run_cli({"--json", "render", "(2,2):(1,2)"});
    EXPECT_EQ(nlohmann::json::parse(json.out), nlohmann::json::parse(R"({"grid":[[0,2],[1,3]]})"));
}

TEST(Cli, ComposeFlags) {
    const auto verbose = run_cli({"compose", "--verbose", "(4,1):(1,7)", "(8):(1)"});
    EXPECT_EQ(verbose.code, 0);
    EXPECT_EQ(verbose.out, "(4,1):(1,0)");
    EXPECT_NE(verbose.err.find("set to 0"), std::string::npos);
    EXPECT_EQ(run_cli({"compose", "--weak", "(6,6):(6,1)", "(12,3,6):(1,72,12)"}).out, "((2,3),6):((6,72),1)");
}

#include <pisot/notation.hpp>
#include <pisot_tools/cli.hpp>

#include <gtest/gtest.h>

#include <sstream>

using pisot::cli::run_cli;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, Renyi) {
    EXPECT_EQ(run({"renyi", "--coeffs", "1,1"}).out, "11\n");
    EXPECT_EQ(run({"renyi", "--coeffs", "1,0,1", "--star"}).out, "101\n(100)~\n");
    EXPECT_EQ(run({"renyi", "--a", "3"}).out, "31\n");
}

TEST(Cli, BetaExpand) {
    EXPECT_EQ(run({"beta-expand", "--coeffs", "1,1", "--value", "0"}).out, "0\n");
    EXPECT_EQ(run({"beta-expand", "--coeffs", "1,1", "--value", "4"}).out, "101.01\n");
    EXPECT_EQ(run({"beta-expand", "--coeffs", "1,1", "--value", "-1"}).code, 1);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"alpha-expand"}).code, 2);
    EXPECT_EQ(run({"no-such-command"}).code, 2);
    EXPECT_EQ(run({"spec-check", "--coeffs", "2,0"}).code, 1);
    EXPECT_EQ(run({"spec-check", "--coeffs", "1,1"}).code, 0);
    EXPECT_EQ(run({"alpha-expand", "--coeffs", "1,1", "--value", "1/"}).code, 2);
    EXPECT_EQ(run({"rational-adic", "--a", "3", "--q", "7/0"}).code, 1);
    EXPECT_EQ(run({"rational-adic", "--a", "3", "--q", "1/2", "--budget", "2"}).code, 1);
}

TEST(Cli, AlphaCommands) {
    EXPECT_EQ(run({"alpha-expand", "--coeffs", "1,1", "--value", "-4"}).out, "~(10)0100.001\n");
    EXPECT_EQ(run({"alpha-enumerate", "--value", "-1", "--head-bound", "6", "--fraction-bound", "6"}).out,
              "~(10)\n~(10)0.1\n");
    EXPECT_EQ(run({"normalize", "--word", "1[-1]1[-1].10"}).out, "0100.001\n");
}

TEST(Cli, JsonRoundTrip) {
    const CliRun r = run({"alpha-expand", "--coeffs", "1,1", "--value", "-4", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(pisot::to_text(pisot::left_word_from_json(r.out)), "~(10)0100.001");
    const CliRun t = run({"--format", "json", "transducer", "build", "--a", "3", "--C", "3", "--export", "json"});
    ASSERT_EQ(t.code, 0);
    EXPECT_NE(t.out.find("\"states\""), std::string::npos);
}

TEST(Cli, Trace) {
    const CliRun r = run({"rational-adic", "--a", "3", "--q", "1/2", "--trace"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("= (-1/2, 3/2)"), std::string::npos);
    EXPECT_EQ(r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1), "~(012)1\n");
    EXPECT_EQ(run({"rational-adic", "--a", "3", "--q", "3/2"}).out, "~(012)2\n");
}

TEST(Cli, VerifyExamples) {
    const CliRun r = run({"verify-paper"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    for (const auto &c : pisot::cli::worked_examples()) {
        EXPECT_TRUE(c.pass) << c.name << " expected " << c.expected << " got " << c.actual;
    }
}

#include <gtest/gtest.h>

#include <sstream>

#include "freefusion/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "freefusion");
    std::ostringstream out;
    std::ostringstream err;
    const int code = freefusion::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
    return std::string(FREEFUSION_DATA_DIR) + "/" + name;
}

}  // namespace

TEST(Cli, Validate) {
    EXPECT_EQ(run({"validate", data("ah.fus")}).out, "valid\n");
    const auto bad = run({"validate", data("incompatible.fus")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(bad.out.rfind("violation\tcompatibility\t(a,a,b)\t", 0), 0u);
}

TEST(Cli, Fuse) {
    const auto r = run({"fuse", data("ah.fus"), "u.p", "u"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "u.u\n");
    EXPECT_EQ(run({"fuse", data("ao.fus"), "s", "s"}).out, "∅\n");
    EXPECT_EQ(run({"fuse", data("incompatible.fus"), "a", "a"}).code, 1);
}

TEST(Cli, UsageErrorsNameTheArgument) {
    const auto empty = run({"fuse", data("ah.fus"), "", "u"});
    EXPECT_EQ(empty.code, 2);
    EXPECT_NE(empty.err.find("first WORD"), std::string::npos);
    const auto unknown = run({"fuse", data("ah.fus"), "u", "u.x"});
    EXPECT_EQ(unknown.code, 2);
    EXPECT_NE(unknown.err.find("'x'"), std::string::npos);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"rank", "2", "2"}).code, 2);
    EXPECT_EQ(run({"decompose", "zz", "U"}).code, 2);
    EXPECT_EQ(run({"decompose", "ao", "U", "W"}).code, 2);
    EXPECT_EQ(run({"validate", data("missing.fus")}).code, 2);
}

TEST(Cli, Product) {
    const auto r = run({"product", data("ah.fus"), "u", "u"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "# a[u] * a[u] = 1 + a[p] + a[u.u]\n"
              "coefficient\tterm\n"
              "1\t1\n"
              "1\ta[p]\n"
              "1\ta[u.u]\n");
    EXPECT_EQ(run({"product", data("ah.fus"), "1", "u.p"}).out,
              "# 1 * a[u.p] = a[u.p]\ncoefficient\tterm\n1\ta[u.p]\n");
}

TEST(Cli, Expand) {
    const auto r = run({"expand", data("ao.fus"), "s.s.s"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("# a[s]*a[s]*a[s] = 2*a[s] + a[s.s.s]\n"), std::string::npos);
    EXPECT_NE(r.out.find("# a[s.s.s] = -2*a[s] + a[s]*a[s]*a[s]\n"), std::string::npos);
}

TEST(Cli, Complexify) {
    const auto r = run({"complexify", data("ah.fus")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("letters: p_even1 p_even2 u_odd1 u_odd2\n", 0), 0u);
    EXPECT_NE(r.out.find("u_odd1.u_odd2=p_even1"), std::string::npos);
    EXPECT_EQ(run({"complexify", data("as.fus")}).code, 1);
}

TEST(Cli, DecomposeAk) {
    const auto r = run({"decompose", "ak", "U", "Ubar"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "label\tmultiplicity\tdim\n"
              "[1]\t1\t1\n"
              "[p_even1]\t1\tn - 1\n"
              "[u_odd1.u_odd2]\t1\tn^2 - n\n");
}

TEST(Cli, Dims) {
    const auto r = run({"dims", "ao", "--max-len", "2", "--eval-n", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    EXPECT_NE(r.out.find("U Ubar\t[s.s]\t1\t8\n"), std::string::npos);
    const auto symbolic = run({"dims", "ah", "--max-len", "1"});
    EXPECT_TRUE(symbolic.err.empty());
    EXPECT_EQ(symbolic.out, "pattern\tlabel\tmultiplicity\tdim\nU\t[u]\t1\tn\nUbar\t[u]\t1\tn\n");
    const auto capped = run({"dims", "ao", "--max-len", "40"});
    EXPECT_EQ(capped.code, 1);
    EXPECT_NE(capped.err.find("limit exceeded"), std::string::npos);
}

TEST(Cli, Partitions) {
    const auto r = run({"partitions", "0", "4", "--nc"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "14");
    const auto capped = run({"partitions", "8", "8"});
    EXPECT_EQ(capped.code, 1);
    EXPECT_NE(capped.err.find("limit exceeded"), std::string::npos);
}

TEST(Cli, Rank) {
    EXPECT_EQ(run({"rank", "0", "4", "--n", "4", "--nc"}).out, "14\n");
    EXPECT_EQ(run({"rank", "0", "2", "--n", "2"}).out, "2\n");
}

TEST(Cli, Crosscheck) {
    const auto r = run({"crosscheck", data("ah.fus"), "--max-len", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "pairs\t441\nmismatches\t0\n");
    EXPECT_EQ(run({"crosscheck", data("ah.fus"), "--max-len", "12"}).code, 1);
}

TEST(Cli, OutputIsDeterministic) {
    const std::vector<std::string> args = {"dims", "ac", "--max-len", "3"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, Help) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("crosscheck"), std::string::npos);
}

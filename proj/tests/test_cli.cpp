#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "commands.hpp"

using namespace reconf;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;

    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    fs::path dir;

    void SetUp() override
    {
        dir = fs::temp_directory_path() / ("reconfig_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string file(const std::string &name, const std::string &text)
    {
        auto p = (dir / name).string();
        cli::write_file(p, text);
        return p;
    }

    std::string instance(const std::string &name, const Instance &inst) { return file(name, emit_instance(inst)); }
};

} // namespace

TEST_F(Cli, HelpAndUsage)
{
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_NE(run({"--help"}).out.find("kernelize"), std::string::npos);
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"solve"}).code, 1);
    EXPECT_EQ(run({"solve", (dir / "missing.txt").string()}).code, 1);
}

TEST_F(Cli, ParseErrorsMentionTheLine)
{
    auto bad = file("bad.txt", "reconfig 1\nproblem isr\nr 1\nk one\n");
    auto res = run({"solve", bad});
    EXPECT_EQ(res.code, 1);
    EXPECT_NE(res.err.find("4"), std::string::npos);
}

TEST_F(Cli, SolveWithSequence)
{
    auto p3 = instance("p3.txt", make_isr(path_graph(3), 1, 1, {0}, {2}));
    auto res = run({"solve", p3, "--sequence"});
    ASSERT_EQ(res.code, 0) << res.err;
    auto j = res.json();
    EXPECT_EQ(j["verdict"], "yes");
    EXPECT_EQ(j["sequence"], nlohmann::json::parse("[[0],[],[2]]"));

    auto c4 = instance("c4.txt", make_isr(cycle_graph(4), 1, 2, {0, 2}, {1, 3}));
    EXPECT_EQ(run({"solve", c4}).json()["verdict"], "no");
}

TEST_F(Cli, StateCapExhausts)
{
    auto big = instance("big.txt", make_isr(path_graph(40), 1, 3, {0, 2, 4}, {35, 37, 39}));
    auto res = run({"solve", big, "--state-cap", "5"});
    EXPECT_EQ(res.code, 2);
    EXPECT_EQ(res.json()["verdict"], "exhausted");
    EXPECT_EQ(run({"verify", big, "--state-cap", "5"}).code, 2);
}

TEST_F(Cli, VerifyPath)
{
    auto p50 = instance("p50.txt", make_isr(path_graph(50), 1, 2, {0, 2}, {0, 49}));
    auto res = run({"verify", p50, "--paranoid"});
    ASSERT_EQ(res.code, 0) << res.err;
    auto j = res.json();
    EXPECT_EQ(j["equivalent"], true);
    EXPECT_LT(j["reduced"]["n"].get<int>(), 50);
    EXPECT_EQ(j["audited_steps"], j["log"].size());
}

TEST_F(Cli, KernelizeEmbedsOrWritesTheKernel)
{
    auto star = instance("star.txt", make_dsr(star_graph(20), 1, 1, {0}, {0}));
    auto embedded = run({"kernelize", star});
    ASSERT_EQ(embedded.code, 0) << embedded.err;
    auto j = embedded.json();
    Instance kernel = parse_instance(j["kernel"].get<std::string>());
    EXPECT_EQ(kernel.problem, Problem::zdsr);
    EXPECT_EQ(kernel.graph.order(), 4u);
    EXPECT_EQ(j["core_size"], 2);

    auto out = (dir / "kernel.txt").string();
    auto written = run({"kernelize", star, "-o", out, "--paranoid"});
    ASSERT_EQ(written.code, 0) << written.err;
    EXPECT_FALSE(written.json().contains("kernel"));
    auto text = cli::read_file(out);
    EXPECT_EQ(parse_instance(text), kernel);
    EXPECT_EQ(parse_origin(text)->size(), 4u);
}

TEST_F(Cli, KernelizeIsDeterministic)
{
    auto grid = instance("grid.txt", make_isr(grid_graph(6, 6), 1, 2, {0, 35}, {5, 30}));
    auto a = run({"kernelize", grid, "--seed", "3"}).json();
    auto b = run({"kernelize", grid, "--seed", "3"}).json();
    a.erase("timings_ms");
    b.erase("timings_ms");
    EXPECT_EQ(a, b);
}

TEST_F(Cli, CompactModeNeedsMinimumEndpoints)
{
    auto p3 = instance("p3.txt", make_dsr(path_graph(3), 1, 2, {0, 2}, {0, 2}));
    EXPECT_EQ(run({"kernelize", p3, "--mode", "compact"}).code, 1);
    EXPECT_EQ(run({"kernelize", p3, "--mode", "tiny"}).code, 1);
}

TEST_F(Cli, GenFamilies)
{
    auto res = run({"gen", "--family", "grid", "--rows", "3", "--cols", "4", "--r", "1", "--k", "2", "--seed", "5"});
    ASSERT_EQ(res.code, 0) << res.err;
    Instance inst = parse_instance(res.out);
    EXPECT_EQ(inst.graph, grid_graph(3, 4));
    EXPECT_EQ(run({"gen", "--family", "grid", "--rows", "3", "--cols", "4", "--seed", "5"}).out, res.out);

    auto dsr = run({"gen", "--family", "path", "--n", "9", "--problem", "dsr", "--k", "3"});
    ASSERT_EQ(dsr.code, 0) << dsr.err;
    EXPECT_EQ(parse_instance(dsr.out).problem, Problem::dsr);

    EXPECT_EQ(run({"gen", "--family", "cube"}).code, 1);
    EXPECT_EQ(run({"gen", "--family", "path", "--n", "3", "--k", "5"}).code, 1);
}

TEST_F(Cli, GenGadget)
{
    auto base = instance("p3.txt", make_isr(path_graph(3), 1, 1, {0}, {2}));
    auto res = run({"gen", "--family", "gadget_js", "--input", base, "--s", "2"});
    ASSERT_EQ(res.code, 0) << res.err;
    Instance inst = parse_instance(res.out);
    EXPECT_EQ(inst.r, 7);
    EXPECT_EQ(inst.source, (VertexSet{0}));
    EXPECT_EQ(inst.target, (VertexSet{2}));

    auto isolated = file("iso.txt", "reconfig 1\nproblem isr\nr 1\nk 1\nn 3\ne 0 1\ns 0\nt 2\n");
    EXPECT_EQ(run({"gen", "--family", "gadget_js", "--input", isolated}).code, 1);
    EXPECT_EQ(run({"gen", "--family", "gadget_js"}).code, 1);
}

TEST_F(Cli, QuickBench)
{
    auto res = run({"bench", "--quick"});
    ASSERT_EQ(res.code, 0) << res.err;
    auto j = res.json();
    EXPECT_EQ(j["sane"], true);
    EXPECT_FALSE(j["profile_counts"].empty());
    for (const auto &row : j["profile_counts"])
        EXPECT_LE(row["profiles"].get<int>(), row["n"].get<int>());
    std::set<int> reduced;
    for (const auto &row : j["isr_kernels"])
        reduced.insert(row["reduced_n"].get<int>());
    EXPECT_EQ(reduced.size(), 1u);
}

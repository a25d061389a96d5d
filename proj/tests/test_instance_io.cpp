#include <gtest/gtest.h>

#include <reconf/generators.hpp>
#include <reconf/io.hpp>

using namespace reconf;

namespace {

const char *p3_file = "reconfig 1\n"
                      "problem isr\n"
                      "r 1\n"
                      "k 1\n"
                      "n 3\n"
                      "e 0 1\n"
                      "e 1 2\n"
                      "s 0\n"
                      "t 2\n";

std::size_t error_line(const std::string &text)
{
    try {
        parse_instance(text);
    } catch (const ParseError &e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST(Instance, DefaultWindows)
{
    EXPECT_EQ(default_window(Problem::isr, 3), (Window{2, 3}));
    EXPECT_EQ(default_window(Problem::dsr, 3), (Window{3, 4}));
    EXPECT_EQ(default_window(Problem::zdsr, 1), (Window{1, 2}));
}

TEST(Instance, Validation)
{
    Graph p5 = path_graph(5);
    EXPECT_NO_THROW(make_isr(p5, 1, 2, {0, 2}, {1, 3}));
    EXPECT_THROW(make_isr(p5, 1, 2, {0, 1}, {1, 3}), InputError);
    EXPECT_THROW(make_isr(p5, 1, 2, {0}, {1, 3}), InputError);
    EXPECT_THROW(make_isr(p5, 0, 1, {0}, {1}), InputError);
    EXPECT_THROW(make_isr(p5, 1, 1, {0}, {7}), InputError);
    EXPECT_THROW(make_isr(p5, 1, 2, {0, 2}, {1, 3}, Window{2, 2}), InputError);
    EXPECT_NO_THROW(make_isr(p5, 1, 2, {0, 2}, {1, 3}, Window{2, 3}));

    EXPECT_NO_THROW(make_dsr(p5, 1, 2, {1, 3}, {1, 4}));
    EXPECT_THROW(make_dsr(p5, 1, 2, {0, 1}, {1, 3}), InputError);
    EXPECT_THROW(make_dsr(p5, 1, 2, {1, 3}, {1, 4}, Window{1, 2}), InputError);
    EXPECT_NO_THROW(make_zdsr(p5, 1, 2, {1, 3}, {0, 3}, {0, 4}));
    EXPECT_THROW(make_zdsr(p5, 1, 1, {2}, {2}, {0, 4}), InputError);
}

TEST(Instance, IndependenceAndDomination)
{
    Graph p5 = path_graph(5);
    std::vector<Vertex> ends{0, 4};
    EXPECT_TRUE(is_r_independent(p5, ends, 3));
    EXPECT_FALSE(is_r_independent(p5, ends, 4));
    std::vector<Vertex> mid{2};
    EXPECT_TRUE(r_dominates(p5, mid, p5.vertices(), 2));
    EXPECT_FALSE(r_dominates(p5, mid, p5.vertices(), 1));
}

TEST(Io, MinimalFileRoundTrips)
{
    Instance inst = parse_instance(p3_file);
    EXPECT_EQ(inst.problem, Problem::isr);
    EXPECT_EQ(inst.graph, path_graph(3));
    EXPECT_EQ(inst.window, (Window{0, 1}));
    EXPECT_EQ(emit_instance(inst), p3_file);
}

TEST(Io, CanonicalizesOrderCommentsAndWhitespace)
{
    std::string messy = "# generated\n"
                        "reconfig 1\n"
                        "\n"
                        "problem   isr\n"
                        "n 3\n"
                        "k 1\n"
                        "r 1\r\n"
                        "e 2 1\n"
                        "# edges\n"
                        "e 1 0\n"
                        "t 2\n"
                        "s 0\n";
    EXPECT_EQ(emit_instance(parse_instance(messy)), p3_file);
}

TEST(Io, WindowAndAnnotationSurvive)
{
    Instance inst = make_zdsr(path_graph(5), 1, 1, {1}, {2}, {1, 2}, Window{1, 3});
    std::string text = emit_instance(inst);
    EXPECT_NE(text.find("window 1 3\n"), std::string::npos);
    EXPECT_NE(text.find("z 1 2\n"), std::string::npos);
    EXPECT_EQ(parse_instance(text), inst);
}

TEST(Io, RandomInstancesRoundTrip)
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto inst = random_isr_instance(gnp_graph(15, 0.2, seed), 1 + static_cast<int>(seed % 2), 2, seed);
        if (!inst)
            continue;
        std::string text = emit_instance(*inst);
        Instance back = parse_instance(text);
        EXPECT_EQ(back, *inst);
        EXPECT_EQ(emit_instance(back), text);
    }
}

TEST(Io, RejectsMalformedInput)
{
    std::string base = p3_file;
    auto with = [&](const std::string &from, const std::string &to) {
        std::string s = base;
        s.replace(s.find(from), from.size(), to);
        return s;
    };
    EXPECT_EQ(error_line(with("e 0 1", "e 0 0")), 6u);
    EXPECT_EQ(error_line(with("e 1 2", "e 1 0")), 7u);
    EXPECT_EQ(error_line(with("e 1 2", "e 1 3")), 7u);
    EXPECT_EQ(error_line(with("reconfig 1", "reconfig 2")), 1u);
    EXPECT_EQ(error_line(with("r 1", "radius 1")), 3u);
    EXPECT_EQ(error_line(with("k 1", "k one")), 4u);
    EXPECT_EQ(error_line(with("t 2", "t 5")), 9u);
    EXPECT_EQ(error_line(with("s 0", "s 0 2")), 8u);
    EXPECT_EQ(error_line(base + "r 2\n"), 10u);
    EXPECT_EQ(error_line(with("n 3\n", "")), 5u);
    EXPECT_THROW(parse_instance(with("t 2\n", "")), ParseError);
    EXPECT_THROW(parse_instance(base + "z 0\n"), ParseError);
    EXPECT_THROW(parse_instance(""), ParseError);
}

TEST(Io, ZdsrNeedsAnnotation)
{
    std::string text = "reconfig 1\nproblem zdsr\nr 1\nk 1\nn 3\ne 0 1\ne 1 2\ns 1\nt 1\n";
    EXPECT_THROW(parse_instance(text), ParseError);
    EXPECT_NO_THROW(parse_instance(text + "z 0 2\n"));
}

TEST(Io, KernelFileCarriesOrigin)
{
    Instance inst = parse_instance(p3_file);
    std::string text = emit_kernel(inst, {4, 7, 9});
    EXPECT_EQ(parse_origin(text), (std::vector<Vertex>{4, 7, 9}));
    EXPECT_EQ(parse_instance(text), inst);
    EXPECT_EQ(parse_origin(p3_file), std::nullopt);
}

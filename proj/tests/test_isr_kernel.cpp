#include <random>

#include <gtest/gtest.h>

#include <reconf/generators.hpp>
#include <reconf/isr_kernel.hpp>
#include <reconf/solver.hpp>

#include "oracles.hpp"

using namespace reconf;

namespace {

bool oracle_answer(const Instance &inst)
{
    return oracle::reconfigurable({oracle::Kind::isr, &inst.graph, inst.r, inst.window.lo, inst.window.hi, inst.source,
                                   inst.target, {}});
}

Verdict verdict(const Instance &inst) { return solve(inst, {.state_cap = 2'000'000}).verdict; }

/// Audit that solves both sides of every deletion and counts the steps.
struct StepAudit {
    int steps = 0;
    bool use_bitmask_oracle = false;

    RemovalAudit hook()
    {
        return [this](const Instance &before, const Instance &after, const ReductionEvent &ev) {
            ++steps;
            if (use_bitmask_oracle)
                EXPECT_EQ(oracle_answer(before), oracle_answer(after)) << "vertex " << ev.vertex;
            else
                EXPECT_EQ(verdict(before), verdict(after)) << "vertex " << ev.vertex;
        };
    }
};

} // namespace

TEST(IrrelevantVertex, LongPathHasOne)
{
    Instance inst = make_isr(path_graph(200), 1, 2, {0, 2}, {0, 199});
    auto found = find_irrelevant_vertex(inst);
    ASSERT_TRUE(found);
    EXPECT_FALSE(contains(set_union(inst.source, inst.target), found->vertex));
    EXPECT_GE(found->class_size, 4u);

    VertexSet keep = set_difference(inst.graph.vertices(), {found->vertex});
    auto sub = induced_subgraph(inst.graph, keep);
    Instance after = make_isr(sub.graph, 1, 2, relabel_set(inst.source, sub.relabel), relabel_set(inst.target, sub.relabel));
    EXPECT_EQ(verdict(inst), verdict(after));
}

TEST(IrrelevantVertex, NoneWhenClassesAreSmall)
{
    // Non-token vertices 1 and 3 form classes of size 1.
    EXPECT_FALSE(find_irrelevant_vertex(make_isr(path_graph(5), 1, 2, {0, 2}, {0, 4})));
}

TEST(IrrelevantVertex, CompleteGraphsStaySound)
{
    for (int n = 2; n <= 8; ++n) {
        Instance inst = make_isr(complete_graph(n), 1, 1, {0}, {n - 1});
        StepAudit audit{0, true};
        auto rep = kernelize_isr(inst, {}, audit.hook());
        EXPECT_EQ(oracle_answer(inst), oracle_answer(rep.reduced));
    }
}

TEST(KernelizeIsr, PathPlateau)
{
    std::vector<std::size_t> orders;
    for (int n : {50, 100, 200}) {
        Instance inst = make_isr(path_graph(n), 1, 2, {0, 2}, {0, n - 1});
        auto rep = kernelize_isr(inst);
        orders.push_back(rep.stats.reduced_order);
        if (n == 50) {
            EXPECT_EQ(oracle_answer(inst), oracle_answer(rep.reduced));
        }
    }
    EXPECT_EQ(orders[0], orders[1]);
    EXPECT_EQ(orders[1], orders[2]);
    EXPECT_LT(orders[0], 50u);
}

TEST(KernelizeIsr, MinimalInstanceIsUntouched)
{
    Instance inst = make_isr(path_graph(4), 1, 2, {0, 2}, {1, 3});
    auto rep = kernelize_isr(inst);
    EXPECT_TRUE(rep.log.empty());
    EXPECT_EQ(rep.reduced, inst);
    EXPECT_EQ(rep.relabel, (std::vector<Vertex>{0, 1, 2, 3}));
}

// Subdivided cliques are where irrelevant-vertex detection breaks down: any
// S that scatters a class leaves every member with its own profile onto S.
// The kernel must still be equivalent.
TEST(KernelizeIsr, SubdividedCliqueStaysEquivalent)
{
    Graph g = subdivide(complete_graph(8), 2);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        auto inst = random_isr_instance(g, 2, 2, seed);
        ASSERT_TRUE(inst);
        auto rep = kernelize_isr(*inst);
        EXPECT_LE(rep.stats.reduced_order, rep.stats.original_order);
        EXPECT_EQ(verdict(*inst), verdict(rep.reduced));
    }
}

TEST(KernelizeIsr, ReportIsConsistent)
{
    Instance inst = make_isr(path_graph(60), 1, 2, {0, 2}, {10, 59});
    auto rep = kernelize_isr(inst);
    ASSERT_FALSE(rep.log.empty());
    EXPECT_EQ(apply_log(inst, rep.log), rep.reduced);
    EXPECT_EQ(relabel_set(inst.source, rep.relabel), rep.reduced.source);
    EXPECT_EQ(relabel_set(inst.target, rep.relabel), rep.reduced.target);
    for (std::size_t i = 0; i < rep.origin.size(); ++i)
        EXPECT_EQ(rep.relabel[static_cast<std::size_t>(rep.origin[i])], static_cast<Vertex>(i));
    for (const auto &ev : rep.log) {
        EXPECT_EQ(ev.rule, rule::irrelevant_vertex);
        EXPECT_EQ(rep.relabel[static_cast<std::size_t>(ev.vertex)], -1);
    }
    EXPECT_EQ(rep.stats.reduced_order + rep.log.size(), rep.stats.original_order);
}

TEST(KernelizeIsr, Idempotent)
{
    Instance inst = make_isr(grid_graph(6, 6), 1, 2, {0, 35}, {5, 30});
    auto once = kernelize_isr(inst);
    auto twice = kernelize_isr(once.reduced);
    EXPECT_TRUE(twice.log.empty());
    EXPECT_EQ(twice.reduced, once.reduced);
}

TEST(KernelizeIsr, EveryStepPreservesTheAnswer)
{
    std::mt19937_64 rng(44);
    int steps = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 10 + static_cast<int>(rng() % 9);
        int r = 1 + static_cast<int>(rng() % 2);
        int k = 1 + static_cast<int>(rng() % 3);
        Graph g = trial % 2 ? oracle::random_graph(rng, n, 2.0 / n) : path_graph(n);
        auto inst = random_isr_instance(g, r, k, rng());
        if (!inst)
            continue;
        StepAudit audit{0, true};
        auto rep = kernelize_isr(*inst, {}, audit.hook());
        steps += audit.steps;
        EXPECT_EQ(static_cast<std::size_t>(audit.steps), rep.log.size());
        EXPECT_TRUE(std::includes(rep.origin.begin(), rep.origin.end(), inst->source.begin(), inst->source.end()));
        EXPECT_TRUE(std::includes(rep.origin.begin(), rep.origin.end(), inst->target.begin(), inst->target.end()));
    }
    EXPECT_GT(steps, 20);
}

TEST(KernelizeIsr, WiderWindowStaysSound)
{
    std::mt19937_64 rng(45);
    int steps = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 12 + static_cast<int>(rng() % 7);
        int k = 1 + static_cast<int>(rng() % 2);
        Graph g = trial % 2 ? cycle_graph(n) : path_graph(n);
        auto base = random_isr_instance(g, 1, k, rng());
        if (!base)
            continue;
        Instance inst = make_isr(g, 1, k, base->source, base->target, Window{k - 1, k + 1});
        StepAudit audit{0, true};
        auto rep = kernelize_isr(inst, {}, audit.hook());
        steps += audit.steps;
        EXPECT_EQ(rep.reduced.window, (Window{k - 1, k + 1}));
    }
    EXPECT_GT(steps, 10);
}

TEST(KernelizeIsr, RejectsDominationInstances)
{
    EXPECT_THROW(kernelize_isr(make_dsr(path_graph(3), 1, 1, {1}, {1})), InputError);
}

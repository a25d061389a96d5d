#pragma once

#include <random>
#include <string>

#include "dsr_kernel.hpp"
#include "generators.hpp"
#include "isr_kernel.hpp"
#include "projection.hpp"

namespace reconf {

/// One point of a profile-count growth curve.
struct ProfileCountRow {
    std::string graph;
    std::size_t order = 0;
    int r = 0;
    std::size_t anchors = 0;
    std::size_t profiles = 0;
    double per_anchor = 0;
};

/// Profile counts for seeded random anchor sets of sizes 1, 2, 4, ... up to
/// half the vertex count.
inline std::vector<ProfileCountRow> profile_growth(const std::string &label, const Graph &g, int r,
                                                   std::uint64_t seed)
{
    std::vector<ProfileCountRow> rows;
    std::mt19937_64 rng(seed);
    const auto order = detail::shuffled_vertices(g.order(), rng);
    for (std::size_t a = 1; 2 * a <= g.order(); a *= 2) {
        VertexSet anchors = make_set({order.begin(), order.begin() + static_cast<std::ptrdiff_t>(a)});
        std::size_t mu = profile_count(g, anchors, r);
        rows.push_back({label, g.order(), r, a, mu, static_cast<double>(mu) / static_cast<double>(a)});
    }
    return rows;
}

/// Growth curves on grids and subdivided cliques for r in {1, 2}.
inline std::vector<ProfileCountRow> profile_suite(std::uint64_t seed)
{
    std::vector<ProfileCountRow> rows;
    auto add = [&](const std::string &label, const Graph &g) {
        for (int r : {1, 2}) {
            auto part = profile_growth(label, g, r, seed);
            rows.insert(rows.end(), part.begin(), part.end());
        }
    };
    for (int side : {8, 16, 32})
        add("grid " + std::to_string(side) + "x" + std::to_string(side), grid_graph(side, side));
    for (int q : {6, 10, 14})
        add("K" + std::to_string(q) + " subdivided 2", subdivide(complete_graph(q), 2));
    return rows;
}

struct KernelSizeRow {
    std::string graph;
    std::size_t order = 0;
    int r = 0;
    int k = 0;
    std::size_t reduced_order = 0;
    std::optional<std::size_t> core_size;
};

/// ISR kernels on paths with tokens at 0, 4, 8 and 2, 6, 10.
inline std::vector<KernelSizeRow> isr_path_kernels(const std::vector<int> &lengths, const UqwConfig &cfg = {})
{
    std::vector<KernelSizeRow> rows;
    for (int n : lengths) {
        auto inst = make_isr(path_graph(n), 1, 3, {0, 4, 8}, {2, 6, 10});
        auto rep = kernelize_isr(inst, cfg);
        rows.push_back({"path", static_cast<std::size_t>(n), 1, 3, rep.stats.reduced_order, std::nullopt});
    }
    return rows;
}

/// Domination cores of square grids.
inline std::vector<KernelSizeRow> grid_cores(const std::vector<int> &sides, int r, int k,
                                             const UqwConfig &cfg = {})
{
    std::vector<KernelSizeRow> rows;
    for (int side : sides) {
        Graph g = grid_graph(side, side);
        auto core = compute_core(g, k, r, cfg);
        rows.push_back({"grid " + std::to_string(side) + "x" + std::to_string(side), g.order(), r, k, g.order(),
                        core.core.size()});
    }
    return rows;
}

} // namespace reconf

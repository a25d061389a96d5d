#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "graph.hpp"

namespace reconf {

struct UqwConfig {
    /// Largest deletion set the search may build.
    int s_max = 20;
    /// 0 scans candidates by increasing id; any other value scans them in a
    /// seeded shuffle.
    std::uint64_t rng_seed = 0;
};

/// A set B that is r-independent once the vertices of S are deleted.
struct ScatteredWitness {
    VertexSet deletion_set;
    VertexSet scattered_set;
    int radius = 0;
};

namespace detail {

/// Fisher-Yates driven by raw mt19937_64 output, so orders are identical
/// across standard libraries.
inline std::vector<Vertex> seeded_order(std::vector<Vertex> vs, std::uint64_t seed)
{
    if (seed == 0)
        return vs;
    std::mt19937_64 rng(seed);
    for (std::size_t i = vs.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(rng() % i);
        std::swap(vs[i - 1], vs[j]);
    }
    return vs;
}

} // namespace detail

/// Searches for S (|S| <= cfg.s_max) and B subset of A \ S with |B| >= m and
/// B r-independent in G - S.
///
/// Greedy scatter, then hub deletion: each round admits vertices of A \ S in
/// scan order while they stay more than r away (in G - S) from every admitted
/// vertex. When that falls short of m, the vertex outside S whose
/// ceil(r/2)-ball in G - S holds the most vertices of A \ S joins S (ties by
/// smallest id) and the round repeats. Returns nullopt once S would exceed
/// the cap or A \ S becomes smaller than m.
inline std::optional<ScatteredWitness> find_scattered(const Graph &g, VertexSet a_set, int r, std::size_t m,
                                                      const UqwConfig &cfg = {})
{
    if (m < 1)
        throw InputError("requested scattered-set size must be positive");
    if (r < 0)
        throw InputError("negative radius");
    if (cfg.s_max < 0)
        throw InputError("s_max must be non-negative");
    a_set = make_set(std::move(a_set));
    for (Vertex a : a_set)
        check_vertex(g, a);

    const std::vector<Vertex> order = detail::seeded_order(a_set, cfg.rng_seed);
    const int hub_radius = (r + 1) / 2;
    BfsScratch bfs(g.order());
    VertexMask deleted(g.order(), 0);
    VertexMask blocked(g.order(), 0);
    std::vector<std::size_t> coverage(g.order(), 0);
    VertexMask in_a = make_mask(g.order(), a_set);
    VertexSet s_set;
    std::size_t a_left = a_set.size();

    while (true) {
        if (a_left < m)
            return std::nullopt;

        std::fill(blocked.begin(), blocked.end(), 0);
        VertexSet b_set;
        for (Vertex a : order) {
            if (deleted[static_cast<std::size_t>(a)] || blocked[static_cast<std::size_t>(a)])
                continue;
            b_set.push_back(a);
            if (b_set.size() >= m) {
                std::sort(b_set.begin(), b_set.end());
                return ScatteredWitness{s_set, std::move(b_set), r};
            }
            bfs.run(g, a, r, &deleted, nullptr, [&](Vertex v, int) { blocked[static_cast<std::size_t>(v)] = 1; });
        }

        if (s_set.size() >= static_cast<std::size_t>(cfg.s_max))
            return std::nullopt;

        std::fill(coverage.begin(), coverage.end(), 0);
        for (Vertex a : a_set) {
            if (deleted[static_cast<std::size_t>(a)])
                continue;
            bfs.run(g, a, hub_radius, &deleted, nullptr, [&](Vertex v, int) { ++coverage[static_cast<std::size_t>(v)]; });
        }
        Vertex hub = -1;
        for (std::size_t v = 0; v < g.order(); ++v)
            if (!deleted[v] && (hub < 0 || coverage[v] > coverage[static_cast<std::size_t>(hub)]))
                hub = static_cast<Vertex>(v);
        if (hub < 0)
            return std::nullopt;
        deleted[static_cast<std::size_t>(hub)] = 1;
        a_left -= in_a[static_cast<std::size_t>(hub)];
        s_set.insert(std::upper_bound(s_set.begin(), s_set.end(), hub), hub);
    }
}

/// Checks the witness invariants: B and S disjoint, B inside A, and B
/// pairwise more than `radius` apart in G - S.
inline bool verify_witness(const Graph &g, const ScatteredWitness &w, const VertexSet &a_set)
{
    auto in_range = [&](const VertexSet &s) {
        return std::all_of(s.begin(), s.end(), [&](Vertex v) { return g.valid(v); });
    };
    auto sorted_unique = [](const VertexSet &s) { return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end(); };
    if (!in_range(w.deletion_set) || !in_range(w.scattered_set) || !sorted_unique(w.deletion_set) ||
        !sorted_unique(w.scattered_set) || w.radius < 0)
        return false;
    if (!set_intersection(w.deletion_set, w.scattered_set).empty())
        return false;
    VertexSet a = make_set(a_set);
    if (!std::includes(a.begin(), a.end(), w.scattered_set.begin(), w.scattered_set.end()))
        return false;

    VertexMask deleted = make_mask(g.order(), w.deletion_set);
    VertexMask in_b = make_mask(g.order(), w.scattered_set);
    BfsScratch bfs(g.order());
    bool ok = true;
    for (Vertex b : w.scattered_set) {
        bfs.run(g, b, w.radius, &deleted, nullptr, [&](Vertex v, int d) {
            if (d > 0 && in_b[static_cast<std::size_t>(v)])
                ok = false;
        });
        if (!ok)
            return false;
    }
    return true;
}

} // namespace reconf

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "instance.hpp"

namespace reconf {

enum class Family { path, cycle, grid, gnp, subdivided_clique, gadget_js };

inline std::optional<Family> parse_family(std::string_view s)
{
    if (s == "path")
        return Family::path;
    if (s == "cycle")
        return Family::cycle;
    if (s == "grid")
        return Family::grid;
    if (s == "gnp")
        return Family::gnp;
    if (s == "subdivided_clique")
        return Family::subdivided_clique;
    if (s == "gadget_js")
        return Family::gadget_js;
    return std::nullopt;
}

struct GenSpec {
    Family family = Family::path;
    int n = 0;
    int rows = 0;
    int cols = 0;
    double p = 0.5;
    int q = 0;
    int s = 1;
    std::uint64_t seed = 0;
};

/// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
/// Unlike std::uniform_real_distribution this is identical on every
/// standard library.
inline double unit_double(std::mt19937_64 &rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Graph path_graph(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::from_edges(static_cast<std::size_t>(n), e);
}

inline Graph cycle_graph(int n)
{
    if (n < 3)
        throw InputError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph::from_edges(static_cast<std::size_t>(n), e);
}

/// Vertex (i, j) has id i * cols + j.
inline Graph grid_graph(int rows, int cols)
{
    std::vector<Edge> e;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            int v = i * cols + j;
            if (j + 1 < cols)
                e.emplace_back(v, v + 1);
            if (i + 1 < rows)
                e.emplace_back(v, v + cols);
        }
    }
    return Graph::from_edges(static_cast<std::size_t>(rows * cols), e);
}

inline Graph complete_graph(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph::from_edges(static_cast<std::size_t>(n), e);
}

/// Center 0, leaves 1..leaves.
inline Graph star_graph(int leaves)
{
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return Graph::from_edges(static_cast<std::size_t>(leaves + 1), e);
}

/// Each pair i < j, in lexicographic order, is an edge when one draw falls
/// below p.
inline Graph gnp_graph(int n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit_double(rng) < p)
                e.emplace_back(i, j);
    return Graph::from_edges(static_cast<std::size_t>(n), e);
}

/// The gadget graph together with where the input graph's vertices landed.
struct Gadget {
    Graph graph;
    /// Image of every original vertex (ids are preserved, so this is the
    /// identity on [0, n)).
    std::vector<Vertex> original_ids;
    Vertex hub = -1;
};

/// J has the original vertices, one vertex per edge joined to both of its
/// endpoints, and a hub joined to every edge vertex; the result is the
/// s-subdivision of J. Ids: originals 0..n-1, edge vertices n..n+m-1 in
/// edge order, hub n+m, then subdivision vertices.
inline Gadget gadget_js(const Graph &g, int s)
{
    if (s < 1)
        throw InputError("gadget subdivision length must be positive");
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v)
        if (g.degree(v) == 0)
            throw InputError("gadget_js requires a graph without isolated vertices; vertex " + std::to_string(v) +
                             " is isolated");
    const auto n = static_cast<Vertex>(g.order());
    const auto edges = g.edges();
    const auto hub = static_cast<Vertex>(n + static_cast<Vertex>(edges.size()));
    std::vector<Edge> j_edges;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto ev = static_cast<Vertex>(n + static_cast<Vertex>(i));
        j_edges.emplace_back(edges[i].first, ev);
        j_edges.emplace_back(edges[i].second, ev);
        j_edges.emplace_back(ev, hub);
    }
    Graph j = Graph::from_edges(static_cast<std::size_t>(hub) + 1, j_edges);
    return {subdivide(j, s), g.vertices(), hub};
}

inline Graph generate(const GenSpec &spec)
{
    switch (spec.family) {
    case Family::path:
        if (spec.n < 1)
            throw InputError("path needs n >= 1");
        return path_graph(spec.n);
    case Family::cycle:
        return cycle_graph(spec.n);
    case Family::grid:
        if (spec.rows < 1 || spec.cols < 1)
            throw InputError("grid needs rows, cols >= 1");
        return grid_graph(spec.rows, spec.cols);
    case Family::gnp:
        if (spec.n < 1)
            throw InputError("gnp needs n >= 1");
        if (!(spec.p > 0.0 && spec.p < 1.0))
            throw InputError("gnp needs 0 < p < 1");
        return gnp_graph(spec.n, spec.p, spec.seed);
    case Family::subdivided_clique:
        if (spec.q < 1 || spec.s < 1)
            throw InputError("subdivided_clique needs q, s >= 1");
        return subdivide(complete_graph(spec.q), spec.s);
    case Family::gadget_js:
        throw InputError("gadget_js is built from an input graph, see gadget_js()");
    }
    throw InputError("unknown family");
}

/// Greedy r-dominating set of `targets`: repeatedly takes the vertex whose
/// r-ball covers the most uncovered targets (smallest id on ties).
inline VertexSet greedy_dominating_set(const Graph &g, int r, std::optional<VertexSet> targets = std::nullopt)
{
    VertexSet z = targets ? make_set(*targets) : g.vertices();
    VertexMask need = make_mask(g.order(), z);
    std::size_t left = z.size();
    BfsScratch bfs(g.order());
    VertexSet out;
    while (left > 0) {
        Vertex best = -1;
        std::size_t best_gain = 0;
        for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) {
            std::size_t gain = 0;
            bfs.run(g, v, r, [&](Vertex w, int) { gain += need[static_cast<std::size_t>(w)]; });
            if (gain > best_gain) {
                best = v;
                best_gain = gain;
            }
        }
        bfs.run(g, best, r, [&](Vertex w, int) { need[static_cast<std::size_t>(w)] = 0; });
        left -= best_gain;
        out.push_back(best);
    }
    return make_set(std::move(out));
}

namespace detail {

inline std::vector<Vertex> shuffled_vertices(std::size_t n, std::mt19937_64 &rng)
{
    std::vector<Vertex> vs(n);
    for (std::size_t i = 0; i < n; ++i)
        vs[i] = static_cast<Vertex>(i);
    for (std::size_t i = n; i > 1; --i)
        std::swap(vs[i - 1], vs[static_cast<std::size_t>(rng() % i)]);
    return vs;
}

inline std::optional<VertexSet> random_independent_set(const Graph &g, int r, int k, std::mt19937_64 &rng)
{
    VertexMask blocked(g.order(), 0);
    BfsScratch bfs(g.order());
    VertexSet out;
    for (Vertex v : shuffled_vertices(g.order(), rng)) {
        if (blocked[static_cast<std::size_t>(v)])
            continue;
        out.push_back(v);
        if (out.size() == static_cast<std::size_t>(k))
            return make_set(std::move(out));
        bfs.run(g, v, r, [&](Vertex w, int) { blocked[static_cast<std::size_t>(w)] = 1; });
    }
    return std::nullopt;
}

} // namespace detail

/// Source and target are greedy distance-r independent sets built from two
/// seeded vertex orders. nullopt when either order yields fewer than k.
inline std::optional<Instance> random_isr_instance(Graph g, int r, int k, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto s = detail::random_independent_set(g, r, k, rng);
    auto t = detail::random_independent_set(g, r, k, rng);
    if (!s || !t)
        return std::nullopt;
    return make_isr(std::move(g), r, k, *s, *t);
}

/// Source and target are two uniformly drawn size-k r-dominating sets among
/// all of them; nullopt when there is none or more than `limit` k-subsets.
inline std::optional<Instance> random_dsr_instance(Graph g, int r, int k, std::uint64_t seed,
                                                   std::size_t limit = 2'000'000)
{
    const auto n = static_cast<int>(g.order());
    if (k < 1 || k > n)
        return std::nullopt;
    double count = 1;
    for (int i = 0; i < k; ++i)
        count = count * (n - i) / (i + 1);
    if (count > static_cast<double>(limit))
        return std::nullopt;

    std::vector<VertexSet> balls(g.order());
    BfsScratch bfs(g.order());
    for (Vertex v = 0; v < n; ++v) {
        bfs.run(g, v, r, [](Vertex, int) {});
        balls[static_cast<std::size_t>(v)].assign(bfs.reached().begin(), bfs.reached().end());
    }
    std::vector<VertexSet> dominating;
    VertexSet pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        pick[static_cast<std::size_t>(i)] = i;
    VertexMask covered(g.order(), 0);
    while (true) {
        std::fill(covered.begin(), covered.end(), 0);
        for (Vertex v : pick)
            for (Vertex w : balls[static_cast<std::size_t>(v)])
                covered[static_cast<std::size_t>(w)] = 1;
        if (std::all_of(covered.begin(), covered.end(), [](std::uint8_t c) { return c != 0; }))
            dominating.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j) - 1] + 1;
    }
    if (dominating.empty())
        return std::nullopt;
    std::mt19937_64 rng(seed);
    const VertexSet &s = dominating[static_cast<std::size_t>(rng() % dominating.size())];
    const VertexSet &t = dominating[static_cast<std::size_t>(rng() % dominating.size())];
    return make_dsr(std::move(g), r, k, s, t);
}

} // namespace reconf

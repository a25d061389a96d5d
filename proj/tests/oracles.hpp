#pragma once

// Naive reference implementations used only by the tests. Nothing here
// calls into the library beyond reading a Graph's adjacency.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <reconf/graph.hpp>

namespace oracle {

using reconf::Graph;
using reconf::Vertex;

inline constexpr int inf = std::numeric_limits<int>::max() / 4;

using Matrix = std::vector<std::vector<int>>;

inline Matrix floyd_warshall(const Graph &g)
{
    const std::size_t n = g.order();
    Matrix d(n, std::vector<int>(n, inf));
    for (std::size_t i = 0; i < n; ++i)
        d[i][i] = 0;
    for (auto [u, v] : g.edges()) {
        d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

/// Plain queue BFS from every vertex; same result as floyd_warshall.
inline Matrix all_pairs_bfs(const Graph &g)
{
    const std::size_t n = g.order();
    Matrix d(n, std::vector<int>(n, inf));
    for (std::size_t s = 0; s < n; ++s) {
        std::deque<Vertex> queue{static_cast<Vertex>(s)};
        d[s][s] = 0;
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbors(x))
                if (d[s][static_cast<std::size_t>(y)] == inf) {
                    d[s][static_cast<std::size_t>(y)] = d[s][static_cast<std::size_t>(x)] + 1;
                    queue.push_back(y);
                }
        }
    }
    return d;
}

/// Shortest A-avoiding path lengths from u to each a in A, by enumerating
/// every simple path of length at most r whose interior avoids A.
inline std::map<Vertex, int> profile_by_paths(const Graph &g, const std::vector<Vertex> &a_set, Vertex u, int r)
{
    std::set<Vertex> anchors(a_set.begin(), a_set.end());
    std::map<Vertex, int> best;
    std::vector<char> on_path(g.order(), 0);
    auto dfs = [&](auto &&self, Vertex x, int len) -> void {
        if (len > 0 && anchors.contains(x)) {
            auto [it, fresh] = best.emplace(x, len);
            if (!fresh)
                it->second = std::min(it->second, len);
            return;
        }
        if (len == r)
            return;
        on_path[static_cast<std::size_t>(x)] = 1;
        for (Vertex y : g.neighbors(x))
            if (!on_path[static_cast<std::size_t>(y)])
                self(self, y, len + 1);
        on_path[static_cast<std::size_t>(x)] = 0;
    };
    dfs(dfs, u, 0);
    return best;
}

inline bool independent(const Matrix &d, const std::vector<Vertex> &set, int r)
{
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (d[static_cast<std::size_t>(set[i])][static_cast<std::size_t>(set[j])] <= r)
                return false;
    return true;
}

inline bool dominates(const Matrix &d, const std::vector<Vertex> &set, const std::vector<Vertex> &targets, int r)
{
    for (Vertex z : targets) {
        bool hit = false;
        for (Vertex x : set)
            hit = hit || d[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] <= r;
        if (!hit)
            return false;
    }
    return true;
}

inline std::vector<Vertex> from_mask(std::uint64_t mask)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; mask; ++v, mask >>= 1)
        if (mask & 1)
            out.push_back(v);
    return out;
}

inline std::uint64_t to_mask(const std::vector<Vertex> &set)
{
    std::uint64_t m = 0;
    for (Vertex v : set)
        m |= std::uint64_t{1} << v;
    return m;
}

/// Every subset of [0, n) with popcount in [lo, hi], as bitmasks.
inline std::vector<std::uint64_t> subsets_in_range(std::size_t n, int lo, int hi)
{
    std::vector<std::uint64_t> out;
    auto rec = [&](auto &&self, std::size_t next, std::uint64_t mask, int size) -> void {
        if (size >= lo)
            out.push_back(mask);
        if (size == hi)
            return;
        for (std::size_t v = next; v < n; ++v)
            self(self, v + 1, mask | (std::uint64_t{1} << v), size + 1);
    };
    rec(rec, 0, 0, 0);
    return out;
}

enum class Kind { isr, dsr, zdsr };

struct Problem {
    Kind kind;
    const Graph *g;
    int r;
    int lo, hi;
    std::vector<Vertex> source, target, z;
};

/// Reachability in the token-jumping graph by plain BFS over all feasible
/// vertex subsets with sizes in [lo, hi]. Only for n <= 63.
inline bool reconfigurable(const Problem &p)
{
    const Matrix d = floyd_warshall(*p.g);
    std::vector<Vertex> all;
    for (Vertex v = 0; static_cast<std::size_t>(v) < p.g->order(); ++v)
        all.push_back(v);
    const std::vector<Vertex> &targets = p.kind == Kind::zdsr ? p.z : all;
    auto feasible = [&](std::uint64_t m) {
        auto set = from_mask(m);
        return p.kind == Kind::isr ? independent(d, set, p.r) : dominates(d, set, targets, p.r);
    };
    std::set<std::uint64_t> states;
    for (auto m : subsets_in_range(p.g->order(), p.lo, p.hi))
        if (feasible(m))
            states.insert(m);
    const std::uint64_t s = to_mask(p.source), t = to_mask(p.target);
    if (!states.contains(s) || !states.contains(t))
        return false;
    std::set<std::uint64_t> seen{s};
    std::deque<std::uint64_t> queue{s};
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        if (cur == t)
            return true;
        for (std::size_t v = 0; v < p.g->order(); ++v) {
            auto next = cur ^ (std::uint64_t{1} << v);
            if (states.contains(next) && seen.insert(next).second)
                queue.push_back(next);
        }
    }
    return false;
}

/// Minimum number of vertices whose r-balls cover `targets`.
inline int domination_number(const Graph &g, const std::vector<Vertex> &targets, int r)
{
    const Matrix d = floyd_warshall(g);
    for (int size = 0; static_cast<std::size_t>(size) <= g.order(); ++size)
        for (auto m : subsets_in_range(g.order(), size, size))
            if (dominates(d, from_mask(m), targets, r))
                return size;
    return -1;
}

inline Graph random_graph(std::mt19937_64 &rng, int n, double p)
{
    std::vector<reconf::Edge> e;
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                e.emplace_back(i, j);
    return Graph::from_edges(static_cast<std::size_t>(n), e);
}

/// All connected graphs on exactly n labelled vertices.
inline std::vector<Graph> connected_graphs(int n)
{
    std::vector<reconf::Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
        std::vector<reconf::Edge> e;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (m >> i & 1)
                e.push_back(pairs[i]);
        Graph g = Graph::from_edges(static_cast<std::size_t>(n), e);
        auto d = floyd_warshall(g);
        if (std::all_of(d[0].begin(), d[0].end(), [](int x) { return x < inf; }))
            out.push_back(std::move(g));
    }
    return out;
}

} // namespace oracle

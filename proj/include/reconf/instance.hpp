#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace reconf {

enum class Problem { isr, dsr, zdsr };

inline std::string_view to_string(Problem p)
{
    switch (p) {
    case Problem::isr:
        return "isr";
    case Problem::dsr:
        return "dsr";
    case Problem::zdsr:
        return "zdsr";
    }
    return "?";
}

inline std::optional<Problem> parse_problem(std::string_view s)
{
    if (s == "isr")
        return Problem::isr;
    if (s == "dsr")
        return Problem::dsr;
    if (s == "zdsr")
        return Problem::zdsr;
    return std::nullopt;
}

/// Allowed token counts of every intermediate set, inclusive.
struct Window {
    int lo = 0;
    int hi = 0;
    friend bool operator==(const Window &, const Window &) = default;
};

/// (k-1, k) for independent sets, (k, k+1) for dominating sets.
inline Window default_window(Problem p, int k)
{
    return p == Problem::isr ? Window{k - 1, k} : Window{k, k + 1};
}

/// A token-jumping reconfiguration instance. For Problem::dsr the set to be
/// dominated is all of V; for Problem::zdsr it is `annotation`.
struct Instance {
    Problem problem = Problem::isr;
    Graph graph;
    int r = 1;
    int k = 1;
    VertexSet source;
    VertexSet target;
    Window window;
    std::optional<VertexSet> annotation;

    bool is_domination() const { return problem != Problem::isr; }

    /// Vertices that must be dominated (domination problems only).
    VertexSet dominated_set() const { return annotation ? *annotation : graph.vertices(); }

    friend bool operator==(const Instance &, const Instance &) = default;
};

/// All pairwise distances exceed r.
inline bool is_r_independent(const Graph &g, std::span<const Vertex> set, int r)
{
    if (set.size() < 2)
        return true;
    VertexMask in_set = make_mask(g.order(), set);
    BfsScratch bfs(g.order());
    for (Vertex u : set) {
        bool clash = false;
        bfs.run(g, u, r, [&](Vertex v, int d) {
            if (d > 0 && in_set[static_cast<std::size_t>(v)])
                clash = true;
        });
        if (clash)
            return false;
    }
    return true;
}

/// Every vertex of `targets` lies within distance r of some vertex of `set`.
inline bool r_dominates(const Graph &g, std::span<const Vertex> set, std::span<const Vertex> targets, int r)
{
    VertexMask covered(g.order(), 0);
    BfsScratch bfs(g.order());
    for (Vertex u : set)
        bfs.run(g, u, r, [&](Vertex v, int) { covered[static_cast<std::size_t>(v)] = 1; });
    return std::all_of(targets.begin(), targets.end(), [&](Vertex z) { return covered[static_cast<std::size_t>(z)] != 0; });
}

/// Throws InputError describing the first violated invariant.
inline void validate(const Instance &inst)
{
    const Graph &g = inst.graph;
    if (inst.r < 1)
        throw InputError("radius must be at least 1");
    if (inst.k < 1)
        throw InputError("token count must be at least 1");
    auto check_set = [&](const VertexSet &s, const char *name) {
        for (Vertex v : s)
            if (!g.valid(v))
                throw InputError(std::string(name) + " vertex " + std::to_string(v) + " out of range");
        if (make_set(s) != s)
            throw InputError(std::string(name) + " set must be sorted and duplicate-free");
    };
    check_set(inst.source, "source");
    check_set(inst.target, "target");
    if (inst.source.size() != static_cast<std::size_t>(inst.k) || inst.target.size() != static_cast<std::size_t>(inst.k))
        throw InputError("source and target must contain exactly k vertices");

    const Window w = inst.window;
    if (w.lo < 0)
        throw InputError("window lower bound must be non-negative");
    if (inst.problem == Problem::isr) {
        if (!(w.lo <= inst.k && inst.k <= w.hi && w.hi - w.lo >= 1))
            throw InputError("isr window must satisfy lo <= k <= hi and hi - lo >= 1");
        if (inst.annotation)
            throw InputError("annotation is only allowed for zdsr");
        if (!is_r_independent(g, inst.source, inst.r))
            throw InputError("source is not distance-r independent");
        if (!is_r_independent(g, inst.target, inst.r))
            throw InputError("target is not distance-r independent");
        return;
    }

    if (!(w.lo <= inst.k && inst.k < w.hi))
        throw InputError("domination window must satisfy lo <= k < hi");
    if (inst.problem == Problem::zdsr && !inst.annotation)
        throw InputError("zdsr instance requires an annotation set");
    if (inst.problem == Problem::dsr && inst.annotation)
        throw InputError("annotation is only allowed for zdsr");
    if (inst.annotation)
        check_set(*inst.annotation, "annotation");
    VertexSet z = inst.dominated_set();
    if (!r_dominates(g, inst.source, z, inst.r))
        throw InputError("source does not r-dominate the required vertices");
    if (!r_dominates(g, inst.target, z, inst.r))
        throw InputError("target does not r-dominate the required vertices");
}

inline Instance make_isr(Graph g, int r, int k, VertexSet source, VertexSet target, std::optional<Window> window = {})
{
    Instance inst{Problem::isr, std::move(g), r, k, make_set(std::move(source)), make_set(std::move(target)),
                  window.value_or(default_window(Problem::isr, k)), std::nullopt};
    validate(inst);
    return inst;
}

inline Instance make_dsr(Graph g, int r, int k, VertexSet source, VertexSet target, std::optional<Window> window = {})
{
    Instance inst{Problem::dsr, std::move(g), r, k, make_set(std::move(source)), make_set(std::move(target)),
                  window.value_or(default_window(Problem::dsr, k)), std::nullopt};
    validate(inst);
    return inst;
}

inline Instance make_zdsr(Graph g, int r, int k, VertexSet source, VertexSet target, VertexSet annotation,
                          std::optional<Window> window = {})
{
    Instance inst{Problem::zdsr, std::move(g), r, k, make_set(std::move(source)), make_set(std::move(target)),
                  window.value_or(default_window(Problem::zdsr, k)), make_set(std::move(annotation))};
    validate(inst);
    return inst;
}

} // namespace reconf

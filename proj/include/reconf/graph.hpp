#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reconf {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Dense membership flags indexed by vertex id.
using VertexMask = std::vector<std::uint8_t>;

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline VertexSet make_set(std::vector<Vertex> vs)
{
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

inline bool contains(const VertexSet &s, Vertex v)
{
    return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet &a, const VertexSet &b)
{
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_difference(const VertexSet &a, const VertexSet &b)
{
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_intersection(const VertexSet &a, const VertexSet &b)
{
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Simple undirected graph in compressed adjacency form. Neighbor lists are
/// sorted by id, so two graphs with the same edge set compare equal.
/// Immutable once built.
class Graph {
public:
    Graph() : offsets_{0} {}

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n) : offsets_(n + 1, 0) {}

    /// Rejects self-loops, parallel edges and out-of-range endpoints.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges)
    {
        std::vector<Edge> directed;
        directed.reserve(2 * edges.size());
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
                throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
            if (u == v)
                throw InputError("self-loop at vertex " + std::to_string(u));
            directed.emplace_back(u, v);
            directed.emplace_back(v, u);
        }
        std::sort(directed.begin(), directed.end());
        if (auto it = std::adjacent_find(directed.begin(), directed.end()); it != directed.end())
            throw InputError("parallel edge " + std::to_string(it->first) + " " + std::to_string(it->second));

        Graph g(n);
        g.targets_.reserve(directed.size());
        for (auto [u, v] : directed) {
            ++g.offsets_[static_cast<std::size_t>(u) + 1];
            g.targets_.push_back(v);
        }
        for (std::size_t i = 0; i < n; ++i)
            g.offsets_[i + 1] += g.offsets_[i];
        return g;
    }

    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges)
    {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t order() const { return offsets_.size() - 1; }
    std::size_t size() const { return targets_.size() / 2; }

    bool valid(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < order(); }

    std::span<const Vertex> neighbors(Vertex v) const
    {
        auto b = offsets_[static_cast<std::size_t>(v)];
        auto e = offsets_[static_cast<std::size_t>(v) + 1];
        return {targets_.data() + b, e - b};
    }

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    bool has_edge(Vertex u, Vertex v) const
    {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    /// Every edge once as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(size());
        for (Vertex u = 0; static_cast<std::size_t>(u) < order(); ++u)
            for (Vertex v : neighbors(u))
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    VertexSet vertices() const
    {
        VertexSet out(order());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = static_cast<Vertex>(i);
        return out;
    }

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
};

inline VertexMask make_mask(std::size_t n, std::span<const Vertex> vs)
{
    VertexMask m(n, 0);
    for (Vertex v : vs)
        m[static_cast<std::size_t>(v)] = 1;
    return m;
}

inline void check_vertex(const Graph &g, Vertex v)
{
    if (!g.valid(v))
        throw InputError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(g.order()) + ")");
}

/// Reusable bounded-radius BFS. Forbidden vertices are never entered;
/// absorbing vertices other than the source are entered but never
/// expanded. Distances stay valid until the next run.
class BfsScratch {
public:
    static constexpr int unreached = -1;

    explicit BfsScratch(std::size_t n) : stamp_(n, 0), dist_(n, unreached) {}

    template <class Visit>
    void run(const Graph &g, Vertex source, int radius, const VertexMask *forbidden, const VertexMask *absorbing,
             Visit &&visit)
    {
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
        order_.clear();
        mark(source, 0);
        visit(source, 0);
        for (std::size_t head = 0; head < order_.size(); ++head) {
            Vertex u = order_[head];
            int du = dist_[static_cast<std::size_t>(u)];
            if (du >= radius)
                break;
            if (absorbing && u != source && (*absorbing)[static_cast<std::size_t>(u)])
                continue;
            for (Vertex w : g.neighbors(u)) {
                auto wi = static_cast<std::size_t>(w);
                if (stamp_[wi] == epoch_ || (forbidden && (*forbidden)[wi]))
                    continue;
                mark(w, du + 1);
                visit(w, du + 1);
            }
        }
    }

    template <class Visit>
    void run(const Graph &g, Vertex source, int radius, Visit &&visit)
    {
        run(g, source, radius, nullptr, nullptr, std::forward<Visit>(visit));
    }

    int dist(Vertex v) const
    {
        auto i = static_cast<std::size_t>(v);
        return stamp_[i] == epoch_ ? dist_[i] : unreached;
    }

    /// Vertices reached by the last run, in BFS order.
    std::span<const Vertex> reached() const { return order_; }

private:
    void mark(Vertex v, int d)
    {
        auto i = static_cast<std::size_t>(v);
        stamp_[i] = epoch_;
        dist_[i] = d;
        order_.push_back(v);
    }

    std::vector<std::uint32_t> stamp_;
    std::vector<int> dist_;
    std::vector<Vertex> order_;
    std::uint32_t epoch_ = 0;
};

/// Distances from one source, restricted to the ball of the given radius.
class DistanceMap {
public:
    DistanceMap(Vertex source, int radius, std::vector<std::pair<Vertex, int>> entries)
        : source_(source), radius_(radius), entries_(std::move(entries))
    {
        std::sort(entries_.begin(), entries_.end());
    }

    Vertex source() const { return source_; }
    int radius() const { return radius_; }
    std::size_t size() const { return entries_.size(); }

    std::optional<int> find(Vertex v) const
    {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{v, std::numeric_limits<int>::min()});
        if (it == entries_.end() || it->first != v)
            return std::nullopt;
        return it->second;
    }

    bool contains(Vertex v) const { return find(v).has_value(); }

    int at(Vertex v) const
    {
        auto d = find(v);
        if (!d)
            throw std::out_of_range("vertex " + std::to_string(v) + " not within radius");
        return *d;
    }

    /// (vertex, distance) pairs sorted by vertex.
    const std::vector<std::pair<Vertex, int>> &entries() const { return entries_; }

    VertexSet vertices() const
    {
        VertexSet out;
        out.reserve(entries_.size());
        for (auto &[v, d] : entries_)
            out.push_back(v);
        return out;
    }

private:
    Vertex source_;
    int radius_;
    std::vector<std::pair<Vertex, int>> entries_;
};

/// Shortest-path distances from `source` in g minus `forbidden`, for every
/// vertex at distance at most `radius`.
inline DistanceMap bfs_bounded(const Graph &g, Vertex source, int radius, std::span<const Vertex> forbidden = {})
{
    check_vertex(g, source);
    if (radius < 0)
        throw InputError("negative radius");
    for (Vertex f : forbidden)
        check_vertex(g, f);
    VertexMask mask = make_mask(g.order(), forbidden);
    if (mask[static_cast<std::size_t>(source)])
        throw InputError("BFS source " + std::to_string(source) + " is forbidden");

    BfsScratch bfs(g.order());
    std::vector<std::pair<Vertex, int>> entries;
    bfs.run(g, source, radius, &mask, nullptr, [&](Vertex v, int d) { entries.emplace_back(v, d); });
    return DistanceMap(source, radius, std::move(entries));
}

/// Result of `distance`; empty when the distance exceeds the cap.
using CappedDistance = std::optional<int>;

inline CappedDistance distance(const Graph &g, Vertex u, Vertex v, int cap)
{
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v)
        return 0;
    if (cap <= 0)
        return std::nullopt;
    BfsScratch bfs(g.order());
    bfs.run(g, u, cap, [](Vertex, int) {});
    int d = bfs.dist(v);
    return d == BfsScratch::unreached ? CappedDistance{} : CappedDistance{d};
}

struct InducedSubgraph {
    Graph graph;
    /// old id -> new id, or -1 when dropped.
    std::vector<Vertex> relabel;
    /// new id -> old id.
    std::vector<Vertex> origin;
};

/// Kept vertices are renumbered in increasing order of their old ids.
inline InducedSubgraph induced_subgraph(const Graph &g, std::span<const Vertex> keep)
{
    InducedSubgraph out;
    out.relabel.assign(g.order(), -1);
    for (Vertex v : keep) {
        check_vertex(g, v);
        out.relabel[static_cast<std::size_t>(v)] = 0;
    }
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (out.relabel[v] == 0) {
            out.relabel[v] = static_cast<Vertex>(out.origin.size());
            out.origin.push_back(static_cast<Vertex>(v));
        }
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        Vertex nu = out.relabel[static_cast<std::size_t>(u)];
        Vertex nv = out.relabel[static_cast<std::size_t>(v)];
        if (nu >= 0 && nv >= 0)
            edges.emplace_back(nu, nv);
    }
    out.graph = Graph::from_edges(out.origin.size(), edges);
    return out;
}

/// Replaces every edge by a path of exactly `s` edges. Original vertices keep
/// their ids; internal vertices are appended edge by edge in lexicographic
/// edge order, each path numbered from its smaller endpoint.
inline Graph subdivide(const Graph &g, int s)
{
    if (s < 1)
        throw InputError("subdivision length must be positive");
    if (s == 1)
        return g;
    std::vector<Edge> edges;
    auto next = static_cast<Vertex>(g.order());
    for (auto [u, v] : g.edges()) {
        Vertex prev = u;
        for (int i = 1; i < s; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph::from_edges(static_cast<std::size_t>(next), edges);
}

} // namespace reconf

#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace reconf {

/// Finite entries of an r-projection profile: (anchor, length of a shortest
/// anchor-avoiding path), sorted by anchor. Anchors beyond the radius are
/// absent. Doubles as the canonical class key.
using ProfileKey = std::vector<std::pair<Vertex, int>>;

struct ProjectionProfile {
    VertexSet anchor_set;
    ProfileKey values;

    /// The r-projection: anchors with a finite entry.
    VertexSet projection() const
    {
        VertexSet out;
        out.reserve(values.size());
        for (auto &[a, d] : values)
            out.push_back(a);
        return out;
    }

    std::optional<int> value(Vertex anchor) const
    {
        for (auto &[a, d] : values)
            if (a == anchor)
                return d;
        return std::nullopt;
    }

    friend bool operator==(const ProjectionProfile &, const ProjectionProfile &) = default;
};

struct ProfileClass {
    ProfileKey key;
    VertexSet members;
};

struct ProfilePartition {
    VertexSet anchor_set;
    int radius = 0;
    /// Sorted by key.
    std::vector<ProfileClass> classes;
};

/// FNV-1a over the key entries; used to summarize a class in logs.
inline std::uint64_t key_hash(const ProfileKey &key)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xffu;
            h *= 0x100000001b3ull;
        }
    };
    for (auto &[a, d] : key) {
        mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)));
        mix(static_cast<std::uint64_t>(d));
    }
    return h;
}

namespace detail {

inline void check_radius(int r)
{
    if (r < 0)
        throw InputError("negative radius");
}

/// Profile of `u` with anchors given as a mask; scratch must be sized to g.
inline ProfileKey profile_key(const Graph &g, const VertexMask &anchors, Vertex u, int r, BfsScratch &bfs)
{
    ProfileKey key;
    bfs.run(g, u, r, nullptr, &anchors, [&](Vertex v, int d) {
        if (anchors[static_cast<std::size_t>(v)])
            key.emplace_back(v, d);
    });
    std::sort(key.begin(), key.end());
    return key;
}

} // namespace detail

/// r-projection profile of `u` onto `a_set`. Anchors absorb the search, so a
/// value is the length of a shortest path whose interior avoids `a_set`.
inline ProjectionProfile profile(const Graph &g, VertexSet a_set, Vertex u, int r)
{
    detail::check_radius(r);
    a_set = make_set(std::move(a_set));
    check_vertex(g, u);
    for (Vertex a : a_set)
        check_vertex(g, a);
    if (contains(a_set, u))
        throw InputError("profiled vertex " + std::to_string(u) + " belongs to the anchor set");
    BfsScratch bfs(g.order());
    VertexMask mask = make_mask(g.order(), a_set);
    auto key = detail::profile_key(g, mask, u, r, bfs);
    return {std::move(a_set), std::move(key)};
}

/// Groups `universe` into classes of equal r-projection profile onto `a_set`.
inline ProfilePartition partition_by_profile(const Graph &g, VertexSet a_set, VertexSet universe, int r)
{
    detail::check_radius(r);
    a_set = make_set(std::move(a_set));
    universe = make_set(std::move(universe));
    for (Vertex a : a_set)
        check_vertex(g, a);
    for (Vertex u : universe)
        check_vertex(g, u);
    if (!set_intersection(a_set, universe).empty())
        throw InputError("universe and anchor set overlap");

    BfsScratch bfs(g.order());
    VertexMask mask = make_mask(g.order(), a_set);
    std::map<ProfileKey, VertexSet> groups;
    for (Vertex u : universe)
        groups[detail::profile_key(g, mask, u, r, bfs)].push_back(u);

    ProfilePartition out{a_set, r, {}};
    out.classes.reserve(groups.size());
    for (auto &[key, members] : groups)
        out.classes.push_back({key, std::move(members)});
    return out;
}

/// Number of distinct r-projection profiles realized onto `a_set` by the
/// vertices outside it.
inline std::size_t profile_count(const Graph &g, const VertexSet &a_set, int r)
{
    return partition_by_profile(g, a_set, set_difference(g.vertices(), a_set), r).classes.size();
}

} // namespace reconf

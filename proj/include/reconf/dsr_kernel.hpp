#pragma once

#include <cmath>
#include <map>
#include <optional>

#include "kernel_report.hpp"
#include "projection.hpp"
#include "quasi_wideness.hpp"

namespace reconf {

struct RedundantVertex {
    Vertex vertex = -1;
    std::string_view rule;
    std::size_t deletion_set_size = 0;
    std::uint64_t class_key_hash = 0;
    std::size_t class_size = 0;
};

/// A (k, r)-domination core: every set of at most k vertices that
/// r-dominates `core` r-dominates everything the core was started from.
struct DominationCore {
    VertexSet core;
    int k = 0;
    int r = 0;
    std::vector<RedundantVertex> removal_log;
};

/// Finds w in Z such that every X with |X| <= k r-dominates Z exactly when it
/// r-dominates Z - w.
///
/// Takes B subset of Z, 2r-independent in G - S, and groups it by the vector
/// of distances in G to the vertices of S, truncated at r + 1. Any class with
/// k + 2 members qualifies: a dominator reaching a member through S reaches
/// the whole class, and each dominator reaches at most one member while
/// avoiding S.
inline std::optional<RedundantVertex> find_redundant_core_vertex(const Graph &g, VertexSet z_set, int k, int r,
                                                                 const UqwConfig &cfg = {})
{
    if (k < 0 || r < 0)
        throw InputError("k and r must be non-negative");
    z_set = make_set(std::move(z_set));
    const auto need = static_cast<std::size_t>(k) + 2;
    if (z_set.size() < need)
        return std::nullopt;

    BfsScratch bfs(g.order());
    for (std::size_t m = need;; m = std::min(2 * m, z_set.size())) {
        auto witness = find_scattered(g, z_set, 2 * r, m, cfg);
        if (!witness)
            return std::nullopt;

        const VertexSet &s_set = witness->deletion_set;
        std::vector<std::vector<int>> dist_from_s;
        dist_from_s.reserve(s_set.size());
        for (Vertex s : s_set) {
            std::vector<int> d(g.order(), r + 1);
            bfs.run(g, s, r, [&](Vertex v, int dv) { d[static_cast<std::size_t>(v)] = dv; });
            dist_from_s.push_back(std::move(d));
        }
        std::map<ProfileKey, VertexSet> classes;
        for (Vertex b : witness->scattered_set) {
            ProfileKey key;
            key.reserve(s_set.size());
            for (std::size_t i = 0; i < s_set.size(); ++i)
                key.emplace_back(s_set[i], dist_from_s[i][static_cast<std::size_t>(b)]);
            classes[key].push_back(b);
        }
        for (auto &[key, members] : classes)
            if (members.size() >= need)
                return RedundantVertex{members.front(), rule::core_redundant, s_set.size(), key_hash(key), members.size()};
        if (m >= z_set.size())
            return std::nullopt;
    }
}

namespace detail {

inline std::vector<VertexSet> all_balls(const Graph &g, int r)
{
    std::vector<VertexSet> balls(g.order());
    BfsScratch bfs(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        bfs.run(g, static_cast<Vertex>(v), r, [](Vertex, int) {});
        balls[v].assign(bfs.reached().begin(), bfs.reached().end());
        std::sort(balls[v].begin(), balls[v].end());
    }
    return balls;
}

/// Smallest w in Z with another z in Z whose r-ball lies inside N_r(w):
/// whatever dominates z dominates w.
inline std::optional<RedundantVertex> find_dominated_ball_vertex(const VertexSet &z_set,
                                                                 const std::vector<VertexSet> &balls)
{
    for (Vertex w : z_set) {
        const VertexSet &bw = balls[static_cast<std::size_t>(w)];
        for (Vertex z : bw) {
            if (z == w || !contains(z_set, z))
                continue;
            const VertexSet &bz = balls[static_cast<std::size_t>(z)];
            if (std::includes(bw.begin(), bw.end(), bz.begin(), bz.end()))
                return RedundantVertex{w, rule::core_dominated_ball, 0, 0, 1};
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Shrinks `start` (all of V when empty) while keeping the (k, r)-core
/// property. Each round tries the scattered-set rule; when it finds nothing
/// and the core still has more than k + 1 vertices, a vertex whose r-ball
/// contains another core vertex's r-ball is dropped instead.
inline DominationCore compute_core(const Graph &g, int k, int r, const UqwConfig &cfg = {},
                                   std::optional<VertexSet> start = std::nullopt)
{
    if (k < 1 || r < 1)
        throw InputError("compute_core needs k >= 1 and r >= 1");
    DominationCore out{start ? make_set(std::move(*start)) : g.vertices(), k, r, {}};
    for (Vertex v : out.core)
        check_vertex(g, v);
    std::optional<std::vector<VertexSet>> balls;
    while (true) {
        auto found = find_redundant_core_vertex(g, out.core, k, r, cfg);
        if (!found && out.core.size() > static_cast<std::size_t>(k) + 1) {
            if (!balls)
                balls = detail::all_balls(g, r);
            found = detail::find_dominated_ball_vertex(out.core, *balls);
        }
        if (!found)
            break;
        out.core.erase(std::lower_bound(out.core.begin(), out.core.end(), found->vertex));
        out.removal_log.push_back(*found);
    }
    return out;
}

/// Exhaustive check of one core removal: no set of at most k vertices
/// r-dominates Z - w while missing w. nullopt when more than `limit`
/// candidate sets would have to be enumerated.
inline std::optional<bool> core_removal_sound(const Graph &g, const VertexSet &z_set, Vertex w, int k, int r,
                                              std::size_t limit = 1'000'000)
{
    check_vertex(g, w);
    auto balls = detail::all_balls(g, r);
    VertexSet rest = z_set;
    rest.erase(std::remove(rest.begin(), rest.end(), w), rest.end());
    if (rest.empty())
        return false;
    // Candidates are the vertices whose ball misses w; superset-closed, so
    // only sets of the largest possible size need checking.
    std::vector<Vertex> cand;
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v)
        if (!contains(balls[static_cast<std::size_t>(v)], w))
            cand.push_back(v);
    const int n = static_cast<int>(cand.size());
    const int size = std::min(k, n);
    double count = 1;
    for (int i = 0; i < size; ++i)
        count = count * (n - i) / (i + 1);
    if (count > static_cast<double>(limit))
        return std::nullopt;
    if (size == 0)
        return true;

    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i)
        pick[static_cast<std::size_t>(i)] = i;
    VertexMask covered(g.order(), 0);
    while (true) {
        std::fill(covered.begin(), covered.end(), 0);
        for (int i : pick)
            for (Vertex x : balls[static_cast<std::size_t>(cand[static_cast<std::size_t>(i)])])
                covered[static_cast<std::size_t>(x)] = 1;
        if (std::all_of(rest.begin(), rest.end(), [&](Vertex z) { return covered[static_cast<std::size_t>(z)]; }))
            return false;
        int i = size - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i)
            --i;
        if (i < 0)
            return true;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j) - 1] + 1;
    }
}

/// Grows X until every outside vertex has an r-projection of at most p
/// vertices onto it, adding the worst offender (smallest id on ties) each
/// round.
inline VertexSet closure(const Graph &g, VertexSet x_set, int r, std::size_t p)
{
    if (p < 1)
        throw InputError("closure threshold must be positive");
    x_set = make_set(std::move(x_set));
    for (Vertex v : x_set)
        check_vertex(g, v);
    VertexMask in_x = make_mask(g.order(), x_set);
    BfsScratch bfs(g.order());
    while (true) {
        Vertex worst = -1;
        std::size_t worst_count = p;
        for (std::size_t u = 0; u < g.order(); ++u) {
            if (in_x[u])
                continue;
            std::size_t count = 0;
            bfs.run(g, static_cast<Vertex>(u), r, nullptr, &in_x, [&](Vertex v, int) {
                if (in_x[static_cast<std::size_t>(v)])
                    ++count;
            });
            if (count > worst_count) {
                worst = static_cast<Vertex>(u);
                worst_count = count;
            }
        }
        if (worst < 0)
            break;
        in_x[static_cast<std::size_t>(worst)] = 1;
        x_set.insert(std::upper_bound(x_set.begin(), x_set.end(), worst), worst);
    }
    return x_set;
}

/// Adds, for every pair u < v of X at distance at most r, the vertices of the
/// lexicographically least shortest u-v path, so G[X'] keeps those distances.
inline VertexSet path_closure(const Graph &g, VertexSet x_set, int r)
{
    x_set = make_set(std::move(x_set));
    for (Vertex v : x_set)
        check_vertex(g, v);
    VertexMask in_out = make_mask(g.order(), x_set);
    BfsScratch bfs(g.order());
    for (Vertex v : x_set) {
        bfs.run(g, v, r, [](Vertex, int) {});
        for (Vertex u : x_set) {
            if (u >= v || bfs.dist(u) == BfsScratch::unreached)
                continue;
            for (Vertex cur = u; cur != v;) {
                int want = bfs.dist(cur) - 1;
                for (Vertex w : g.neighbors(cur)) {
                    if (bfs.dist(w) == want) {
                        cur = w;
                        break;
                    }
                }
                in_out[static_cast<std::size_t>(cur)] = 1;
            }
        }
    }
    VertexSet out;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (in_out[v])
            out.push_back(static_cast<Vertex>(v));
    return out;
}

enum class DsrMode { standard, compact };

struct DsrOptions {
    DsrMode mode = DsrMode::standard;
    /// Closure threshold p for compact mode; max(2, ceil(sqrt|Z|)) when unset.
    std::optional<std::size_t> closure_threshold;
    /// Largest number of (k-1)-subsets enumerated to confirm that source and
    /// target are minimum in compact mode.
    std::size_t minimality_limit = 1'000'000;
};

namespace detail {

/// Whether some set of `size` vertices r-dominates `targets`; nullopt when
/// there are more than `limit` candidate sets.
inline std::optional<bool> exists_dominator_of_size(const Graph &g, const VertexSet &targets, int r, int size,
                                                     std::size_t limit)
{
    const auto n = static_cast<int>(g.order());
    if (size < 0 || size > n)
        return false;
    double count = 1;
    for (int i = 0; i < size; ++i)
        count = count * (n - i) / (i + 1);
    if (count > static_cast<double>(limit))
        return std::nullopt;

    auto balls = all_balls(g, r);
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i)
        pick[static_cast<std::size_t>(i)] = i;
    VertexMask covered(g.order(), 0);
    while (true) {
        std::fill(covered.begin(), covered.end(), 0);
        for (int v : pick)
            for (Vertex w : balls[static_cast<std::size_t>(v)])
                covered[static_cast<std::size_t>(w)] = 1;
        if (std::all_of(targets.begin(), targets.end(), [&](Vertex z) { return covered[static_cast<std::size_t>(z)]; }))
            return true;
        int i = size - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i)
            --i;
        if (i < 0)
            return false;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j) - 1] + 1;
    }
}

/// Union of parent chains from `root` to every reached vertex of `leaves`.
/// With `stop` set, the search does not expand through stop vertices (other
/// than the root) and chains only run through non-stop vertices. Parents are
/// the smallest-id neighbor one layer closer.
inline void add_bfs_tree(const Graph &g, Vertex root, int r, const VertexMask &leaves, const VertexMask *stop,
                         BfsScratch &bfs, VertexMask &out)
{
    out[static_cast<std::size_t>(root)] = 1;
    if (stop && (*stop)[static_cast<std::size_t>(root)])
        return;
    bfs.run(g, root, r, nullptr, stop, [](Vertex, int) {});
    auto usable_parent = [&](Vertex w) { return w == root || !stop || !(*stop)[static_cast<std::size_t>(w)]; };
    for (Vertex leaf : bfs.reached()) {
        if (!leaves[static_cast<std::size_t>(leaf)])
            continue;
        for (Vertex cur = leaf; cur != root;) {
            out[static_cast<std::size_t>(cur)] = 1;
            int want = bfs.dist(cur) - 1;
            Vertex next = -1;
            for (Vertex w : g.neighbors(cur)) {
                if (bfs.dist(w) == want && usable_parent(w)) {
                    next = w;
                    break;
                }
            }
            if (next < 0)
                throw std::logic_error("BFS tree lost its parent chain");
            cur = next;
        }
    }
}

inline VertexSet ball_within(const Graph &g, Vertex v, int r, const VertexSet &within, BfsScratch &bfs)
{
    VertexSet out;
    bfs.run(g, v, r, [&](Vertex w, int) {
        if (contains(within, w))
            out.push_back(w);
    });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// Reduces an r-DSR (or r-ZDSR) instance to an equivalent annotated r-ZDSR
/// instance on an induced subgraph.
///
/// Standard mode keeps source, target, a domination core Z, one
/// representative per r-projection class onto Z, and for each
/// representative and token a depth-r BFS tree whose leaves are the
/// reachable Z vertices.
///
/// Compact mode needs minimum source and target. It replaces Z by its
/// closure Z' and the path closure Z'' of Z', and stops the BFS trees at Z'.
inline KernelReport kernelize_dsr(const Instance &inst, const UqwConfig &cfg = {}, const DsrOptions &opts = {})
{
    validate(inst);
    if (!inst.is_domination())
        throw InputError("kernelize_dsr expects a dsr or zdsr instance");
    const Graph &g = inst.graph;
    const int r = inst.r;
    const VertexSet required = inst.dominated_set();
    const bool compact = opts.mode == DsrMode::compact;

    KernelReport report;
    report.stats.original_order = g.order();
    report.stats.original_size = g.size();

    if (compact) {
        auto smaller = detail::exists_dominator_of_size(g, required, r, inst.k - 1, opts.minimality_limit);
        if (!smaller)
            report.warnings.push_back("minimality of source and target not verified: too many " +
                                      std::to_string(inst.k - 1) + "-subsets to enumerate");
        else if (*smaller)
            throw InputError("compact mode requires minimum source and target: a dominator with " +
                             std::to_string(inst.k - 1) + " vertices exists");
    }

    // Every state of size hi is a superset of a neighboring state of size
    // hi - 1, so the core only has to handle sets up to hi - 1.
    DominationCore core = compute_core(g, inst.window.hi - 1, r, cfg, required);
    const VertexSet &z = core.core;
    report.stats.core_size = z.size();

    VertexSet stop_set = z;
    VertexSet kept_closure = z;
    if (compact) {
        std::size_t p = opts.closure_threshold.value_or(
            std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(z.size()))))));
        stop_set = closure(g, z, r, p);
        kept_closure = path_closure(g, stop_set, r);
        report.stats.closure_threshold = p;
        report.stats.closure_size = stop_set.size();
        report.stats.path_closure_size = kept_closure.size();
    }

    ProfilePartition part = partition_by_profile(g, z, set_difference(g.vertices(), z), r);
    report.stats.profile_classes = part.classes.size();
    VertexSet reps;
    for (const auto &cls : part.classes)
        reps.push_back(cls.members.front());
    reps = make_set(std::move(reps));
    const VertexSet roots = set_union(reps, set_union(inst.source, inst.target));

    VertexMask keep = make_mask(g.order(), set_union(kept_closure, roots));
    BfsScratch bfs(g.order());
    const VertexMask z_mask = make_mask(g.order(), z);
    const VertexMask stop_mask = make_mask(g.order(), stop_set);
    for (Vertex v : roots) {
        if (compact)
            detail::add_bfs_tree(g, v, r, stop_mask, &stop_mask, bfs, keep);
        else
            detail::add_bfs_tree(g, v, r, z_mask, nullptr, bfs, keep);
    }

    VertexSet keep_set;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (keep[v])
            keep_set.push_back(static_cast<Vertex>(v));
    auto sub = induced_subgraph(g, keep_set);

    // Representatives and tokens must see exactly the same core vertices
    // (standard) or the same core distances (compact) as in G.
    BfsScratch sub_bfs(sub.graph.order());
    for (Vertex v : roots) {
        bfs.run(g, v, r, [](Vertex, int) {});
        std::vector<std::pair<Vertex, int>> in_g;
        for (Vertex w : bfs.reached())
            if (z_mask[static_cast<std::size_t>(w)])
                in_g.emplace_back(w, bfs.dist(w));
        std::sort(in_g.begin(), in_g.end());

        std::vector<std::pair<Vertex, int>> in_sub;
        sub_bfs.run(sub.graph, sub.relabel[static_cast<std::size_t>(v)], r, [](Vertex, int) {});
        for (Vertex w : sub_bfs.reached()) {
            Vertex ow = sub.origin[static_cast<std::size_t>(w)];
            if (z_mask[static_cast<std::size_t>(ow)])
                in_sub.emplace_back(ow, sub_bfs.dist(w));
        }
        std::sort(in_sub.begin(), in_sub.end());

        bool same = compact ? in_g == in_sub : std::equal(in_g.begin(), in_g.end(), in_sub.begin(), in_sub.end(),
                                                           [](auto &a, auto &b) { return a.first == b.first; });
        if (!same)
            throw std::logic_error("kernel does not preserve the core neighborhood of vertex " + std::to_string(v));
    }
    if (compact) {
        VertexMask in_closure = stop_mask;
        for (std::size_t u = 0; u < g.order(); ++u) {
            if (in_closure[u])
                continue;
            std::size_t count = 0;
            bfs.run(g, static_cast<Vertex>(u), r, nullptr, &in_closure, [&](Vertex w, int) {
                if (in_closure[static_cast<std::size_t>(w)])
                    ++count;
            });
            if (count > *report.stats.closure_threshold)
                throw std::logic_error("closure bound violated at vertex " + std::to_string(u));
        }
    }

    for (const auto &rv : core.removal_log)
        report.log.push_back({rv.vertex, std::string(rv.rule), rv.deletion_set_size, rv.class_key_hash, rv.class_size});
    for (std::size_t v = 0; v < g.order(); ++v)
        if (!keep[v])
            report.log.push_back({static_cast<Vertex>(v), std::string(rule::outside_kernel), 0, 0, 0});

    Instance reduced = inst;
    reduced.problem = Problem::zdsr;
    reduced.graph = std::move(sub.graph);
    reduced.source = relabel_set(inst.source, sub.relabel);
    reduced.target = relabel_set(inst.target, sub.relabel);
    reduced.annotation = relabel_set(z, sub.relabel);
    report.stats.reduced_order = reduced.graph.order();
    report.stats.reduced_size = reduced.graph.size();
    report.relabel = std::move(sub.relabel);
    report.origin = std::move(sub.origin);
    report.reduced = std::move(reduced);
    return report;
}

} // namespace reconf

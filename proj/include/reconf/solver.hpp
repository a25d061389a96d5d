#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "instance.hpp"

namespace reconf {

/// A token placement: strictly increasing vertex ids.
using StateKey = std::vector<Vertex>;

enum class Verdict { yes, no, exhausted };

inline std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::yes:
        return "yes";
    case Verdict::no:
        return "no";
    case Verdict::exhausted:
        return "exhausted";
    }
    return "?";
}

struct SolveOptions {
    std::size_t state_cap = 5'000'000;
    bool want_sequence = false;
    /// Search the token-jump graph on k-sets instead of the two-level state
    /// space. Only used with the default window; otherwise ignored.
    bool fast = false;
};

struct SolveResult {
    Verdict verdict = Verdict::no;
    std::optional<std::vector<StateKey>> sequence;
    std::size_t states_explored = 0;
};

/// Precomputed r-balls for repeated feasibility tests on one instance.
class FeasibilityOracle {
public:
    explicit FeasibilityOracle(const Instance &inst)
        : inst_(inst), balls_(inst.graph.order()), covered_(inst.graph.order(), 0), dominated_(inst.dominated_set())
    {
        BfsScratch bfs(inst.graph.order());
        for (Vertex v = 0; static_cast<std::size_t>(v) < inst.graph.order(); ++v) {
            bfs.run(inst.graph, v, inst.r, [](Vertex, int) {});
            balls_[static_cast<std::size_t>(v)].assign(bfs.reached().begin(), bfs.reached().end());
            std::sort(balls_[static_cast<std::size_t>(v)].begin(), balls_[static_cast<std::size_t>(v)].end());
        }
    }

    bool feasible(const StateKey &state)
    {
        if (inst_.problem == Problem::isr) {
            for (std::size_t i = 0; i < state.size(); ++i)
                for (std::size_t j = i + 1; j < state.size(); ++j)
                    if (contains(balls_[static_cast<std::size_t>(state[i])], state[j]))
                        return false;
            return true;
        }
        std::fill(covered_.begin(), covered_.end(), 0);
        for (Vertex v : state)
            for (Vertex w : balls_[static_cast<std::size_t>(v)])
                covered_[static_cast<std::size_t>(w)] = 1;
        return std::all_of(dominated_.begin(), dominated_.end(),
                           [&](Vertex z) { return covered_[static_cast<std::size_t>(z)] != 0; });
    }

private:
    const Instance &inst_;
    std::vector<VertexSet> balls_;
    VertexMask covered_;
    VertexSet dominated_;
};

/// Independence (isr) or domination of the required set (dsr, zdsr).
inline bool is_feasible(const Instance &inst, const StateKey &state)
{
    for (Vertex v : state)
        check_vertex(inst.graph, v);
    if (inst.problem == Problem::isr)
        return is_r_independent(inst.graph, state, inst.r);
    VertexSet z = inst.dominated_set();
    return r_dominates(inst.graph, state, z, inst.r);
}

namespace detail {

struct StateHash {
    std::size_t operator()(const StateKey &s) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (Vertex v : s) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline std::size_t symmetric_difference_size(const StateKey &a, const StateKey &b)
{
    std::size_t common = set_intersection(a, b).size();
    return (a.size() - common) + (b.size() - common);
}

} // namespace detail

/// Breadth-first search over feasible token placements. Neighbors are
/// expanded in lexicographic order, so sequences are reproducible.
inline SolveResult solve(const Instance &inst, const SolveOptions &opts = {})
{
    validate(inst);
    FeasibilityOracle oracle(inst);
    if (!oracle.feasible(inst.source) || !oracle.feasible(inst.target))
        throw InputError("source or target is infeasible");

    const auto n = static_cast<Vertex>(inst.graph.order());
    const Window w = inst.window;
    const bool collapsed = opts.fast && w == default_window(inst.problem, inst.k);

    std::vector<StateKey> states{inst.source};
    std::vector<std::size_t> parent{0};
    std::unordered_map<StateKey, std::size_t, detail::StateHash> index{{inst.source, 0}};

    auto finish = [&](Verdict v, std::optional<std::size_t> hit) {
        SolveResult res{v, std::nullopt, states.size()};
        if (hit && opts.want_sequence) {
            std::vector<StateKey> path;
            for (std::size_t i = *hit;; i = parent[i]) {
                path.push_back(states[i]);
                if (i == 0)
                    break;
            }
            std::reverse(path.begin(), path.end());
            if (collapsed) {
                // Re-insert the intermediate set of each jump.
                std::vector<StateKey> full{path.front()};
                for (std::size_t i = 1; i < path.size(); ++i) {
                    const StateKey &a = path[i - 1];
                    const StateKey &b = path[i];
                    full.push_back(inst.problem == Problem::isr ? set_intersection(a, b) : set_union(a, b));
                    full.push_back(b);
                }
                path = std::move(full);
            }
            res.sequence = std::move(path);
        }
        return res;
    };

    if (inst.source == inst.target)
        return finish(Verdict::yes, 0);

    std::vector<StateKey> next;
    for (std::size_t head = 0; head < states.size(); ++head) {
        const StateKey cur = states[head];
        next.clear();
        const int size = static_cast<int>(cur.size());
        auto in_cur = [&](Vertex y) { return std::binary_search(cur.begin(), cur.end(), y); };

        if (collapsed) {
            for (std::size_t i = 0; i < cur.size(); ++i) {
                StateKey base = cur;
                base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
                for (Vertex y = 0; y < n; ++y) {
                    if (in_cur(y))
                        continue;
                    StateKey cand = base;
                    cand.insert(std::upper_bound(cand.begin(), cand.end(), y), y);
                    if (oracle.feasible(cand))
                        next.push_back(std::move(cand));
                }
            }
        } else {
            if (size - 1 >= w.lo) {
                for (std::size_t i = 0; i < cur.size(); ++i) {
                    StateKey cand = cur;
                    cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(i));
                    if (oracle.feasible(cand))
                        next.push_back(std::move(cand));
                }
            }
            if (size + 1 <= w.hi) {
                for (Vertex y = 0; y < n; ++y) {
                    if (in_cur(y))
                        continue;
                    StateKey cand = cur;
                    cand.insert(std::upper_bound(cand.begin(), cand.end(), y), y);
                    if (oracle.feasible(cand))
                        next.push_back(std::move(cand));
                }
            }
        }
        std::sort(next.begin(), next.end());

        for (auto &cand : next) {
            if (index.contains(cand))
                continue;
            if (states.size() >= opts.state_cap)
                return finish(Verdict::exhausted, std::nullopt);
            bool hit = cand == inst.target;
            index.emplace(cand, states.size());
            states.push_back(std::move(cand));
            parent.push_back(head);
            if (hit)
                return finish(Verdict::yes, states.size() - 1);
        }
    }
    return finish(Verdict::no, std::nullopt);
}

/// Literal check of a reconfiguration sequence: starts at the source, ends
/// at the target, every set feasible and inside the window, and consecutive
/// sets differ in at most one vertex.
inline bool verify_sequence(const Instance &inst, const std::vector<StateKey> &seq)
{
    if (seq.empty() || seq.front() != inst.source || seq.back() != inst.target)
        return false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const StateKey &s = seq[i];
        if (make_set(s) != s)
            return false;
        if (!std::all_of(s.begin(), s.end(), [&](Vertex v) { return inst.graph.valid(v); }))
            return false;
        auto size = static_cast<int>(s.size());
        if (size < inst.window.lo || size > inst.window.hi)
            return false;
        if (!is_feasible(inst, s))
            return false;
        if (i > 0 && detail::symmetric_difference_size(seq[i - 1], s) > 1)
            return false;
    }
    return true;
}

} // namespace reconf

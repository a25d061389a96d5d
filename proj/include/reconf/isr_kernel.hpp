#pragma once

#include <optional>

#include "kernel_report.hpp"
#include "projection.hpp"
#include "quasi_wideness.hpp"

namespace reconf {

struct IrrelevantVertex {
    Vertex vertex = -1;
    std::size_t deletion_set_size = 0;
    std::uint64_t class_key_hash = 0;
    std::size_t class_size = 0;
};

/// Looks for a vertex whose deletion cannot change the answer of an r-ISR
/// instance.
///
/// Vertices outside source and target are grouped by their r-projection
/// profile onto source + target. Inside a large class a set B is sought that
/// is 2r-independent after deleting a small set S; B is then split by the
/// r-projection profile onto S. A sub-class with hi + 2 members (hi is the
/// upper end of the window, k by default) contains an irrelevant vertex: any
/// set of at most hi - 1 other tokens leaves two sub-class members free, so a
/// token on that vertex can always be rerouted to a free twin. The requested
/// size of B starts at hi + 2 and doubles up to the class size.
inline std::optional<IrrelevantVertex> find_irrelevant_vertex(const Instance &inst, const UqwConfig &cfg = {})
{
    if (inst.problem != Problem::isr)
        throw InputError("find_irrelevant_vertex expects an isr instance");
    const Graph &g = inst.graph;
    const VertexSet anchors = set_union(inst.source, inst.target);
    const auto need = static_cast<std::size_t>(inst.window.hi) + 2;

    ProfilePartition part = partition_by_profile(g, anchors, set_difference(g.vertices(), anchors), inst.r);
    std::stable_sort(part.classes.begin(), part.classes.end(),
                     [](const ProfileClass &a, const ProfileClass &b) { return a.members.size() > b.members.size(); });

    for (const auto &cls : part.classes) {
        const std::size_t size = cls.members.size();
        if (size < need)
            break;
        for (std::size_t m = need;; m = std::min(2 * m, size)) {
            auto witness = find_scattered(g, cls.members, 2 * inst.r, m, cfg);
            if (!witness)
                break;
            ProfilePartition sub = partition_by_profile(g, witness->deletion_set, witness->scattered_set, inst.r);
            for (const auto &twins : sub.classes)
                if (twins.members.size() >= need)
                    return IrrelevantVertex{twins.members.front(), witness->deletion_set.size(), key_hash(cls.key), size};
            if (m >= size)
                break;
        }
    }
    return std::nullopt;
}

/// Deletes irrelevant vertices one at a time, recomputing everything after
/// each deletion, until none is found. `audit` sees every single step.
inline KernelReport kernelize_isr(const Instance &inst, const UqwConfig &cfg = {}, const RemovalAudit &audit = {})
{
    validate(inst);
    if (inst.problem != Problem::isr)
        throw InputError("kernelize_isr expects an isr instance");

    Instance cur = inst;
    std::vector<Vertex> origin = inst.graph.vertices();
    KernelReport report;
    report.stats.original_order = inst.graph.order();
    report.stats.original_size = inst.graph.size();

    while (auto found = find_irrelevant_vertex(cur, cfg)) {
        const Vertex v = found->vertex;
        if (contains(cur.source, v) || contains(cur.target, v))
            throw std::logic_error("irrelevant vertex search returned a token vertex");

        VertexSet keep = cur.graph.vertices();
        keep.erase(keep.begin() + v);
        auto sub = induced_subgraph(cur.graph, keep);

        Instance next = cur;
        next.graph = std::move(sub.graph);
        next.source = relabel_set(cur.source, sub.relabel);
        next.target = relabel_set(cur.target, sub.relabel);

        ReductionEvent ev{origin[static_cast<std::size_t>(v)], std::string(rule::irrelevant_vertex),
                          found->deletion_set_size, found->class_key_hash, found->class_size};
        if (audit)
            audit(cur, next, ev);
        report.log.push_back(ev);

        std::vector<Vertex> next_origin(sub.origin.size());
        for (std::size_t i = 0; i < sub.origin.size(); ++i)
            next_origin[i] = origin[static_cast<std::size_t>(sub.origin[i])];
        origin = std::move(next_origin);
        cur = std::move(next);
    }

    const VertexSet anchors = set_union(cur.source, cur.target);
    report.stats.profile_classes =
        partition_by_profile(cur.graph, anchors, set_difference(cur.graph.vertices(), anchors), cur.r).classes.size();
    report.stats.reduced_order = cur.graph.order();
    report.stats.reduced_size = cur.graph.size();
    report.relabel = relabel_from_origin(inst.graph.order(), origin);
    report.origin = std::move(origin);
    report.reduced = std::move(cur);
    return report;
}

} // namespace reconf

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "instance.hpp"

namespace reconf {

namespace rule {
/// ISR: vertex deleted from the graph.
inline constexpr std::string_view irrelevant_vertex = "irrelevant-vertex";
/// DSR: vertex dropped from the domination core by the scattered-set pigeonhole.
inline constexpr std::string_view core_redundant = "core-redundant";
/// DSR: vertex dropped from the core because another core vertex's r-ball
/// lies inside its own.
inline constexpr std::string_view core_dominated_ball = "core-dominated-ball";
/// DSR: vertex deleted from the graph because the kernel does not use it.
inline constexpr std::string_view outside_kernel = "outside-kernel";
} // namespace rule

struct ReductionEvent {
    /// Id in the original instance.
    Vertex vertex = -1;
    std::string rule;
    std::size_t deletion_set_size = 0;
    std::uint64_t class_key_hash = 0;
    std::size_t class_size = 0;

    bool deletes_vertex() const { return rule == rule::irrelevant_vertex || rule == rule::outside_kernel; }

    friend bool operator==(const ReductionEvent &, const ReductionEvent &) = default;
};

struct KernelStats {
    std::size_t original_order = 0;
    std::size_t original_size = 0;
    std::size_t reduced_order = 0;
    std::size_t reduced_size = 0;
    std::size_t profile_classes = 0;
    std::optional<std::size_t> core_size;
    std::optional<std::size_t> closure_size;
    std::optional<std::size_t> path_closure_size;
    std::optional<std::size_t> closure_threshold;
};

struct KernelReport {
    Instance reduced;
    /// original id -> reduced id, -1 when deleted.
    std::vector<Vertex> relabel;
    /// reduced id -> original id.
    std::vector<Vertex> origin;
    std::vector<ReductionEvent> log;
    KernelStats stats;
    std::vector<std::string> warnings;
};

/// Called once per deleted vertex with the instance before and after.
using RemovalAudit = std::function<void(const Instance &before, const Instance &after, const ReductionEvent &)>;

inline VertexSet relabel_set(const VertexSet &s, const std::vector<Vertex> &relabel)
{
    VertexSet out;
    out.reserve(s.size());
    for (Vertex v : s) {
        Vertex nv = relabel[static_cast<std::size_t>(v)];
        if (nv < 0)
            throw std::logic_error("vertex " + std::to_string(v) + " has no image under the relabeling");
        out.push_back(nv);
    }
    return make_set(std::move(out));
}

inline std::vector<Vertex> relabel_from_origin(std::size_t original_order, const std::vector<Vertex> &origin)
{
    std::vector<Vertex> relabel(original_order, -1);
    for (std::size_t i = 0; i < origin.size(); ++i)
        relabel[static_cast<std::size_t>(origin[i])] = static_cast<Vertex>(i);
    return relabel;
}

/// Replays a removal log on the original instance. Domination instances come
/// back annotated.
inline Instance apply_log(const Instance &original, const std::vector<ReductionEvent> &log)
{
    const std::size_t n = original.graph.order();
    VertexMask deleted(n, 0);
    std::optional<VertexMask> in_z;
    if (original.is_domination())
        in_z = make_mask(n, original.dominated_set());
    for (const auto &ev : log) {
        check_vertex(original.graph, ev.vertex);
        if (ev.deletes_vertex())
            deleted[static_cast<std::size_t>(ev.vertex)] = 1;
        else if (in_z)
            (*in_z)[static_cast<std::size_t>(ev.vertex)] = 0;
    }
    VertexSet keep;
    for (std::size_t v = 0; v < n; ++v)
        if (!deleted[v])
            keep.push_back(static_cast<Vertex>(v));
    auto sub = induced_subgraph(original.graph, keep);

    Instance out = original;
    out.graph = std::move(sub.graph);
    out.source = relabel_set(original.source, sub.relabel);
    out.target = relabel_set(original.target, sub.relabel);
    if (in_z) {
        VertexSet z;
        for (std::size_t v = 0; v < n; ++v)
            if ((*in_z)[v] && !deleted[v])
                z.push_back(sub.relabel[v]);
        out.problem = Problem::zdsr;
        out.annotation = std::move(z);
    }
    return out;
}

} // namespace reconf

#pragma once

#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "kernel_report.hpp"
#include "solver.hpp"

namespace reconf {

struct GraphSize {
    std::size_t n = 0;
    std::size_t m = 0;
    friend bool operator==(const GraphSize &, const GraphSize &) = default;
};

/// Machine-readable result of one CLI command. Absent fields are omitted
/// from the JSON form; field names are stable.
struct Report {
    std::string command;
    std::optional<std::string> problem;
    std::optional<std::string> verdict;
    std::optional<std::string> verdict_original;
    std::optional<std::string> verdict_reduced;
    std::optional<bool> equivalent;
    std::optional<std::size_t> states_explored;
    std::optional<std::size_t> states_explored_reduced;
    std::optional<GraphSize> original;
    std::optional<GraphSize> reduced;
    std::optional<std::size_t> core_size;
    std::optional<std::size_t> profile_classes;
    std::optional<std::size_t> closure_size;
    std::optional<std::size_t> path_closure_size;
    std::optional<std::size_t> closure_threshold;
    std::optional<std::size_t> audited_steps;
    std::map<std::string, double> timings_ms;
    /// (original id, reduced id) for every kept vertex.
    std::vector<std::pair<Vertex, Vertex>> relabeling;
    std::vector<ReductionEvent> log;
    std::vector<std::string> warnings;
    std::optional<std::vector<StateKey>> sequence;
    std::optional<std::string> kernel;

    friend bool operator==(const Report &, const Report &) = default;
};

namespace detail {

template <class T>
void put(nlohmann::json &j, const char *key, const std::optional<T> &v)
{
    if (v)
        j[key] = *v;
}

template <class T>
void get(const nlohmann::json &j, const char *key, std::optional<T> &v)
{
    if (auto it = j.find(key); it != j.end())
        v = it->template get<T>();
}

} // namespace detail

inline nlohmann::json to_json(const Report &r)
{
    using nlohmann::json;
    json j;
    j["command"] = r.command;
    detail::put(j, "problem", r.problem);
    detail::put(j, "verdict", r.verdict);
    detail::put(j, "verdict_original", r.verdict_original);
    detail::put(j, "verdict_reduced", r.verdict_reduced);
    detail::put(j, "equivalent", r.equivalent);
    detail::put(j, "states_explored", r.states_explored);
    detail::put(j, "states_explored_reduced", r.states_explored_reduced);
    if (r.original)
        j["original"] = {{"n", r.original->n}, {"m", r.original->m}};
    if (r.reduced)
        j["reduced"] = {{"n", r.reduced->n}, {"m", r.reduced->m}};
    detail::put(j, "core_size", r.core_size);
    detail::put(j, "profile_classes", r.profile_classes);
    detail::put(j, "closure_size", r.closure_size);
    detail::put(j, "path_closure_size", r.path_closure_size);
    detail::put(j, "closure_threshold", r.closure_threshold);
    detail::put(j, "audited_steps", r.audited_steps);
    if (!r.timings_ms.empty())
        j["timings_ms"] = r.timings_ms;
    if (!r.relabeling.empty()) {
        json table = json::array();
        for (auto [o, n] : r.relabeling)
            table.push_back({o, n});
        j["relabeling"] = std::move(table);
    }
    if (!r.log.empty()) {
        json log = json::array();
        for (const auto &ev : r.log)
            log.push_back({{"vertex", ev.vertex},
                           {"rule", ev.rule},
                           {"deletion_set_size", ev.deletion_set_size},
                           {"class_key_hash", ev.class_key_hash},
                           {"class_size", ev.class_size}});
        j["log"] = std::move(log);
    }
    if (!r.warnings.empty())
        j["warnings"] = r.warnings;
    detail::put(j, "sequence", r.sequence);
    detail::put(j, "kernel", r.kernel);
    return j;
}

inline Report report_from_json(const nlohmann::json &j)
{
    Report r;
    r.command = j.at("command").get<std::string>();
    detail::get(j, "problem", r.problem);
    detail::get(j, "verdict", r.verdict);
    detail::get(j, "verdict_original", r.verdict_original);
    detail::get(j, "verdict_reduced", r.verdict_reduced);
    detail::get(j, "equivalent", r.equivalent);
    detail::get(j, "states_explored", r.states_explored);
    detail::get(j, "states_explored_reduced", r.states_explored_reduced);
    if (auto it = j.find("original"); it != j.end())
        r.original = GraphSize{it->at("n").get<std::size_t>(), it->at("m").get<std::size_t>()};
    if (auto it = j.find("reduced"); it != j.end())
        r.reduced = GraphSize{it->at("n").get<std::size_t>(), it->at("m").get<std::size_t>()};
    detail::get(j, "core_size", r.core_size);
    detail::get(j, "profile_classes", r.profile_classes);
    detail::get(j, "closure_size", r.closure_size);
    detail::get(j, "path_closure_size", r.path_closure_size);
    detail::get(j, "closure_threshold", r.closure_threshold);
    detail::get(j, "audited_steps", r.audited_steps);
    if (auto it = j.find("timings_ms"); it != j.end())
        r.timings_ms = it->get<std::map<std::string, double>>();
    if (auto it = j.find("relabeling"); it != j.end())
        for (const auto &row : *it)
            r.relabeling.emplace_back(row.at(0).get<Vertex>(), row.at(1).get<Vertex>());
    if (auto it = j.find("log"); it != j.end())
        for (const auto &ev : *it)
            r.log.push_back({ev.at("vertex").get<Vertex>(), ev.at("rule").get<std::string>(),
                             ev.at("deletion_set_size").get<std::size_t>(), ev.at("class_key_hash").get<std::uint64_t>(),
                             ev.at("class_size").get<std::size_t>()});
    if (auto it = j.find("warnings"); it != j.end())
        r.warnings = it->get<std::vector<std::string>>();
    detail::get(j, "sequence", r.sequence);
    detail::get(j, "kernel", r.kernel);
    return r;
}

/// Copies sizes, statistics, relabeling and log of a kernel run.
inline void fill_kernel_fields(Report &r, const KernelReport &k)
{
    r.original = GraphSize{k.stats.original_order, k.stats.original_size};
    r.reduced = GraphSize{k.stats.reduced_order, k.stats.reduced_size};
    r.profile_classes = k.stats.profile_classes;
    r.core_size = k.stats.core_size;
    r.closure_size = k.stats.closure_size;
    r.path_closure_size = k.stats.path_closure_size;
    r.closure_threshold = k.stats.closure_threshold;
    r.relabeling.clear();
    for (std::size_t i = 0; i < k.origin.size(); ++i)
        r.relabeling.emplace_back(k.origin[i], static_cast<Vertex>(i));
    r.log = k.log;
    r.warnings.insert(r.warnings.end(), k.warnings.begin(), k.warnings.end());
}

} // namespace reconf

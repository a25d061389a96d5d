#pragma once

#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "instance.hpp"

namespace reconf {

/// Instance text format, one directive per line:
///
///     reconfig 1
///     problem isr|dsr|zdsr
///     r <int>
///     k <int>
///     window <lo> <hi>        optional, defaults to the problem's window
///     n <int>
///     e <u> <v>               zero or more
///     s <v...>
///     t <v...>
///     z <v...>                required iff problem is zdsr
///
/// Blank lines and lines starting with '#' are ignored. `n` must precede
/// the lines that name vertices.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string &msg)
        : InputError("line " + std::to_string(line) + ": " + msg), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline long long parse_int(std::string_view tok, std::size_t line)
{
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return v;
}

} // namespace detail

inline Instance parse_instance(std::string_view text)
{
    std::map<std::string, std::size_t> seen;
    std::optional<Problem> problem;
    std::optional<int> r, k;
    std::optional<Window> window;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::map<Edge, std::size_t> edge_line;
    std::optional<VertexSet> source, target, annotation;
    bool header = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tok = detail::split_ws(line);
        if (tok.empty() || tok[0].front() == '#')
            continue;
        const std::string key(tok[0]);

        if (!header) {
            if (key != "reconfig" || tok.size() != 2 || tok[1] != "1")
                throw ParseError(line_no, "expected header 'reconfig 1'");
            header = true;
            continue;
        }
        if (key != "e" && !seen.emplace(key, line_no).second)
            throw ParseError(line_no, "duplicate '" + key + "' line");

        auto ints = [&](std::size_t from) {
            std::vector<long long> out;
            for (std::size_t i = from; i < tok.size(); ++i)
                out.push_back(detail::parse_int(tok[i], line_no));
            return out;
        };
        auto need_n = [&] {
            if (!n)
                throw ParseError(line_no, "'" + key + "' before 'n'");
            return *n;
        };
        auto vertex_list = [&] {
            std::size_t nn = need_n();
            VertexSet out;
            for (long long v : ints(1)) {
                if (v < 0 || static_cast<std::size_t>(v) >= nn)
                    throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
                out.push_back(static_cast<Vertex>(v));
            }
            VertexSet set = make_set(out);
            if (set.size() != out.size())
                throw ParseError(line_no, "repeated vertex");
            return set;
        };
        auto single = [&](const char *what) {
            if (tok.size() != 2)
                throw ParseError(line_no, std::string("'") + what + "' takes exactly one value");
            return detail::parse_int(tok[1], line_no);
        };

        if (key == "problem") {
            if (tok.size() != 2 || !(problem = parse_problem(tok[1])))
                throw ParseError(line_no, "problem must be isr, dsr or zdsr");
        } else if (key == "r") {
            r = static_cast<int>(single("r"));
        } else if (key == "k") {
            k = static_cast<int>(single("k"));
        } else if (key == "window") {
            if (tok.size() != 3)
                throw ParseError(line_no, "'window' takes two values");
            auto v = ints(1);
            window = Window{static_cast<int>(v[0]), static_cast<int>(v[1])};
        } else if (key == "n") {
            long long v = single("n");
            if (v < 0)
                throw ParseError(line_no, "n must be non-negative");
            n = static_cast<std::size_t>(v);
        } else if (key == "e") {
            std::size_t nn = need_n();
            if (tok.size() != 3)
                throw ParseError(line_no, "'e' takes two vertices");
            auto v = ints(1);
            for (long long x : v)
                if (x < 0 || static_cast<std::size_t>(x) >= nn)
                    throw ParseError(line_no, "vertex " + std::to_string(x) + " out of range");
            if (v[0] == v[1])
                throw ParseError(line_no, "self-loop at vertex " + std::to_string(v[0]));
            Edge e{static_cast<Vertex>(std::min(v[0], v[1])), static_cast<Vertex>(std::max(v[0], v[1]))};
            if (auto [it, fresh] = edge_line.emplace(e, line_no); !fresh)
                throw ParseError(line_no, "parallel edge, first given on line " + std::to_string(it->second));
            edges.push_back(e);
        } else if (key == "s") {
            source = vertex_list();
        } else if (key == "t") {
            target = vertex_list();
        } else if (key == "z") {
            annotation = vertex_list();
        } else {
            throw ParseError(line_no, "unknown directive '" + key + "'");
        }
    }

    if (!header)
        throw ParseError(line_no, "missing header 'reconfig 1'");
    for (const char *required : {"problem", "r", "k", "n", "s", "t"})
        if (!seen.contains(required))
            throw ParseError(line_no, std::string("missing '") + required + "' line");
    if (*problem == Problem::zdsr && !annotation)
        throw ParseError(line_no, "zdsr instance requires a 'z' line");
    if (*problem != Problem::zdsr && annotation)
        throw ParseError(seen.at("z"), "'z' is only allowed for zdsr");

    Instance inst{*problem, Graph::from_edges(*n, edges), *r, *k, *source, *target,
                  window.value_or(default_window(*problem, *k)), annotation};
    try {
        validate(inst);
    } catch (const InputError &e) {
        std::string msg = e.what();
        std::string at = "k";
        if (msg.starts_with("source"))
            at = "s";
        else if (msg.starts_with("target"))
            at = "t";
        else if (msg.starts_with("annotation"))
            at = "z";
        else if (msg.starts_with("radius"))
            at = "r";
        else if (msg.find("window") != std::string::npos && seen.contains("window"))
            at = "window";
        throw ParseError(seen.at(at), msg);
    }
    return inst;
}

/// Canonical text: edges in lexicographic order, sets sorted, window
/// written only when it differs from the default.
inline std::string emit_instance(const Instance &inst)
{
    std::ostringstream out;
    auto set_line = [&](char tag, const VertexSet &s) {
        out << tag;
        for (Vertex v : s)
            out << ' ' << v;
        out << '\n';
    };
    out << "reconfig 1\n";
    out << "problem " << to_string(inst.problem) << '\n';
    out << "r " << inst.r << '\n';
    out << "k " << inst.k << '\n';
    if (inst.window != default_window(inst.problem, inst.k))
        out << "window " << inst.window.lo << ' ' << inst.window.hi << '\n';
    out << "n " << inst.graph.order() << '\n';
    for (auto [u, v] : inst.graph.edges())
        out << "e " << u << ' ' << v << '\n';
    set_line('s', inst.source);
    set_line('t', inst.target);
    if (inst.annotation)
        set_line('z', *inst.annotation);
    return out.str();
}

/// Kernel file: the reduced instance preceded by a comment line
/// "# origin <id...>" listing, for each reduced vertex, its original id.
inline std::string emit_kernel(const Instance &reduced, const std::vector<Vertex> &origin)
{
    std::ostringstream out;
    out << "# origin";
    for (Vertex v : origin)
        out << ' ' << v;
    out << '\n' << emit_instance(reduced);
    return out.str();
}

/// The relabeling table of a kernel file, nullopt when there is none.
inline std::optional<std::vector<Vertex>> parse_origin(std::string_view text)
{
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = std::min(text.find('\n', pos), text.size());
        auto tok = detail::split_ws(text.substr(pos, end - pos));
        pos = end + 1;
        if (tok.size() >= 2 && tok[0] == "#" && tok[1] == "origin") {
            std::vector<Vertex> origin;
            for (std::size_t i = 2; i < tok.size(); ++i)
                origin.push_back(static_cast<Vertex>(detail::parse_int(tok[i], 0)));
            return origin;
        }
    }
    return std::nullopt;
}

} // namespace reconf

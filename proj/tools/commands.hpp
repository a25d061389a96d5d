#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <reconf/reconf.hpp>

namespace reconf::cli {

enum Exit : int { ok = 0, usage = 1, exhausted = 2, mismatch = 3 };

/// A kernel or audit disagreed with the oracle.
class Mismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string output;
    std::string mode = "standard";
    int s_max = 20;
    std::size_t state_cap = 1'000'000;
    std::uint64_t seed = 0;
    bool paranoid = false;
    bool sequence = false;
    bool fast = false;

    std::string family;
    std::string problem = "isr";
    int n = 0, rows = 0, cols = 0, q = 0, s = 1;
    double p = 0.5;
    int r = 1, k = 2;
    bool quick = false;
};

inline std::uint64_t default_seed()
{
    if (const char *env = std::getenv("RECONFIG_SEED")) {
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(env, env + std::strlen(env), v);
        if (ec == std::errc() && *p == '\0')
            return v;
    }
    return 0;
}

inline std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw InputError("cannot write " + path);
}

inline DsrMode parse_mode(const std::string &s)
{
    if (s == "standard")
        return DsrMode::standard;
    if (s == "compact")
        return DsrMode::compact;
    throw InputError("--mode must be standard or compact");
}

class Stopwatch {
public:
    double lap_ms()
    {
        auto now = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

struct KernelRun {
    KernelReport kernel;
    std::size_t audited = 0;
};

/// Runs the kernel for the instance's problem. With `paranoid`, every ISR
/// deletion and every core removal is checked against an exhaustive oracle.
inline KernelRun run_kernel(const Instance &inst, const Options &opt, Report &rep)
{
    UqwConfig cfg{opt.s_max, opt.seed};
    KernelRun run;
    if (inst.problem == Problem::isr) {
        RemovalAudit audit;
        if (opt.paranoid) {
            audit = [&](const Instance &before, const Instance &after, const ReductionEvent &ev) {
                SolveOptions so{opt.state_cap};
                auto a = solve(before, so);
                auto b = solve(after, so);
                if (a.verdict == Verdict::exhausted || b.verdict == Verdict::exhausted) {
                    rep.warnings.push_back("audit of vertex " + std::to_string(ev.vertex) + " hit the state cap");
                    return;
                }
                if (a.verdict != b.verdict)
                    throw Mismatch("deleting vertex " + std::to_string(ev.vertex) + " changed the verdict");
                ++run.audited;
            };
        }
        run.kernel = kernelize_isr(inst, cfg, audit);
        return run;
    }

    DsrOptions dopt;
    dopt.mode = parse_mode(opt.mode);
    run.kernel = kernelize_dsr(inst, cfg, dopt);
    if (opt.paranoid) {
        VertexSet z = inst.dominated_set();
        const int k_core = inst.window.hi - 1;
        for (const auto &ev : run.kernel.log) {
            if (ev.deletes_vertex())
                continue;
            auto sound = core_removal_sound(inst.graph, z, ev.vertex, k_core, inst.r);
            if (!sound)
                rep.warnings.push_back("audit of core vertex " + std::to_string(ev.vertex) + " is too large");
            else if (!*sound)
                throw Mismatch("core removal of vertex " + std::to_string(ev.vertex) + " is unsound");
            else
                ++run.audited;
            z.erase(std::remove(z.begin(), z.end(), ev.vertex), z.end());
        }
    }
    return run;
}

inline int cmd_kernelize(const Options &opt, std::ostream &out)
{
    Stopwatch clock;
    Instance inst = parse_instance(read_file(opt.input));
    Report rep;
    rep.command = "kernelize";
    rep.problem = std::string(to_string(inst.problem));
    rep.timings_ms["parse"] = clock.lap_ms();

    auto run = run_kernel(inst, opt, rep);
    rep.timings_ms["kernelize"] = clock.lap_ms();
    fill_kernel_fields(rep, run.kernel);
    if (opt.paranoid)
        rep.audited_steps = run.audited;

    std::string text = emit_kernel(run.kernel.reduced, run.kernel.origin);
    if (opt.output.empty())
        rep.kernel = std::move(text);
    else
        write_file(opt.output, text);
    out << to_json(rep).dump(2) << '\n';
    return ok;
}

inline int cmd_solve(const Options &opt, std::ostream &out)
{
    Stopwatch clock;
    Instance inst = parse_instance(read_file(opt.input));
    Report rep;
    rep.command = "solve";
    rep.problem = std::string(to_string(inst.problem));
    rep.original = GraphSize{inst.graph.order(), inst.graph.size()};
    rep.timings_ms["parse"] = clock.lap_ms();

    SolveOptions so{opt.state_cap, opt.sequence, opt.fast};
    auto res = solve(inst, so);
    rep.timings_ms["solve"] = clock.lap_ms();
    rep.verdict = std::string(to_string(res.verdict));
    rep.states_explored = res.states_explored;
    if (res.sequence) {
        if (!verify_sequence(inst, *res.sequence))
            throw Mismatch("solver produced an invalid sequence");
        rep.sequence = std::move(res.sequence);
    }
    out << to_json(rep).dump(2) << '\n';
    return res.verdict == Verdict::exhausted ? exhausted : ok;
}

inline int cmd_verify(const Options &opt, std::ostream &out)
{
    Stopwatch clock;
    Instance inst = parse_instance(read_file(opt.input));
    Report rep;
    rep.command = "verify";
    rep.problem = std::string(to_string(inst.problem));
    rep.timings_ms["parse"] = clock.lap_ms();

    auto run = run_kernel(inst, opt, rep);
    rep.timings_ms["kernelize"] = clock.lap_ms();
    fill_kernel_fields(rep, run.kernel);
    if (opt.paranoid)
        rep.audited_steps = run.audited;

    SolveOptions so{opt.state_cap};
    auto a = solve(inst, so);
    rep.timings_ms["solve_original"] = clock.lap_ms();
    auto b = solve(run.kernel.reduced, so);
    rep.timings_ms["solve_reduced"] = clock.lap_ms();
    rep.verdict_original = std::string(to_string(a.verdict));
    rep.verdict_reduced = std::string(to_string(b.verdict));
    rep.states_explored = a.states_explored;
    rep.states_explored_reduced = b.states_explored;

    int code = ok;
    if (a.verdict == Verdict::exhausted || b.verdict == Verdict::exhausted) {
        code = exhausted;
    } else {
        rep.equivalent = a.verdict == b.verdict;
        if (!*rep.equivalent)
            code = mismatch;
    }
    out << to_json(rep).dump(2) << '\n';
    return code;
}

inline int cmd_gen(const Options &opt, std::ostream &out)
{
    auto family = parse_family(opt.family);
    if (!family)
        throw InputError("unknown family '" + opt.family + "'");
    auto problem = parse_problem(opt.problem);
    if (!problem || *problem == Problem::zdsr)
        throw InputError("--problem must be isr or dsr");

    std::optional<Instance> inst;
    if (*family == Family::gadget_js) {
        if (opt.input.empty())
            throw InputError("gadget_js needs --input with the base instance");
        if (*problem != Problem::isr)
            throw InputError("gadget_js produces isr instances");
        Instance base = parse_instance(read_file(opt.input));
        Gadget gadget = gadget_js(base.graph, opt.s);
        const int radius = 4 * opt.s - 1;
        if (base.problem == Problem::isr && base.r == 1)
            inst = make_isr(std::move(gadget.graph), radius, base.k, base.source, base.target, base.window);
        else
            inst = random_isr_instance(std::move(gadget.graph), radius, opt.k, opt.seed);
    } else {
        GenSpec spec{*family, opt.n, opt.rows, opt.cols, opt.p, opt.q, opt.s, opt.seed};
        Graph g = generate(spec);
        if (opt.r < 1 || opt.k < 1)
            throw InputError("--r and --k must be positive");
        inst = *problem == Problem::isr ? random_isr_instance(std::move(g), opt.r, opt.k, opt.seed)
                                        : random_dsr_instance(std::move(g), opt.r, opt.k, opt.seed);
    }
    if (!inst)
        throw InputError("no feasible source/target of size " + std::to_string(opt.k) + " on this graph");

    std::string text = emit_instance(*inst);
    if (opt.output.empty())
        out << text;
    else
        write_file(opt.output, text);
    return ok;
}

inline int cmd_bench(const Options &opt, std::ostream &out)
{
    using nlohmann::json;
    Stopwatch clock;
    json doc;
    doc["command"] = "bench";
    doc["seed"] = opt.seed;

    bool sane = true;
    json profiles = json::array();
    for (const auto &row : profile_suite(opt.seed)) {
        sane = sane && row.profiles <= row.order;
        profiles.push_back({{"graph", row.graph},
                            {"n", row.order},
                            {"r", row.r},
                            {"anchors", row.anchors},
                            {"profiles", row.profiles},
                            {"profiles_per_anchor", row.per_anchor}});
    }
    doc["profile_counts"] = std::move(profiles);
    doc["timings_ms"]["profile_counts"] = clock.lap_ms();

    UqwConfig cfg{opt.s_max, opt.seed};
    json kernels = json::array();
    std::vector<int> lengths = opt.quick ? std::vector<int>{50, 100, 200} : std::vector<int>{100, 400, 1600};
    for (const auto &row : isr_path_kernels(lengths, cfg))
        kernels.push_back({{"graph", row.graph}, {"n", row.order}, {"r", row.r}, {"k", row.k},
                           {"reduced_n", row.reduced_order}});
    doc["isr_kernels"] = std::move(kernels);
    doc["timings_ms"]["isr_kernels"] = clock.lap_ms();

    json cores = json::array();
    std::vector<int> sides = opt.quick ? std::vector<int>{4, 6} : std::vector<int>{4, 6, 8, 10};
    for (const auto &row : grid_cores(sides, 1, 2, cfg))
        cores.push_back({{"graph", row.graph}, {"n", row.order}, {"r", row.r}, {"k", row.k},
                         {"core_size", *row.core_size}});
    doc["cores"] = std::move(cores);
    doc["timings_ms"]["cores"] = clock.lap_ms();
    doc["sane"] = sane;

    out << doc.dump(2) << '\n';
    return sane ? ok : mismatch;
}

/// Parses `args` (without the program name) and runs one subcommand.
inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Token-jumping reconfiguration kernels and exact solver", "reconfig"};
    app.require_subcommand(1);
    Options opt;
    opt.seed = default_seed();

    auto add_input = [&](CLI::App *sub) { sub->add_option("input", opt.input, "instance file")->required(); };
    auto add_kernel_flags = [&](CLI::App *sub) {
        sub->add_option("--mode", opt.mode, "dsr kernel mode")->check(CLI::IsMember({"standard", "compact"}));
        sub->add_option("--s-max", opt.s_max, "largest deletion set in the scattered-set search");
        sub->add_option("--seed", opt.seed, "candidate order seed (default $RECONFIG_SEED or 0)");
        sub->add_option("--state-cap", opt.state_cap, "solver state limit");
        sub->add_flag("--paranoid", opt.paranoid, "check every reduction step against the exhaustive oracle");
    };

    auto *kern = app.add_subcommand("kernelize", "reduce an instance");
    add_input(kern);
    add_kernel_flags(kern);
    kern->add_option("-o,--output", opt.output, "kernel file (default: embed in the report)");

    auto *slv = app.add_subcommand("solve", "decide an instance exactly");
    add_input(slv);
    slv->add_option("--state-cap", opt.state_cap, "solver state limit");
    slv->add_flag("--sequence", opt.sequence, "report a reconfiguration sequence");
    slv->add_flag("--fast", opt.fast, "search size-k sets only (default windows)");

    auto *ver = app.add_subcommand("verify", "kernelize, solve both, compare");
    add_input(ver);
    add_kernel_flags(ver);

    auto *gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--family", opt.family, "path|cycle|grid|gnp|subdivided_clique|gadget_js")->required();
    gen->add_option("--problem", opt.problem, "isr|dsr");
    gen->add_option("--n", opt.n);
    gen->add_option("--rows", opt.rows);
    gen->add_option("--cols", opt.cols);
    gen->add_option("--p", opt.p);
    gen->add_option("--q", opt.q);
    gen->add_option("--s", opt.s, "subdivision length");
    gen->add_option("--r", opt.r, "radius");
    gen->add_option("--k", opt.k, "token count");
    gen->add_option("--seed", opt.seed);
    gen->add_option("--input", opt.input, "base instance for gadget_js");
    gen->add_option("-o,--output", opt.output);

    auto *bench = app.add_subcommand("bench", "profile counts, kernel and core sizes");
    bench->add_option("--seed", opt.seed);
    bench->add_option("--s-max", opt.s_max);
    bench->add_flag("--quick", opt.quick, "smaller graphs");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "reconfig: " << e.what() << '\n';
        return usage;
    }

    try {
        if (kern->parsed())
            return cmd_kernelize(opt, out);
        if (slv->parsed())
            return cmd_solve(opt, out);
        if (ver->parsed())
            return cmd_verify(opt, out);
        if (gen->parsed())
            return cmd_gen(opt, out);
        return cmd_bench(opt, out);
    } catch (const InputError &e) {
        err << "reconfig: " << e.what() << '\n';
        return usage;
    } catch (const Mismatch &e) {
        err << "reconfig: verification mismatch: " << e.what() << '\n';
        return mismatch;
    } catch (const std::logic_error &e) {
        err << "reconfig: internal check failed: " << e.what() << '\n';
        return mismatch;
    }
}

} // namespace reconf::cli

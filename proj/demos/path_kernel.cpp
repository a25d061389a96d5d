// Kernelizes 1-ISR on long paths and shows that the reduced order stops
// growing with the path length.
#include <iostream>

#include <reconf/reconf.hpp>

int main()
{
    using namespace reconf;
    for (int n : {20, 50, 100, 200}) {
        Instance inst = make_isr(path_graph(n), 1, 3, {0, 4, 8}, {2, 6, 10});
        KernelReport rep = kernelize_isr(inst);
        SolveResult before = solve(inst, {.state_cap = 2'000'000});
        SolveResult after = solve(rep.reduced);
        std::cout << "P" << n << ": " << rep.stats.original_order << " -> " << rep.stats.reduced_order
                  << " vertices, verdict " << to_string(before.verdict) << " / " << to_string(after.verdict) << '\n';
    }
}

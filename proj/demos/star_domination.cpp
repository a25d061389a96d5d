// Reduces a dominating-set reconfiguration instance on a subdivided star
// and prints the annotated kernel in the instance file format.
#include <iostream>

#include <reconf/reconf.hpp>

int main()
{
    using namespace reconf;
    Graph g = subdivide(star_graph(40), 2);
    VertexSet d = greedy_dominating_set(g, 2);
    Instance inst = make_dsr(g, 2, static_cast<int>(d.size()), d, d);
    KernelReport rep = kernelize_dsr(inst);
    std::cout << "core " << *rep.stats.core_size << ", kernel " << rep.stats.reduced_order << " of "
              << rep.stats.original_order << " vertices\n\n"
              << emit_kernel(rep.reduced, rep.origin);
}

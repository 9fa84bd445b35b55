// Lists every monophonic halfspace of a few small graphs and checks the
// counting bound along the way.

#include <cstdio>

#include "mhs/mhs.hpp"

int main() {
    using namespace mhs;

    for (auto& [label, g] : {std::pair{"P4", path_graph(4)}, std::pair{"C5", cycle_graph(5)},
                             std::pair{"Petersen", petersen_graph()},
                             std::pair{"G(8,0.4)", erdos_renyi_connected(8, 0.4, 20260816)}}) {
        auto halfspaces = list_all_fpt(g);
        Rational bound = count_bound(g);
        std::printf("%s: n=%d m=%d omega=%d — %zu halfspaces (bound %s)\n", label, g.vertex_count(), g.edge_count(),
                    clique_number(g), halfspaces.size(), bound.str().c_str());
        for (const Halfspace& h : halfspaces) std::printf("  %s\n", h.str().c_str());
    }

    // restrict to a version space: halfspaces of C5 through a labeled sample
    Graph c5 = cycle_graph(5);
    LabeledSample sample{{0, 1}, {2, 0}};
    std::printf("C5 halfspaces with 0 inside and 2 outside: %zu\n", list_version_space(c5, sample).size());
    return 0;
}

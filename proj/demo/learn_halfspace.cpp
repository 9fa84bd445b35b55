// Recovers a hidden halfspace three ways: membership queries (exact), a
// consistent hypothesis from labeled data, and online prediction.

#include <cstdio>
#include <random>

#include "mhs/mhs.hpp"

int main() {
    using namespace mhs;

    Graph g = erdos_renyi_connected(9, 0.35, 7);
    auto halfspaces = list_all_fpt(g);
    Halfspace target = halfspaces[halfspaces.size() / 2];
    std::printf("graph: n=%d m=%d, hidden target %s\n", g.vertex_count(), g.edge_count(), target.str().c_str());

    // active: exact recovery from membership queries
    HalfspaceOracle oracle(target);
    LearnerTranscript transcript;
    Halfspace learned = active_learn(g, oracle, &transcript);
    std::printf("active learner: %s with %zu queries (exact: %s)\n", learned.str().c_str(), oracle.calls(),
                learned == target ? "yes" : "no");

    // passive: any halfspace consistent with a random labeled sample
    std::mt19937_64 rng(1);
    LabeledSample sample;
    for (int i = 0; i < 12; ++i) {
        auto v = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.vertex_count()));
        sample.add(v, target.contains(v) ? 1 : 0);
    }
    std::printf("mh_check on %zu labeled points: %s\n", sample.size(), pac_learn_realizable(g, sample).str().c_str());

    // online: Winnow over shadow features, mistakes against the proven budget
    auto winnow = winnow_online(g);
    std::vector<std::pair<Vertex, int>> stream;
    for (int pass = 0; pass < 4; ++pass)
        for (Vertex v : g.vertices()) stream.emplace_back(v, target.contains(v) ? 1 : 0);
    LearnerTranscript online = run_stream(winnow, stream);
    std::printf("winnow: %zu mistakes over %zu rounds (budget %.1f)\n", online.mistakes, online.events.size(),
                winnow1_mistake_bound(g));
    return 0;
}

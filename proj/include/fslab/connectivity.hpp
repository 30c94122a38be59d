#pragma once

#include <cstdint>
#include <vector>

namespace fslab {

class Graph;

// Compressed adjacency shared by the small labeled graphs and the
// permutation-indexed FS graphs (up to a few million vertices).
struct AdjacencyList {
    std::int64_t n = 0;
    std::vector<std::int64_t> offsets;  // size n+1
    std::vector<std::int32_t> targets;

    std::int64_t degree(std::int64_t v) const { return offsets[v + 1] - offsets[v]; }
};

AdjacencyList to_adjacency(const Graph& g);
// Induced subgraph on `keep` (relabeled 0..keep.size()-1, order preserved).
AdjacencyList induced_subgraph(const AdjacencyList& g, const std::vector<std::int32_t>& keep);

bool adj_connected(const AdjacencyList& g);
// True iff some component has a cut vertex. Iterative lowlink DFS.
bool has_articulation_point(const AdjacencyList& g);

// Vertex connectivity via unit-capacity max-flow on the vertex-split
// digraph, minimized over the Even–Tarjan source/target selection: one
// fixed minimum-degree vertex against all its non-neighbors, plus all
// non-adjacent pairs inside its neighborhood. Buffers are reused across
// calls, so keep one solver per thread.
class ConnectivitySolver {
public:
    // Exact kappa; kappa(K_n) = n-1 by convention, 0 if disconnected or n = 1.
    int exact(const AdjacencyList& g);
    // True iff n >= s+1 and no cut of size < s exists. Flows are capped at s
    // and the scan exits on the first small cut.
    bool at_least(const AdjacencyList& g, int s);
    // Minimum vertex cut; empty for complete graphs and n <= 1.
    std::vector<std::int32_t> min_cut(const AdjacencyList& g);

private:
    int run(const AdjacencyList& g, int cap, bool want_cut);

    // Split-digraph flow network: node 2v = in(v), 2v+1 = out(v).
    std::vector<std::int32_t> arc_to_;
    std::vector<std::int8_t> arc_cap_;
    std::vector<std::int8_t> arc_init_cap_;
    std::vector<std::int64_t> head_;     // CSR offsets into arcs
    std::vector<std::int32_t> arc_ids_;  // CSR arc ids
    std::vector<std::int32_t> prev_arc_;
    std::vector<std::int32_t> queue_;
    std::vector<std::uint32_t> seen_;
    std::uint32_t stamp_ = 0;
    std::vector<std::int32_t> cut_;

    void build_network(const AdjacencyList& g);
    int max_flow(std::int32_t s, std::int32_t t, int cap);
    void reset_flows();
    void extract_cut(const AdjacencyList& g, std::int32_t s);
};

int vertex_connectivity(const AdjacencyList& g);
bool vertex_connectivity_at_least(const AdjacencyList& g, int s);
// s = 1 by BFS, s = 2 by articulation scan, s >= 3 by capped max-flow.
bool adj_is_s_connected(const AdjacencyList& g, int s);

}  // namespace fslab

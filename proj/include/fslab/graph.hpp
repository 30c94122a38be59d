#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fslab {

// Labeled simple graph on vertices 0..n-1, adjacency kept as per-vertex
// 64-bit neighborhood masks. Symmetric and loop-free by construction.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    Graph complement() const;
    // Induced subgraph on the vertices outside `removed_mask`, relabeled by
    // order-preserving compaction of the kept labels.
    Graph without(std::uint64_t removed_mask) const;
    Graph without_vertex(int v) const { return without(std::uint64_t{1} << v); }

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> degrees;
};

DegreeProfile degree_profile(const Graph& g);

// Two-coloring of the vertex set; when attached to a graph, no edge runs
// inside part_a or inside part_b.
struct Bipartition {
    std::uint64_t part_a = 0;
    std::uint64_t part_b = 0;

    bool in_a(int v) const { return (part_a >> v) & 1u; }
};

// Closed walk of odd length witnessing non-bipartiteness. `walk` lists the
// vertices in order with walk.front() == walk.back().
struct OddClosedWalk {
    std::vector<int> walk;
};

using BipartitionResult = std::variant<Bipartition, OddClosedWalk>;

// Per-component consistent 2-coloring (part_a = color 0 with the smallest
// vertex of each component in part_a), or an odd closed walk.
BipartitionResult bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);
// Vertex sets of the connected components, ordered by smallest member.
std::vector<std::uint64_t> component_masks(const Graph& g);

// E(x) subseteq E(y); throws if the orders differ.
bool is_spanning_subgraph(const Graph& x, const Graph& y);

// Exact vertex connectivity. kappa(K_n) = n-1; 0 iff disconnected or n = 1.
int kappa(const Graph& g);
// True iff n >= s+1 and no vertex cut of size < s exists (s >= 1).
// Independent early-exit path; kappa() is the exact counterpart.
bool is_s_connected(const Graph& g, int s);
// A minimum vertex cut; empty when the graph is complete (or n <= 1).
std::vector<int> minimum_vertex_cut(const Graph& g);

// Isomorphic copy with vertex v renamed to perm[v].
Graph relabeled(const Graph& g, const std::vector<int>& perm);

}  // namespace fslab

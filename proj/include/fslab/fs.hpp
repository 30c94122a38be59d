#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fslab/connectivity.hpp"
#include "fslab/graph.hpp"
#include "fslab/perm.hpp"

namespace fslab {

enum class FsMode { Explicit, Implicit };

// The friends-and-strangers graph FS(X,Y): vertices are all bijections
// V(X) -> V(Y) indexed by PermRank; sigma ~ sigma o (a c) whenever
// ac in E(X) and sigma(a)sigma(c) in E(Y).
class FsInstance {
public:
    FsInstance(Graph x, Graph y);  // Explicit for n <= 8, Implicit for n <= 10
    FsInstance(Graph x, Graph y, FsMode mode);

    const Graph& x() const { return x_; }
    const Graph& y() const { return y_; }
    int n() const { return n_; }
    FsMode mode() const { return mode_; }
    PermRank vertex_count() const { return kFactorial[n_]; }
    const std::vector<std::pair<int, int>>& x_edges() const { return x_edges_; }

    int fs_degree(const Bijection& b) const;
    std::vector<Bijection> fs_neighbors(const Bijection& b) const;
    void for_each_neighbor(const Bijection& b, const std::function<void(const Bijection&)>& fn) const;

    bool explicit_built() const { return explicit_ready_; }
    // Builds on first use; Explicit mode only. Single-owner until built,
    // immutable and shareable afterwards.
    const AdjacencyList& explicit_adjacency();
    const AdjacencyList& explicit_adjacency() const;  // throws unless built

private:
    Graph x_, y_;
    int n_;
    FsMode mode_;
    std::vector<std::pair<int, int>> x_edges_;
    AdjacencyList explicit_adj_;
    bool explicit_ready_ = false;
};

struct ComponentReport {
    int count = 0;
    std::vector<std::uint32_t> sizes;            // by component id (discovery order)
    std::vector<std::int32_t> component_of;      // PermRank-indexed component ids
    std::vector<int> per_component_kappa;        // optional, by component id
    std::vector<std::string> component_labels;   // optional, by component id

    std::vector<std::uint32_t> sorted_sizes() const;
};

// Exact component decomposition; BFS processes frontiers in ascending
// PermRank order, so component ids are deterministic.
ComponentReport components(FsInstance& inst);
ComponentReport components(const Graph& x, const Graph& y);

// Single BFS from the identity; cheaper than a full ComponentReport.
bool fs_connected(const Graph& x, const Graph& y);

// Exact vertex connectivity of the whole FS graph (Explicit mode).
int fs_kappa(FsInstance& inst);
// s = 1 by BFS, s = 2 by articulation scan, s >= 3 by capped max-flow.
bool fs_is_s_connected(FsInstance& inst, int s);
// kappa of every component's induced subgraph, by component id.
std::vector<int> per_component_kappa(FsInstance& inst, const ComponentReport& report);

// FS(X - removed, Y - removed) together with the embedding
// f(phi) = phi|^X into FS(X,Y) determined by the pinning.
struct PinnedSubgraph {
    FsInstance sub;
    std::vector<std::pair<int, int>> pinning;
    int parent_n;

    Bijection embed(const Bijection& phi) const;
    PermRank embed_rank(PermRank r) const;
};

PinnedSubgraph pinned_subgraph(const FsInstance& inst,
                               const std::vector<std::pair<int, int>>& pinning);

// BFS in FS(X,Y) minus `forbidden` from `start`; any reached sigma' with
// sigma'(x) = y, else nullopt.
std::optional<Bijection> reachable_with_target(const FsInstance& inst, const Bijection& start,
                                               const std::vector<Bijection>& forbidden, int x,
                                               int y);

// Adjacency test straight from the definition (no neighbor generation).
bool fs_has_edge(const Graph& x, const Graph& y, const Bijection& a, const Bijection& b);

// Verifies sigma -> sigma^{-1} is an isomorphism FS(X,Y) -> FS(Y,X).
bool fs_isomorphic_swap_check(const Graph& x, const Graph& y);

}  // namespace fslab

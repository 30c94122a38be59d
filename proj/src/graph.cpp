#include "fslab/graph.hpp"

#include <bit>
#include <stdexcept>

#include "fslab/connectivity.hpp"

namespace fslab {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("Graph: order must be in [0, 64]");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("Graph::add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("Graph::add_edge: loops not allowed");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t above = adj_[u] >> (u + 1) << (u + 1);
        while (above) {
            int v = std::countr_zero(above);
            out.emplace_back(u, v);
            above &= above - 1;
        }
    }
    return out;
}

Graph Graph::complement() const {
    Graph c(n_);
    std::uint64_t full = (n_ == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    for (int v = 0; v < n_; ++v)
        c.adj_[v] = full & ~adj_[v] & ~(std::uint64_t{1} << v);
    return c;
}

Graph Graph::without(std::uint64_t removed_mask) const {
    std::vector<int> kept;
    for (int v = 0; v < n_; ++v)
        if (!((removed_mask >> v) & 1u)) kept.push_back(v);
    Graph g(static_cast<int>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j)
            if (has_edge(kept[i], kept[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degrees.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
    if (!p.degrees.empty()) {
        p.min_degree = p.degrees[0];
        p.max_degree = p.degrees[0];
        for (int d : p.degrees) {
            if (d < p.min_degree) p.min_degree = d;
            if (d > p.max_degree) p.max_degree = d;
        }
    }
    return p;
}

BipartitionResult bipartition(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    Bipartition parts;
    for (int root = 0; root < n; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::vector<int> stack = {root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            std::uint64_t nb = g.neighbors(u);
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[v] < 0) {
                    color[v] = color[u] ^ 1;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    // Odd closed walk: path(root..u) + edge uv + reverse path(v..root).
                    OddClosedWalk w;
                    std::vector<int> up;
                    for (int x = u; x != -1; x = parent[x]) up.push_back(x);
                    for (auto it = up.rbegin(); it != up.rend(); ++it) w.walk.push_back(*it);
                    for (int x = v; x != -1; x = parent[x]) w.walk.push_back(x);
                    return w;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        (color[v] == 0 ? parts.part_a : parts.part_b) |= std::uint64_t{1} << v;
    return parts;
}

bool is_bipartite(const Graph& g) {
    return std::holds_alternative<Bipartition>(bipartition(g));
}

std::vector<std::uint64_t> component_masks(const Graph& g) {
    int n = g.order();
    std::vector<std::uint64_t> comps;
    std::uint64_t seen = 0;
    for (int root = 0; root < n; ++root) {
        if ((seen >> root) & 1u) continue;
        std::uint64_t comp = std::uint64_t{1} << root;
        std::vector<int> stack = {root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            std::uint64_t fresh = g.neighbors(u) & ~comp;
            while (fresh) {
                int v = std::countr_zero(fresh);
                fresh &= fresh - 1;
                comp |= std::uint64_t{1} << v;
                stack.push_back(v);
            }
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

int component_count(const Graph& g) { return static_cast<int>(component_masks(g).size()); }

bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

bool is_spanning_subgraph(const Graph& x, const Graph& y) {
    if (x.order() != y.order())
        throw std::invalid_argument("is_spanning_subgraph: order mismatch");
    for (int v = 0; v < x.order(); ++v)
        if (x.neighbors(v) & ~y.neighbors(v)) return false;
    return true;
}

int kappa(const Graph& g) {
    ConnectivitySolver solver;
    return solver.exact(to_adjacency(g));
}

bool is_s_connected(const Graph& g, int s) {
    if (s < 1) throw std::invalid_argument("is_s_connected: s must be >= 1");
    ConnectivitySolver solver;
    return solver.at_least(to_adjacency(g), s);
}

std::vector<int> minimum_vertex_cut(const Graph& g) {
    ConnectivitySolver solver;
    auto cut = solver.min_cut(to_adjacency(g));
    return std::vector<int>(cut.begin(), cut.end());
}

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace fslab

#include "fslab/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "fslab/graph.hpp"

namespace fslab {

AdjacencyList to_adjacency(const Graph& g) {
    AdjacencyList a;
    a.n = g.order();
    a.offsets.assign(a.n + 1, 0);
    for (int v = 0; v < a.n; ++v) a.offsets[v + 1] = a.offsets[v] + g.degree(v);
    a.targets.resize(a.offsets[a.n]);
    std::vector<std::int64_t> fill(a.offsets.begin(), a.offsets.end() - 1);
    for (int v = 0; v < a.n; ++v) {
        std::uint64_t nb = g.neighbors(v);
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            a.targets[fill[v]++] = w;
        }
    }
    return a;
}

AdjacencyList induced_subgraph(const AdjacencyList& g, const std::vector<std::int32_t>& keep) {
    std::vector<std::int32_t> new_id(g.n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<std::int32_t>(i);
    AdjacencyList a;
    a.n = static_cast<std::int64_t>(keep.size());
    a.offsets.assign(a.n + 1, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        std::int32_t v = keep[i];
        for (std::int64_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e)
            if (new_id[g.targets[e]] >= 0) ++a.offsets[i + 1];
    }
    for (std::int64_t v = 0; v < a.n; ++v) a.offsets[v + 1] += a.offsets[v];
    a.targets.resize(a.offsets[a.n]);
    std::vector<std::int64_t> fill(a.offsets.begin(), a.offsets.end() - 1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        std::int32_t v = keep[i];
        for (std::int64_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
            std::int32_t w = new_id[g.targets[e]];
            if (w >= 0) a.targets[fill[i]++] = w;
        }
    }
    return a;
}

bool adj_connected(const AdjacencyList& g) {
    if (g.n == 0) return false;
    std::vector<std::int32_t> stack = {0};
    std::vector<std::uint8_t> seen(g.n, 0);
    seen[0] = 1;
    std::int64_t count = 1;
    while (!stack.empty()) {
        std::int32_t u = stack.back();
        stack.pop_back();
        for (std::int64_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
            std::int32_t v = g.targets[e];
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == g.n;
}

bool has_articulation_point(const AdjacencyList& g) {
    const std::int64_t n = g.n;
    std::vector<std::int32_t> disc(n, 0), low(n, 0), parent(n, -1);
    std::vector<std::int64_t> edge_pos(n, 0);
    std::vector<std::int32_t> stack;
    std::int32_t timer = 0;
    for (std::int64_t root = 0; root < n; ++root) {
        if (disc[root]) continue;
        std::int32_t root_children = 0;
        disc[root] = low[root] = ++timer;
        edge_pos[root] = g.offsets[root];
        stack.push_back(static_cast<std::int32_t>(root));
        while (!stack.empty()) {
            std::int32_t u = stack.back();
            if (edge_pos[u] < g.offsets[u + 1]) {
                std::int32_t v = g.targets[edge_pos[u]++];
                if (!disc[v]) {
                    parent[v] = u;
                    if (u == root) ++root_children;
                    disc[v] = low[v] = ++timer;
                    edge_pos[v] = g.offsets[v];
                    stack.push_back(v);
                } else if (v != parent[u]) {
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    std::int32_t p = stack.back();
                    low[p] = std::min(low[p], low[u]);
                    if (p != root && low[u] >= disc[p]) return true;
                }
            }
        }
        if (root_children > 1) return true;
    }
    return false;
}

void ConnectivitySolver::build_network(const AdjacencyList& g) {
    const std::int64_t nodes = 2 * g.n;
    arc_to_.clear();
    arc_cap_.clear();
    head_.assign(nodes + 1, 0);

    // Arc counts per node: split arc from in(v), its reverse at out(v),
    // and per incident edge one forward arc at out(v) plus one reverse at in(v).
    for (std::int64_t v = 0; v < g.n; ++v) {
        head_[2 * v + 1] += 1 + g.degree(v);      // reverse of split + edge forwards
        head_[2 * v + 2] += 1 + g.degree(v);      // split + edge reverses (offset shifted below)
    }
    // head_ currently holds counts shifted by one slot; prefix-sum into offsets.
    for (std::int64_t i = 0; i < nodes; ++i) head_[i + 1] += head_[i];
    const std::int64_t total_arcs = head_[nodes];
    arc_to_.resize(total_arcs);
    arc_cap_.resize(total_arcs);
    arc_init_cap_.resize(total_arcs);
    arc_ids_.resize(total_arcs);

    std::vector<std::int64_t> fill(head_.begin(), head_.end() - 1);
    std::int32_t next_arc = 0;
    auto add_arc = [&](std::int32_t from, std::int32_t to, std::int8_t cap) {
        arc_to_[next_arc] = to;
        arc_init_cap_[next_arc] = cap;
        arc_ids_[fill[from]++] = next_arc;
        ++next_arc;
    };
    // Split arcs carry capacity 1; edge arcs carry 2 so that minimum cuts
    // consist of saturated split arcs only (never binds the flow value:
    // vertex-disjoint paths cannot share an edge).
    for (std::int32_t v = 0; v < g.n; ++v) {
        add_arc(2 * v, 2 * v + 1, 1);  // in(v) -> out(v)
        add_arc(2 * v + 1, 2 * v, 0);
    }
    for (std::int32_t v = 0; v < g.n; ++v) {
        for (std::int64_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
            std::int32_t w = g.targets[e];
            add_arc(2 * v + 1, 2 * w, 2);  // out(v) -> in(w)
            add_arc(2 * w, 2 * v + 1, 0);
        }
    }
    prev_arc_.assign(nodes, -1);
    seen_.assign(nodes, 0);
    stamp_ = 0;
    queue_.reserve(nodes);
}

void ConnectivitySolver::reset_flows() { arc_cap_ = arc_init_cap_; }

int ConnectivitySolver::max_flow(std::int32_t a, std::int32_t b, int cap) {
    // Internally vertex-disjoint a-b paths: source out(a), sink in(b).
    reset_flows();
    const std::int32_t source = 2 * a + 1;
    const std::int32_t sink = 2 * b;
    int flow = 0;
    while (flow < cap) {
        ++stamp_;
        queue_.clear();
        queue_.push_back(source);
        seen_[source] = stamp_;
        bool reached = false;
        for (std::size_t qi = 0; qi < queue_.size() && !reached; ++qi) {
            std::int32_t u = queue_[qi];
            for (std::int64_t e = head_[u]; e < head_[u + 1]; ++e) {
                std::int32_t arc = arc_ids_[e];
                if (arc_cap_[arc] <= 0) continue;
                std::int32_t v = arc_to_[arc];
                if (seen_[v] == stamp_) continue;
                seen_[v] = stamp_;
                prev_arc_[v] = arc;
                if (v == sink) {
                    reached = true;
                    break;
                }
                queue_.push_back(v);
            }
        }
        if (!reached) break;
        for (std::int32_t v = sink; v != source;) {
            std::int32_t arc = prev_arc_[v];
            --arc_cap_[arc];
            ++arc_cap_[arc ^ 1];
            v = arc_to_[arc ^ 1];
        }
        ++flow;
    }
    return flow;
}

void ConnectivitySolver::extract_cut(const AdjacencyList& g, std::int32_t source_vertex) {
    // Residual reachability from out(source); cut vertices are those whose
    // split arc crosses the reachable boundary.
    ++stamp_;
    queue_.clear();
    const std::int32_t source = 2 * source_vertex + 1;
    queue_.push_back(source);
    seen_[source] = stamp_;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
        std::int32_t u = queue_[qi];
        for (std::int64_t e = head_[u]; e < head_[u + 1]; ++e) {
            std::int32_t arc = arc_ids_[e];
            if (arc_cap_[arc] <= 0) continue;
            std::int32_t v = arc_to_[arc];
            if (seen_[v] == stamp_) continue;
            seen_[v] = stamp_;
            queue_.push_back(v);
        }
    }
    cut_.clear();
    for (std::int32_t v = 0; v < g.n; ++v)
        if (seen_[2 * v] == stamp_ && seen_[2 * v + 1] != stamp_)
            cut_.push_back(v);
}

int ConnectivitySolver::run(const AdjacencyList& g, int cap, bool want_cut) {
    // Returns min(kappa, cap). With want_cut the minimizing cut is stored.
    const std::int64_t n = g.n;
    cut_.clear();
    if (n <= 1) return 0;
    if (!adj_connected(g)) return 0;
    std::int64_t min_deg_vertex = 0;
    for (std::int64_t v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(min_deg_vertex)) min_deg_vertex = v;
    if (g.degree(min_deg_vertex) == n - 1)
        return static_cast<int>(std::min<std::int64_t>(n - 1, cap));

    build_network(g);
    const std::int32_t pivot = static_cast<std::int32_t>(min_deg_vertex);
    std::vector<std::uint8_t> is_neighbor(n, 0);
    std::vector<std::int32_t> nbrs;
    for (std::int64_t e = g.offsets[pivot]; e < g.offsets[pivot + 1]; ++e) {
        is_neighbor[g.targets[e]] = 1;
        nbrs.push_back(g.targets[e]);
    }

    int best = std::min<int>(cap, static_cast<int>(g.degree(pivot)));
    std::int32_t best_s = -1, best_t = -1;
    auto probe = [&](std::int32_t s, std::int32_t t) {
        if (best == 0) return;
        int f = max_flow(s, t, best);
        if (f < best) {
            best = f;
            best_s = s;
            best_t = t;
        }
    };
    for (std::int32_t u = 0; u < n; ++u)
        if (u != pivot && !is_neighbor[u]) probe(pivot, u);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            bool adjacent = false;
            std::int32_t x = nbrs[i], y = nbrs[j];
            for (std::int64_t e = g.offsets[x]; e < g.offsets[x + 1] && !adjacent; ++e)
                adjacent = (g.targets[e] == y);
            if (!adjacent) probe(x, y);
        }

    if (want_cut && best < cap) {
        if (best_s < 0) {
            // The scan never beat the initial bound, so kappa == deg(pivot):
            // recompute one minimizing flow to expose a cut.
            for (std::int32_t u = 0; u < n && best_s < 0; ++u)
                if (u != pivot && !is_neighbor[u]) {
                    if (max_flow(pivot, u, best + 1) == best) {
                        best_s = pivot;
                        best_t = u;
                    }
                }
            for (std::size_t i = 0; i < nbrs.size() && best_s < 0; ++i)
                for (std::size_t j = i + 1; j < nbrs.size() && best_s < 0; ++j) {
                    std::int32_t x = nbrs[i], y = nbrs[j];
                    bool adjacent = false;
                    for (std::int64_t e = g.offsets[x]; e < g.offsets[x + 1] && !adjacent; ++e)
                        adjacent = (g.targets[e] == y);
                    if (!adjacent && max_flow(x, y, best + 1) == best) {
                        best_s = x;
                        best_t = y;
                    }
                }
        } else {
            max_flow(best_s, best_t, best + 1);
        }
        if (best_s >= 0) extract_cut(g, best_s);
    }
    return best;
}

int ConnectivitySolver::exact(const AdjacencyList& g) {
    return run(g, static_cast<int>(g.n), false);
}

bool ConnectivitySolver::at_least(const AdjacencyList& g, int s) {
    if (s < 1) throw std::invalid_argument("at_least: s must be >= 1");
    if (g.n < s + 1) return false;
    return run(g, s, false) >= s;
}

std::vector<std::int32_t> ConnectivitySolver::min_cut(const AdjacencyList& g) {
    run(g, static_cast<int>(g.n), true);
    return cut_;
}

int vertex_connectivity(const AdjacencyList& g) {
    ConnectivitySolver solver;
    return solver.exact(g);
}

bool vertex_connectivity_at_least(const AdjacencyList& g, int s) {
    ConnectivitySolver solver;
    return solver.at_least(g, s);
}

bool adj_is_s_connected(const AdjacencyList& g, int s) {
    if (s < 1) throw std::invalid_argument("adj_is_s_connected: s >= 1 required");
    if (g.n < s + 1) return false;
    if (s == 1) return adj_connected(g);
    if (s == 2) return adj_connected(g) && !has_articulation_point(g);
    ConnectivitySolver solver;
    return solver.at_least(g, s);
}

}  // namespace fslab

#include "fslab/fs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace fslab {

namespace {

constexpr int kExplicitMaxN = 8;
constexpr int kImplicitMaxN = 10;

// Rank of b o (a c) without materializing the swapped bijection.
PermRank swapped_rank(std::array<std::uint8_t, kMaxPermN>& img, int n, int a, int c) {
    std::swap(img[a], img[c]);
    PermRank r = 0;
    std::uint32_t seen = 0;
    for (int i = 0; i < n; ++i) {
        std::uint32_t v = img[i];
        r += (v - std::popcount(seen & ((1u << v) - 1))) * kFactorial[n - 1 - i];
        seen |= 1u << v;
    }
    std::swap(img[a], img[c]);
    return r;
}

}  // namespace

FsInstance::FsInstance(Graph x, Graph y)
    : x_(std::move(x)), y_(std::move(y)), n_(x_.order()),
      mode_(n_ <= kExplicitMaxN ? FsMode::Explicit : FsMode::Implicit) {
    if (x_.order() != y_.order()) throw std::invalid_argument("FsInstance: |V(X)| != |V(Y)|");
    if (n_ > kImplicitMaxN) throw std::invalid_argument("FsInstance: n <= 10 required");
    x_edges_ = x_.edges();
}

FsInstance::FsInstance(Graph x, Graph y, FsMode mode)
    : x_(std::move(x)), y_(std::move(y)), n_(x_.order()), mode_(mode) {
    if (x_.order() != y_.order()) throw std::invalid_argument("FsInstance: |V(X)| != |V(Y)|");
    if (n_ > kImplicitMaxN) throw std::invalid_argument("FsInstance: n <= 10 required");
    if (mode_ == FsMode::Explicit && n_ > kExplicitMaxN)
        throw std::invalid_argument("FsInstance: explicit mode requires n <= 8");
    x_edges_ = x_.edges();
}

int FsInstance::fs_degree(const Bijection& b) const {
    int d = 0;
    for (auto [a, c] : x_edges_) d += y_.has_edge(b[a], b[c]) ? 1 : 0;
    return d;
}

std::vector<Bijection> FsInstance::fs_neighbors(const Bijection& b) const {
    std::vector<Bijection> out;
    for (auto [a, c] : x_edges_)
        if (y_.has_edge(b[a], b[c])) out.push_back(b.swapped(a, c));
    return out;
}

void FsInstance::for_each_neighbor(const Bijection& b,
                                   const std::function<void(const Bijection&)>& fn) const {
    for (auto [a, c] : x_edges_)
        if (y_.has_edge(b[a], b[c])) fn(b.swapped(a, c));
}

const AdjacencyList& FsInstance::explicit_adjacency() {
    if (explicit_ready_) return explicit_adj_;
    if (mode_ != FsMode::Explicit)
        throw std::logic_error("explicit_adjacency: instance is in implicit mode");
    const PermRank nf = vertex_count();
    std::vector<std::int64_t> deg(nf + 1, 0);
    std::vector<std::pair<PermRank, PermRank>> half;
    std::array<std::uint8_t, kMaxPermN> img{};
    for (int i = 0; i < n_; ++i) img[i] = static_cast<std::uint8_t>(i);
    PermRank r = 0;
    do {
        for (auto [a, c] : x_edges_) {
            if (!y_.has_edge(img[a], img[c])) continue;
            PermRank r2 = swapped_rank(img, n_, a, c);
            ++deg[r + 1];
            if (r < r2) half.emplace_back(r, r2);
        }
        ++r;
    } while (std::next_permutation(img.begin(), img.begin() + n_));

    explicit_adj_.n = nf;
    explicit_adj_.offsets.assign(nf + 1, 0);
    for (PermRank v = 0; v < nf; ++v) explicit_adj_.offsets[v + 1] = explicit_adj_.offsets[v] + deg[v + 1];
    explicit_adj_.targets.resize(explicit_adj_.offsets[nf]);
    std::vector<std::int64_t> fill(explicit_adj_.offsets.begin(), explicit_adj_.offsets.end() - 1);
    for (auto [u, v] : half) {
        explicit_adj_.targets[fill[u]++] = static_cast<std::int32_t>(v);
        explicit_adj_.targets[fill[v]++] = static_cast<std::int32_t>(u);
    }
    explicit_ready_ = true;
    return explicit_adj_;
}

const AdjacencyList& FsInstance::explicit_adjacency() const {
    if (!explicit_ready_) throw std::logic_error("explicit_adjacency: not built yet");
    return explicit_adj_;
}

std::vector<std::uint32_t> ComponentReport::sorted_sizes() const {
    std::vector<std::uint32_t> s = sizes;
    std::sort(s.begin(), s.end());
    return s;
}

ComponentReport components(FsInstance& inst) {
    const PermRank nf = inst.vertex_count();
    const int n = inst.n();
    ComponentReport report;
    report.component_of.assign(nf, -1);

    if (inst.mode() == FsMode::Explicit) {
        const AdjacencyList& adj = inst.explicit_adjacency();
        std::vector<PermRank> queue;
        for (PermRank r0 = 0; r0 < nf; ++r0) {
            if (report.component_of[r0] >= 0) continue;
            const std::int32_t id = report.count++;
            std::uint32_t size = 0;
            queue.clear();
            queue.push_back(r0);
            report.component_of[r0] = id;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                PermRank u = queue[qi];
                ++size;
                for (std::int64_t e = adj.offsets[u]; e < adj.offsets[u + 1]; ++e) {
                    PermRank v = static_cast<PermRank>(adj.targets[e]);
                    if (report.component_of[v] < 0) {
                        report.component_of[v] = id;
                        queue.push_back(v);
                    }
                }
            }
            report.sizes.push_back(size);
        }
        return report;
    }

    const auto& x_edges = inst.x_edges();
    const Graph& y = inst.y();
    std::vector<PermRank> queue;
    std::array<std::uint8_t, kMaxPermN> img{};
    for (PermRank r0 = 0; r0 < nf; ++r0) {
        if (report.component_of[r0] >= 0) continue;
        const std::int32_t id = report.count++;
        std::uint32_t size = 0;
        queue.clear();
        queue.push_back(r0);
        report.component_of[r0] = id;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            PermRank u = queue[qi];
            ++size;
            Bijection b = unrank(u, n);
            for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(b[i]);
            for (auto [a, c] : x_edges) {
                if (!y.has_edge(img[a], img[c])) continue;
                PermRank v = swapped_rank(img, n, a, c);
                if (report.component_of[v] < 0) {
                    report.component_of[v] = id;
                    queue.push_back(v);
                }
            }
        }
        report.sizes.push_back(size);
    }
    return report;
}

ComponentReport components(const Graph& x, const Graph& y) {
    FsInstance inst(x, y, x.order() <= kExplicitMaxN ? FsMode::Explicit : FsMode::Implicit);
    return components(inst);
}

bool fs_connected(const Graph& x, const Graph& y) {
    FsInstance inst(x, y, FsMode::Implicit);
    const PermRank nf = inst.vertex_count();
    const int n = inst.n();
    std::vector<std::uint8_t> seen(nf, 0);
    std::vector<PermRank> queue = {0};
    seen[0] = 1;
    PermRank found = 1;
    const auto& x_edges = inst.x_edges();
    const Graph& yg = inst.y();
    std::array<std::uint8_t, kMaxPermN> img{};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Bijection b = unrank(queue[qi], n);
        for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(b[i]);
        for (auto [a, c] : x_edges) {
            if (!yg.has_edge(img[a], img[c])) continue;
            PermRank v = swapped_rank(img, n, a, c);
            if (!seen[v]) {
                seen[v] = 1;
                ++found;
                queue.push_back(v);
            }
        }
    }
    return found == nf;
}

int fs_kappa(FsInstance& inst) {
    ConnectivitySolver solver;
    return solver.exact(inst.explicit_adjacency());
}

bool fs_is_s_connected(FsInstance& inst, int s) {
    if (s < 1) throw std::invalid_argument("fs_is_s_connected: s >= 1 required");
    return adj_is_s_connected(inst.explicit_adjacency(), s);
}

std::vector<int> per_component_kappa(FsInstance& inst, const ComponentReport& report) {
    const AdjacencyList& adj = inst.explicit_adjacency();
    std::vector<std::vector<std::int32_t>> members(report.count);
    for (std::size_t i = 0; i < report.sizes.size(); ++i)
        members[i].reserve(report.sizes[i]);
    for (PermRank r = 0; r < report.component_of.size(); ++r)
        members[report.component_of[r]].push_back(static_cast<std::int32_t>(r));
    ConnectivitySolver solver;
    std::vector<int> out(report.count, 0);
    for (int id = 0; id < report.count; ++id)
        out[id] = solver.exact(induced_subgraph(adj, members[id]));
    return out;
}

Bijection PinnedSubgraph::embed(const Bijection& phi) const {
    return extend_with(phi, pinning, parent_n);
}

PermRank PinnedSubgraph::embed_rank(PermRank r) const {
    return rank(embed(unrank(r, sub.n())));
}

PinnedSubgraph pinned_subgraph(const FsInstance& inst,
                               const std::vector<std::pair<int, int>>& pinning) {
    std::uint64_t removed_x = 0, removed_y = 0;
    for (auto [x, y] : pinning) {
        if (((removed_x >> x) & 1u) || ((removed_y >> y) & 1u))
            throw std::invalid_argument("pinned_subgraph: pinning is not a bijection");
        removed_x |= std::uint64_t{1} << x;
        removed_y |= std::uint64_t{1} << y;
    }
    Graph xs = inst.x().without(removed_x);
    Graph ys = inst.y().without(removed_y);
    return PinnedSubgraph{FsInstance(std::move(xs), std::move(ys)), pinning, inst.n()};
}

std::optional<Bijection> reachable_with_target(const FsInstance& inst, const Bijection& start,
                                               const std::vector<Bijection>& forbidden, int x,
                                               int y) {
    const PermRank nf = inst.vertex_count();
    const int n = inst.n();
    std::vector<std::uint8_t> blocked(nf, 0);
    for (const Bijection& b : forbidden) blocked[rank(b)] = 1;
    PermRank start_rank = rank(start);
    if (blocked[start_rank])
        throw std::invalid_argument("reachable_with_target: start is forbidden");

    if (start[x] == y) return start;
    std::vector<PermRank> queue = {start_rank};
    std::vector<std::uint8_t> seen(nf, 0);
    seen[start_rank] = 1;
    const auto& x_edges = inst.x_edges();
    const Graph& yg = inst.y();
    std::array<std::uint8_t, kMaxPermN> img{};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Bijection b = unrank(queue[qi], n);
        for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(b[i]);
        for (auto [a, c] : x_edges) {
            if (!yg.has_edge(img[a], img[c])) continue;
            PermRank v = swapped_rank(img, n, a, c);
            if (seen[v] || blocked[v]) continue;
            seen[v] = 1;
            Bijection nb = b.swapped(a, c);
            if (nb[x] == y) return nb;
            queue.push_back(v);
        }
    }
    return std::nullopt;
}

bool fs_has_edge(const Graph& x, const Graph& y, const Bijection& a, const Bijection& b) {
    int n = a.size();
    int p = -1, q = -1;
    for (int i = 0; i < n; ++i) {
        if (a[i] == b[i]) continue;
        if (p < 0)
            p = i;
        else if (q < 0)
            q = i;
        else
            return false;
    }
    if (q < 0) return false;
    if (a[p] != b[q] || a[q] != b[p]) return false;
    return x.has_edge(p, q) && y.has_edge(a[p], a[q]);
}

bool fs_isomorphic_swap_check(const Graph& x, const Graph& y) {
    if (x.order() != y.order()) throw std::invalid_argument("swap check: order mismatch");
    const int n = x.order();
    if (n > kExplicitMaxN) throw std::invalid_argument("swap check: n <= 8 required");
    FsInstance fwd(x, y);
    FsInstance bwd(y, x);
    const PermRank nf = fwd.vertex_count();
    std::uint64_t fwd_edges = 0, bwd_edges = 0;
    for (PermRank r = 0; r < nf; ++r) {
        Bijection b = unrank(r, n);
        Bijection binv = b.inverse();
        // Every FS(X,Y) edge must map to an FS(Y,X) edge under inversion...
        for (const Bijection& nb : fwd.fs_neighbors(b)) {
            ++fwd_edges;
            if (!fs_has_edge(y, x, binv, nb.inverse())) return false;
        }
        // ...and conversely.
        for (const Bijection& nb : bwd.fs_neighbors(b)) {
            ++bwd_edges;
            if (!fs_has_edge(x, y, binv, nb.inverse())) return false;
        }
    }
    return fwd_edges == bwd_edges;
}

}  // namespace fslab

#include "fslab/families.hpp"

#include <stdexcept>

namespace fslab {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Complete: return "complete";
        case Family::Star: return "star";
        case Family::StarPlus: return "star-plus";
        case Family::Wheel: return "wheel";
        case Family::Theta0: return "theta0";
        case Family::Theta1: return "theta1";
        case Family::Lollipop: return "lollipop";
        case Family::Dandelion: return "dandelion";
        case Family::CompleteMinusMatching: return "complete-minus-matching";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::Path, Family::Cycle, Family::Complete, Family::Star,
                     Family::StarPlus, Family::Wheel, Family::Theta0, Family::Theta1,
                     Family::Lollipop, Family::Dandelion, Family::CompleteMinusMatching})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

Graph path_graph(int n) {
    require(n >= 1, "path: n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle: n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    require(n >= 1, "complete: n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(int n) {
    require(n >= 1, "star: n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, n - 1);
    return g;
}

Graph star_plus_graph(int n) {
    require(n >= 3, "star-plus: n >= 3");
    Graph g = star_graph(n);
    g.add_edge(0, 1);
    return g;
}

Graph wheel_graph(int n) {
    require(n >= 4, "wheel: n >= 4");
    Graph g(n);
    for (int i = 0; i < n - 1; ++i) {
        g.add_edge(i, (i + 1) % (n - 1));
        g.add_edge(i, n - 1);
    }
    return g;
}

Graph theta0_graph() {
    return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {6, 3}});
}

Graph theta1_graph() {
    Graph g(8);
    Graph t0 = theta0_graph();
    for (auto [u, v] : t0.edges()) g.add_edge(u, v);
    for (int v = 0; v < 7; ++v)
        if (t0.degree(v) == 2) g.add_edge(7, v);
    return g;
}

Graph lollipop_graph(int n, int k) {
    require(2 <= k && k <= n, "lollipop: 2 <= k <= n");
    Graph g(n);
    for (int i = 0; i < n - k; ++i) g.add_edge(i, i + 1);
    for (int u = n - k; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph dandelion_graph(int n, int k) {
    require(2 <= k && k <= n, "dandelion: 2 <= k <= n");
    Graph g(n);
    for (int i = 0; i < n - k; ++i) g.add_edge(i, i + 1);
    for (int v = n - k + 1; v < n; ++v) g.add_edge(n - k, v);
    return g;
}

Graph complete_minus_matching(int n, int t) {
    require(1 <= t && t <= n / 2, "complete-minus-matching: 1 <= t <= n/2");
    Graph g = complete_graph(n);
    for (int i = 0; i < t; ++i) g.remove_edge(2 * i, 2 * i + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case Family::Path: return path_graph(spec.n);
        case Family::Cycle: return cycle_graph(spec.n);
        case Family::Complete: return complete_graph(spec.n);
        case Family::Star: return star_graph(spec.n);
        case Family::StarPlus: return star_plus_graph(spec.n);
        case Family::Wheel: return wheel_graph(spec.n);
        case Family::Theta0:
            require(spec.n == 0 || spec.n == 7, "theta0: fixed graph of order 7");
            return theta0_graph();
        case Family::Theta1:
            require(spec.n == 0 || spec.n == 8, "theta1: fixed graph of order 8");
            return theta1_graph();
        case Family::Lollipop: return lollipop_graph(spec.n, spec.k);
        case Family::Dandelion: return dandelion_graph(spec.n, spec.k);
        case Family::CompleteMinusMatching: return complete_minus_matching(spec.n, spec.t);
    }
    throw std::invalid_argument("generate: unknown family");
}

std::vector<Graph> dl_family(int n, int k) {
    require(2 <= k && k <= n, "dl_family: 2 <= k <= n");
    Graph base = dandelion_graph(n, k);
    // Optional edges: the clique edges among the k-1 non-attachment vertices.
    std::vector<std::pair<int, int>> optional;
    for (int u = n - k + 1; u < n; ++u)
        for (int v = u + 1; v < n; ++v) optional.emplace_back(u, v);
    std::vector<Graph> out;
    out.reserve(std::size_t{1} << optional.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << optional.size()); ++mask) {
        Graph g = base;
        for (std::size_t i = 0; i < optional.size(); ++i)
            if ((mask >> i) & 1u) g.add_edge(optional[i].first, optional[i].second);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace fslab

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include "fslab/canonical.hpp"
#include "fslab/families.hpp"
#include "fslab/graph.hpp"

using namespace fslab;

namespace {

// Exhaustive-cut connectivity oracle, independent of the flow solver.
bool oracle_connected_after(const Graph& g, std::uint64_t removed) {
    int n = g.order();
    std::uint64_t alive = ~removed & ((n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    if (!alive) return true;
    int start = std::countr_zero(alive);
    std::uint64_t reach = std::uint64_t{1} << start;
    for (;;) {
        std::uint64_t next = reach;
        std::uint64_t frontier = reach;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v) & alive;
        }
        if (next == reach) break;
        reach = next;
    }
    return reach == alive;
}

int oracle_kappa(const Graph& g) {
    int n = g.order();
    if (n <= 1) return 0;
    if (!oracle_connected_after(g, 0)) return 0;
    bool complete = true;
    for (int v = 0; v < n && complete; ++v) complete = g.degree(v) == n - 1;
    if (complete) return n - 1;
    for (int size = 1; size < n - 1; ++size)
        for (std::uint64_t cut = 0; cut < (std::uint64_t{1} << n); ++cut)
            if (std::popcount(cut) == size && !oracle_connected_after(g, cut)) return size;
    return n - 1;
}

}  // namespace

TEST_CASE("family generators match their defining counts") {
    Graph k4 = complete_graph(4);
    CHECK(k4.edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

    Graph d = dandelion_graph(8, 6);
    CHECK(degree_profile(d).max_degree == 6);
    // One leaf sits at distance 2 from the max-degree vertex (the far path end).
    CHECK(d.degree(0) == 1);
    CHECK_FALSE(d.has_edge(0, 2));
    CHECK(d.has_edge(0, 1));
    CHECK(d.has_edge(1, 2));

    Graph km = complete_minus_matching(6, 3);
    for (int v = 0; v < 6; ++v) CHECK(km.degree(v) == 4);
    Graph co = km.complement();
    CHECK(co.edge_count() == 3);
    CHECK(co.has_edge(0, 1));
    CHECK(co.has_edge(2, 3));
    CHECK(co.has_edge(4, 5));
    for (int v = 0; v < 6; ++v) CHECK(co.degree(v) == 1);  // 3 disjoint edges
}

TEST_CASE("degree profiles") {
    auto c5 = degree_profile(cycle_graph(5));
    CHECK(c5.min_degree == 2);
    CHECK(c5.max_degree == 2);
    CHECK(c5.degrees == std::vector<int>{2, 2, 2, 2, 2});

    CHECK(degree_profile(dandelion_graph(6, 4)).max_degree == 4);

    auto t1 = degree_profile(theta1_graph());
    CHECK(t1.max_degree == 5);
    CHECK(std::count(t1.degrees.begin(), t1.degrees.end(), 5) == 1);
    CHECK(std::count(t1.degrees.begin(), t1.degrees.end(), 3) == 7);
}

TEST_CASE("handshake identity over every family") {
    std::vector<Graph> all = {
        path_graph(5),          cycle_graph(6),        complete_graph(5),
        star_graph(6),          star_plus_graph(6),    wheel_graph(6),
        theta0_graph(),         theta1_graph(),        lollipop_graph(7, 4),
        dandelion_graph(7, 4),  complete_minus_matching(6, 2),
    };
    for (const Graph& g : all) {
        auto prof = degree_profile(g);
        CHECK(std::accumulate(prof.degrees.begin(), prof.degrees.end(), 0) == 2 * g.edge_count());
    }
}

TEST_CASE("bipartition outcomes") {
    Graph k33 = complete_bipartite(3, 3);
    auto r = bipartition(k33);
    REQUIRE(std::holds_alternative<Bipartition>(r));
    auto parts = std::get<Bipartition>(r);
    CHECK(std::popcount(parts.part_a) == 3);
    CHECK(std::popcount(parts.part_b) == 3);

    auto t = bipartition(theta0_graph());
    REQUIRE(std::holds_alternative<OddClosedWalk>(t));
    const auto& walk = std::get<OddClosedWalk>(t).walk;
    CHECK(walk.front() == walk.back());
    CHECK((walk.size() - 1) % 2 == 1);
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        CHECK(theta0_graph().has_edge(walk[i], walk[i + 1]));

    auto c6 = bipartition(cycle_graph(6));
    REQUIRE(std::holds_alternative<Bipartition>(c6));
    auto p6 = std::get<Bipartition>(c6);
    for (auto [u, v] : cycle_graph(6).edges()) CHECK(p6.in_a(u) != p6.in_a(v));
}

TEST_CASE("bipartition parts never contain an edge") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            auto r = bipartition(g);
            if (!std::holds_alternative<Bipartition>(r)) continue;
            auto parts = std::get<Bipartition>(r);
            for (auto [u, v] : g.edges()) CHECK(parts.in_a(u) != parts.in_a(v));
        }
}

TEST_CASE("vertex connectivity on named graphs") {
    CHECK(kappa(cycle_graph(5)) == 2);
    CHECK(kappa(cycle_graph(8)) == 2);
    CHECK(kappa(theta0_graph()) == 2);
    CHECK(kappa(theta1_graph()) == 3);
    CHECK(kappa(complete_minus_matching(6, 3)) == 4);
    CHECK(kappa(cycle_graph(5).complement()) == 2);  // self-complementary
    CHECK(kappa(complete_graph(6)) == 5);
    CHECK(kappa(path_graph(4)) == 1);
    CHECK(kappa(wheel_graph(6)) == 3);
    CHECK(kappa(Graph(1)) == 0);
    Graph two(2);
    CHECK(kappa(two) == 0);  // disconnected
    two.add_edge(0, 1);
    CHECK(kappa(two) == 1);
}

TEST_CASE("s-connectivity checks") {
    CHECK(is_s_connected(wheel_graph(6), 3));
    CHECK(is_s_connected(theta1_graph(), 3));
    CHECK_FALSE(is_s_connected(path_graph(4), 2));
    CHECK(is_s_connected(complete_graph(4), 3));
    CHECK_FALSE(is_s_connected(complete_graph(4), 4));  // needs n >= s+1
    CHECK_THROWS_AS(is_s_connected(path_graph(3), 0), std::invalid_argument);
}

TEST_CASE("kappa agrees with the exhaustive-cut oracle and with is_s_connected") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            int k = kappa(g);
            CHECK(k == oracle_kappa(g));
            for (int s = 1; s <= n; ++s) CHECK(is_s_connected(g, s) == (k >= s));
            CHECK(k <= (g.order() > 0 ? degree_profile(g).min_degree : 0));
        }
}

TEST_CASE("kappa equals min degree on the vertex-transitive families") {
    for (int n = 4; n <= 8; ++n) {
        CHECK(kappa(cycle_graph(n)) == 2);
        CHECK(kappa(complete_graph(n)) == n - 1);
        if (n % 2 == 0) CHECK(kappa(complete_minus_matching(n, n / 2)) == n - 2);
    }
}

TEST_CASE("minimum vertex cut witnesses disconnect") {
    std::vector<Graph> graphs = {path_graph(5), wheel_graph(6), theta0_graph(),
                                 complete_minus_matching(6, 3), lollipop_graph(7, 4)};
    for (const Graph& g : graphs) {
        auto cut = minimum_vertex_cut(g);
        CHECK(static_cast<int>(cut.size()) == kappa(g));
        std::uint64_t mask = 0;
        for (int v : cut) mask |= std::uint64_t{1} << v;
        CHECK_FALSE(oracle_connected_after(g, mask));
    }
    CHECK(minimum_vertex_cut(complete_graph(5)).empty());
}

TEST_CASE("complement") {
    CHECK(complete_graph(6).complement().edge_count() == 0);
    CHECK(are_isomorphic(cycle_graph(5).complement(), cycle_graph(5)));
    Graph km = complete_minus_matching(6, 3);
    Graph expect(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(km.complement() == expect);
}

TEST_CASE("spanning subgraph order") {
    CHECK(is_spanning_subgraph(dandelion_graph(6, 4), lollipop_graph(6, 4)));
    Graph g = wheel_graph(5);
    CHECK(is_spanning_subgraph(g, g));
    Graph p4_shifted(4, {{1, 2}, {2, 3}, {3, 0}});
    CHECK_FALSE(is_spanning_subgraph(cycle_graph(4), p4_shifted));
    CHECK_THROWS_AS(is_spanning_subgraph(path_graph(3), path_graph(4)), std::invalid_argument);
}

TEST_CASE("dl family membership and counts") {
    auto dl53 = dl_family(5, 3);
    CHECK(dl53.size() == 2);  // one optional clique edge
    bool has_dand = false, has_lollipop = false;
    for (const Graph& g : dl53) {
        CHECK(is_spanning_subgraph(dandelion_graph(5, 3), g));
        CHECK(is_spanning_subgraph(g, lollipop_graph(5, 3)));
        has_dand = has_dand || g == dandelion_graph(5, 3);
        has_lollipop = has_lollipop || g == lollipop_graph(5, 3);
    }
    CHECK(has_dand);
    CHECK(has_lollipop);
    CHECK(dl_family(6, 2).size() == 1);  // path only
    CHECK(dl_family(6, 2)[0] == path_graph(6));
    CHECK(dl_family(6, 4).size() == 8);
    CHECK_THROWS_AS(dl_family(4, 1), std::invalid_argument);
}

TEST_CASE("kappa lower bound in terms of min degree (dense graphs)") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            if (degree_profile(g).min_degree == n - 1) continue;  // complete
            CHECK(kappa(g) >= 2 * degree_profile(g).min_degree + 2 - n);
        }
}

TEST_CASE("vertex-deletion-critical non-bipartite graphs are odd cycles") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (is_bipartite(g)) continue;
            bool critical = true;
            for (int v = 0; v < n && critical; ++v)
                critical = is_bipartite(g.without_vertex(v));
            if (!critical) continue;
            CHECK(n % 2 == 1);
            CHECK(are_isomorphic(g, cycle_graph(n)));
        }
}

TEST_CASE("theta graphs pin down their defining facts") {
    Graph t0 = theta0_graph();
    CHECK(t0.order() == 7);
    CHECK(t0.edge_count() == 8);
    CHECK_FALSE(is_bipartite(t0));
    CHECK(kappa(t0) == 2);

    Graph t1 = theta1_graph();
    CHECK(t1.order() == 8);
    CHECK(kappa(t1) == 3);
    // The degree-5 vertex misses exactly the two degree-3 vertices of the base.
    int y1 = -1;
    for (int v = 0; v < 8; ++v)
        if (t1.degree(v) == 5) y1 = v;
    REQUIRE(y1 >= 0);
    int non_neighbors = 0;
    for (int v = 0; v < 8; ++v)
        if (v != y1 && !t1.has_edge(v, y1)) ++non_neighbors;
    CHECK(non_neighbors == 2);
}

TEST_CASE("relabeling preserves the isomorphism class") {
    Graph g = lollipop_graph(6, 3);
    Graph h = relabeled(g, {5, 3, 1, 0, 2, 4});
    CHECK(are_isomorphic(g, h));
    CHECK(g.edge_count() == h.edge_count());
}

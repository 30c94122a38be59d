#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "fslab/canonical.hpp"
#include "fslab/families.hpp"
#include "fslab/fs.hpp"
#include "fslab/graph_io.hpp"

using namespace fslab;

TEST_CASE("fs neighbor generation") {
    // Complete Y allows every swap along an X edge.
    FsInstance pk(path_graph(4), complete_graph(4));
    for (PermRank r = 0; r < 24; ++r) CHECK(pk.fs_degree(unrank(r, 4)) == 3);

    FsInstance empty(Graph(4), Graph(4));
    CHECK(empty.fs_neighbors(Bijection::identity(4)).empty());

    // Star against a cycle at the identity: center swaps whose images are
    // cycle-adjacent; brute-force recount over all vertex pairs.
    Graph s4 = star_graph(4), c4 = cycle_graph(4);
    FsInstance sc(s4, c4);
    Bijection id = Bijection::identity(4);
    int direct = 0;
    for (int a = 0; a < 4; ++a)
        for (int c = a + 1; c < 4; ++c)
            if (s4.has_edge(a, c) && c4.has_edge(id[a], id[c])) ++direct;
    CHECK(sc.fs_degree(id) == direct);
    CHECK(static_cast<int>(sc.fs_neighbors(id).size()) == direct);
}

TEST_CASE("fs degree formula matches the explicit adjacency") {
    auto classes = enumerate_connected(4);
    for (const Graph& x : classes)
        for (const Graph& y : classes) {
            FsInstance inst(x, y, FsMode::Explicit);
            const AdjacencyList& adj = inst.explicit_adjacency();
            for (PermRank r = 0; r < 24; ++r)
                CHECK(inst.fs_degree(unrank(r, 4)) == adj.degree(r));
        }
}

TEST_CASE("fs degree formula sampled at n = 5 and 6") {
    std::mt19937_64 rng(19);
    for (int n : {5, 6}) {
        auto classes = enumerate_connected(n);
        for (int t = 0; t < 4; ++t) {
            FsInstance inst(classes[rng() % classes.size()], classes[rng() % classes.size()],
                            FsMode::Explicit);
            const AdjacencyList& adj = inst.explicit_adjacency();
            for (int probe = 0; probe < 50; ++probe) {
                PermRank r = static_cast<PermRank>(rng() % inst.vertex_count());
                CHECK(inst.fs_degree(unrank(r, n)) == adj.degree(r));
            }
        }
    }
}

TEST_CASE("component decompositions of the named pairs") {
    ComponentReport kp = components(complete_graph(4), path_graph(4));
    CHECK(kp.count == 1);
    CHECK(kp.sizes == std::vector<std::uint32_t>{24});

    ComponentReport cc = components(cycle_graph(4), cycle_graph(4));
    CHECK(cc.count > 1);
    CHECK(cc.sorted_sizes() == std::vector<std::uint32_t>{12, 12});

    ComponentReport sc = components(star_graph(4), cycle_graph(4));
    CHECK(sc.count == 2);
    CHECK(sc.sorted_sizes() == std::vector<std::uint32_t>{12, 12});
}

TEST_CASE("explicit and implicit component runs agree") {
    auto classes = enumerate_connected(4);
    for (const Graph& x : classes)
        for (const Graph& y : classes) {
            FsInstance ex(x, y, FsMode::Explicit);
            FsInstance im(x, y, FsMode::Implicit);
            ComponentReport a = components(ex);
            ComponentReport b = components(im);
            CHECK(a.count == b.count);
            CHECK(a.sizes == b.sizes);
            CHECK(a.component_of == b.component_of);
        }
}

TEST_CASE("sizes always sum to n!") {
    std::mt19937_64 rng(23);
    auto classes = enumerate_connected(5);
    for (int t = 0; t < 10; ++t) {
        const Graph& x = classes[rng() % classes.size()];
        const Graph& y = classes[rng() % classes.size()];
        ComponentReport rep = components(x, y);
        std::uint64_t total = 0;
        for (std::uint32_t s : rep.sizes) total += s;
        CHECK(total == kFactorial[5]);
    }
}

TEST_CASE("fs vertex connectivity on the calculated instances") {
    FsInstance pk4(path_graph(4), complete_graph(4));
    CHECK(fs_kappa(pk4) == 3);

    FsInstance pk5(path_graph(5), complete_graph(5));
    CHECK(fs_is_s_connected(pk5, 4));
    CHECK(fs_kappa(pk5) == 4);  // 4-regular, so 4 is also an upper bound

    FsInstance dk5(dandelion_graph(5, 3), complete_graph(5));
    CHECK(fs_is_s_connected(dk5, 4));

    // kappa of the FS graph agrees with the generic solver run on the same
    // adjacency (cross-validation of the specialized paths).
    FsInstance sw(star_graph(5), wheel_graph(5));
    CHECK(fs_kappa(sw) == vertex_connectivity(sw.explicit_adjacency()));
}

TEST_CASE("per-component kappa") {
    FsInstance inst(star_graph(5), cycle_graph(5));
    ComponentReport rep = components(inst);
    REQUIRE(rep.count == 6);
    for (int k : per_component_kappa(inst, rep)) CHECK(k == 2);
}

TEST_CASE("pinned subgraphs embed as induced copies") {
    // Dropping the far path end of Dand_{2,3} leaves a 4-star; pair it with
    // a wheel missing one rim vertex.
    FsInstance inst(dandelion_graph(5, 3), wheel_graph(5));
    PinnedSubgraph ps = pinned_subgraph(inst, {{0, 1}});
    CHECK(are_isomorphic(ps.sub.x(), star_graph(4)));
    CHECK(ps.sub.n() == 4);

    for (PermRank r = 0; r < ps.sub.vertex_count(); ++r) {
        Bijection phi = unrank(r, 4);
        Bijection sigma = ps.embed(phi);
        CHECK(sigma[0] == 1);
        CHECK(restrict_to(sigma, 0b00001, 0b00010) == phi);
        for (const Bijection& nb : ps.sub.fs_neighbors(phi))
            CHECK(fs_has_edge(inst.x(), inst.y(), sigma, ps.embed(nb)));
    }
    // Distinct pinnings of the same removed pair land on disjoint vertex sets.
    PinnedSubgraph q = pinned_subgraph(inst, {{0, 2}});
    std::set<PermRank> a, b;
    for (PermRank r = 0; r < ps.sub.vertex_count(); ++r) {
        a.insert(ps.embed_rank(r));
        b.insert(q.embed_rank(r));
    }
    for (PermRank r : a) CHECK(b.count(r) == 0);

    // Empty pinning embeds as the identity.
    PinnedSubgraph none = pinned_subgraph(inst, {});
    CHECK(none.sub.n() == 5);
    CHECK(none.embed_rank(17) == 17);
}

TEST_CASE("targeted reachability") {
    FsInstance inst(star_graph(4), cycle_graph(4));
    Bijection id = Bijection::identity(4);
    auto self = reachable_with_target(inst, id, {}, 2, id[2]);
    REQUIRE(self.has_value());
    CHECK(*self == id);

    // Exhaustive cross-check against the component decomposition.
    FsInstance cc(cycle_graph(4), cycle_graph(4));
    ComponentReport rep = components(cc);
    int id_comp = rep.component_of[rank(id)];
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            bool present = false;
            for (PermRank r = 0; r < 24; ++r)
                if (rep.component_of[r] == id_comp && unrank(r, 4)[x] == y) present = true;
            CHECK(reachable_with_target(cc, id, {}, x, y).has_value() == present);
        }

    // Walling off the identity's neighbors blocks every other target.
    auto walls = inst.fs_neighbors(id);
    auto blocked = reachable_with_target(inst, id, walls, 2, (id[2] + 1) % 4);
    CHECK_FALSE(blocked.has_value());

    CHECK_THROWS_AS(reachable_with_target(inst, id, {id}, 0, 0), std::invalid_argument);
}

TEST_CASE("inversion is an isomorphism onto the swapped pair") {
    CHECK(fs_isomorphic_swap_check(path_graph(4), complete_graph(4)));
    CHECK(fs_isomorphic_swap_check(cycle_graph(5), cycle_graph(5)));
    auto classes = enumerate_graphs(4);
    for (const Graph& x : classes)
        for (const Graph& y : classes) {
            CHECK(fs_isomorphic_swap_check(x, y));
            ComponentReport fwd = components(x, y);
            ComponentReport bwd = components(y, x);
            CHECK(fwd.sorted_sizes() == bwd.sorted_sizes());
        }
}

TEST_CASE("edge monotonicity under spanning subgraphs") {
    auto classes = enumerate_connected(4);
    for (const Graph& x : classes)
        for (const Graph& y : classes) {
            int base = components(x, y).count;
            for (auto [u, v] : x.edges()) {
                Graph sub = x;
                sub.remove_edge(u, v);
                CHECK(components(sub, y).count >= base);
                FsInstance small(sub, y);
                for (PermRank r : {PermRank{0}, PermRank{13}}) {
                    Bijection b = unrank(r, 4);
                    for (const Bijection& nb : small.fs_neighbors(b))
                        CHECK(fs_has_edge(x, y, b, nb));
                }
            }
        }
}

TEST_CASE("gluing s-connected halves with s disjoint edges") {
    std::mt19937_64 rng(31);
    for (int s = 1; s <= 3; ++s)
        for (int trial = 0; trial < 6; ++trial) {
            int n = s + 2 + static_cast<int>(rng() % 3);
            auto make = [&] {
                for (;;) {
                    Graph g(n);
                    for (int u = 0; u < n; ++u)
                        for (int v = u + 1; v < n; ++v)
                            if (rng() % 10 < 7) g.add_edge(u, v);
                    if (kappa(g) >= s) return g;
                }
            };
            Graph a = make(), b = make();
            Graph glued(2 * n);
            for (auto [u, v] : a.edges()) glued.add_edge(u, v);
            for (auto [u, v] : b.edges()) glued.add_edge(n + u, n + v);
            std::vector<int> pick(n);
            std::iota(pick.begin(), pick.end(), 0);
            std::shuffle(pick.begin(), pick.end(), rng);
            for (int i = 0; i < s; ++i) glued.add_edge(pick[i], n + pick[(i + 1) % n]);
            CHECK(is_s_connected(glued, s));
        }
}

TEST_CASE("instance mode rules") {
    CHECK_THROWS_AS(FsInstance(path_graph(3), path_graph(4)), std::invalid_argument);
    CHECK_THROWS_AS(FsInstance(path_graph(9), path_graph(9), FsMode::Explicit),
                    std::invalid_argument);
    CHECK_THROWS_AS(FsInstance(path_graph(11), path_graph(11)), std::invalid_argument);
    FsInstance lazy(path_graph(5), path_graph(5), FsMode::Implicit);
    const FsInstance& view = lazy;
    CHECK_THROWS_AS(view.explicit_adjacency(), std::logic_error);
    CHECK_THROWS_AS(fs_kappa(lazy), std::logic_error);
}

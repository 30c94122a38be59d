#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fslab/canonical.hpp"
#include "fslab/families.hpp"
#include "fslab/graph.hpp"

using namespace fslab;

namespace {

// Independent canonical form: full enumeration of all n! relabelings,
// minimizing the row-major upper-triangle bit string. No pruning, different
// bit order from the library implementation.
std::string oracle_canonical(const Graph& g) {
    int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s;
        s.reserve(n * (n - 1) / 2);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) s.push_back(g.has_edge(perm[u], perm[v]) ? '1' : '0');
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + "|" + best;
}

}  // namespace

TEST_CASE("canonical form identifies relabeled copies") {
    Graph a = cycle_graph(5);
    Graph b = relabeled(a, {2, 4, 0, 3, 1});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(path_graph(4)) != canonical_form(star_graph(4)));
    CHECK(canonical_form(cycle_graph(5).complement()) == canonical_form(cycle_graph(5)));
}

TEST_CASE("canonical form matches the brute-force oracle classes") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto random_graph = [&] {
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() & 1) g.add_edge(u, v);
            return g;
        };
        Graph g = random_graph(), h = random_graph();
        CHECK((canonical_form(g) == canonical_form(h)) ==
              (oracle_canonical(g) == oracle_canonical(h)));
    }
}

TEST_CASE("connected class counts at small n") {
    CHECK(enumerate_connected(1).size() == 1);
    CHECK(enumerate_connected(2).size() == 1);
    CHECK(enumerate_connected(3).size() == 2);
    CHECK(enumerate_connected(4).size() == 6);
    CHECK(enumerate_connected(5).size() == 21);
    CHECK(enumerate_connected(6).size() == 112);
}

TEST_CASE("all-graph class counts at small n") {
    CHECK(enumerate_graphs(3).size() == 4);
    CHECK(enumerate_graphs(4).size() == 11);
    CHECK(enumerate_graphs(5).size() == 34);
    CHECK(enumerate_graphs(6).size() == 156);
}

TEST_CASE("enumeration at n <= 5 recounted by the independent oracle") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> oracle_classes;
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
            Graph g(n);
            for (std::size_t i = 0; i < slots.size(); ++i)
                if ((mask >> i) & 1u) g.add_edge(slots[i].first, slots[i].second);
            if (is_connected(g)) oracle_classes.insert(oracle_canonical(g));
        }
        CHECK(enumerate_connected(n).size() == oracle_classes.size());
    }
}

TEST_CASE("representatives at n = 6 are pairwise non-isomorphic by the oracle") {
    auto reps = enumerate_connected(6);
    REQUIRE(reps.size() == 112);
    std::set<std::string> oracle_keys;
    for (const Graph& g : reps) {
        CHECK(is_connected(g));
        oracle_keys.insert(oracle_canonical(g));
    }
    CHECK(oracle_keys.size() == 112);
}

TEST_CASE("enumeration is deterministic and relabel-stable") {
    auto a = enumerate_connected(5);
    auto b = enumerate_connected(5);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

    std::mt19937_64 rng(17);
    for (const Graph& g : a) {
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(g) == canonical_form(relabeled(g, perm)));
    }
}

TEST_CASE("canonical form handles the order-8 fixed graphs") {
    Graph t1 = theta1_graph();
    std::vector<int> perm{7, 2, 5, 0, 1, 6, 3, 4};
    CHECK(are_isomorphic(t1, relabeled(t1, perm)));
    CHECK_FALSE(are_isomorphic(t1, wheel_graph(8)));
}

TEST_CASE("enumeration rejects out-of-range orders") {
    CHECK_THROWS_AS(enumerate_connected(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_connected(8), std::invalid_argument);
}

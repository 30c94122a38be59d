#include "fslab/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "fslab/canonical.hpp"
#include "fslab/connectivity.hpp"
#include "fslab/families.hpp"
#include "fslab/fs.hpp"
#include "fslab/graph.hpp"
#include "fslab/graph_io.hpp"
#include "fslab/invariants.hpp"
#include "fslab/parallel.hpp"
#include "fslab/perm.hpp"

namespace fslab {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::AllPass: return "AllPass";
        case Verdict::Counterexample: return "Counterexample";
        case Verdict::VacuousAtThisN: return "VacuousAtThisN";
    }
    return "?";
}

namespace {

// ---------------------------------------------------------------------------
// Class catalog: one entry per isomorphism class with cached statistics.

struct ClassInfo {
    Graph g;
    int kap = 0;
    int dmin = 0;
    int dmax = 0;
    bool bip = false;
    bool conn = false;
    bool cyc = false;  // isomorphic to the n-cycle
};

struct Catalog {
    int n = 0;
    std::vector<ClassInfo> all;
    std::vector<int> connected;
    std::vector<int> connected_bipartite;
};

const Catalog& catalog(int n) {
    static std::mutex mu;
    static std::map<int, Catalog> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Catalog cat;
    cat.n = n;
    Graph cyc = n >= 3 ? cycle_graph(n) : Graph(n);
    for (Graph& g : enumerate_graphs(n)) {
        ClassInfo info;
        auto prof = degree_profile(g);
        info.kap = kappa(g);
        info.dmin = prof.min_degree;
        info.dmax = prof.max_degree;
        info.bip = is_bipartite(g);
        info.conn = is_connected(g);
        info.cyc = n >= 3 && are_isomorphic(g, cyc);
        info.g = std::move(g);
        cat.all.push_back(std::move(info));
    }
    for (std::size_t i = 0; i < cat.all.size(); ++i) {
        if (!cat.all[i].conn) continue;
        cat.connected.push_back(static_cast<int>(i));
        if (cat.all[i].bip) cat.connected_bipartite.push_back(static_cast<int>(i));
    }
    return cache.emplace(n, std::move(cat)).first->second;
}

// ---------------------------------------------------------------------------
// Claim plumbing.

struct Instance {
    Graph x, y;
    int a = 0, b = 0;  // claim-specific parameters (s, k, case tag, ...)
};

struct Gathered {
    std::vector<Instance> qualifying;
    long long scanned = 0;
};

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

using GatherFn = Gathered (*)(int, const ClaimContext&);
using CheckFn = Outcome (*)(int, const Instance&);

struct ClaimDef {
    int n_min;
    int n_max;
    GatherFn gather;
    CheckFn check;
    const char* what;
};

// ---------------------------------------------------------------------------
// Shared checking helpers.

int fs_count(const Graph& x, const Graph& y) {
    FsInstance inst(x, y, FsMode::Implicit);
    return components(inst).count;
}

bool fs_s_connected(const Graph& x, const Graph& y, int s) {
    FsInstance inst(x, y, FsMode::Explicit);
    return fs_is_s_connected(inst, s);
}

// Component count == expected and every component s-connected.
Outcome check_components_s_connected(const Graph& x, const Graph& y, int expected_count, int s) {
    FsInstance inst(x, y, FsMode::Explicit);
    ComponentReport rep = components(inst);
    if (rep.count != expected_count)
        return fail("component count " + std::to_string(rep.count) + " != " +
                    std::to_string(expected_count));
    const AdjacencyList& adj = inst.explicit_adjacency();
    std::vector<std::vector<std::int32_t>> members(rep.count);
    for (PermRank r = 0; r < rep.component_of.size(); ++r)
        members[rep.component_of[r]].push_back(static_cast<std::int32_t>(r));
    for (int id = 0; id < rep.count; ++id)
        if (!adj_is_s_connected(induced_subgraph(adj, members[id]), s))
            return fail("component " + std::to_string(id) + " is not " + std::to_string(s) +
                        "-connected");
    return {};
}

// For every forbidden vertex set of size s-1, every component of
// FS(X,Y) - forbidden must contain, for each (x, y) pair, some sigma with
// sigma(x) = y. Exhaustive over forbidden subsets.
Outcome forbidden_target_scan(const Graph& xg, const Graph& yg, int s) {
    const int n = xg.order();
    FsInstance inst(xg, yg, FsMode::Explicit);
    const AdjacencyList& adj = inst.explicit_adjacency();
    const PermRank nf = inst.vertex_count();
    const std::uint64_t full_mask =
        (n * n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n * n)) - 1);

    std::vector<std::uint8_t> blocked(nf, 0);
    std::vector<std::int32_t> comp(nf);
    std::vector<PermRank> queue;
    queue.reserve(nf);

    // Pair-presence masks: pair (x, y) -> bit x*n + y, per BFS component.
    auto scan_one = [&](const std::vector<PermRank>& forbidden) -> std::optional<std::string> {
        for (PermRank r : forbidden) blocked[r] = 1;
        std::fill(comp.begin(), comp.end(), -1);
        std::optional<std::string> bad;
        for (PermRank r0 = 0; r0 < nf && !bad; ++r0) {
            if (blocked[r0] || comp[r0] >= 0) continue;
            queue.clear();
            queue.push_back(r0);
            comp[r0] = 1;
            std::uint64_t present = 0;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                PermRank u = queue[qi];
                Bijection bu = unrank(u, n);
                for (int i = 0; i < n; ++i) present |= std::uint64_t{1} << (i * n + bu[i]);
                for (std::int64_t e = adj.offsets[u]; e < adj.offsets[u + 1]; ++e) {
                    PermRank v = static_cast<PermRank>(adj.targets[e]);
                    if (!blocked[v] && comp[v] < 0) {
                        comp[v] = 1;
                        queue.push_back(v);
                    }
                }
            }
            if (present != full_mask)
                bad = "component of rank " + std::to_string(r0) + " misses a target pair";
        }
        for (PermRank r : forbidden) blocked[r] = 0;
        return bad;
    };

    // All (s-1)-subsets of ranks in lexicographic order.
    std::vector<PermRank> pick(s - 1);
    std::iota(pick.begin(), pick.end(), 0);
    if (s - 1 == 0) {
        if (auto bad = scan_one({})) return fail(*bad);
        return {};
    }
    for (;;) {
        if (auto bad = scan_one(pick)) {
            std::string ids;
            for (PermRank r : pick) ids += std::to_string(r) + " ";
            return fail("forbidden {" + ids + "}: " + *bad);
        }
        int i = s - 2;
        while (i >= 0 && pick[i] == nf - (s - 1) + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < s - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
    return {};
}

long long subset_count(PermRank nf, int take) {
    long long c = 1;
    for (int i = 0; i < take; ++i) c = c * (nf - i) / (i + 1);
    return c;
}

// ---------------------------------------------------------------------------
// Claim: Thm1.1 — star trichotomy. a = 0 normal, b = 1 marks the fixed
// exceptional 7-vertex instance whose component count is pinned to 6.

Gathered gather_thm11(int n, const ClaimContext&) {
    Gathered g;
    if (n == 7) {
        g.scanned = 1;
        g.qualifying.push_back({star_graph(7), theta0_graph(), 0, 1});
        return g;
    }
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.connected.size());
    for (int yi : cat.connected)
        g.qualifying.push_back({star_graph(n), cat.all[yi].g, 0, 0});
    return g;
}

Outcome check_thm11(int n, const Instance& inst) {
    int count = fs_count(inst.x, inst.y);
    if (inst.b == 1) {
        if (count <= 1) return fail("expected disconnected, got count " + std::to_string(count));
        if (count != 6) return fail("expected 6 components, got " + std::to_string(count));
        return {};
    }
    WilsonConditions w = wilson_conditions(inst.y);
    int expected = wilson_expected_components(w);
    if (expected == 1 && count != 1)
        return fail("expected connected, got count " + std::to_string(count));
    if (expected == 2 && count != 2)
        return fail("expected exactly 2 components, got " + std::to_string(count));
    if (expected == -1 && count < 2)
        return fail("expected disconnected, got count " + std::to_string(count));
    (void)n;
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Thm1.2 — min+2max degree bound forces connectivity.

Gathered gather_thm12(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.connected.size()) * cat.connected.size();
    for (int xi : cat.connected)
        for (int yi : cat.connected) {
            int lo = std::min(cat.all[xi].dmin, cat.all[yi].dmin);
            int hi = std::max(cat.all[xi].dmin, cat.all[yi].dmin);
            if (lo + 2 * hi >= 2 * n) g.qualifying.push_back({cat.all[xi].g, cat.all[yi].g});
        }
    return g;
}

Outcome check_fs_connected(int, const Instance& inst) {
    if (!fs_connected(inst.x, inst.y)) return fail("expected connected");
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Thm1.3 — 2min+3max bound with both minimum degrees above n/2.

Gathered gather_thm13(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.connected.size()) * cat.connected.size();
    for (int xi : cat.connected)
        for (int yi : cat.connected) {
            int dx = cat.all[xi].dmin, dy = cat.all[yi].dmin;
            if (2 * dx <= n || 2 * dy <= n) continue;
            if (2 * std::min(dx, dy) + 3 * std::max(dx, dy) >= 3 * n)
                g.qualifying.push_back({cat.all[xi].g, cat.all[yi].g});
        }
    return g;
}

// ---------------------------------------------------------------------------
// Claim: Conj1.4 — the same bound without the n/2 floor.

Gathered gather_conj14(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.connected.size()) * cat.connected.size();
    for (int xi : cat.connected)
        for (int yi : cat.connected) {
            int dx = cat.all[xi].dmin, dy = cat.all[yi].dmin;
            if (2 * std::min(dx, dy) + 3 * std::max(dx, dy) >= 3 * n)
                g.qualifying.push_back({cat.all[xi].g, cat.all[yi].g});
        }
    return g;
}

// ---------------------------------------------------------------------------
// Claim: Thm1.5 — bipartite pairs. b = 1: exactly two s-connected
// components (a = s). b = 2: witness family with at least 3 components.

Gathered gather_thm15(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    const auto& bip = cat.connected_bipartite;
    g.scanned = static_cast<long long>(bip.size()) * bip.size();
    for (int xi : bip)
        for (int yi : bip) {
            if (cat.all[yi].cyc) continue;
            int s = cat.all[xi].dmax + cat.all[yi].kap - n + 1;
            if (s >= 2) g.qualifying.push_back({cat.all[xi].g, cat.all[yi].g, s, 1});
        }
    for (int delta = 2; delta <= n - 1; ++delta) {
        for (int yi : bip) {
            ++g.scanned;
            int kap = cat.all[yi].kap;
            if (kap >= 1 && delta + kap <= n)
                g.qualifying.push_back({dandelion_graph(n, delta), cat.all[yi].g, 0, 2});
        }
    }
    return g;
}

Outcome check_thm15(int, const Instance& inst) {
    if (inst.b == 1) return check_components_s_connected(inst.x, inst.y, 2, inst.a);
    int count = fs_count(inst.x, inst.y);
    if (count < 3) return fail("expected >= 3 components, got " + std::to_string(count));
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Thm1.6 — max-degree + connectivity bound gives s-connectivity.
// a holds the strongest s implied by the hypothesis.

Gathered gather_thm16(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.connected.size()) * cat.connected.size();
    for (int xi : cat.connected)
        for (int yi : cat.connected) {
            if (cat.all[xi].bip && cat.all[yi].bip) continue;
            if (cat.all[yi].cyc) continue;  // the 7-vertex exception cannot occur at n <= 6
            int s = cat.all[xi].dmax + cat.all[yi].kap - n + 1;
            if (s >= 2) g.qualifying.push_back({cat.all[xi].g, cat.all[yi].g, s, 0});
        }
    return g;
}

Outcome check_s_connected(int, const Instance& inst) {
    if (!fs_s_connected(inst.x, inst.y, inst.a))
        return fail("not " + std::to_string(inst.a) + "-connected");
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Thm1.7 — complete Y gives max-degree connectivity (b = 1);
// otherwise the 2*delta(Y) refinement (b = 2). a = required connectivity.

Gathered gather_thm17(int n, const ClaimContext&) {
    Gathered g;
    if (n < 6) return g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.connected.size()) * cat.connected.size();
    Graph kn = complete_graph(n);
    for (int xi : cat.connected) {
        const ClassInfo& X = cat.all[xi];
        for (int yi : cat.connected) {
            const ClassInfo& Y = cat.all[yi];
            if (Y.dmin == n - 1) {
                g.qualifying.push_back({X.g, kn, X.dmax, 1});
                continue;
            }
            if (Y.dmin < X.dmin) continue;
            int s = X.dmax + 2 * Y.dmin - 2 * n + 2;
            if (s >= 2) g.qualifying.push_back({X.g, Y.g, s + 1, 2});
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Claim: Thm1.8 — 2dx+3dy fractional bound; a = strongest s (exact
// integer arithmetic: s <= (4dx + 6dy - 6n + 6) / 3).

Gathered gather_thm18(int n, const ClaimContext&) {
    Gathered g;
    if (n < 6) return g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.connected.size()) * cat.connected.size();
    for (int xi : cat.connected) {
        const ClassInfo& X = cat.all[xi];
        if (3 * X.dmax < 4 * X.dmin) continue;
        for (int yi : cat.connected) {
            const ClassInfo& Y = cat.all[yi];
            if (Y.dmin < X.dmin) continue;
            int numer = 4 * X.dmin + 6 * Y.dmin - 6 * n + 6;
            if (numer < 6) continue;  // s >= 2 needs numer/3 >= 2
            int s = numer / 3;
            g.qualifying.push_back({X.g, Y.g, s, 0});
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Claim: Lem2.1 — complete X: FS(K_n, Y) connected iff Y connected.

Gathered gather_lem21(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.all.size());
    for (const ClassInfo& Y : cat.all)
        g.qualifying.push_back({complete_graph(n), Y.g, Y.conn ? 1 : 0, 0});
    return g;
}

Outcome check_lem21(int, const Instance& inst) {
    bool conn = fs_connected(inst.x, inst.y);
    bool y_conn = inst.a == 1;
    if (conn != y_conn)
        return fail(std::string("FS ") + (conn ? "connected" : "disconnected") + " but Y " +
                    (y_conn ? "connected" : "disconnected"));
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Lem2.2 — edge monotonicity: deleting an edge on either side never
// merges components, and neighbor sets only shrink.

Gathered gather_lem22(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.all.size()) * cat.all.size();
    for (const ClassInfo& X : cat.all)
        for (const ClassInfo& Y : cat.all) g.qualifying.push_back({X.g, Y.g});
    return g;
}

Outcome check_lem22(int n, const Instance& inst) {
    int base = fs_count(inst.x, inst.y);
    FsInstance full(inst.x, inst.y, FsMode::Implicit);
    PermRank nf = full.vertex_count();
    std::vector<PermRank> probes = {0, nf / 3, (2 * nf) / 3};
    auto shrink_side = [&](bool x_side, int eu, int ev) -> Outcome {
        Graph sx = inst.x, sy = inst.y;
        (x_side ? sx : sy).remove_edge(eu, ev);
        int sub = fs_count(sx, sy);
        if (sub < base)
            return fail("edge deletion lowered component count " + std::to_string(base) + " -> " +
                        std::to_string(sub));
        FsInstance part(sx, sy, FsMode::Implicit);
        for (PermRank r : probes) {
            Bijection b = unrank(r, n);
            for (const Bijection& nb : part.fs_neighbors(b))
                if (!fs_has_edge(inst.x, inst.y, b, nb)) return fail("subgraph edge missing above");
        }
        return {};
    };
    for (auto [u, v] : inst.x.edges())
        if (Outcome o = shrink_side(true, u, v); !o.ok) return o;
    for (auto [u, v] : inst.y.edges())
        if (Outcome o = shrink_side(false, u, v); !o.ok) return o;
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Lem2.3 — star-plus-edge X: 2-connected Y outside the exceptional
// family forces connectivity.

Gathered gather_lem23(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.all.size());
    for (const ClassInfo& Y : cat.all) {
        if (Y.kap < 2 || Y.cyc) continue;  // theta exception needs n = 7
        g.qualifying.push_back({star_plus_graph(n), Y.g});
    }
    return g;
}

// ---------------------------------------------------------------------------
// Claim: Lem2.4 — both sides bipartite forces disconnection.

Gathered gather_lem24(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.all.size()) * cat.all.size();
    for (const ClassInfo& X : cat.all) {
        if (!X.bip) continue;
        for (const ClassInfo& Y : cat.all) {
            if (!Y.bip) continue;
            g.qualifying.push_back({X.g, Y.g});
        }
    }
    return g;
}

Outcome check_fs_disconnected(int, const Instance& inst) {
    if (fs_connected(inst.x, inst.y)) return fail("expected disconnected");
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Lem2.5 — the double-parity label is constant along FS edges for
// connected bipartite pairs.

Gathered gather_lem25(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    const auto& bip = cat.connected_bipartite;
    g.scanned = static_cast<long long>(bip.size()) * bip.size();
    for (int xi : bip)
        for (int yi : bip) g.qualifying.push_back({cat.all[xi].g, cat.all[yi].g});
    return g;
}

Outcome check_lem25(int n, const Instance& inst) {
    auto bx = std::get<Bipartition>(bipartition(inst.x));
    auto by = std::get<Bipartition>(bipartition(inst.y));
    FsInstance inst_fs(inst.x, inst.y, FsMode::Implicit);
    const PermRank nf = inst_fs.vertex_count();
    for (PermRank r = 0; r < nf; ++r) {
        Bijection b = unrank(r, n);
        int cls = parity_g(b, bx, by).parity;
        for (const Bijection& nb : inst_fs.fs_neighbors(b)) {
            if (rank(nb) < r) continue;
            if (parity_g(nb, bx, by).parity != cls)
                return fail("parity class changed along an edge at rank " + std::to_string(r));
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Lem2.6 — cycle X: connectivity iff the complement-forest gcd
// criterion.

Gathered gather_lem26(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.all.size());
    for (const ClassInfo& Y : cat.all) g.qualifying.push_back({cycle_graph(n), Y.g});
    return g;
}

Outcome check_lem26(int, const Instance& inst) {
    bool predicted = cycle_criterion(inst.y);
    bool actual = fs_connected(inst.x, inst.y);
    if (predicted != actual)
        return fail(std::string("criterion ") + (predicted ? "true" : "false") + " but FS " +
                    (actual ? "connected" : "disconnected"));
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Lem2.7 — lollipop X: connectivity iff Y is (n-k+1)-connected.
// a = k.

Gathered gather_lem27(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.all.size()) * (n - 1);
    for (int k = 2; k <= n; ++k)
        for (const ClassInfo& Y : cat.all)
            g.qualifying.push_back({lollipop_graph(n, k), Y.g, k, 0});
    return g;
}

Outcome check_lem27(int n, const Instance& inst) {
    bool predicted = lollipop_criterion(n, inst.a, inst.y);
    bool actual = fs_connected(inst.x, inst.y);
    if (predicted != actual)
        return fail(std::string("criterion ") + (predicted ? "true" : "false") + " but FS " +
                    (actual ? "connected" : "disconnected"));
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Lem2.8 — star X: every component has connectivity exactly
// delta(Y). Exhaustive through n = 5, seeded sample at n = 6.

Gathered gather_lem28(int n, const ClaimContext& ctx) {
    Gathered g;
    const Catalog& cat = catalog(n);
    std::vector<int> pool = cat.connected;
    g.scanned = static_cast<long long>(pool.size());
    if (n >= 6) {
        std::mt19937_64 rng(ctx.seed ^ (0x5eedULL + n));
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(std::min<std::size_t>(pool.size(), 16));
    }
    for (int yi : pool)
        g.qualifying.push_back({star_graph(n), cat.all[yi].g, cat.all[yi].dmin, 0});
    return g;
}

Outcome check_lem28(int, const Instance& inst) {
    FsInstance inst_fs(inst.x, inst.y, FsMode::Explicit);
    ComponentReport rep = components(inst_fs);
    std::vector<int> kappas = per_component_kappa(inst_fs, rep);
    for (int id = 0; id < rep.count; ++id)
        if (kappas[id] != inst.a)
            return fail("component " + std::to_string(id) + " has kappa " +
                        std::to_string(kappas[id]) + " != delta(Y) = " + std::to_string(inst.a));
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Lem2.9 — kappa(X) >= 2*delta(X) + 2 - n for connected X != K_n.

Gathered gather_lem29(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.connected.size());
    for (int xi : cat.connected) {
        if (cat.all[xi].dmin == n - 1) continue;  // complete graph excluded
        g.qualifying.push_back({cat.all[xi].g, Graph(0), 0, 0});
    }
    return g;
}

Outcome check_lem29(int n, const Instance& inst) {
    int kap = kappa(inst.x);
    int dmin = degree_profile(inst.x).min_degree;
    if (kap < 2 * dmin + 2 - n)
        return fail("kappa " + std::to_string(kap) + " < " + std::to_string(2 * dmin + 2 - n));
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Lem3.1 — pinned copies are induced-isomorphic and vertex-disjoint.

Gathered gather_lem31(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.connected.size()) * cat.connected.size();
    for (int xi : cat.connected)
        for (int yi : cat.connected) g.qualifying.push_back({cat.all[xi].g, cat.all[yi].g});
    return g;
}

Outcome check_lem31(int n, const Instance& inst) {
    FsInstance full(inst.x, inst.y, FsMode::Explicit);
    // Single-vertex pinnings: isomorphism onto the induced subgraph.
    for (int x0 = 0; x0 < n; ++x0)
        for (int y0 = 0; y0 < n; ++y0) {
            PinnedSubgraph ps = pinned_subgraph(full, {{x0, y0}});
            const PermRank msub = ps.sub.vertex_count();
            std::vector<Bijection> embedded;
            embedded.reserve(msub);
            for (PermRank r = 0; r < msub; ++r) {
                Bijection sigma = ps.embed(unrank(r, n - 1));
                if (sigma[x0] != y0) return fail("embedding violates the pinning");
                embedded.push_back(sigma);
            }
            for (PermRank r = 0; r < msub; ++r) {
                Bijection phi = unrank(r, n - 1);
                for (const Bijection& nb : ps.sub.fs_neighbors(phi)) {
                    if (!fs_has_edge(inst.x, inst.y, embedded[r], ps.embed(nb)))
                        return fail("embedded edge missing in the big graph");
                }
            }
            // Induced: edges of the big graph inside the image must pull back.
            for (PermRank r1 = 0; r1 < msub; ++r1)
                for (PermRank r2 = r1 + 1; r2 < msub; ++r2)
                    if (fs_has_edge(inst.x, inst.y, embedded[r1], embedded[r2]) &&
                        !fs_has_edge(ps.sub.x(), ps.sub.y(), unrank(r1, n - 1), unrank(r2, n - 1)))
                        return fail("image is not induced");
        }
    // Two-vertex removals: both pinnings embed edge-preservingly and land on
    // disjoint vertex sets.
    for (int x0 = 0; x0 < n; ++x0)
        for (int x1 = x0 + 1; x1 < n; ++x1)
            for (int y0 = 0; y0 < n; ++y0)
                for (int y1 = y0 + 1; y1 < n; ++y1) {
                    PinnedSubgraph p1 = pinned_subgraph(full, {{x0, y0}, {x1, y1}});
                    PinnedSubgraph p2 = pinned_subgraph(full, {{x0, y1}, {x1, y0}});
                    std::vector<std::uint8_t> seen(full.vertex_count(), 0);
                    for (PermRank r = 0; r < p1.sub.vertex_count(); ++r)
                        seen[p1.embed_rank(r)] = 1;
                    for (PermRank r = 0; r < p2.sub.vertex_count(); ++r) {
                        PermRank t = p2.embed_rank(r);
                        if (seen[t]) return fail("pinned copies overlap at rank " + std::to_string(t));
                    }
                    for (const PinnedSubgraph* pp : {&p1, &p2})
                        for (PermRank r = 0; r < pp->sub.vertex_count(); ++r) {
                            Bijection phi = unrank(r, n - 2);
                            for (const Bijection& nb : pp->sub.fs_neighbors(phi))
                                if (!fs_has_edge(inst.x, inst.y, pp->embed(phi), pp->embed(nb)))
                                    return fail("two-vertex pinning loses an edge");
                        }
                }
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Lem3.2 — components of FS(S_n, C_n) biject with cyclic orderings.

Gathered gather_lem32(int n, const ClaimContext&) {
    Gathered g;
    g.scanned = 1;
    g.qualifying.push_back({star_graph(n), cycle_graph(n)});
    return g;
}

Outcome check_lem32(int n, const Instance& inst) {
    FsInstance fs(inst.x, inst.y, FsMode::Implicit);
    ComponentReport rep = components(fs);
    std::map<CyclicOrdering, int> comp_of_ordering;
    std::vector<int> ordering_of_comp(rep.count, -1);
    int next_ordering = 0;
    const PermRank nf = fs.vertex_count();
    for (PermRank r = 0; r < nf; ++r) {
        CyclicOrdering co = cyclic_ordering(unrank(r, n), inst.x, inst.y);
        auto [it, fresh] = comp_of_ordering.emplace(co, next_ordering);
        if (fresh) ++next_ordering;
        int comp = rep.component_of[r];
        if (ordering_of_comp[comp] == -1)
            ordering_of_comp[comp] = it->second;
        else if (ordering_of_comp[comp] != it->second)
            return fail("two orderings inside one component");
    }
    // Same ordering never spans two components.
    std::vector<int> comp_of_label(next_ordering, -1);
    for (PermRank r = 0; r < nf; ++r) {
        CyclicOrdering co = cyclic_ordering(unrank(r, n), inst.x, inst.y);
        int label = comp_of_ordering[co];
        if (comp_of_label[label] == -1)
            comp_of_label[label] = rep.component_of[r];
        else if (comp_of_label[label] != rep.component_of[r])
            return fail("one ordering split across components");
    }
    int expected = static_cast<int>(kFactorial[n - 2]);
    if (rep.count != expected || next_ordering != expected)
        return fail("count " + std::to_string(rep.count) + " / orderings " +
                    std::to_string(next_ordering) + " != " + std::to_string(expected));
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Cor3.3 — delete any single vertex of FS(S_n, C_n): every surviving
// component keeps >= n-2 vertices hitting each (x, y) target.

Gathered gather_cor33(int n, const ClaimContext&) {
    Gathered g;
    const PermRank nf = kFactorial[n];
    g.scanned = nf;
    for (PermRank r = 0; r < nf; ++r)
        g.qualifying.push_back({star_graph(n), cycle_graph(n), static_cast<int>(r), 0});
    return g;
}

Outcome check_cor33(int n, const Instance& inst) {
    FsInstance fs(inst.x, inst.y, FsMode::Explicit);
    const AdjacencyList& adj = fs.explicit_adjacency();
    const PermRank nf = fs.vertex_count();
    const PermRank removed = static_cast<PermRank>(inst.a);
    std::vector<std::int32_t> comp(nf, -1);
    std::vector<PermRank> queue;
    std::vector<std::vector<int>> hits;
    for (PermRank r0 = 0; r0 < nf; ++r0) {
        if (r0 == removed || comp[r0] >= 0) continue;
        int id = static_cast<int>(hits.size());
        hits.emplace_back(n * n, 0);
        queue.clear();
        queue.push_back(r0);
        comp[r0] = id;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            PermRank u = queue[qi];
            Bijection bu = unrank(u, n);
            for (int i = 0; i < n; ++i) ++hits[id][i * n + bu[i]];
            for (std::int64_t e = adj.offsets[u]; e < adj.offsets[u + 1]; ++e) {
                PermRank v = static_cast<PermRank>(adj.targets[e]);
                if (v != removed && comp[v] < 0) {
                    comp[v] = id;
                    queue.push_back(v);
                }
            }
        }
    }
    for (const auto& h : hits)
        for (int c : h)
            if (c < n - 2) return fail("a component has only " + std::to_string(c) + " targets");
    return {};
}

// ---------------------------------------------------------------------------
// Claims: Lem3.4 / Lem3.5 — targeted reachability after deleting any s-1
// vertices. a = s. Lem3.4 fixes X = S_n; Lem3.5 scans pairs with
// Delta(X) + kappa(Y) >= n+s-1. The subset sweep is exhaustive wherever
// #subsets * n! stays within a fixed work budget (all s at n <= 5, s = 2 at
// n = 6 and 7).

bool forbidden_scan_affordable(int n, int s) {
    constexpr long long kBudget = 120000000;
    return subset_count(kFactorial[n], s - 1) * kFactorial[n] <= kBudget;
}

Gathered gather_lem34(int n, const ClaimContext&) {
    Gathered g;
    if (n == 7) {
        g.scanned = 1;
        g.qualifying.push_back({star_graph(7), theta0_graph(), 2, 0});
        return g;
    }
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.connected.size());
    for (int yi : cat.connected) {
        for (int s = 2; s <= cat.all[yi].kap; ++s) {
            if (!forbidden_scan_affordable(n, s)) break;
            g.qualifying.push_back({star_graph(n), cat.all[yi].g, s, 0});
        }
    }
    return g;
}

Outcome check_forbidden_targets(int, const Instance& inst) {
    return forbidden_target_scan(inst.x, inst.y, inst.a);
}

Gathered gather_lem35(int n, const ClaimContext&) {
    Gathered g;
    if (n == 6) {
        // The pinned n = 6 instance: Dand_{2,4} against K_6, s = 2.
        g.scanned = 1;
        g.qualifying.push_back({dandelion_graph(6, 4), complete_graph(6), 2, 0});
        return g;
    }
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.connected.size()) * cat.connected.size();
    for (int xi : cat.connected)
        for (int yi : cat.connected) {
            int smax = cat.all[xi].dmax + cat.all[yi].kap - n + 1;
            for (int s = 2; s <= smax; ++s) {
                if (!forbidden_scan_affordable(n, s)) break;
                g.qualifying.push_back({cat.all[xi].g, cat.all[yi].g, s, 0});
            }
        }
    return g;
}

// ---------------------------------------------------------------------------
// Claim: Obs3.6 — gluing two s-connected halves with s disjoint cross
// edges stays s-connected. Seeded synthetic instances; x carries the glued
// graph, a = s.

Gathered gather_obs36(int n, const ClaimContext& ctx) {
    Gathered g;
    std::mt19937_64 rng(ctx.seed ^ (0x9e3779b97f4a7c15ULL + n));
    auto random_s_connected = [&](int order, int s) {
        for (int attempt = 0;; ++attempt) {
            double p = 0.55 + 0.02 * attempt;
            Graph cand(order);
            for (int u = 0; u < order; ++u)
                for (int v = u + 1; v < order; ++v)
                    if (std::uniform_real_distribution<>(0, 1)(rng) < p) cand.add_edge(u, v);
            if (kappa(cand) >= s) return cand;
            if (attempt >= 40) return complete_graph(order);
        }
    };
    for (int s = 1; s <= 3; ++s) {
        if (s + 1 > n) continue;
        for (int trial = 0; trial < 4; ++trial) {
            ++g.scanned;
            Graph a = random_s_connected(n, s);
            Graph b = random_s_connected(n, s);
            Graph glued(2 * n);
            for (auto [u, v] : a.edges()) glued.add_edge(u, v);
            for (auto [u, v] : b.edges()) glued.add_edge(n + u, n + v);
            std::vector<int> left(n), right(n);
            std::iota(left.begin(), left.end(), 0);
            std::iota(right.begin(), right.end(), 0);
            std::shuffle(left.begin(), left.end(), rng);
            std::shuffle(right.begin(), right.end(), rng);
            for (int i = 0; i < s; ++i) glued.add_edge(left[i], n + right[i]);
            g.qualifying.push_back({glued, Graph(0), s, 0});
        }
    }
    return g;
}

Outcome check_obs36(int, const Instance& inst) {
    if (!is_s_connected(inst.x, inst.a))
        return fail("glued graph is not " + std::to_string(inst.a) + "-connected");
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Lem3.7 — wheels: Delta(Z) = n-2 forces FS(Z, W_n) 2-connected.

Gathered gather_lem37(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.connected.size());
    for (int xi : cat.connected) {
        if (cat.all[xi].dmax != n - 2) continue;
        g.qualifying.push_back({cat.all[xi].g, wheel_graph(n), 2, 0});
    }
    return g;
}

// ---------------------------------------------------------------------------
// Claim: Lem3.8 — the fixed 8-vertex instance: dandelion against the
// augmented 7-vertex exceptional graph.

Gathered gather_lem38(int n, const ClaimContext&) {
    Gathered g;
    if (n != 8) return g;
    g.scanned = 1;
    g.qualifying.push_back({dandelion_graph(8, 6), theta1_graph(), 2, 0});
    return g;
}

Outcome check_lem38(int, const Instance& inst) {
    const Graph& t1 = inst.y;
    if (kappa(t1) != 3) return fail("kappa(Y) != 3");
    if (degree_profile(inst.x).max_degree != 6) return fail("Delta(X) != 6");
    int y1 = -1;
    for (int v = 0; v < 8; ++v)
        if (t1.degree(v) == 5) y1 = v;
    if (y1 < 0) return fail("no degree-5 vertex in Y");
    bool found_y0 = false;
    for (int y0 = 0; y0 < 8 && !found_y0; ++y0) {
        if (y0 == y1 || t1.has_edge(y0, y1)) continue;
        Graph rest = t1.without_vertex(y0);
        if (is_s_connected(rest, 2) && !is_bipartite(rest) &&
            !are_isomorphic(rest, cycle_graph(7)) && !are_isomorphic(rest, theta0_graph()))
            found_y0 = true;
    }
    if (!found_y0) return fail("no valid deleted vertex next to the degree-5 vertex");
    if (!fs_s_connected(inst.x, inst.y, 2)) return fail("FS not 2-connected");
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Lem3.9 — a non-bipartite graph all of whose single-vertex
// deletions are bipartite is an odd cycle.

Gathered gather_lem39(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.all.size());
    for (const ClassInfo& G : cat.all) {
        if (G.bip) continue;
        bool all_deletions_bipartite = true;
        for (int v = 0; v < n && all_deletions_bipartite; ++v)
            all_deletions_bipartite = is_bipartite(G.g.without_vertex(v));
        if (all_deletions_bipartite) g.qualifying.push_back({G.g, Graph(0), 0, 0});
    }
    return g;
}

Outcome check_lem39(int n, const Instance& inst) {
    if (n % 2 == 0) return fail("even order");
    if (!are_isomorphic(inst.x, cycle_graph(n))) return fail("not the n-cycle");
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Lem3.10 — kappa(Y) = 3 against Dand_{2,n-2}: bipartite Y splits
// into two 2-connected components (b = 1), non-bipartite Y is 2-connected
// (b = 2).

Gathered gather_lem310(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.connected.size());
    for (int yi : cat.connected) {
        if (cat.all[yi].kap != 3) continue;
        g.qualifying.push_back({dandelion_graph(n, n - 2), cat.all[yi].g, 2, cat.all[yi].bip ? 1 : 2});
    }
    return g;
}

Outcome check_lem310(int, const Instance& inst) {
    if (inst.b == 1) return check_components_s_connected(inst.x, inst.y, 2, 2);
    if (!fs_s_connected(inst.x, inst.y, 2)) return fail("FS not 2-connected");
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Lem3.11 — adding a same-part edge to bipartite X merges the two
// l-connected halves into an l-connected whole.

Gathered gather_lem311(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    const auto& bip = cat.connected_bipartite;
    g.scanned = static_cast<long long>(bip.size()) * bip.size();
    for (int xi : bip)
        for (int yi : bip) g.qualifying.push_back({cat.all[xi].g, cat.all[yi].g});
    return g;
}

Outcome check_lem311(int, const Instance& inst) {
    FsInstance fs(inst.x, inst.y, FsMode::Explicit);
    ComponentReport rep = components(fs);
    if (rep.count != 2) return {};  // hypothesis needs exactly two components
    std::vector<int> kappas = per_component_kappa(fs, rep);
    int l = std::min(kappas[0], kappas[1]);
    if (l < 1) return {};
    auto bx = std::get<Bipartition>(bipartition(inst.x));
    for (int x1 = 0; x1 < inst.x.order(); ++x1)
        for (int x2 = x1 + 1; x2 < inst.x.order(); ++x2) {
            if (inst.x.has_edge(x1, x2)) continue;
            if (bx.in_a(x1) != bx.in_a(x2)) continue;
            Graph merged = inst.x;
            merged.add_edge(x1, x2);
            if (!fs_s_connected(merged, inst.y, l))
                return fail("adding edge (" + std::to_string(x1) + "," + std::to_string(x2) +
                            ") is not " + std::to_string(l) + "-connected");
        }
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Cor3.13 — the s = 2 / s >= 3 case split of the main bound.
// b records the case (1, 2, 3); a = s.

Gathered gather_cor313(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.connected.size()) * cat.connected.size();
    for (int xi : cat.connected)
        for (int yi : cat.connected) {
            const ClassInfo& X = cat.all[xi];
            const ClassInfo& Y = cat.all[yi];
            if (X.bip && Y.bip) continue;
            int smax = X.dmax + Y.kap - n + 1;
            if (smax < 2) continue;
            if (smax == 2) {
                if (X.dmax == n - 1) {
                    if (Y.cyc) continue;  // excluded in the full-degree case
                    g.qualifying.push_back({X.g, Y.g, 2, 1});
                } else {
                    g.qualifying.push_back({X.g, Y.g, 2, 2});
                }
            } else {
                g.qualifying.push_back({X.g, Y.g, smax, 3});
            }
        }
    return g;
}

// ---------------------------------------------------------------------------
// Claim: Prop3.14 — when Delta + kappa <= n the whole DL family disconnects
// against every matching Y. a = Delta, b = kappa.

Gathered gather_prop314(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    for (int delta = 2; delta <= n - 1; ++delta) {
        std::vector<Graph> dl;
        std::vector<std::string> seen;
        for (Graph& cand : dl_family(n, delta)) {
            std::string c = canonical_form(cand);
            if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
                seen.push_back(c);
                dl.push_back(std::move(cand));
            }
        }
        for (int kap = 1; kap <= std::min(n - 2, n - delta); ++kap) {
            for (int yi : cat.connected) {
                if (cat.all[yi].kap != kap) continue;
                for (const Graph& X : dl) {
                    ++g.scanned;
                    g.qualifying.push_back({X, cat.all[yi].g, delta, kap});
                }
            }
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Claim: Thm4.1 — connectivity characterization for the DL families.
// a = k; b = case 1..5. Case 6 (connected iff 2-connected) rides along on
// every instance.

Gathered gather_thm41(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    std::string star_canon = canonical_form(star_graph(n));
    for (int k = 2; k <= n - 1; ++k) {
        std::string dand_canon = canonical_form(dandelion_graph(n, k));
        std::vector<Graph> dl;
        std::vector<std::string> canons;
        for (Graph& cand : dl_family(n, k)) {
            std::string c = canonical_form(cand);
            if (std::find(canons.begin(), canons.end(), c) == canons.end()) {
                canons.push_back(c);
                dl.push_back(std::move(cand));
            }
        }
        for (std::size_t i = 0; i < dl.size(); ++i) {
            int kase;
            if (n == k + 1)
                kase = canons[i] == star_canon ? 1 : 2;
            else if (k + 2 <= n && n <= 2 * k - 2)
                kase = canons[i] == dand_canon ? 3 : 4;
            else
                kase = 5;
            for (const ClassInfo& Y : cat.all) {
                ++g.scanned;
                if (kase == 2 && Y.cyc) continue;  // no claim there
                g.qualifying.push_back({dl[i], Y.g, k, kase});
            }
        }
    }
    return g;
}

Outcome check_thm41(int n, const Instance& inst) {
    const Graph& y = inst.y;
    int k = inst.a;
    bool expected;
    switch (inst.b) {
        case 1:
            // The 7-vertex exceptional graph cannot occur at n <= 6.
            expected = is_s_connected(y, 2) && !is_bipartite(y) &&
                       !are_isomorphic(y, cycle_graph(n));
            break;
        case 2: expected = is_s_connected(y, 2); break;
        case 3: expected = !is_bipartite(y) && is_s_connected(y, n - k + 1); break;
        case 4:
        case 5: expected = is_s_connected(y, n - k + 1); break;
        default: return fail("bad case tag");
    }
    bool conn = fs_connected(inst.x, y);
    if (conn != expected)
        return fail(std::string("connected = ") + (conn ? "true" : "false") + ", criterion = " +
                    (expected ? "true" : "false"));
    if (conn && !fs_s_connected(inst.x, y, 2)) return fail("connected but not 2-connected");
    return {};
}

// ---------------------------------------------------------------------------
// Claim: Prop4.3 — lollipop and dandelion connectivity agree iff
// n >= 2k-1. b = 1: equivalence instance (a = k); b = 2: a discrepancy
// witness must exist for this k.

Gathered gather_prop43(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    for (int k = 2; k <= n; ++k) {
        if (n >= 2 * k - 1) {
            for (const ClassInfo& Y : cat.all) {
                ++g.scanned;
                g.qualifying.push_back({lollipop_graph(n, k), Y.g, k, 1});
            }
        } else {
            ++g.scanned;
            g.qualifying.push_back({lollipop_graph(n, k), Graph(0), k, 2});
        }
    }
    return g;
}

Outcome check_prop43(int n, const Instance& inst) {
    int k = inst.a;
    Graph dand = dandelion_graph(n, k);
    if (inst.b == 1) {
        bool lol = fs_connected(inst.x, inst.y);
        bool dnd = fs_connected(dand, inst.y);
        if (lol != dnd)
            return fail("verdicts differ: lollipop " + std::to_string(lol) + ", dandelion " +
                        std::to_string(dnd));
        return {};
    }
    for (const ClassInfo& Y : catalog(n).all)
        if (fs_connected(inst.x, Y.g) != fs_connected(dand, Y.g)) return {};
    return fail("no discrepancy witness found for k = " + std::to_string(k));
}

// ---------------------------------------------------------------------------
// Claim: Thm4.4 — kappa(X)+kappa(Y) conditions. b = 1: sum >= n+1 gives
// 2-connected; b = 2: sum = n with n odd gives connected; b = 3 / b = 4:
// the even-n and n-1 disconnection witnesses.

Gathered gather_thm44(int n, const ClaimContext&) {
    Gathered g;
    const Catalog& cat = catalog(n);
    g.scanned = static_cast<long long>(cat.connected.size()) * cat.connected.size();
    for (int xi : cat.connected)
        for (int yi : cat.connected) {
            int sum = cat.all[xi].kap + cat.all[yi].kap;
            if (sum >= n + 1)
                g.qualifying.push_back({cat.all[xi].g, cat.all[yi].g, 0, 1});
            else if (sum == n && n % 2 == 1)
                g.qualifying.push_back({cat.all[xi].g, cat.all[yi].g, 0, 2});
        }
    if (n >= 5 && n % 2 == 0) {
        ++g.scanned;
        g.qualifying.push_back({cycle_graph(n), complete_minus_matching(n, n / 2), 0, 3});
    }
    if (n >= 5) {
        ++g.scanned;
        g.qualifying.push_back({cycle_graph(n), cycle_graph(n).complement(), 0, 4});
    }
    return g;
}

Outcome check_thm44(int n, const Instance& inst) {
    switch (inst.b) {
        case 1:
            if (!fs_s_connected(inst.x, inst.y, 2)) return fail("not 2-connected");
            return {};
        case 2:
            if (!fs_connected(inst.x, inst.y)) return fail("not connected");
            return {};
        case 3: {
            if (kappa(inst.x) + kappa(inst.y) != n) return fail("witness kappa sum wrong");
            if (fs_connected(inst.x, inst.y)) return fail("witness unexpectedly connected");
            return {};
        }
        case 4: {
            if (kappa(inst.y) != n - 3) return fail("witness kappa(Y) != n-3");
            if (kappa(inst.x) + kappa(inst.y) != n - 1) return fail("witness kappa sum wrong");
            if (fs_connected(inst.x, inst.y)) return fail("witness unexpectedly connected");
            return {};
        }
        default: return fail("bad case tag");
    }
}

// ---------------------------------------------------------------------------
// Claim: SelfTest.AlwaysFails — harness fixture asserting a falsehood.

Gathered gather_selftest(int n, const ClaimContext&) {
    Gathered g;
    g.scanned = 1;
    g.qualifying.push_back({complete_graph(n), path_graph(n), 0, 0});
    return g;
}

// ---------------------------------------------------------------------------
// Registry.

const std::vector<std::pair<std::string, ClaimDef>>& registry() {
    static const std::vector<std::pair<std::string, ClaimDef>> defs = {
        {"Thm1.1", {4, 7, gather_thm11, check_thm11, "star trichotomy of component counts"}},
        {"Thm1.2", {3, 6, gather_thm12, check_fs_connected, "min+2max degree bound"}},
        {"Thm1.3", {6, 6, gather_thm13, check_fs_connected, "2min+3max bound above n/2"}},
        {"Conj1.4", {3, 6, gather_conj14, check_fs_connected, "2min+3max bound, no n/2 floor"}},
        {"Thm1.5", {4, 6, gather_thm15, check_thm15, "bipartite two-component split"}},
        {"Thm1.6", {4, 6, gather_thm16, check_s_connected, "Delta(X)+kappa(Y) s-connectivity"}},
        {"Thm1.7", {6, 6, gather_thm17, check_s_connected, "complete-Y and 2delta refinements"}},
        {"Thm1.8", {6, 6, gather_thm18, check_s_connected, "fractional 2dx+3dy bound"}},
        {"Lem2.1", {3, 6, gather_lem21, check_lem21, "complete X connectivity criterion"}},
        {"Lem2.2", {3, 5, gather_lem22, check_lem22, "edge monotonicity"}},
        {"Lem2.3", {4, 6, gather_lem23, check_fs_connected, "star-plus-edge connectivity"}},
        {"Lem2.4", {3, 6, gather_lem24, check_fs_disconnected, "bipartite pairs disconnect"}},
        {"Lem2.5", {3, 5, gather_lem25, check_lem25, "parity label edge invariance"}},
        {"Lem2.6", {3, 6, gather_lem26, check_lem26, "cycle X gcd criterion"}},
        {"Lem2.7", {3, 6, gather_lem27, check_lem27, "lollipop connectivity criterion"}},
        {"Lem2.8", {3, 6, gather_lem28, check_lem28, "star component connectivity = delta(Y)"}},
        {"Lem2.9", {3, 7, gather_lem29, check_lem29, "kappa >= 2delta+2-n"}},
        {"Lem3.1", {4, 5, gather_lem31, check_lem31, "pinned copies isomorphic and disjoint"}},
        {"Lem3.2", {4, 6, gather_lem32, check_lem32, "cyclic orderings classify components"}},
        {"Cor3.3", {4, 5, gather_cor33, check_cor33, "single deletion keeps targets"}},
        {"Lem3.4", {4, 7, gather_lem34, check_forbidden_targets, "star reachability after deletions"}},
        {"Lem3.5", {4, 6, gather_lem35, check_forbidden_targets, "pair reachability after deletions"}},
        {"Obs3.6", {4, 8, gather_obs36, check_obs36, "gluing keeps s-connectivity"}},
        {"Lem3.7", {4, 6, gather_lem37, check_s_connected, "wheel pairs are 2-connected"}},
        {"Lem3.8", {8, 8, gather_lem38, check_lem38, "fixed 8-vertex 2-connectivity instance"}},
        {"Lem3.9", {3, 7, gather_lem39, check_lem39, "vertex-critical non-bipartite = odd cycle"}},
        {"Lem3.10", {4, 6, gather_lem310, check_lem310, "kappa(Y)=3 dandelion split"}},
        {"Lem3.11", {3, 5, gather_lem311, check_lem311, "same-part edge merges components"}},
        {"Cor3.13", {4, 5, gather_cor313, check_s_connected, "case split of the main bound"}},
        {"Prop3.14", {4, 5, gather_prop314, check_fs_disconnected, "DL tightness disconnections"}},
        {"Thm4.1", {4, 6, gather_thm41, check_thm41, "DL connectivity characterization"}},
        {"Prop4.3", {3, 6, gather_prop43, check_prop43, "lollipop/dandelion agreement range"}},
        {"Thm4.4", {4, 6, gather_thm44, check_thm44, "kappa(X)+kappa(Y) conditions"}},
        {"SelfTest.AlwaysFails", {3, 6, gather_selftest, check_fs_disconnected, "harness fixture"}},
    };
    return defs;
}

const ClaimDef* find_claim(const std::string& id) {
    for (const auto& [name, def] : registry())
        if (name == id) return &def;
    return nullptr;
}

std::string witness_json_for(const std::string& id, int n, const Instance& inst,
                             const std::string& detail) {
    nlohmann::ordered_json w;
    w["claim"] = id;
    w["n"] = n;
    w["x"] = to_compact(inst.x);
    w["y"] = to_compact(inst.y);
    w["a"] = inst.a;
    w["b"] = inst.b;
    w["detail"] = detail;
    return w.dump();
}

}  // namespace

std::vector<std::string> claim_ids() {
    std::vector<std::string> ids;
    for (const auto& [name, def] : registry()) ids.push_back(name);
    return ids;
}

bool claim_known(const std::string& id) { return find_claim(id) != nullptr; }

std::string claim_description(const std::string& id) {
    const ClaimDef* def = find_claim(id);
    return def ? def->what : "";
}

std::pair<int, int> claim_n_range(const std::string& id) {
    const ClaimDef* def = find_claim(id);
    if (!def) throw std::invalid_argument("unknown claim id: " + id);
    return {def->n_min, def->n_max};
}

ClaimResult run_claim(const std::string& id, int n, const ClaimContext& ctx) {
    const ClaimDef* def = find_claim(id);
    if (!def) throw std::invalid_argument("unknown claim id: " + id);
    ClaimResult result;
    result.id = id;
    result.n = n;
    auto started = std::chrono::steady_clock::now();
    if (n < def->n_min || n > def->n_max) {
        result.verdict = Verdict::VacuousAtThisN;
        return result;
    }
    Gathered gathered = def->gather(n, ctx);
    result.instances_checked = gathered.scanned;
    result.hypothesis_satisfied = static_cast<long long>(gathered.qualifying.size());
    if (gathered.qualifying.empty()) {
        result.verdict = Verdict::VacuousAtThisN;
        result.runtime_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        return result;
    }

    std::atomic<std::size_t> first_bad{gathered.qualifying.size()};
    std::mutex detail_mu;
    std::map<std::size_t, std::string> details;
    parallel_for(gathered.qualifying.size(), ctx.parallelism, [&](std::size_t i) {
        if (ctx.halt_on_counterexample && i > first_bad.load(std::memory_order_relaxed)) return;
        Outcome out = def->check(n, gathered.qualifying[i]);
        if (!out.ok) {
            std::size_t prev = first_bad.load(std::memory_order_relaxed);
            while (i < prev && !first_bad.compare_exchange_weak(prev, i)) {
            }
            std::lock_guard<std::mutex> lock(detail_mu);
            details.emplace(i, std::move(out.detail));
        }
    });

    std::size_t bad = first_bad.load();
    if (bad < gathered.qualifying.size()) {
        result.verdict = Verdict::Counterexample;
        result.witness_json =
            witness_json_for(id, n, gathered.qualifying[bad], details.at(bad));
    } else {
        result.verdict = Verdict::AllPass;
    }
    result.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

bool replay_witness(const std::string& witness_json) {
    auto w = nlohmann::json::parse(witness_json);
    std::string id = w.at("claim");
    const ClaimDef* def = find_claim(id);
    if (!def) throw std::invalid_argument("replay: unknown claim id: " + id);
    Instance inst;
    inst.x = parse_compact(w.at("x"));
    inst.y = parse_compact(w.at("y"));
    inst.a = w.at("a");
    inst.b = w.at("b");
    Outcome out = def->check(w.at("n"), inst);
    return !out.ok;
}

// ---------------------------------------------------------------------------
// Grouped front doors.

ClaimResult check_main_sconnectivity(int n, int s, const ClaimContext& ctx) {
    if (s < 2) throw std::invalid_argument("check_main_sconnectivity: s >= 2");
    ClaimResult result;
    result.id = "Thm1.6(s=" + std::to_string(s) + ")";
    result.n = n;
    auto started = std::chrono::steady_clock::now();
    const Catalog& cat = catalog(n);
    std::vector<Instance> instances;
    result.instances_checked = static_cast<long long>(cat.connected.size()) * cat.connected.size();
    for (int xi : cat.connected)
        for (int yi : cat.connected) {
            const ClassInfo& X = cat.all[xi];
            const ClassInfo& Y = cat.all[yi];
            if (X.bip && Y.bip) continue;
            if (Y.cyc) continue;
            if (X.dmax + Y.kap >= n + s - 1) instances.push_back({X.g, Y.g, s, 0});
        }
    result.hypothesis_satisfied = static_cast<long long>(instances.size());
    if (instances.empty()) {
        result.verdict = Verdict::VacuousAtThisN;
        return result;
    }
    std::atomic<std::size_t> first_bad{instances.size()};
    parallel_for(instances.size(), ctx.parallelism, [&](std::size_t i) {
        if (ctx.halt_on_counterexample && i > first_bad.load(std::memory_order_relaxed)) return;
        if (!fs_s_connected(instances[i].x, instances[i].y, s)) {
            std::size_t prev = first_bad.load(std::memory_order_relaxed);
            while (i < prev && !first_bad.compare_exchange_weak(prev, i)) {
            }
        }
    });
    std::size_t bad = first_bad.load();
    if (bad < instances.size()) {
        result.verdict = Verdict::Counterexample;
        result.witness_json = witness_json_for("Thm1.6", n, instances[bad],
                                               "not " + std::to_string(s) + "-connected");
    } else {
        result.verdict = Verdict::AllPass;
    }
    result.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

ClaimResult check_bipartite_two_components(int n, int s, const ClaimContext& ctx) {
    if (s < 2) throw std::invalid_argument("check_bipartite_two_components: s >= 2");
    ClaimResult result;
    result.id = "Thm1.5(s=" + std::to_string(s) + ")";
    result.n = n;
    auto started = std::chrono::steady_clock::now();
    const Catalog& cat = catalog(n);
    const auto& bip = cat.connected_bipartite;
    std::vector<Instance> instances;
    result.instances_checked = static_cast<long long>(bip.size()) * bip.size();
    for (int xi : bip)
        for (int yi : bip) {
            const ClassInfo& X = cat.all[xi];
            const ClassInfo& Y = cat.all[yi];
            if (Y.cyc) continue;
            if (X.dmax + Y.kap >= n + s - 1) instances.push_back({X.g, Y.g, s, 1});
        }
    for (int delta = 2; delta <= n - 1; ++delta)
        for (int yi : bip) {
            ++result.instances_checked;
            if (cat.all[yi].kap >= 1 && delta + cat.all[yi].kap <= n)
                instances.push_back({dandelion_graph(n, delta), cat.all[yi].g, 0, 2});
        }
    result.hypothesis_satisfied = static_cast<long long>(instances.size());
    if (instances.empty()) {
        result.verdict = Verdict::VacuousAtThisN;
        return result;
    }
    std::atomic<std::size_t> first_bad{instances.size()};
    std::mutex mu;
    std::map<std::size_t, std::string> details;
    parallel_for(instances.size(), ctx.parallelism, [&](std::size_t i) {
        if (ctx.halt_on_counterexample && i > first_bad.load(std::memory_order_relaxed)) return;
        Outcome out = check_thm15(n, instances[i]);
        if (!out.ok) {
            std::size_t prev = first_bad.load(std::memory_order_relaxed);
            while (i < prev && !first_bad.compare_exchange_weak(prev, i)) {
            }
            std::lock_guard<std::mutex> lock(mu);
            details.emplace(i, std::move(out.detail));
        }
    });
    std::size_t bad = first_bad.load();
    if (bad < instances.size()) {
        result.verdict = Verdict::Counterexample;
        result.witness_json = witness_json_for("Thm1.5", n, instances[bad], details.at(bad));
    } else {
        result.verdict = Verdict::AllPass;
    }
    result.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

std::vector<ClaimResult> check_degree_theorems(int n, const ClaimContext& ctx) {
    std::vector<ClaimResult> out;
    for (const char* id : {"Thm1.2", "Thm1.3", "Conj1.4", "Thm1.7", "Thm1.8"})
        out.push_back(run_claim(id, n, ctx));
    return out;
}

std::vector<ClaimResult> check_section4(int n, const ClaimContext& ctx) {
    std::vector<ClaimResult> out;
    for (const char* id : {"Thm4.1", "Prop4.3", "Thm4.4"}) out.push_back(run_claim(id, n, ctx));
    return out;
}

std::vector<ClaimResult> check_structural_lemmas(int n, const ClaimContext& ctx) {
    std::vector<ClaimResult> out;
    for (const char* id : {"Lem3.4", "Lem3.7", "Lem3.8", "Lem3.10", "Lem3.11"})
        out.push_back(run_claim(id, n, ctx));
    return out;
}

}  // namespace fslab

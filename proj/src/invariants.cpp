#include "fslab/invariants.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "fslab/canonical.hpp"
#include "fslab/families.hpp"

namespace fslab {

ParityInvariant parity_g(const Bijection& b, const Bipartition& bip_x, const Bipartition& bip_y) {
    const int n = b.size();
    if (std::popcount(bip_x.part_a | bip_x.part_b) != n ||
        std::popcount(bip_y.part_a | bip_y.part_b) != n || (bip_x.part_a & bip_x.part_b) ||
        (bip_y.part_a & bip_y.part_b))
        throw std::invalid_argument("parity_g: invalid bipartition");
    std::uint64_t image_of_a = 0;
    for (int x = 0; x < n; ++x)
        if (bip_x.in_a(x)) image_of_a |= std::uint64_t{1} << b[x];
    ParityInvariant inv;
    inv.g = std::popcount(image_of_a & bip_y.part_a) + (sign(b) + 1) / 2;
    inv.parity = inv.g & 1;
    return inv;
}

CyclicOrdering cyclic_ordering(const Bijection& b, const Graph& x, const Graph& y) {
    const int n = b.size();
    if (n < 3 || x != star_graph(n) || y != cycle_graph(n))
        throw std::invalid_argument("cyclic_ordering: requires S_n and C_n under frozen labelings");
    // Walk the cycle 0,1,...,n-1 and record which leaf sits on each vertex.
    Bijection inv = b.inverse();
    std::vector<int> around;
    around.reserve(n - 1);
    for (int c = 0; c < n; ++c)
        if (inv[c] != n - 1) around.push_back(inv[c]);
    // Least rotation.
    const int len = static_cast<int>(around.size());
    int best = 0;
    for (int s = 1; s < len; ++s)
        for (int i = 0; i < len; ++i) {
            int a = around[(s + i) % len], c = around[(best + i) % len];
            if (a != c) {
                if (a < c) best = s;
                break;
            }
        }
    CyclicOrdering out;
    out.leaves.reserve(len);
    for (int i = 0; i < len; ++i) out.leaves.push_back(around[(best + i) % len]);
    return out;
}

bool cycle_criterion(const Graph& y) {
    Graph comp = y.complement();
    int g = 0;
    for (std::uint64_t mask : component_masks(comp)) {
        int order = std::popcount(mask);
        // Tree check: the component must span order-1 edges.
        int inner_edges = 0;
        for (int v = 0; v < comp.order(); ++v)
            if ((mask >> v) & 1u) inner_edges += std::popcount(comp.neighbors(v) & mask);
        if (inner_edges != 2 * (order - 1)) return false;  // cycle somewhere: not a forest
        g = std::gcd(g, order);
    }
    return g == 1;
}

WilsonConditions wilson_conditions(const Graph& y) {
    if (y.order() < 4) throw std::invalid_argument("wilson_conditions: n >= 4 required");
    WilsonConditions w;
    w.two_connected = is_s_connected(y, 2);
    w.non_bipartite = !is_bipartite(y);
    w.is_cycle = are_isomorphic(y, cycle_graph(y.order()));
    w.is_theta0 = y.order() == 7 && are_isomorphic(y, theta0_graph());
    return w;
}

int wilson_expected_components(const WilsonConditions& w) {
    if (w.two_connected && w.non_bipartite && !w.is_cycle && !w.is_theta0) return 1;
    if (w.two_connected && !w.non_bipartite && !w.is_cycle) return 2;
    return -1;
}

bool lollipop_criterion(int n, int k, const Graph& y) {
    if (k < 2 || k > n) throw std::invalid_argument("lollipop_criterion: 2 <= k <= n");
    if (y.order() != n) throw std::invalid_argument("lollipop_criterion: |V(y)| != n");
    return is_s_connected(y, n - k + 1);
}

}  // namespace fslab

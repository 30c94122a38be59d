#pragma once

#include <vector>

#include "fslab/graph.hpp"
#include "fslab/perm.hpp"

namespace fslab {

// g(sigma) = |sigma(A_X) cap A_Y| + (sgn(sigma)+1)/2. Its parity is constant
// on the components of FS(X,Y) when X and Y are bipartite.
struct ParityInvariant {
    int g = 0;
    int parity = 0;  // g mod 2, the component-separating label
};

ParityInvariant parity_g(const Bijection& b, const Bipartition& bip_x, const Bipartition& bip_y);

// The star leaves read clockwise around the cycle, canonicalized to the
// lexicographically least rotation. Classifies components of FS(S_n, C_n).
struct CyclicOrdering {
    std::vector<int> leaves;  // length n-1

    bool operator==(const CyclicOrdering& other) const = default;
    bool operator<(const CyclicOrdering& other) const { return leaves < other.leaves; }
};

// Requires x = star_graph(n) and y = cycle_graph(n) under the frozen
// labelings (center n-1, cycle 0-1-...-(n-1)-0); throws otherwise.
CyclicOrdering cyclic_ordering(const Bijection& b, const Graph& x, const Graph& y);

// FS(C_n, y) connectivity criterion: complement(y) is a forest whose tree
// orders have gcd 1 (isolated vertices count as order-1 trees).
bool cycle_criterion(const Graph& y);

struct WilsonConditions {
    bool two_connected = false;
    bool non_bipartite = false;
    bool is_cycle = false;
    bool is_theta0 = false;
};

// Exact flags for the FS(S_n, y) trichotomy; n >= 4 required.
WilsonConditions wilson_conditions(const Graph& y);

// Expected component count of FS(S_n, y) from the Wilson flags:
// 1, 2, or -1 meaning "more than one, count not pinned by the theorem".
int wilson_expected_components(const WilsonConditions& w);

// FS(Lollipop_{n-k,k}, y) connectivity criterion: y is (n-k+1)-connected.
bool lollipop_criterion(int n, int k, const Graph& y);

}  // namespace fslab

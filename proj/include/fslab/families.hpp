#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fslab/graph.hpp"

namespace fslab {

enum class Family {
    Path,
    Cycle,
    Complete,
    Star,
    StarPlus,
    Wheel,
    Theta0,
    Theta1,
    Lollipop,
    Dandelion,
    CompleteMinusMatching,
};

// name:n[:k|:t] mini-grammar names (path, cycle, complete, star, star-plus,
// wheel, theta0, theta1, lollipop, dandelion, complete-minus-matching).
const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct FamilySpec {
    Family kind;
    int n = 0;
    int k = 0;  // block parameter, Lollipop/Dandelion only
    int t = 0;  // deleted disjoint edges, CompleteMinusMatching only
};

// Canonical labelings:
//   Path      P_n: 0-1-...-(n-1)
//   Cycle     C_n: path plus edge (n-1, 0)
//   Complete  K_n
//   Star      S_n: center n-1, leaves 0..n-2
//   StarPlus  S_n^+: star plus the leaf edge (0, 1)
//   Wheel     W_n: hub n-1, rim cycle 0..n-2
//   Theta0    fixed 7-vertex graph: C_6 on 0..5 plus 6 adjacent to 0 and 3
//   Theta1    fixed 8-vertex graph: Theta0 plus 7 adjacent to its five
//             degree-2 vertices (1, 2, 4, 5, 6)
//   Lollipop  L_{n-k,k}: path 0..n-k, clique on {n-k, ..., n-1}
//   Dandelion D_{n-k,k}: path 0..n-k, star leaves n-k+1..n-1 on center n-k
//   CompleteMinusMatching K_n - t*e: K_n minus edges (0,1), (2,3), ..., (2t-2, 2t-1)
Graph generate(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);
Graph star_plus_graph(int n);
Graph wheel_graph(int n);
Graph theta0_graph();
Graph theta1_graph();
Graph lollipop_graph(int n, int k);
Graph dandelion_graph(int n, int k);
Graph complete_minus_matching(int n, int t);
Graph complete_bipartite(int a, int b);

// All graphs G with Dand_{n-k,k} <= G <= Lollipop_{n-k,k} (both endpoints
// included), ordered by increasing bitmask over the optional clique edges.
std::vector<Graph> dl_family(int n, int k);

}  // namespace fslab

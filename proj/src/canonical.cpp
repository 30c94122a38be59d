#include "fslab/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "fslab/parallel.hpp"

namespace fslab {

namespace {

constexpr int kMaxCanonN = 10;

// Branch-and-bound minimization of the column-wise adjacency bit string.
// Column d holds the bits (perm[0],perm[d]), ..., (perm[d-1],perm[d]) packed
// into an integer with the i=0 bit most significant, so integer comparison
// matches lexicographic bit comparison.
struct CanonSearch {
    const Graph* g;
    int n;
    std::array<std::uint16_t, kMaxCanonN> best{};
    std::array<std::int8_t, kMaxCanonN> chosen{};
    std::uint16_t used = 0;

    void search(int depth) {
        if (depth == n) return;
        for (int u = 0; u < n; ++u) {
            if ((used >> u) & 1u) continue;
            std::uint16_t col = 0;
            for (int i = 0; i < depth; ++i)
                col = static_cast<std::uint16_t>((col << 1) | (g->has_edge(chosen[i], u) ? 1 : 0));
            if (col > best[depth]) continue;
            if (col < best[depth]) {
                // Strict improvement: commit the column and invalidate the tail.
                best[depth] = col;
                for (int e = depth + 1; e < n; ++e) best[e] = 0xffff;
            }
            chosen[depth] = static_cast<std::int8_t>(u);
            used |= std::uint16_t(1) << u;
            search(depth + 1);
            used &= ~(std::uint16_t(1) << u);
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    int n = g.order();
    if (n > kMaxCanonN) throw std::invalid_argument("canonical_form: n <= 10 required");
    CanonSearch s;
    s.g = &g;
    s.n = n;
    s.best.fill(0xffff);
    s.best[0] = 0;
    if (n > 0) s.search(0);

    std::string out;
    out.push_back(static_cast<char>(n));
    int acc = 0, bits = 0;
    for (int d = 1; d < n; ++d)
        for (int i = d - 1; i >= 0; --i) {
            acc = (acc << 1) | ((s.best[d] >> i) & 1);
            if (++bits == 8) {
                out.push_back(static_cast<char>(acc));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>(acc << (8 - bits)));
    return out;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

namespace {

std::vector<Graph> enumerate_impl(int n, bool connected_only) {
    if (n < 1 || n > 7) throw std::invalid_argument("enumerate: 1 <= n <= 7 required");
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << slots.size();

    struct Hit {
        std::uint64_t mask;
        std::string canon;
    };
    auto scan_range = [&](std::uint64_t lo, std::uint64_t hi, std::vector<Hit>& out) {
        std::unordered_set<std::string> seen;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            // Cheap connectivity probe on neighbor masks before building a Graph.
            std::array<std::uint64_t, 7> nb{};
            for (std::size_t i = 0; i < slots.size(); ++i)
                if ((mask >> i) & 1u) {
                    nb[slots[i].first] |= std::uint64_t{1} << slots[i].second;
                    nb[slots[i].second] |= std::uint64_t{1} << slots[i].first;
                }
            if (connected_only) {
                std::uint64_t reach = 1, frontier = 1;
                while (frontier) {
                    std::uint64_t next = 0;
                    while (frontier) {
                        int v = std::countr_zero(frontier);
                        frontier &= frontier - 1;
                        next |= nb[v];
                    }
                    frontier = next & ~reach;
                    reach |= next;
                }
                if (std::popcount(reach) != n) continue;
            }
            Graph g(n);
            for (std::size_t i = 0; i < slots.size(); ++i)
                if ((mask >> i) & 1u) g.add_edge(slots[i].first, slots[i].second);
            if (auto res = seen.insert(canonical_form(g)); res.second)
                out.push_back({mask, *res.first});
        }
    };

    // The n = 7 sweep visits 2^21 edge subsets; shard it across workers and
    // merge keeping the first labeled occurrence per class.
    const int shards = (n >= 7) ? 64 : 1;
    std::vector<std::vector<Hit>> found(shards);
    parallel_for(shards, shards == 1 ? 1 : 0, [&](std::size_t s) {
        std::uint64_t lo = total * s / shards, hi = total * (s + 1) / shards;
        scan_range(lo, hi, found[s]);
    });

    std::unordered_map<std::string, std::uint64_t> first_mask;
    for (const auto& shard : found)
        for (const auto& hit : shard) {
            auto it = first_mask.find(hit.canon);
            if (it == first_mask.end())
                first_mask.emplace(hit.canon, hit.mask);
            else if (hit.mask < it->second)
                it->second = hit.mask;
        }
    std::vector<std::uint64_t> masks;
    masks.reserve(first_mask.size());
    for (const auto& [canon, mask] : first_mask) masks.push_back(mask);
    std::sort(masks.begin(), masks.end());

    std::vector<Graph> reps;
    reps.reserve(masks.size());
    for (std::uint64_t mask : masks) {
        Graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1u) g.add_edge(slots[i].first, slots[i].second);
        reps.push_back(std::move(g));
    }
    return reps;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n) { return enumerate_impl(n, true); }

std::vector<Graph> enumerate_graphs(int n) { return enumerate_impl(n, false); }

}  // namespace fslab

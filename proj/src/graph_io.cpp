#include "fslab/graph_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fslab {

std::string to_edge_text(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_text(const std::string& text) {
    std::istringstream in(text);
    int n;
    if (!(in >> n)) throw std::invalid_argument("graph text: missing vertex count");
    Graph g(n);
    int u, v;
    while (in >> u) {
        if (!(in >> v)) throw std::invalid_argument("graph text: dangling endpoint");
        g.add_edge(u, v);
    }
    return g;
}

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

}  // namespace

std::string to_compact(const Graph& g) {
    const int n = g.order();
    std::string hex;
    int acc = 0, bits = 0;
    auto flush = [&] {
        hex.push_back("0123456789abcdef"[acc]);
        acc = 0;
        bits = 0;
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 4) flush();
        }
    if (bits > 0) {
        acc <<= (4 - bits);
        flush();
    }
    return std::to_string(n) + ":" + hex;
}

Graph parse_compact(const std::string& line) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("compact graph: missing ':'");
    int n = std::stoi(line.substr(0, colon));
    std::string hex = line.substr(colon + 1);
    const int pairs = pair_count(n);
    if (static_cast<int>(hex.size()) != (pairs + 3) / 4)
        throw std::invalid_argument("compact graph: wrong digit count");
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit) {
            char c = hex[bit / 4];
            int nibble;
            if (c >= '0' && c <= '9')
                nibble = c - '0';
            else if (c >= 'a' && c <= 'f')
                nibble = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F')
                nibble = c - 'A' + 10;
            else
                throw std::invalid_argument("compact graph: bad hex digit");
            if ((nibble >> (3 - bit % 4)) & 1) g.add_edge(u, v);
        }
    return g;
}

Graph parse_graph(const std::string& text) {
    return text.find(':') != std::string::npos ? parse_compact(text) : parse_edge_text(text);
}

std::string to_text(const Bijection& b) { return b.to_string(); }

Bijection parse_bijection(const std::string& line) {
    std::istringstream in(line);
    std::vector<int> images;
    int v;
    while (in >> v) images.push_back(v);
    if (images.size() > static_cast<std::size_t>(kMaxPermN))
        throw std::invalid_argument("bijection: too many entries");
    Bijection b(static_cast<int>(images.size()));
    std::uint32_t seen = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
        int x = images[i];
        if (x < 0 || x >= static_cast<int>(images.size()) || ((seen >> x) & 1u))
            throw std::invalid_argument("bijection: not a permutation");
        seen |= 1u << x;
        b.set(static_cast<int>(i), x);
    }
    return b;
}

std::string component_report_json(const ComponentReport& report) {
    const bool with_kappa = !report.per_component_kappa.empty();
    const bool with_labels = !report.component_labels.empty();
    // Reorder per-component records by (size, kappa, label, id) so the sizes
    // array comes out sorted while staying aligned with the other arrays.
    std::vector<int> order(report.sizes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (report.sizes[a] != report.sizes[b]) return report.sizes[a] < report.sizes[b];
        int ka = with_kappa ? report.per_component_kappa[a] : 0;
        int kb = with_kappa ? report.per_component_kappa[b] : 0;
        if (ka != kb) return ka < kb;
        const std::string& la = with_labels ? report.component_labels[a] : std::string();
        const std::string& lb = with_labels ? report.component_labels[b] : std::string();
        if (la != lb) return la < lb;
        return a < b;
    });

    nlohmann::ordered_json j;
    j["schemaVersion"] = 1;
    j["count"] = report.count;
    auto sizes = nlohmann::json::array();
    for (int i : order) sizes.push_back(report.sizes[i]);
    j["sizes"] = sizes;
    if (with_kappa) {
        auto ks = nlohmann::json::array();
        for (int i : order) ks.push_back(report.per_component_kappa[i]);
        j["perComponentKappa"] = ks;
    }
    if (with_labels) {
        auto ls = nlohmann::json::array();
        for (int i : order) ls.push_back(report.component_labels[i]);
        j["componentLabels"] = ls;
    }
    return j.dump();
}

}  // namespace fslab

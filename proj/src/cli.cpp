#include "fslab/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "fslab/canonical.hpp"
#include "fslab/families.hpp"
#include "fslab/fs.hpp"
#include "fslab/graph.hpp"
#include "fslab/graph_io.hpp"
#include "fslab/invariants.hpp"
#include "fslab/suite.hpp"

namespace fslab {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot write file: " + out_path);
    f << text;
}

std::string pick_format(const std::string& requested, std::ostream& out) {
    if (!requested.empty()) return requested;
    bool tty = (&out == &std::cout) && isatty(STDOUT_FILENO);
    return tty ? "text" : "json";
}

// Label components by the invariants that apply to the pair: the parity
// class for connected bipartite pairs, the cyclic ordering for the frozen
// star/cycle pair. Labels use one representative per component.
void attach_labels(FsInstance& inst, ComponentReport& rep) {
    const int n = inst.n();
    std::vector<PermRank> representative(rep.count, 0);
    std::vector<bool> seen(rep.count, false);
    for (PermRank r = 0; r < rep.component_of.size(); ++r) {
        int id = rep.component_of[r];
        if (!seen[id]) {
            seen[id] = true;
            representative[id] = r;
        }
    }
    try {
        Graph star = star_graph(n), cyc = cycle_graph(n);
        if (inst.x() == star && inst.y() == cyc) {
            for (int id = 0; id < rep.count; ++id) {
                CyclicOrdering co = cyclic_ordering(unrank(representative[id], n), star, cyc);
                std::string label = "ordering=";
                for (std::size_t i = 0; i < co.leaves.size(); ++i) {
                    if (i) label += ',';
                    label += std::to_string(co.leaves[i]);
                }
                rep.component_labels.push_back(label);
            }
            return;
        }
    } catch (const std::invalid_argument&) {
    }
    if (is_connected(inst.x()) && is_connected(inst.y())) {
        auto bx = bipartition(inst.x());
        auto by = bipartition(inst.y());
        if (std::holds_alternative<Bipartition>(bx) && std::holds_alternative<Bipartition>(by)) {
            for (int id = 0; id < rep.count; ++id) {
                auto inv = parity_g(unrank(representative[id], n), std::get<Bipartition>(bx),
                                    std::get<Bipartition>(by));
                rep.component_labels.push_back("parity=" + std::to_string(inv.parity));
            }
        }
    }
}

int cmd_components(const std::string& x_spec, const std::string& y_spec, bool with_kappa,
                   bool with_invariants, const std::string& format, const std::string& out_path,
                   std::ostream& out) {
    Graph x = parse_graph_spec(x_spec);
    Graph y = parse_graph_spec(y_spec);
    if (x.order() != y.order()) throw std::invalid_argument("components: |V(X)| != |V(Y)|");
    if (x.order() > 10) throw std::invalid_argument("components: n <= 10 required");
    bool need_explicit = with_kappa;
    if (need_explicit && x.order() > 8)
        throw std::invalid_argument("components: --kappa needs n <= 8");
    FsInstance inst(x, y, need_explicit ? FsMode::Explicit : FsMode::Implicit);
    ComponentReport rep = components(inst);
    if (with_kappa) rep.per_component_kappa = per_component_kappa(inst, rep);
    if (with_invariants) attach_labels(inst, rep);

    if (format == "json") {
        emit(component_report_json(rep) + "\n", out_path, out);
    } else if (format == "csv") {
        std::ostringstream csv;
        csv << "component,size" << (with_kappa ? ",kappa" : "")
            << (rep.component_labels.empty() ? "" : ",label") << "\n";
        for (int id = 0; id < rep.count; ++id) {
            csv << id << ',' << rep.sizes[id];
            if (with_kappa) csv << ',' << rep.per_component_kappa[id];
            if (!rep.component_labels.empty()) csv << ',' << rep.component_labels[id];
            csv << '\n';
        }
        emit(csv.str(), out_path, out);
    } else {
        std::ostringstream text;
        text << "components: " << rep.count << "\nsizes:";
        for (std::uint32_t s : rep.sorted_sizes()) text << ' ' << s;
        text << '\n';
        if (with_kappa) {
            text << "perComponentKappa:";
            for (int k : rep.per_component_kappa) text << ' ' << k;
            text << '\n';
        }
        for (std::size_t i = 0; i < rep.component_labels.size(); ++i)
            text << "component " << i << ": " << rep.component_labels[i] << '\n';
        emit(text.str(), out_path, out);
    }
    return 0;
}

int cmd_kappa(const std::string& g_spec, const std::string& format, const std::string& out_path,
              std::ostream& out) {
    Graph g = parse_graph_spec(g_spec);
    int k = kappa(g);
    std::vector<int> cut;
    if (g.order() > 1 && k < g.order() - 1) cut = minimum_vertex_cut(g);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = g.order();
        j["kappa"] = k;
        if (!cut.empty()) j["minCut"] = cut;
        emit(j.dump() + "\n", out_path, out);
    } else if (format == "csv") {
        std::ostringstream csv;
        csv << "kappa,cut\n" << k << ",";
        for (std::size_t i = 0; i < cut.size(); ++i) csv << (i ? " " : "") << cut[i];
        csv << '\n';
        emit(csv.str(), out_path, out);
    } else {
        std::ostringstream text;
        text << "kappa: " << k << '\n';
        if (!cut.empty()) {
            text << "minCut:";
            for (int v : cut) text << ' ' << v;
            text << '\n';
        }
        emit(text.str(), out_path, out);
    }
    return 0;
}

int cmd_check(const std::string& config_path, const std::string& out_path, int threads,
              bool timings, bool keep_going, std::uint64_t seed_override, bool seed_set,
              const std::string& format, std::ostream& out) {
    SuiteConfig cfg = SuiteConfig::from_json(slurp(config_path));
    if (threads > 0) cfg.parallelism = threads;
    if (keep_going) cfg.halt_on_counterexample = false;
    if (seed_set) cfg.seed = seed_override;
    SuiteReport report = run_suite(cfg);
    if (format == "csv")
        emit(report.to_csv(), out_path, out);
    else if (format == "text")
        emit(report.to_text(), out_path, out);
    else
        emit(report.to_json(timings), out_path, out);
    return report.exit_code;
}

int cmd_enumerate(int n, bool include_disconnected, const std::string& out_path,
                  std::ostream& out) {
    std::ostringstream text;
    for (const Graph& g : include_disconnected ? enumerate_graphs(n) : enumerate_connected(n))
        text << to_compact(g) << '\n';
    emit(text.str(), out_path, out);
    return 0;
}

int cmd_fs_export(const std::string& x_spec, const std::string& y_spec,
                  const std::string& edges_path, const std::string& map_path) {
    Graph x = parse_graph_spec(x_spec);
    Graph y = parse_graph_spec(y_spec);
    if (x.order() != y.order()) throw std::invalid_argument("fs-export: |V(X)| != |V(Y)|");
    if (x.order() > 8) throw std::invalid_argument("fs-export: explicit export needs n <= 8");
    FsInstance inst(x, y, FsMode::Explicit);
    const AdjacencyList& adj = inst.explicit_adjacency();
    std::ofstream edges(edges_path);
    if (!edges) throw std::invalid_argument("cannot write file: " + edges_path);
    edges << adj.n << '\n';
    for (std::int64_t u = 0; u < adj.n; ++u)
        for (std::int64_t e = adj.offsets[u]; e < adj.offsets[u + 1]; ++e)
            if (u < adj.targets[e]) edges << u << ' ' << adj.targets[e] << '\n';
    std::ofstream map(map_path);
    if (!map) throw std::invalid_argument("cannot write file: " + map_path);
    const int n = inst.n();
    for (PermRank r = 0; r < inst.vertex_count(); ++r)
        map << r << ' ' << unrank(r, n).to_string() << '\n';
    return 0;
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("empty graph spec");
    if (spec[0] == '@') return parse_graph(slurp(spec.substr(1)));
    auto colon = spec.find(':');
    if (colon != std::string::npos && all_digits(spec.substr(0, colon)))
        return parse_compact(spec);
    // family spec name[:n[:k|:t]]
    std::vector<std::string> parts;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ':')) parts.push_back(token);
    auto family = family_from_name(parts[0]);
    if (!family) throw std::invalid_argument("unknown family: " + parts[0]);
    FamilySpec fam{*family, 0, 0, 0};
    if (parts.size() > 1) fam.n = std::stoi(parts[1]);
    if (parts.size() > 2) {
        int extra = std::stoi(parts[2]);
        if (*family == Family::CompleteMinusMatching)
            fam.t = extra;
        else
            fam.k = extra;
    }
    if (parts.size() > 3) throw std::invalid_argument("too many ':' fields in " + spec);
    return generate(fam);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"friends-and-strangers graph laboratory"};
    app.require_subcommand(1);
    app.footer(
        "Graph specs: name:n[:k|:t] with names path, cycle, complete, star,\n"
        "star-plus, wheel, theta0, theta1, lollipop, dandelion,\n"
        "complete-minus-matching; or @file; or a compact literal n:<hex>.");

    std::string x_spec, y_spec, g_spec, format, out_path;
    bool with_kappa = false, with_invariants = false;

    auto* components_cmd =
        app.add_subcommand("components", "component report for FS(X,Y)");
    components_cmd->add_option("--x", x_spec, "X graph (family spec, @file, or n:<hex>)")
        ->required();
    components_cmd->add_option("--y", y_spec, "Y graph")->required();
    components_cmd->add_flag("--kappa", with_kappa, "include per-component connectivity");
    components_cmd->add_flag("--invariants", with_invariants, "include component labels");
    components_cmd->add_option("--format", format, "text|json|csv (default: text on a tty)");
    components_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* kappa_cmd = app.add_subcommand("kappa", "vertex connectivity of a graph");
    kappa_cmd->add_option("--g", g_spec, "graph (family spec, @file, or n:<hex>)")->required();
    kappa_cmd->add_option("--format", format, "text|json|csv");
    kappa_cmd->add_option("--out", out_path, "output path");

    std::string config_path;
    int threads = 0;
    bool timings = false, keep_going = false;
    std::uint64_t seed = 0;
    auto* check_cmd = app.add_subcommand("check", "run a claim suite from a JSON config");
    check_cmd->add_option("--config", config_path, "suite config JSON")->required();
    check_cmd->add_option("--out", out_path, "report path (default stdout)");
    check_cmd->add_option("--threads", threads, "worker count (0 = FS_LAB_THREADS or hardware)");
    check_cmd->add_flag("--timings", timings, "include runtimes in the report");
    check_cmd->add_flag("--keep-going", keep_going, "do not halt on the first counterexample");
    auto* seed_opt = check_cmd->add_option("--seed", seed, "seed for sampled instances");
    check_cmd->add_option("--format", format, "json|csv|text");

    int enum_n = 0;
    bool enum_all = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "isomorphism classes on n vertices");
    enum_cmd->add_option("--n", enum_n, "vertex count (1..7)")->required();
    enum_cmd->add_flag("--all", enum_all, "include disconnected classes");
    enum_cmd->add_option("--out", out_path, "output path");

    std::string edges_path, map_path;
    auto* export_cmd = app.add_subcommand("fs-export", "explicit FS(X,Y) edge list + rank map");
    export_cmd->add_option("--x", x_spec, "X graph")->required();
    export_cmd->add_option("--y", y_spec, "Y graph")->required();
    export_cmd->add_option("--edges", edges_path, "edge list output path")->required();
    export_cmd->add_option("--map", map_path, "rank map output path")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (components_cmd->parsed())
            return cmd_components(x_spec, y_spec, with_kappa, with_invariants,
                                  pick_format(format, out), out_path, out);
        if (kappa_cmd->parsed())
            return cmd_kappa(g_spec, pick_format(format, out), out_path, out);
        if (check_cmd->parsed())
            return cmd_check(config_path, out_path, threads, timings, keep_going, seed,
                             seed_opt->count() > 0, pick_format(format, out), out);
        if (enum_cmd->parsed()) return cmd_enumerate(enum_n, enum_all, out_path, out);
        if (export_cmd->parsed()) return cmd_fs_export(x_spec, y_spec, edges_path, map_path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace fslab

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cliquekit/cliquekit.hpp"

namespace {

using namespace cliquekit;

constexpr int exit_usage = 2;
constexpr int exit_parse = 3;
constexpr int exit_mismatch = 4;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

GraphFileFormat to_format(const std::string& name) {
    if (name == "mtx") return GraphFileFormat::mtx;
    if (name == "edges") return GraphFileFormat::edge_list;
    return GraphFileFormat::auto_detect;
}

struct SearchFlags {
    std::size_t lower_bound = 1;
    std::size_t upper_bound = no_upper_bound;
    double time_limit = 0.0;  // CLI runs are one-shot, so default to unlimited
    bool use_heuristic = false;
    bool use_dfs = true;
};

void add_search_flags(CLI::App* cmd, SearchFlags& flags) {
    cmd->add_option("--lower-bound", flags.lower_bound, "Smallest acceptable clique size");
    cmd->add_option("--upper-bound", flags.upper_bound,
                    "Stop as soon as a clique of this size is found");
    cmd->add_option("--time-limit", flags.time_limit,
                    "Search budget in seconds per phase; 0 = unlimited");
    cmd->add_flag("--heuristic,!--no-heuristic", flags.use_heuristic,
                  "Seed the search with the greedy heuristic");
    cmd->add_flag("--dfs,!--no-dfs", flags.use_dfs, "Run the branch-and-bound search");
}

int run_max_clique(const std::string& path, const std::string& format, const SearchFlags& flags,
                   const std::string& output) {
    RunReport report;
    report.input = path;
    Graph g;
    try {
        Timer load;
        g = load_graph_file(path, to_format(format), &std::cerr);
        report.t_load = load.seconds();
        if (g.vertex_count() == 0) throw ParseError("'" + path + "' contains no vertices");
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    }
    report.n_vertices = g.vertex_count();
    report.n_edges = g.edge_count();

    std::optional<std::vector<vertex_label>> result;
    SearchState state;
    try {
        if (flags.use_heuristic) {
            SearchParams hp;
            hp.lower_bound = flags.use_dfs ? 1 : flags.lower_bound;
            hp.upper_bound = flags.upper_bound;
            hp.time_limit = flags.time_limit;
            hp.use_heuristic = true;
            hp.use_dfs = false;
            Timer t;
            result = get_max_clique(g, hp, state);
            report.t_heuristic = t.seconds();
        }
        if (flags.use_dfs) {
            SearchParams dp;
            dp.lower_bound = flags.lower_bound;
            dp.upper_bound = flags.upper_bound;
            dp.time_limit = flags.time_limit;
            dp.use_heuristic = false;
            dp.use_dfs = true;
            dp.continue_search = flags.use_heuristic;  // keep the heuristic seed
            Timer t;
            result = get_max_clique(g, dp, state);
            report.t_dfs = t.seconds();
        }
        if (!flags.use_heuristic && !flags.use_dfs)
            throw std::invalid_argument("at least one of --heuristic/--dfs is required");
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    report.search_done = state.search_done;
    if (result) {
        report.members = *result;
        report.omega = report.members.size();
    } else {
        report.found = false;
    }
    if (output == "records")
        write_records(report, std::cout);
    else
        write_text(report, std::cout);
    return 0;
}

int run_enumerate(const std::string& path, const std::string& format, std::size_t size,
                  std::size_t limit) {
    Graph g;
    try {
        g = load_graph_file(path, to_format(format), &std::cerr);
        if (g.vertex_count() == 0) throw ParseError("'" + path + "' contains no vertices");
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    }
    try {
        CliqueStream stream = all_cliques(g, size);
        std::size_t produced = 0;
        while (limit == 0 || produced < limit) {
            const auto clique = stream.next();
            if (!clique) break;
            for (std::size_t i = 0; i < clique->size(); ++i)
                std::cout << (i > 0 ? " " : "") << (*clique)[i];
            std::cout << "\n";
            ++produced;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return 0;
}

PointSet load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    PointSet points;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::replace(line.begin(), line.end(), ',', ' ');
        std::replace(line.begin(), line.end(), ';', ' ');
        std::istringstream ls(line);
        std::vector<double> row;
        double value = 0.0;
        while (ls >> value) row.push_back(value);
        std::string leftover;
        if (ls.clear(), ls >> leftover) {
            if (!leftover.empty() && leftover[0] == '#' && row.empty()) continue;
            throw ParseError("points: non-numeric token '" + leftover + "' in '" + path + "'",
                             line_no);
        }
        if (row.empty()) continue;
        if (!points.empty() && row.size() != points.front().size())
            throw ParseError("points: row of dimension " + std::to_string(row.size()) +
                                 " in a file of dimension " +
                                 std::to_string(points.front().size()),
                             line_no);
        points.push_back(std::move(row));
    }
    if (points.empty()) throw ParseError("points: no rows in '" + path + "'");
    return points;
}

int run_match_points(const std::string& path_p, const std::string& path_q, double epsilon,
                     const std::string& output) {
    PointSet p, q;
    try {
        p = load_points(path_p);
        q = load_points(path_q);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    }
    try {
        const CorrespondenceGraph cg = build_correspondence_metric(p, q, epsilon);
        SearchParams sp;
        sp.use_heuristic = true;
        sp.use_dfs = true;
        sp.time_limit = 0.0;
        SearchState state;
        const auto clique = get_max_clique(cg.graph(), sp, state);
        const auto pairs = clique ? extract_correspondence(cg, *clique)
                                  : std::vector<CorrespondencePair>{};
        if (output == "records") {
            std::cout << "omega=" << pairs.size() << "\n";
            std::cout << "pairs=";
            for (std::size_t i = 0; i < pairs.size(); ++i)
                std::cout << (i > 0 ? "," : "") << pairs[i].p_index << ":" << pairs[i].q_index;
            std::cout << "\n";
            std::cout << "search_done=" << (state.search_done ? "true" : "false") << "\n";
        } else {
            std::cout << "points P:     " << p.size() << " (dim " << p.front().size() << ")\n";
            std::cout << "points Q:     " << q.size() << "\n";
            std::cout << "omega:        " << pairs.size() << "\n";
            std::cout << "pairs:       ";
            for (const auto& pr : pairs) std::cout << " (" << pr.p_index << " -> " << pr.q_index << ")";
            std::cout << "\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return 0;
}

int run_iso(const std::string& path_p, const std::string& path_q, const std::string& format,
            bool strict, double time_limit, const std::string& output) {
    Graph gp, gq;
    try {
        gp = load_graph_file(path_p, to_format(format), &std::cerr);
        gq = load_graph_file(path_q, to_format(format), &std::cerr);
        if (gp.vertex_count() == 0) throw ParseError("'" + path_p + "' contains no vertices");
        if (gq.vertex_count() == 0) throw ParseError("'" + path_q + "' contains no vertices");
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    }
    try {
        SearchParams sp;
        sp.use_heuristic = true;
        sp.use_dfs = true;
        sp.time_limit = time_limit;
        const IsoResult result = find_subgraph_isomorphism(gp, gq, sp, strict);
        if (output == "records") {
            std::cout << "is_full=" << (result.is_full ? "true" : "false") << "\n";
            std::cout << "search_done=" << (result.search_done ? "true" : "false") << "\n";
            std::cout << "mapping=";
            for (std::size_t i = 0; i < result.mapping.size(); ++i)
                std::cout << (i > 0 ? "," : "") << result.mapping[i].first << ":"
                          << result.mapping[i].second;
            std::cout << "\n";
        } else {
            std::cout << "pattern:      " << path_q << " (" << gq.vertex_count() << " vertices)\n";
            std::cout << "target:       " << path_p << " (" << gp.vertex_count() << " vertices)\n";
            std::cout << "full match:   " << (result.is_full ? "yes" : "no") << "\n";
            std::cout << "search done:  " << (result.search_done ? "true" : "false") << "\n";
            std::cout << "mapping:     ";
            for (const auto& [q, p] : result.mapping) std::cout << " (" << q << " -> " << p << ")";
            std::cout << "\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return 0;
}

struct BenchEntry {
    std::string path;
    std::optional<std::size_t> expected;
};

std::vector<BenchEntry> parse_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    const std::filesystem::path base = std::filesystem::path(path).parent_path();
    std::vector<BenchEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string file;
        if (!(ls >> file) || file[0] == '#') continue;
        BenchEntry entry;
        std::filesystem::path fp(file);
        entry.path = fp.is_absolute() ? fp.string() : (base / fp).string();
        long long expected = 0;
        if (ls >> expected) {
            if (expected < 1)
                throw ParseError("bench manifest: expected omega must be >= 1", line_no);
            entry.expected = static_cast<std::size_t>(expected);
        }
        std::string extra;
        if (ls.clear(), ls >> extra)
            throw ParseError("bench manifest: trailing token '" + extra + "'", line_no);
        entries.push_back(std::move(entry));
    }
    return entries;
}

int run_bench(const std::string& manifest_path, const std::string& format,
              const std::string& output) {
    std::vector<BenchEntry> entries;
    try {
        entries = parse_manifest(manifest_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    }

    bool any_error = false;
    bool any_mismatch = false;
    if (output != "records") {
        std::cout << std::left << std::setw(28) << "graph" << std::right << std::setw(9) << "|V|"
                  << std::setw(10) << "|E|" << std::setw(7) << "omega" << std::setw(10) << "t_heur"
                  << std::setw(7) << "w_h" << std::setw(10) << "t_dfs"
                  << "  status\n";
    }
    for (const BenchEntry& entry : entries) {
        const std::string name = std::filesystem::path(entry.path).filename().string();
        Graph g;
        std::string status = "ok";
        std::size_t omega = 0, omega_heur = 0;
        double t_load = 0.0, t_heur = 0.0, t_dfs = 0.0;
        try {
            Timer load;
            g = load_graph_file(entry.path, to_format(format), &std::cerr);
            t_load = load.seconds();

            SearchParams heur;
            heur.use_heuristic = true;
            heur.use_dfs = false;
            heur.time_limit = 0.0;
            SearchState heur_state;
            Timer ht;
            const auto heur_clique = get_max_clique(g, heur, heur_state);
            t_heur = ht.seconds();
            omega_heur = heur_clique ? heur_clique->size() : 0;

            SearchParams dfs;
            dfs.use_heuristic = false;
            dfs.use_dfs = true;
            dfs.time_limit = 0.0;
            SearchState dfs_state;
            Timer dt;
            const auto dfs_clique = get_max_clique(g, dfs, dfs_state);
            t_dfs = dt.seconds();
            omega = dfs_clique ? dfs_clique->size() : 0;

            if (entry.expected && omega != *entry.expected) {
                status = "mismatch(expected " + std::to_string(*entry.expected) + ")";
                any_mismatch = true;
            }
        } catch (const std::exception& e) {
            status = std::string("error: ") + e.what();
            any_error = true;
        }
        if (output == "records") {
            std::cout << "graph=" << name << " n_vertices=" << g.vertex_count()
                      << " n_edges=" << g.edge_count() << " omega=" << omega
                      << " omega_heur=" << omega_heur << " t_load=" << t_load
                      << " t_heur=" << t_heur << " t_dfs=" << t_dfs;
            if (entry.expected) std::cout << " expected=" << *entry.expected;
            std::cout << " status=" << (status.substr(0, 5) == "error" ? "error"
                                        : status == "ok"               ? "ok"
                                                                       : "mismatch")
                      << "\n";
        } else {
            std::cout << std::left << std::setw(28) << name << std::right << std::setw(9)
                      << g.vertex_count() << std::setw(10) << g.edge_count() << std::setw(7)
                      << omega << std::setw(10) << std::fixed << std::setprecision(4) << t_heur
                      << std::setw(7) << omega_heur << std::setw(10) << t_dfs << "  " << status
                      << "\n";
            std::cout.unsetf(std::ios::fixed);
        }
    }
    if (any_mismatch) return exit_mismatch;
    if (any_error) return exit_parse;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum-clique search, lazy clique enumeration, and correspondence-graph "
                 "matching for sparse graphs"};
    app.require_subcommand(1);

    std::string format = "auto";
    std::string output = "text";

    auto* max_clique = app.add_subcommand("max-clique", "Find a maximum clique in a graph file");
    std::string mc_file;
    SearchFlags mc_flags;
    max_clique->add_option("file", mc_file, "Graph file (.mtx or edge list)")->required();
    max_clique->add_option("--format", format, "Input format: auto, mtx, edges")
        ->check(CLI::IsMember({"auto", "mtx", "edges"}));
    add_search_flags(max_clique, mc_flags);
    max_clique->add_option("--output", output, "Report style: text or records")
        ->check(CLI::IsMember({"text", "records"}));

    auto* enumerate = app.add_subcommand("enumerate", "Stream all cliques of a given size");
    std::string en_file;
    std::size_t en_size = 0;
    std::size_t en_limit = 0;
    enumerate->add_option("file", en_file, "Graph file (.mtx or edge list)")->required();
    enumerate->add_option("--size", en_size, "Clique size to enumerate")->required();
    enumerate->add_option("--limit", en_limit, "Stop after this many cliques; 0 = all");
    enumerate->add_option("--format", format, "Input format: auto, mtx, edges")
        ->check(CLI::IsMember({"auto", "mtx", "edges"}));

    auto* match = app.add_subcommand("match-points",
                                     "Match two point files via a metric correspondence graph");
    std::string mp_file_p, mp_file_q;
    double mp_epsilon = 0.0;
    match->add_option("fileP", mp_file_p, "First point set, one point per row")->required();
    match->add_option("fileQ", mp_file_q, "Second point set, one point per row")->required();
    match->add_option("--epsilon", mp_epsilon, "Distance tolerance")->required();
    match->add_option("--output", output, "Report style: text or records")
        ->check(CLI::IsMember({"text", "records"}));

    auto* iso = app.add_subcommand("iso", "Search for a subgraph isomorphism via the "
                                          "association graph");
    std::string iso_file_p, iso_file_q;
    bool iso_strict = false;
    double iso_time_limit = 0.0;
    iso->add_option("fileP", iso_file_p, "Target graph (searched for the pattern)")->required();
    iso->add_option("fileQ", iso_file_q, "Pattern graph")->required();
    iso->add_flag("--strict", iso_strict, "Require an induced isomorphism");
    iso->add_option("--time-limit", iso_time_limit, "Search budget in seconds; 0 = unlimited");
    iso->add_option("--format", format, "Input format: auto, mtx, edges")
        ->check(CLI::IsMember({"auto", "mtx", "edges"}));
    iso->add_option("--output", output, "Report style: text or records")
        ->check(CLI::IsMember({"text", "records"}));

    auto* bench = app.add_subcommand("bench", "Run the clique search over a manifest of graphs");
    std::string bench_manifest;
    bench->add_option("manifest", bench_manifest,
                      "Manifest file: one '<path> [expected omega]' per line")
        ->required();
    bench->add_option("--format", format, "Input format: auto, mtx, edges")
        ->check(CLI::IsMember({"auto", "mtx", "edges"}));
    bench->add_option("--output", output, "Report style: text or records")
        ->check(CLI::IsMember({"text", "records"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    if (*max_clique) return run_max_clique(mc_file, format, mc_flags, output);
    if (*enumerate) return run_enumerate(en_file, format, en_size, en_limit);
    if (*match) return run_match_points(mp_file_p, mp_file_q, mp_epsilon, output);
    if (*iso) return run_iso(iso_file_p, iso_file_q, format, iso_strict, iso_time_limit, output);
    if (*bench) return run_bench(bench_manifest, format, output);
    return exit_usage;
}

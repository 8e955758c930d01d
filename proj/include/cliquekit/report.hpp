#ifndef CLIQUEKIT_REPORT_HPP
#define CLIQUEKIT_REPORT_HPP

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquekit/graph.hpp"

namespace cliquekit {

/// Result of one CLI clique run. Phase times are wall-clock seconds from a
/// monotonic clock; load time is kept separate from search time.
struct RunReport {
    std::string input;
    std::size_t n_vertices = 0;
    std::size_t n_edges = 0;
    std::size_t omega = 0;
    std::vector<vertex_label> members;
    double t_load = 0.0;
    double t_heuristic = 0.0;
    double t_dfs = 0.0;
    bool search_done = false;
    bool found = true;  ///< false: completed search had no clique of lower_bound size

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

namespace detail {

inline std::string format_seconds(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);  // round-trips exactly
    return buf;
}

inline std::string join_labels(const std::vector<vertex_label>& labels) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(labels[i]);
    }
    return out;
}

}  // namespace detail

/// Machine-readable key=value lines, one field per line.
inline void write_records(const RunReport& report, std::ostream& out) {
    out << "input=" << report.input << "\n";
    out << "status=" << (report.found ? "ok" : "not_found") << "\n";
    out << "n_vertices=" << report.n_vertices << "\n";
    out << "n_edges=" << report.n_edges << "\n";
    out << "omega=" << report.omega << "\n";
    out << "members=" << detail::join_labels(report.members) << "\n";
    out << "t_load=" << detail::format_seconds(report.t_load) << "\n";
    out << "t_heuristic=" << detail::format_seconds(report.t_heuristic) << "\n";
    out << "t_dfs=" << detail::format_seconds(report.t_dfs) << "\n";
    out << "search_done=" << (report.search_done ? "true" : "false") << "\n";
}

inline RunReport parse_records(std::istream& in) {
    RunReport report;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("run report: malformed record line '" + line + "'");
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (key == "input") {
            report.input = value;
        } else if (key == "status") {
            report.found = value == "ok";
        } else if (key == "n_vertices") {
            report.n_vertices = std::stoull(value);
        } else if (key == "n_edges") {
            report.n_edges = std::stoull(value);
        } else if (key == "omega") {
            report.omega = std::stoull(value);
        } else if (key == "members") {
            report.members.clear();
            std::istringstream ms(value);
            std::string token;
            while (std::getline(ms, token, ','))
                if (!token.empty()) report.members.push_back(std::stoll(token));
        } else if (key == "t_load") {
            report.t_load = std::strtod(value.c_str(), nullptr);
        } else if (key == "t_heuristic") {
            report.t_heuristic = std::strtod(value.c_str(), nullptr);
        } else if (key == "t_dfs") {
            report.t_dfs = std::strtod(value.c_str(), nullptr);
        } else if (key == "search_done") {
            report.search_done = value == "true";
        } else {
            throw std::invalid_argument("run report: unknown record key '" + key + "'");
        }
    }
    return report;
}

/// Human-oriented aligned text block.
inline void write_text(const RunReport& report, std::ostream& out) {
    out << "input:        " << report.input << "\n";
    out << "vertices:     " << report.n_vertices << "\n";
    out << "edges:        " << report.n_edges << "\n";
    if (report.found) {
        out << "clique size:  " << report.omega << "\n";
        out << "clique:      ";
        for (vertex_label l : report.members) out << " " << l;
        out << "\n";
    } else {
        out << "clique size:  none found at the requested lower bound\n";
    }
    out << "load time:    " << report.t_load << " s\n";
    out << "heur time:    " << report.t_heuristic << " s\n";
    out << "dfs time:     " << report.t_dfs << " s\n";
    out << "search done:  " << (report.search_done ? "true" : "false") << "\n";
}

}  // namespace cliquekit

#endif

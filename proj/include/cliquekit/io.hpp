#ifndef CLIQUEKIT_IO_HPP
#define CLIQUEKIT_IO_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliquekit/graph.hpp"

namespace cliquekit {

/// Malformed or unreadable input. `line()` is 1-based; 0 means the error is
/// not tied to a specific line (e.g. a file that cannot be opened).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(line == 0 ? message : message + " (line " + std::to_string(line) + ")"),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct MtxContents {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t nnz = 0;
    std::vector<EdgeRecord> records;
};

namespace detail {

inline bool is_blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

inline bool starts_with_icase(std::string_view text, std::string_view prefix) {
    if (text.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(text[i])) !=
            std::tolower(static_cast<unsigned char>(prefix[i])))
            return false;
    return true;
}

inline void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace detail

/// Parses a Matrix Market coordinate text stream: banner, `%` comments,
/// `M N nnz` size line, then one 1-based index pair per data line. Value
/// fields after the first two integers are ignored.
inline MtxContents parse_mtx(std::istream& in) {
    MtxContents out;
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) throw ParseError("matrix market: empty stream");
    ++line_no;
    detail::strip_cr(line);
    if (!detail::starts_with_icase(line, "%%MatrixMarket"))
        throw ParseError("matrix market: missing %%MatrixMarket banner", line_no);
    if (line.find("array") != std::string::npos)
        throw ParseError("matrix market: only the coordinate format is supported", line_no);

    bool have_size = false;
    while (!have_size) {
        if (!std::getline(in, line))
            throw ParseError("matrix market: missing size line", line_no);
        ++line_no;
        detail::strip_cr(line);
        if (line.empty() || line[0] == '%' || detail::is_blank(line)) continue;
        std::istringstream ls(line);
        long long m = 0, n = 0, nnz = 0;
        if (!(ls >> m >> n >> nnz) || m < 0 || n < 0 || nnz < 0)
            throw ParseError("matrix market: malformed size line '" + line + "'", line_no);
        out.rows = static_cast<std::size_t>(m);
        out.cols = static_cast<std::size_t>(n);
        out.nnz = static_cast<std::size_t>(nnz);
        have_size = true;
    }

    out.records.reserve(out.nnz);
    while (std::getline(in, line)) {
        ++line_no;
        detail::strip_cr(line);
        if (line.empty() || line[0] == '%' || detail::is_blank(line)) continue;
        if (out.records.size() == out.nnz)
            throw ParseError("matrix market: more data lines than the declared nnz of " +
                                 std::to_string(out.nnz),
                             line_no);
        std::istringstream ls(line);
        long long i = 0, j = 0;
        if (!(ls >> i >> j))
            throw ParseError("matrix market: malformed data line '" + line + "'", line_no);
        if (i < 1 || j < 1 || static_cast<std::size_t>(i) > out.rows ||
            static_cast<std::size_t>(j) > out.cols)
            throw ParseError("matrix market: index (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") outside declared " +
                                 std::to_string(out.rows) + "x" + std::to_string(out.cols),
                             line_no);
        out.records.push_back({i, j});
    }
    if (out.records.size() != out.nnz)
        throw ParseError("matrix market: declared nnz " + std::to_string(out.nnz) + " but found " +
                             std::to_string(out.records.size()) + " data lines",
                         line_no);
    return out;
}

/// Whitespace-separated integer pairs, one per line. Lines starting with
/// `comment_prefix` (after optional leading whitespace) are skipped.
inline std::vector<EdgeRecord> parse_edge_list(std::istream& in,
                                               std::string_view comment_prefix = "#") {
    std::vector<EdgeRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        detail::strip_cr(line);
        std::string_view view = line;
        while (!view.empty() && std::isspace(static_cast<unsigned char>(view.front())))
            view.remove_prefix(1);
        if (view.empty()) continue;
        if (!comment_prefix.empty() && view.substr(0, comment_prefix.size()) == comment_prefix)
            continue;
        std::istringstream ls(std::string{view});
        long long u = 0, v = 0;
        if (!(ls >> u >> v))
            throw ParseError("edge list: expected two integers, got '" + line + "'", line_no);
        std::string extra;
        if (ls >> extra)
            throw ParseError("edge list: trailing token '" + extra + "' on line '" + line + "'",
                             line_no);
        records.push_back({u, v});
    }
    return records;
}

/// Dense 0/1 adjacency matrix. Must be square and symmetric with a zero
/// diagonal; labels are the 0-based row indices.
inline Graph from_adjacency_matrix(const std::vector<std::vector<int>>& matrix) {
    const std::size_t n = matrix.size();
    std::vector<EdgeRecord> edges;
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n)
            throw std::invalid_argument("adjacency matrix: row " + std::to_string(i) +
                                        " has length " + std::to_string(matrix[i].size()) +
                                        ", expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            const int entry = matrix[i][j];
            if (entry != 0 && entry != 1)
                throw std::invalid_argument("adjacency matrix: entry (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ") is not 0/1");
            if (i == j && entry != 0)
                throw std::invalid_argument("adjacency matrix: nonzero diagonal at " +
                                            std::to_string(i));
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (matrix[i][j] != matrix[j][i])
                throw std::invalid_argument("adjacency matrix: asymmetric at (" +
                                            std::to_string(i) + ", " + std::to_string(j) + ")");
            if (matrix[i][j] == 1)
                edges.push_back({static_cast<vertex_label>(i), static_cast<vertex_label>(j)});
        }
    std::vector<vertex_label> universe(n);
    std::iota(universe.begin(), universe.end(), vertex_label{0});
    return build_graph(edges, universe);
}

/// Neighbor lists indexed by vertex; labels are the 0-based positions.
/// Asymmetric listings are symmetrized, with a note written to `warnings`.
inline Graph from_adjacency_list(const std::vector<std::vector<std::size_t>>& lists,
                                 std::ostream* warnings = nullptr) {
    const std::size_t n = lists.size();
    std::size_t asymmetric = 0;
    std::vector<EdgeRecord> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : lists[i]) {
            if (j >= n)
                throw std::invalid_argument("adjacency list: neighbor " + std::to_string(j) +
                                            " of vertex " + std::to_string(i) + " out of range");
            if (j == i)
                throw std::invalid_argument("adjacency list: self entry at vertex " +
                                            std::to_string(i));
            if (std::find(lists[j].begin(), lists[j].end(), i) == lists[j].end()) ++asymmetric;
            edges.push_back({static_cast<vertex_label>(i), static_cast<vertex_label>(j)});
        }
    }
    if (asymmetric > 0 && warnings != nullptr)
        *warnings << "adjacency list: symmetrized " << asymmetric
                  << " one-sided listing(s)\n";
    std::vector<vertex_label> universe(n);
    std::iota(universe.begin(), universe.end(), vertex_label{0});
    return build_graph(edges, universe);
}

/// MTX stream -> Graph. Every declared index 1..max(rows, cols) becomes a
/// vertex, so isolated vertices survive the round trip. A non-square size
/// line is accepted with a warning; indices are then treated as labels
/// shared between the two dimensions.
inline Graph load_mtx_graph(std::istream& in, std::ostream* warnings = nullptr) {
    MtxContents contents = parse_mtx(in);
    if (contents.rows != contents.cols && warnings != nullptr)
        *warnings << "matrix market: non-square size " << contents.rows << "x" << contents.cols
                  << "; treating row and column indices as one label space\n";
    const std::size_t span = std::max(contents.rows, contents.cols);
    std::vector<vertex_label> universe(span);
    std::iota(universe.begin(), universe.end(), vertex_label{1});
    return build_graph(contents.records, universe);
}

inline Graph load_edge_list_graph(std::istream& in, std::string_view comment_prefix = "#") {
    const std::vector<EdgeRecord> records = parse_edge_list(in, comment_prefix);
    return build_graph(records);
}

/// Writes pattern-symmetric Matrix Market coordinate text: one `i j` entry
/// per edge with i > j, 1-based, newline-terminated. Labels are written
/// directly when every label is a positive integer; otherwise vertices are
/// renumbered as internal id + 1.
inline void write_mtx(const Graph& g, std::ostream& out) {
    const bool labels_usable =
        std::all_of(g.labels().begin(), g.labels().end(), [](vertex_label l) { return l >= 1; });
    vertex_label size = static_cast<vertex_label>(g.vertex_count());
    if (labels_usable)
        for (vertex_label l : g.labels()) size = std::max(size, l);

    out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
    out << size << " " << size << " " << g.edge_count() << "\n";
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        const vertex_label lv = labels_usable ? g.label(v) : static_cast<vertex_label>(v) + 1;
        for (vertex_id u : g.neighbors(v)) {
            if (u >= v) break;  // each edge once, from its higher endpoint
            const vertex_label lu = labels_usable ? g.label(u) : static_cast<vertex_label>(u) + 1;
            out << std::max(lv, lu) << " " << std::min(lv, lu) << "\n";
        }
    }
}

enum class GraphFileFormat { auto_detect, mtx, edge_list };

/// Opens and loads a graph file, picking the parser by extension unless an
/// explicit format is given (.mtx -> Matrix Market, anything else -> edge
/// list).
inline Graph load_graph_file(const std::string& path,
                             GraphFileFormat format = GraphFileFormat::auto_detect,
                             std::ostream* warnings = nullptr) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    if (format == GraphFileFormat::auto_detect) {
        const auto dot = path.find_last_of('.');
        const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
        format = (ext == ".mtx" || ext == ".MTX") ? GraphFileFormat::mtx
                                                  : GraphFileFormat::edge_list;
    }
    return format == GraphFileFormat::mtx ? load_mtx_graph(in, warnings)
                                          : load_edge_list_graph(in);
}

}  // namespace cliquekit

#endif

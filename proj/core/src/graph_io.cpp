#include "chroma/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <string>

namespace chroma {

namespace {

constexpr int kG6Low = 63;    // '?'
constexpr int kG6High = 126;  // '~'

[[noreturn]] void fail_at_byte(const std::string& what, std::size_t offset) {
    throw ParseError("graph6: " + what + " at byte " + std::to_string(offset), offset);
}

[[noreturn]] void fail_at_line(const std::string& what, std::size_t line) {
    throw ParseError("dimacs: " + what + " at line " + std::to_string(line), line);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (text.empty()) fail_at_byte("empty input", base);

    unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == kG6High)
        fail_at_byte("long-form order (>62 vertices) not supported", base);
    if (first < kG6Low || first > kG6High) fail_at_byte("order byte out of range", base);
    const int n = first - kG6Low;

    const std::uint64_t bits = pair_count(n);
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != 1 + body)
        fail_at_byte("expected " + std::to_string(1 + body) + " bytes for order " +
                         std::to_string(n) + ", got " + std::to_string(text.size()),
                     base + std::min(text.size(), 1 + body));

    Graph g(n);
    std::uint64_t pos = 0;
    int u = 0, v = 1;
    for (std::size_t i = 0; i < body; ++i) {
        unsigned char ch = static_cast<unsigned char>(text[1 + i]);
        if (ch < kG6Low || ch > kG6High) fail_at_byte("body byte out of range", base + 1 + i);
        int group = ch - kG6Low;
        for (int b = 5; b >= 0; --b, ++pos) {
            int set = group >> b & 1;
            if (pos >= bits) {
                if (set) fail_at_byte("nonzero padding bit", base + 1 + i);
                continue;
            }
            if (set) g.add_edge(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62)
        throw std::invalid_argument("graph6 short form covers orders up to 62, got " +
                                    std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + kG6Low));
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = group << 1 | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kG6Low));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + kG6Low));
    return out;
}

Graph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    int n = -1;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag) || tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) fail_at_line("duplicate problem line", lineno);
            std::string format;
            long m = 0;
            if (!(fields >> format >> n >> m) || n < 0)
                fail_at_line("malformed problem line", lineno);
            if (format != "edge" && format != "edges" && format != "col")
                fail_at_line("unsupported format '" + format + "'", lineno);
            if (n > Graph::kMaxOrder)
                fail_at_line("order " + std::to_string(n) + " exceeds supported maximum " +
                                 std::to_string(Graph::kMaxOrder),
                             lineno);
            g = Graph(n);
        } else if (tag == "e") {
            if (n < 0) fail_at_line("edge before problem line", lineno);
            int u = 0, v = 0;
            if (!(fields >> u >> v)) fail_at_line("malformed edge line", lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                fail_at_line("edge endpoint out of range 1.." + std::to_string(n), lineno);
            if (u == v) fail_at_line("self-loop", lineno);
            g.add_edge(u - 1, v - 1);  // duplicates collapse
        } else if (tag == "n") {
            continue;  // node descriptors carry no structure we keep
        } else {
            fail_at_line("unrecognized line type '" + tag + "'", lineno);
        }
    }
    if (n < 0) fail_at_line("missing problem line", lineno == 0 ? 1 : lineno);
    return g;
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::vector<Edge> edges;
    int max_vertex = -1;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        int u = 0, v = 0;
        if (!(fields >> u)) continue;  // blank
        if (!(fields >> v))
            throw ParseError("edge list: missing second endpoint at line " + std::to_string(lineno),
                             lineno);
        if (u < 0 || v < 0)
            throw ParseError("edge list: negative vertex at line " + std::to_string(lineno),
                             lineno);
        if (u == v)
            throw ParseError("edge list: self-loop at line " + std::to_string(lineno), lineno);
        if (std::max(u, v) >= Graph::kMaxOrder)
            throw ParseError("edge list: vertex exceeds supported maximum " +
                                 std::to_string(Graph::kMaxOrder - 1) + " at line " +
                                 std::to_string(lineno),
                             lineno);
        edges.emplace_back(std::min(u, v), std::max(u, v));
        max_vertex = std::max(max_vertex, std::max(u, v));
    }
    return Graph::from_edges(max_vertex + 1, edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace chroma

#include "degdev/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace degdev {

namespace {

using Code = ParseError::Code;

[[noreturn]] void fail(Code code, const std::string& msg) {
    throw ParseError(code, msg);
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;  // blank
}

// Parses a full line of whitespace-separated tokens; rejects trailing junk.
std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

long parse_int(const std::string& tok, Code code, const std::string& what) {
    std::size_t pos = 0;
    long value = 0;
    try {
        value = std::stol(tok, &pos);
    } catch (const std::exception&) {
        fail(code, "expected integer for " + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        fail(code, "expected integer for " + what + ", got '" + tok + "'");
    return value;
}

}  // namespace

ParsedGraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;

    std::string header;
    bool have_header = false;
    std::vector<std::string> data_lines;
    while (std::getline(in, line)) {
        if (is_comment_or_blank(line)) continue;
        if (!have_header) {
            header = line;
            have_header = true;
        } else {
            data_lines.push_back(line);
        }
    }
    if (!have_header) fail(Code::malformed_header, "missing header line");

    auto toks = tokens_of(header);
    if (toks.size() != 2 && toks.size() != 4)
        fail(Code::malformed_header, "header must be '<n> <m>' or '<n> <m> bipartite <a>'");
    long n = parse_int(toks[0], Code::malformed_header, "vertex count");
    long m = parse_int(toks[1], Code::malformed_header, "edge count");
    if (n < 1) fail(Code::malformed_header, "vertex count must be positive");
    if (m < 0) fail(Code::malformed_header, "edge count must be nonnegative");

    std::optional<BipartiteLayout> layout;
    if (toks.size() == 4) {
        if (toks[2] != "bipartite")
            fail(Code::malformed_header, "unknown header keyword '" + toks[2] + "'");
        long a = parse_int(toks[3], Code::malformed_header, "class size");
        if (a < 1 || a >= n)
            fail(Code::malformed_header, "bipartite class size must satisfy 1 <= a < n");
        layout = BipartiteLayout{static_cast<int>(a)};
    }

    if (static_cast<long>(data_lines.size()) != m)
        fail(Code::bad_edge_count, "expected " + std::to_string(m) + " edge lines, found " +
                                       std::to_string(data_lines.size()));

    std::vector<Edge> edges;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) * n, 0);
    edges.reserve(data_lines.size());
    for (const std::string& dl : data_lines) {
        auto et = tokens_of(dl);
        if (et.size() != 2)
            fail(Code::bad_vertex, "edge line must be '<u> <v>', got '" + dl + "'");
        long u = parse_int(et[0], Code::bad_vertex, "vertex");
        long v = parse_int(et[1], Code::bad_vertex, "vertex");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(Code::bad_vertex, "vertex out of range in edge '" + dl + "'");
        if (u == v) fail(Code::self_loop, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        std::size_t idx = static_cast<std::size_t>(u) * n + v;
        if (seen[idx]) fail(Code::duplicate_edge, "duplicate edge '" + dl + "'");
        seen[idx] = 1;
        if (layout && (u < layout->a) == (v < layout->a))
            fail(Code::crossing_violation,
                 "edge '" + dl + "' does not cross the declared bipartition");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }

    return ParsedGraph{Graph(static_cast<int>(n), std::move(edges)), layout};
}

ParsedGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Code::io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

std::string format_edge_list(const Graph& g,
                             const std::optional<BipartiteLayout>& layout) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count();
    if (layout) out << " bipartite " << layout->a;
    out << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

void write_edge_list_file(const std::string& path, const Graph& g,
                          const std::optional<BipartiteLayout>& layout) {
    std::ofstream out(path);
    if (!out) fail(Code::io, "cannot open '" + path + "' for writing");
    out << format_edge_list(g, layout);
}

}  // namespace degdev

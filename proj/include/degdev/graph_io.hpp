#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "degdev/graph.hpp"

namespace degdev {

// Edge-list text format:
//   # comment lines start with '#'
//   <n> <m>                 or   <n> <m> bipartite <a>
//   <u> <v>                 (exactly m lines, 0 <= u,v < n, u != v)
class ParseError : public std::runtime_error {
public:
    enum class Code {
        io,
        malformed_header,
        bad_vertex,
        self_loop,
        duplicate_edge,
        crossing_violation,
        bad_edge_count,
    };

    ParseError(Code code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    Code code() const { return code_; }

private:
    Code code_;
};

struct ParsedGraph {
    Graph graph;
    std::optional<BipartiteLayout> layout;
};

ParsedGraph parse_edge_list(std::string_view text);
ParsedGraph read_edge_list_file(const std::string& path);

// Emits edges sorted lexicographically; includes the bipartite header field
// when a layout is given.
std::string format_edge_list(const Graph& g,
                             const std::optional<BipartiteLayout>& layout = {});
void write_edge_list_file(const std::string& path, const Graph& g,
                          const std::optional<BipartiteLayout>& layout = {});

}  // namespace degdev

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "degdev/rational.hpp"

namespace degdev {

// Unordered vertex pair, normalized to u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge& l, const Edge& r) {
        return l.u == r.u && l.v == r.v;
    }
    friend bool operator<(const Edge& l, const Edge& r) {
        return l.u != r.u ? l.u < r.u : l.v < r.v;
    }
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    explicit Graph(int n) : Graph(n, {}) {}
    Graph(int n, std::vector<Edge> edges);

    static Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;
    int degree(int u) const { return deg_[static_cast<std::size_t>(u)]; }
    // Edges sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }
    // Neighbors of u in ascending order.
    std::vector<int> neighbors(int u) const;

    Graph complement() const;

    friend bool operator==(const Graph& l, const Graph& r) {
        return l.n_ == r.n_ && l.edges_ == r.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::uint8_t> adj_;  // n*n, row-major
    std::vector<int> deg_;
};

// Bipartition into class A = [0, a) and class B = [a, n).
struct BipartiteLayout {
    int a = 0;

    int b(const Graph& g) const { return g.vertex_count() - a; }
    bool valid_for(const Graph& g) const;
    // Throws std::invalid_argument when some edge fails to cross the classes
    // or the class sizes are degenerate.
    void require_valid(const Graph& g) const;
};

struct DegreeProfile {
    std::vector<int> degrees;
    int m = 0;
    Rational mean_degree;  // 2m/n
    Rational s;            // sum of |d(u) - 2m/n|
    Rational var;          // mean squared deviation
};

DegreeProfile degree_profile(const Graph& g);

// Per-class degree deviation of a bipartite graph: deviations in A are taken
// against m/a and in B against m/b. Zero exactly for semiregular graphs.
Rational s2_deviation(const Graph& g, const BipartiteLayout& layout);

// Size of the symmetric difference of the edge sets. Both graphs must share
// the same vertex count.
int edit_distance(const Graph& g, const Graph& h);

struct SubsetEdgeCounts {
    int inside = 0;   // edges with both ends in S
    int outside = 0;  // edges with both ends outside S
    int cut = 0;      // edges with exactly one end in S
};

SubsetEdgeCounts subset_edge_counts(const Graph& g, const std::vector<int>& s);

// Each vertex u becomes t independent copies labeled u*t+j; copies of u and v
// are joined iff uv is an edge. tn vertices, t^2 m edges.
Graph blow_up(const Graph& g, int t);

// Blow-up with every copy class turned into a clique. Equals the complement
// of the blow-up of the complement, as labeled graphs.
Graph closed_blow_up(const Graph& g, int t);

// Vertices of h are relabeled by +g.vertex_count().
Graph disjoint_union(const Graph& g, const Graph& h);

Graph complete_graph(int n);
Graph empty_graph(int n);
// K_{1,leaves}: center 0, leaves 1..leaves.
Graph star_graph(int leaves);
Graph path_graph(int n);
Graph cycle_graph(int n);
// Layout {a} applies.
Graph complete_bipartite(int a, int b);
Graph gnp_random(int n, double p, std::uint64_t seed);
// Cross pairs kept independently with probability p; layout {a} applies.
Graph random_bipartite(int a, int b, double p, std::uint64_t seed);

// Lexicographic rank of pairs (0,1),(0,2),...,(n-2,n-1).
int pair_count(int n);
int pair_index(int n, int u, int v);
std::pair<int, int> pair_from_index(int n, int idx);

// Graph whose edge set is the bitmask over the lexicographic pair order.
// Requires pair_count(n) <= 63.
Graph graph_from_bitmask(int n, std::uint64_t mask);
std::uint64_t bitmask_of(const Graph& g);

}  // namespace degdev

#include "degdev/graph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace degdev {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument(msg);
}

// Uniform double in [0,1) from the raw engine stream; distributions from
// <random> are not bit-portable, the engine itself is.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) fail("graph needs at least one vertex");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    deg_.assign(n, 0);
    for (Edge& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n) fail("edge endpoint out of range");
        if (e.u == e.v) fail("self-loop not allowed");
        std::size_t idx = static_cast<std::size_t>(e.u) * n + e.v;
        if (adj_[idx]) fail("duplicate edge");
        adj_[idx] = 1;
        adj_[static_cast<std::size_t>(e.v) * n + e.u] = 1;
        ++deg_[e.u];
        ++deg_[e.v];
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
}

Graph Graph::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

bool Graph::has_edge(int u, int v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

std::vector<int> Graph::neighbors(int u) const {
    std::vector<int> out;
    out.reserve(deg_[static_cast<std::size_t>(u)]);
    for (int v = 0; v < n_; ++v)
        if (adj_[static_cast<std::size_t>(u) * n_ + v]) out.push_back(v);
    return out;
}

Graph Graph::complement() const {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(pair_count(n_)) - edges_.size());
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) edges.push_back({u, v});
    return Graph(n_, std::move(edges));
}

bool BipartiteLayout::valid_for(const Graph& g) const {
    if (a < 1 || a >= g.vertex_count()) return false;
    for (const Edge& e : g.edges())
        if ((e.u < a) == (e.v < a)) return false;
    return true;
}

void BipartiteLayout::require_valid(const Graph& g) const {
    if (a < 1 || a >= g.vertex_count()) fail("bipartite class sizes must be positive");
    for (const Edge& e : g.edges())
        if ((e.u < a) == (e.v < a))
            fail("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                 "} does not cross the bipartition");
}

DegreeProfile degree_profile(const Graph& g) {
    const int n = g.vertex_count();
    DegreeProfile p;
    p.degrees.resize(n);
    p.m = g.edge_count();
    p.mean_degree = Rational(2 * static_cast<std::int64_t>(p.m), n);
    Rational s(0);
    Rational var_sum(0);
    for (int u = 0; u < n; ++u) {
        p.degrees[u] = g.degree(u);
        Rational dev = Rational(p.degrees[u]) - p.mean_degree;
        s += rational_abs(dev);
        var_sum += dev * dev;
    }
    p.s = s;
    p.var = var_sum / n;
    return p;
}

Rational s2_deviation(const Graph& g, const BipartiteLayout& layout) {
    layout.require_valid(g);
    const int n = g.vertex_count();
    const int a = layout.a;
    const int b = n - a;
    const int m = g.edge_count();
    Rational total(0);
    for (int u = 0; u < a; ++u)
        total += rational_abs(Rational(g.degree(u)) - Rational(m, a));
    for (int u = a; u < n; ++u)
        total += rational_abs(Rational(g.degree(u)) - Rational(m, b));
    return total;
}

int edit_distance(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count())
        fail("edit distance requires equal vertex counts");
    const auto& eg = g.edges();
    const auto& eh = h.edges();
    std::size_t i = 0, j = 0;
    int diff = 0;
    while (i < eg.size() && j < eh.size()) {
        if (eg[i] == eh[j]) {
            ++i;
            ++j;
        } else if (eg[i] < eh[j]) {
            ++diff;
            ++i;
        } else {
            ++diff;
            ++j;
        }
    }
    diff += static_cast<int>((eg.size() - i) + (eh.size() - j));
    return diff;
}

SubsetEdgeCounts subset_edge_counts(const Graph& g, const std::vector<int>& s) {
    const int n = g.vertex_count();
    std::vector<std::uint8_t> in_s(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n) fail("subset vertex out of range");
        if (in_s[v]) fail("subset vertex repeated");
        in_s[v] = 1;
    }
    SubsetEdgeCounts c;
    for (const Edge& e : g.edges()) {
        int ends = in_s[e.u] + in_s[e.v];
        if (ends == 2)
            ++c.inside;
        else if (ends == 0)
            ++c.outside;
        else
            ++c.cut;
    }
    return c;
}

Graph blow_up(const Graph& g, int t) {
    if (t < 1) fail("blow-up factor must be positive");
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()) * t * t);
    for (const Edge& e : g.edges())
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                edges.push_back({e.u * t + i, e.v * t + j});
    return Graph(n * t, std::move(edges));
}

Graph closed_blow_up(const Graph& g, int t) {
    if (t < 1) fail("blow-up factor must be positive");
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                edges.push_back({e.u * t + i, e.v * t + j});
    for (int u = 0; u < n; ++u)
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                edges.push_back({u * t + i, u * t + j});
    return Graph(n * t, std::move(edges));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int shift = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : h.edges()) edges.push_back({e.u + shift, e.v + shift});
    return Graph(shift + h.vertex_count(), std::move(edges));
}

Graph complete_graph(int n) {
    if (n < 1) fail("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph empty_graph(int n) { return Graph(n); }

Graph star_graph(int leaves) {
    if (leaves < 1) fail("star needs at least one leaf");
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return Graph(leaves + 1, std::move(edges));
}

Graph path_graph(int n) {
    if (n < 1) fail("path needs n >= 1");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) fail("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) fail("complete bipartite needs positive class sizes");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) edges.push_back({u, v});
    return Graph(a + b, std::move(edges));
}

Graph gnp_random(int n, double p, std::uint64_t seed) {
    if (n < 1) fail("random graph needs n >= 1");
    if (p < 0.0 || p > 1.0) fail("edge probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform01(rng) < p) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph random_bipartite(int a, int b, double p, std::uint64_t seed) {
    if (a < 1 || b < 1) fail("random bipartite needs positive class sizes");
    if (p < 0.0 || p > 1.0) fail("edge probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            if (uniform01(rng) < p) edges.push_back({u, v});
    return Graph(a + b, std::move(edges));
}

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    // pairs (u, u+1..n-1) start after all rows above u
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

std::pair<int, int> pair_from_index(int n, int idx) {
    int u = 0;
    while (idx >= n - 1 - u) {
        idx -= n - 1 - u;
        ++u;
    }
    return {u, u + 1 + idx};
}

Graph graph_from_bitmask(int n, std::uint64_t mask) {
    const int pc = pair_count(n);
    if (pc > 63) fail("bitmask representation limited to 63 vertex pairs");
    std::vector<Edge> edges;
    for (int i = 0; i < pc; ++i)
        if (mask & (std::uint64_t{1} << i)) {
            auto [u, v] = pair_from_index(n, i);
            edges.push_back({u, v});
        }
    return Graph(n, std::move(edges));
}

std::uint64_t bitmask_of(const Graph& g) {
    const int n = g.vertex_count();
    if (pair_count(n) > 63)
        fail("bitmask representation limited to 63 vertex pairs");
    std::uint64_t mask = 0;
    for (const Edge& e : g.edges())
        mask |= std::uint64_t{1} << pair_index(n, e.u, e.v);
    return mask;
}

}  // namespace degdev

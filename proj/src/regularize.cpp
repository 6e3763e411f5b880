#include "degdev/regularize.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace degdev {

namespace {

[[noreturn]] void breach(const std::string& msg) {
    throw AlgorithmInvariantError(msg);
}

// Mutable adjacency workspace; records every change as an edit step.
struct Workspace {
    int n;
    std::vector<std::uint8_t> adj;
    std::vector<int> deg;
    std::vector<EditStep> steps;

    explicit Workspace(const Graph& g)
        : n(g.vertex_count()),
          adj(static_cast<std::size_t>(n) * n, 0),
          deg(n, 0) {
        for (const Edge& e : g.edges()) {
            adj[static_cast<std::size_t>(e.u) * n + e.v] = 1;
            adj[static_cast<std::size_t>(e.v) * n + e.u] = 1;
            ++deg[e.u];
            ++deg[e.v];
        }
    }

    bool has(int u, int v) const { return adj[static_cast<std::size_t>(u) * n + v]; }

    void remove_edge(int u, int v) {
        if (u == v || !has(u, v)) breach("removing absent edge");
        adj[static_cast<std::size_t>(u) * n + v] = 0;
        adj[static_cast<std::size_t>(v) * n + u] = 0;
        --deg[u];
        --deg[v];
        steps.push_back({false, std::min(u, v), std::max(u, v)});
    }

    void add_edge(int u, int v) {
        if (u == v || has(u, v)) breach("adding illegal edge");
        adj[static_cast<std::size_t>(u) * n + v] = 1;
        adj[static_cast<std::size_t>(v) * n + u] = 1;
        ++deg[u];
        ++deg[v];
        steps.push_back({true, std::min(u, v), std::max(u, v)});
    }

    int edge_count() const {
        long total = 0;
        for (int d : deg) total += d;
        return static_cast<int>(total / 2);
    }

    Graph snapshot() const {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has(u, v)) edges.push_back({u, v});
        return Graph(n, std::move(edges));
    }
};

// Applies edits recorded against a complement back onto the original:
// a complement addition is an original removal and vice versa.
void apply_mirrored(Workspace& w, const std::vector<EditStep>& complement_steps) {
    for (const EditStep& s : complement_steps) {
        if (s.add)
            w.remove_edge(s.u, s.v);
        else
            w.add_edge(s.u, s.v);
    }
}

// Lowest w adjacent to `from`, not adjacent to `to` and distinct from it.
int transfer_target(const Workspace& w, int to, int from) {
    for (int x = 0; x < w.n; ++x)
        if (x != to && w.has(from, x) && !w.has(to, x)) return x;
    return -1;
}

int spread(const Workspace& w, const std::vector<int>& members) {
    int lo = w.deg[members.front()], hi = lo;
    for (int u : members) {
        lo = std::min(lo, w.deg[u]);
        hi = std::max(hi, w.deg[u]);
    }
    return hi - lo;
}

std::vector<int> iota_members(int from, int to) {
    std::vector<int> v(static_cast<std::size_t>(to - from));
    for (int i = from; i < to; ++i) v[static_cast<std::size_t>(i - from)] = i;
    return v;
}

// While some member sits at least one below the mean and another at least one
// above it, move one edge endpoint from the highest-degree member to the
// lowest-degree one. Each move is two edits and lowers the member deviation
// sum by exactly two. The mean is mean_num/mean_den, compared exactly.
void balance_toward_mean(Workspace& w, const std::vector<int>& members,
                         std::int64_t mean_num, std::int64_t mean_den) {
    const std::size_t cap = members.size() * members.size() * 4 + 16;
    for (std::size_t iter = 0;; ++iter) {
        if (iter > cap) breach("degree balancing failed to terminate");
        int lo = -1, hi = -1;
        for (int u : members) {
            if (lo == -1 || w.deg[u] < w.deg[lo]) lo = u;
            if (hi == -1 || w.deg[u] > w.deg[hi]) hi = u;
        }
        if (!(static_cast<std::int64_t>(w.deg[lo]) * mean_den <= mean_num - mean_den &&
              static_cast<std::int64_t>(w.deg[hi]) * mean_den >= mean_num + mean_den))
            return;
        int t = transfer_target(w, lo, hi);
        if (t < 0) breach("no transferable neighbor between extreme-degree vertices");
        w.remove_edge(hi, t);
        w.add_edge(lo, t);
    }
}

// All members have degree >= d on entry and some exceed d+1; moves edge
// endpoints from members above d+1 to members at exactly d until none exceed
// d+1. Never drops anyone below d.
void drain_excess(Workspace& w, const std::vector<int>& members, int d) {
    const std::size_t cap = members.size() * members.size() * 4 + 16;
    for (std::size_t iter = 0;; ++iter) {
        if (iter > cap) breach("excess draining failed to terminate");
        int v = -1, u = -1;
        for (int x : members) {
            if (v == -1 && w.deg[x] >= d + 2) v = x;
            if (u == -1 && w.deg[x] == d) u = x;
        }
        if (v == -1) return;
        if (u == -1) breach("no degree-d vertex available for excess draining");
        int t = transfer_target(w, u, v);
        if (t < 0) breach("no transferable neighbor for excess draining");
        w.remove_edge(v, t);
        w.add_edge(u, t);
    }
}

Workspace complement_workspace(const Workspace& w) {
    Workspace c = w;
    c.steps.clear();
    for (int u = 0; u < w.n; ++u) {
        c.deg[u] = w.n - 1 - w.deg[u];
        for (int v = 0; v < w.n; ++v)
            c.adj[static_cast<std::size_t>(u) * w.n + v] =
                (u != v && !w.has(u, v)) ? 1 : 0;
    }
    return c;
}

// Complement within the bipartition: cross pairs flip, class pairs stay empty.
Workspace bipartite_complement_workspace(const Workspace& w, int a) {
    Workspace c = w;
    c.steps.clear();
    std::fill(c.adj.begin(), c.adj.end(), 0);
    std::fill(c.deg.begin(), c.deg.end(), 0);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < w.n; ++v)
            if (!w.has(u, v)) {
                c.adj[static_cast<std::size_t>(u) * w.n + v] = 1;
                c.adj[static_cast<std::size_t>(v) * w.n + u] = 1;
                ++c.deg[u];
                ++c.deg[v];
            }
    return c;
}

// Brings the degrees of `members` to spread at most one. After balancing,
// any leftover spread means the mean is fractional and either the minimum
// already sits at floor(mean), where draining applies directly, or the
// maximum sits at floor(mean)+1, in which case the complement is in the
// drainable state and its edits are mirrored back.
template <typename MakeComplement>
void regularize_member_set(Workspace& w, const std::vector<int>& members,
                           std::int64_t mean_num, std::int64_t mean_den,
                           MakeComplement make_complement) {
    balance_toward_mean(w, members, mean_num, mean_den);
    if (spread(w, members) <= 1) return;

    if (mean_num % mean_den == 0)
        breach("degree spread above one with integer mean after balancing");
    const int d = static_cast<int>(mean_num / mean_den);

    int lo = w.deg[members.front()];
    for (int u : members) lo = std::min(lo, w.deg[u]);

    if (lo == d) {
        drain_excess(w, members, d);
    } else {
        Workspace c = make_complement(w);
        std::int64_t c_mean_num = 0;
        for (int u : members) c_mean_num += c.deg[u];
        const int c_d =
            static_cast<int>(c_mean_num / static_cast<std::int64_t>(members.size()));
        drain_excess(c, members, c_d);
        apply_mirrored(w, c.steps);
    }
    if (spread(w, members) > 1) breach("degree spread above one after draining");
}

void require_bound(const std::vector<EditStep>& steps, const Rational& bound) {
    if (Rational(static_cast<std::int64_t>(steps.size())) > bound)
        breach("edit script exceeds certified bound");
}

}  // namespace

RegularizationOutcome rough_regularize(const Graph& g) {
    const int n = g.vertex_count();
    const std::int64_t m = g.edge_count();
    Workspace w(g);
    regularize_member_set(w, iota_members(0, n), 2 * m, n, [](const Workspace& ws) {
        return complement_workspace(ws);
    });
    if (w.edge_count() != static_cast<int>(m)) breach("edge count changed");
    Rational bound = degree_profile(g).s;
    require_bound(w.steps, bound);
    return RegularizationOutcome{w.snapshot(), EditScript{std::move(w.steps)}, bound};
}

RegularizationOutcome bipartite_rough_regularize(const Graph& g,
                                                 const BipartiteLayout& layout) {
    layout.require_valid(g);
    const int n = g.vertex_count();
    const int a = layout.a;
    const std::int64_t m = g.edge_count();
    Workspace w(g);
    auto mirror = [a](const Workspace& ws) {
        return bipartite_complement_workspace(ws, a);
    };
    regularize_member_set(w, iota_members(0, a), m, a, mirror);
    regularize_member_set(w, iota_members(a, n), m, n - a, mirror);
    if (w.edge_count() != static_cast<int>(m)) breach("edge count changed");
    Rational bound = s2_deviation(g, layout);
    require_bound(w.steps, bound);
    return RegularizationOutcome{w.snapshot(), EditScript{std::move(w.steps)}, bound};
}

namespace {

// Input degrees all d or d+1 with an even count of degree-(d+1) vertices;
// lands on a d-regular graph in at most 3/2 * |degree-(d+1) set| edits.
void level_down(Workspace& w, int d) {
    // Drop edges joining two high-degree vertices; each removal settles both
    // endpoints. Degrees only decrease here, so one lexicographic pass visits
    // every qualifying pair.
    for (int u = 0; u < w.n; ++u)
        for (int v = u + 1; v < w.n; ++v)
            if (w.deg[u] == d + 1 && w.deg[v] == d + 1 && w.has(u, v))
                w.remove_edge(u, v);

    // Settle remaining high-degree vertices in pairs: detach one neighbor from
    // each and join the detached neighbors.
    const std::size_t cap = static_cast<std::size_t>(w.n) + 2;
    for (std::size_t iter = 0;; ++iter) {
        if (iter > cap) breach("leveling failed to terminate");
        int u = -1, v = -1;
        for (int x = 0; x < w.n && v == -1; ++x) {
            if (w.deg[x] != d + 1) continue;
            if (u == -1)
                u = x;
            else
                v = x;
        }
        if (u == -1) return;
        if (v == -1) breach("odd count of high-degree vertices while leveling");
        bool done = false;
        for (int x = 0; x < w.n && !done; ++x) {
            if (!w.has(u, x)) continue;
            for (int t = 0; t < w.n && !done; ++t) {
                if (t == x || !w.has(v, t) || w.has(x, t)) continue;
                w.remove_edge(u, x);
                w.remove_edge(v, t);
                w.add_edge(x, t);
                done = true;
            }
        }
        if (!done) breach("no reconnectable neighbor pair while leveling");
    }
}

}  // namespace

RegularizationOutcome fine_regularize(const Graph& g) {
    const int n = g.vertex_count();
    int lo = g.degree(0), hi = g.degree(0);
    for (int u = 0; u < n; ++u) {
        lo = std::min(lo, g.degree(u));
        hi = std::max(hi, g.degree(u));
    }
    if (hi - lo > 1)
        throw std::domain_error("input degrees must span at most two consecutive values");

    Rational bound(3 * static_cast<std::int64_t>(n), 2);
    if (hi == lo) return RegularizationOutcome{g, EditScript{}, bound};

    const int d = lo;
    int high_count = 0;
    for (int u = 0; u < n; ++u)
        if (g.degree(u) == d + 1) ++high_count;

    Workspace w(g);
    if (high_count % 2 == 0) {
        level_down(w, d);
    } else {
        // The low class is even whenever the high one is odd; in the
        // complement it becomes the high class, so leveling there ends at an
        // (n-d-2)-regular complement, i.e. a (d+1)-regular result.
        Workspace c = complement_workspace(w);
        level_down(c, n - d - 2);
        apply_mirrored(w, c.steps);
    }

    const int r = w.deg[0];
    for (int u = 0; u < n; ++u)
        if (w.deg[u] != r) breach("result is not regular");
    if (r != d && r != d + 1) breach("regular degree outside the allowed pair");
    require_bound(w.steps, bound);
    return RegularizationOutcome{w.snapshot(), EditScript{std::move(w.steps)}, bound};
}

std::pair<Rational, Rational> rho_bounds(const Graph& g) {
    Rational s = degree_profile(g).s;
    return {s / 2, s + Rational(3 * static_cast<std::int64_t>(g.vertex_count()), 2)};
}

namespace {

// All r-regular labeled graphs on n vertices as edge bitmasks, found by
// deciding pairs in lexicographic order with degree pruning.
std::vector<std::uint64_t> enumerate_regular(int n, int r) {
    const int pc = pair_count(n);
    std::vector<std::pair<int, int>> pairs(pc);
    for (int i = 0; i < pc; ++i) pairs[i] = pair_from_index(n, i);
    // remaining[i][u] = undecided pairs touching u at positions >= i
    std::vector<std::vector<int>> remaining(static_cast<std::size_t>(pc) + 1,
                                            std::vector<int>(n, 0));
    for (int i = pc - 1; i >= 0; --i) {
        remaining[i] = remaining[i + 1];
        ++remaining[i][pairs[i].first];
        ++remaining[i][pairs[i].second];
    }

    std::vector<std::uint64_t> out;
    std::vector<int> deg(n, 0);
    std::uint64_t mask = 0;
    std::function<void(int)> go = [&](int idx) {
        if (idx == pc) {
            for (int u = 0; u < n; ++u)
                if (deg[u] != r) return;
            out.push_back(mask);
            return;
        }
        auto [u, v] = pairs[idx];
        if (deg[u] + remaining[idx + 1][u] >= r && deg[v] + remaining[idx + 1][v] >= r)
            go(idx + 1);
        if (deg[u] < r && deg[v] < r) {
            mask |= std::uint64_t{1} << idx;
            ++deg[u];
            ++deg[v];
            go(idx + 1);
            --deg[u];
            --deg[v];
            mask &= ~(std::uint64_t{1} << idx);
        }
    };
    go(0);
    return out;
}

const std::vector<std::uint64_t>& regular_masks(int n, int r) {
    static std::map<std::pair<int, int>, std::vector<std::uint64_t>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(n, r);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_regular(n, r)).first;
    return it->second;
}

}  // namespace

int rho_exact(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (cap < 1 || pair_count(cap) > 63)
        throw std::invalid_argument("rho_exact cap out of supported range");
    if (n > cap)
        throw std::invalid_argument("graph too large for exact regularization distance");
    const std::uint64_t gmask = bitmask_of(g);
    int best = -1;
    for (int r = 0; r < n; ++r) {
        if (static_cast<long>(n) * r % 2 != 0) continue;
        for (std::uint64_t mask : regular_masks(n, r)) {
            int diff = __builtin_popcountll(mask ^ gmask);
            if (best < 0 || diff < best) best = diff;
        }
    }
    if (best < 0) breach("no regular graph candidates enumerated");
    return best;
}

Graph apply_edit_script(const Graph& g, const EditScript& script) {
    Workspace w(g);
    for (const EditStep& s : script.steps) {
        if (s.add)
            w.add_edge(s.u, s.v);
        else
            w.remove_edge(s.u, s.v);
    }
    return w.snapshot();
}

std::string format_edit_script(const EditScript& script) {
    std::ostringstream out;
    for (const EditStep& s : script.steps)
        out << (s.add ? '+' : '-') << s.u << ' ' << s.v << '\n';
    return out.str();
}

}  // namespace degdev

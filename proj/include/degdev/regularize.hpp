#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degdev/graph.hpp"

namespace degdev {

struct EditStep {
    bool add = false;  // false = remove
    int u = 0;
    int v = 0;

    friend bool operator==(const EditStep& l, const EditStep& r) {
        return l.add == r.add && l.u == r.u && l.v == r.v;
    }
};

// Ordered edge edits. Replaying from the source graph must stay legal at
// every step (no removing absent edges, no adding present ones).
struct EditScript {
    std::vector<EditStep> steps;
};

struct RegularizationOutcome {
    Graph result;
    EditScript script;
    Rational certified_bound;  // guaranteed upper bound on |script|
};

// Raised when an execution state contradicts what the procedure guarantees;
// indicates a bug, never expected on valid input.
class AlgorithmInvariantError : public std::logic_error {
public:
    explicit AlgorithmInvariantError(const std::string& msg)
        : std::logic_error(msg) {}
};

// Moves edge endpoints from high-degree to low-degree vertices until the
// degree spread is at most one. Preserves the edge count; uses at most s(g)
// edits; ends regular whenever 2m/n is an integer.
RegularizationOutcome rough_regularize(const Graph& g);

// Class-wise variant for bipartite graphs: each class ends with degree
// spread at most one, at most s2(g) edits, edge count preserved.
RegularizationOutcome bipartite_rough_regularize(const Graph& g,
                                                 const BipartiteLayout& layout);

// Input degrees must all be d or d+1. Produces an r-regular graph with
// r in {d, d+1} in at most 3n/2 edits; the edge count may change.
RegularizationOutcome fine_regularize(const Graph& g);

// (s(g)/2, s(g) + 3n/2): certified bracket for the exact regularization
// distance.
std::pair<Rational, Rational> rho_bounds(const Graph& g);

// Minimum edit distance from g to any regular graph on the same labeled
// vertex set, by enumerating r-regular graphs for every feasible r.
// Throws std::invalid_argument when n exceeds the cap.
int rho_exact(const Graph& g, int cap = 6);

// Replays the script, throwing AlgorithmInvariantError on an illegal step.
Graph apply_edit_script(const Graph& g, const EditScript& script);

// One step per line: "+u v" or "-u v".
std::string format_edit_script(const EditScript& script);

}  // namespace degdev

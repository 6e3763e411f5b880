#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "degdev/graph.hpp"
#include "degdev/inequalities.hpp"

namespace degdev {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class CheckKind {
    irregularity,
    classical,
    bipartite,
    pair_lower,
    pair_upper,
    min_sum,
    haemers,
    lear,
    ratios,
    pr1,
    star_example,
};

// Canonical evaluation and report order.
const std::vector<CheckKind>& all_check_kinds();
std::string check_kind_name(CheckKind kind);
// Throws std::invalid_argument on an unknown name. "all" selects everything
// applicable.
std::set<CheckKind> parse_check_selection(const std::string& comma_list);

struct ReportConfig {
    double tol = kDefaultCheckTol;
    std::uint64_t seed = 0;
    std::string corpus;  // human-readable corpus descriptor
    std::vector<std::string> checks;
};

struct GraphEntry {
    std::string graph_id;
    int n = 0;
    int m = 0;
    Rational s;
    Rational var;
    double mu_max = 0.0;
    double mu_min = 0.0;
    std::optional<double> upper_ratio;
    std::optional<double> lower_ratio_paper_norm;
    std::vector<CheckResult> checks;
};

struct ReportSummary {
    std::int64_t graphs = 0;
    std::int64_t checks_run = 0;
    std::int64_t holds = 0;
    std::int64_t findings = 0;
    std::int64_t breaches = 0;
};

struct AuditReport {
    std::string tool_version = kToolVersion;
    int schema_version = kSchemaVersion;
    ReportConfig config;
    std::vector<GraphEntry> entries;
    ReportSummary summary;
};

void recompute_summary(AuditReport& report);

std::string report_to_json(const AuditReport& report);
AuditReport report_from_json(const std::string& json_text);
// One row per check.
std::string report_to_csv(const AuditReport& report);

struct AuditOptions {
    double tol = kDefaultCheckTol;
    std::set<CheckKind> checks;
    std::uint64_t seed = 0;                // drives random partition choices
    int haemers_exhaustive_cap = 6;        // all bipartitions up to this n
    int haemers_random_partitions = 20;    // sampled above the cap
    int lear_exhaustive_cap = 14;
    std::optional<int> star_leaves;        // set for star-family entries
};

// Runs every selected check that applies to the graph. Checks needing the
// complement spectrum trigger exactly one extra eigensolve.
GraphEntry audit_graph(const std::string& graph_id, const Graph& g,
                       const std::optional<BipartiteLayout>& layout,
                       const AuditOptions& options);

// All labeled graphs on n vertices, ids = edge bitmasks in increasing order.
AuditReport run_exhaustive_corpus(int n, const AuditOptions& options);

struct FamilySpec {
    std::string family;  // complete, empty, star, path, cycle,
                         // complete_bipartite, disjoint_union, gnp,
                         // random_bipartite
    int nmax = 0;        // ladder ceiling for sized families
    int a = 0;           // class / component sizes where applicable
    int b = 0;
    double p = 0.5;
    int count = 0;       // number of random draws
};

AuditReport run_family_corpus(const FamilySpec& spec, const AuditOptions& options);

}  // namespace degdev

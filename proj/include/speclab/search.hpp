#pragma once

#include "speclab/constructors.hpp"
#include "speclab/graph.hpp"
#include "speclab/minor.hpp"
#include "speclab/spectral.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace speclab {

enum class ConstraintKind { FsMinorFree, QtMinorFree, FsSubgraphFree, QtSubgraphFree };

/// "fs-minor-free:s=2", "qt-subgraph-free:t=1", ... The short forms
/// "fs-minor:s=2" and "qt-subgraph:t=1" are accepted by parse.
struct Constraint {
    ConstraintKind kind = ConstraintKind::FsMinorFree;
    int param = 1;

    static Constraint parse(std::string_view text);
    std::string to_string() const;
    bool is_minor() const noexcept
    {
        return kind == ConstraintKind::FsMinorFree || kind == ConstraintKind::QtMinorFree;
    }
    /// The forbidden graph F_s or Q_t.
    Graph pattern() const;
    /// K_s v I_{n-s} for F_s constraints, K_t v M_{n-t} for Q_t constraints.
    FamilySpec predicted(std::size_t n) const;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Runs the constraint's own test. Found means the graph contains the pattern.
MinorStatus contains_pattern(const Graph& g, const Constraint& c, std::uint64_t node_budget);

/// Independent check used to re-test maximizers: the generic branch-set search
/// for minor constraints, the other witness routine for subgraph ones.
MinorStatus contains_pattern_independent(const Graph& g, const Constraint& c, std::uint64_t node_budget);

struct SearchOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::size_t workers = 1;
    double tie_tolerance = 1e-9;
    double tolerance = kDefaultTolerance;
    std::size_t max_iter = kDefaultMaxIter;
};

struct SearchReport {
    std::size_t n = 0;
    std::string constraint;
    std::uint64_t enumerated = 0;
    std::uint64_t feasible = 0;
    double best_rho = 0.0;
    std::vector<std::string> maximizers;  // canonical graph6, sorted by canonical code
    std::string predicted_g6;
    bool match = false;
    std::uint64_t exhausted_count = 0;
    double elapsed = 0.0;
    std::vector<std::string> notes;
};

/// Largest n accepted by extremal_search for the constraint.
std::size_t max_search_order(const Constraint& c);

/// Spectral maximizers over connected n-vertex graphs avoiding the constraint's
/// pattern. A graph whose augmentation parent contains the pattern contains it
/// too, so only children of pattern-free parents are tested. Output does not
/// depend on options.workers.
SearchReport extremal_search(std::size_t n, const Constraint& c, const SearchOptions& options = {});

enum class TheoremMode { Fs, Qt, QtSubgraph };

struct TheoremCheck {
    SearchReport report;
    MinorStatus predicted_status = MinorStatus::NotFound;  // predicted graph vs its own pattern
    double predicted_rho = 0.0;
    double closed_form_rho = 0.0;
    bool predicted_free = false;
    bool closed_form_agrees = false;  // within 1e-9
};

/// One extremal_search per n in [n_from, n_to], plus the predicted graph's own
/// feasibility and closed-form agreement. Match flags are recorded, not asserted.
std::vector<TheoremCheck> verify_theorem_small_n(TheoremMode mode, int param, std::size_t n_from, std::size_t n_to,
                                                 const SearchOptions& options = {});

// ------------------------------------------------------------ edge bounds

struct AuditEntry {
    std::string family;
    std::size_t n = 0;
    std::size_t edges = 0;
    std::string check;  // "turan-plus-correction", "linear", "bipartite", "count"
    std::optional<std::size_t> expected_edges;
    std::optional<double> slack;  // C a + p n - e for bipartite members
    bool ok = true;
};

struct SlopeFit {
    std::string group;  // e.g. "ks-join-independent:s=2"
    std::vector<std::size_t> orders;
    double slope = 0.0;
    double intercept = 0.0;
};

struct EdgeBoundAudit {
    StructureMode mode = StructureMode::Fs;
    int param = 1;
    double c = 0.0;
    std::vector<AuditEntry> entries;
    std::vector<SlopeFit> fits;
    bool all_ok = true;
};

/// ⌊n²/4⌋ + s² - s for odd s, ⌊n²/4⌋ + s² - 3s/2 for even s.
std::size_t efgg_edge_count(int s, std::size_t n);

EdgeBoundAudit edge_bound_audit(const std::vector<FamilySpec>& specs, int param, StructureMode mode, double c = 0.0);

}  // namespace speclab

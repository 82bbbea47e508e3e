#pragma once

#include "speclab/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace speclab {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;
inline constexpr std::size_t kMaxPatternOrder = 12;

/// Branch sets ("fragments") realising pattern inside a host: branch_sets[i]
/// is the host vertex set contracted onto pattern vertex i.
struct MinorModel {
    std::size_t host_n = 0;
    Graph pattern;
    std::vector<VertexSet> branch_sets;
};

enum class MinorStatus { Found, NotFound, Exhausted };

std::string_view to_string(MinorStatus status) noexcept;

struct MinorAnswer {
    MinorStatus status = MinorStatus::NotFound;
    std::optional<MinorModel> model;  // present iff status == Found
    std::uint64_t nodes = 0;          // search nodes used

    bool found() const noexcept { return status == MinorStatus::Found; }
};

/// True iff branch sets are nonempty, pairwise disjoint, each induces a
/// connected subgraph, and every pattern edge is realised by a host edge.
/// Throws IndexOutOfRange when the model does not fit the host.
bool verify_model(const Graph& host, const MinorModel& model);

/// Generic branch-set search. Pattern vertices are rooted in descending-degree
/// order at the smallest vertex of their branch set; branch sets then grow one
/// free vertex at a time along a free path toward an unmet pattern edge.
/// Complete within the node budget; PatternTooLarge for pattern.n > 12.
MinorAnswer find_minor_model(const Graph& host, const Graph& pattern,
                             std::uint64_t node_budget = kDefaultNodeBudget);

/// F_s minor test through fragments S_0 (hub) and pairs (S_{2i-1}, S_{2i}).
/// Pairs are interchangeable, so their roots are kept in ascending order.
/// The certificate's pattern is construct(friendship:s).
MinorAnswer has_fs_minor(const Graph& host, int s, std::uint64_t node_budget = kDefaultNodeBudget);

/// Q_t minor test through S_0 (hub) and arms (S_{3j-2}, S_{3j-1}, S_{3j}),
/// where S_0 meets S_{3j-2} and S_{3j}, and S_{3j-1} meets both.
/// The certificate's pattern is construct(intersecting-c4:t).
MinorAnswer has_qt_minor(const Graph& host, int t, std::uint64_t node_budget = kDefaultNodeBudget);

// ------------------------------------------------------------ subgraphs

struct FsWitness {
    Vertex center = 0;
    std::vector<Edge> matching;  // s disjoint edges inside N(center)
};

/// Maximum matching of a general graph (Edmonds' blossom algorithm); mate[v]
/// is v's partner or -1. Stops early once `enough` edges are matched.
std::vector<int> maximum_matching(const Graph& g, std::size_t enough = SIZE_MAX);

/// F_s is a subgraph iff some neighbourhood holds a matching of size s.
/// Returns the first such vertex (by index) with a size-s matching.
std::optional<FsWitness> fs_subgraph_witness(const Graph& g, int s);

struct QtWitness {
    Vertex center = 0;
    std::vector<std::array<Vertex, 3>> paths;  // x - y - z with x, z in N(center)
};

struct QtSubgraphAnswer {
    MinorStatus status = MinorStatus::NotFound;
    std::optional<QtWitness> witness;
    std::uint64_t nodes = 0;
};

QtSubgraphAnswer qt_subgraph_witness(const Graph& g, int t, std::uint64_t node_budget = kDefaultNodeBudget);

/// Checks that a witness really is a Q_t subgraph of g.
bool verify_qt_witness(const Graph& g, const QtWitness& w);
bool verify_fs_witness(const Graph& g, const FsWitness& w);

// ------------------------------------------------------------ structure

enum class StructureMode { Fs, Qt };

struct StructureReport {
    StructureMode mode = StructureMode::Fs;
    VertexSet a;
    VertexSet b;
    VertexSet r;  // V \ (A u B)
    VertexSet d;  // vertices of B with no neighbour in R
    bool bipartite_complete = false;
    /// P_2-free (independent) B for Fs, P_3-free B for Qt.
    bool b_path_free = false;
    std::size_t max_outside_b_neighbors = 0;
    std::size_t outside_bound = 1;  // 1 for Fs, 2 for Qt
    bool outside_ok = false;
    double delta = 0.0;              // 1 - |B|/n
    double d_threshold = 0.0;        // (1 - 2 delta) n or (1 - 3 delta) n
    bool d_meets_threshold = false;
};

/// Throws OverlappingSets when a and b intersect.
StructureReport check_structure_fs(const Graph& g, const VertexSet& a, const VertexSet& b);
StructureReport check_structure_qt(const Graph& g, const VertexSet& a, const VertexSet& b);

struct ClosureMode {
    StructureMode kind = StructureMode::Fs;
    int param = 1;  // s or t
};

struct ClosureReport {
    ClosureMode mode;
    VertexSet a;
    VertexSet b;  // common neighbourhood of A
    std::size_t edges_added = 0;
    MinorAnswer before;  // g
    MinorAnswer after;   // g plus a clique on A
    bool consistent = false;  // both NotFound
};

/// Tests the host, turns A into a clique and tests again. Throws
/// PreconditionFailed when the host already contains the pattern as a minor.
ClosureReport clique_closure_check(const Graph& g, const VertexSet& a, ClosureMode mode,
                                   std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace speclab

#pragma once

#include "speclab/graph.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace speclab {

enum class FamilyKind {
    Complete,            // K_n                      complete:n=
    Independent,         // I_n                      independent:n=
    CompleteBipartite,   // K_{a,b}                  complete-bipartite:a=,b=
    Path,                // P_n (n vertices)         path:n=
    Cycle,               // C_n                      cycle:n=
    Matching,            // M_t (t vertices)         matching:t=
    Friendship,          // F_s = K_1 v sK_2         friendship:s=
    IntersectingC4,      // Q_t                      intersecting-c4:t=
    KsJoinIndependent,   // K_s v I_{n-s}            ks-join-independent:s=,n=
    KtJoinMatching,      // K_t v M_{n-t}            kt-join-matching:t=,n=
    EfggExtremal,        // edge-extremal F_s-free   efgg:s=,n=
    HStar,               // H* on 2s-1 vertices      hstar:s=
    ZlxExtremal,         // spectral-extremal F_s-free  zlx:s=,n=
    NearRegular,         // (s-1,...,s-1,s-2) realisation  near-regular:s=
};

std::string_view family_name(FamilyKind kind) noexcept;

/// A named construction plus its integer parameters. Text form is
/// "<name>:<key>=<value>,..." with keys drawn from n, s, t, a, b.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Complete;
    std::map<std::string, int> params;

    static FamilySpec parse(std::string_view text);
    std::string to_string() const;
    /// Parameter value; throws InvalidSpec when absent.
    int at(const std::string& key) const;
    /// Throws InvalidSpec / SizeLimitExceeded when the parameters are out of range.
    void validate() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

FamilySpec complete_spec(int n);
FamilySpec complete_bipartite_spec(int a, int b);
FamilySpec friendship_spec(int s);
FamilySpec intersecting_c4_spec(int t);
FamilySpec ks_join_independent_spec(int s, int n);
FamilySpec kt_join_matching_spec(int t, int n);
FamilySpec efgg_spec(int s, int n);
FamilySpec zlx_spec(int s, int n);

/// Named vertex regions of a construction. Regions partition the vertex set and
/// keep their insertion order (hub or clique regions come first).
class Layout {
public:
    Layout() = default;
    explicit Layout(std::size_t n) : n_(n) {}

    void add(std::string label, VertexSet region);
    /// Adds the contiguous block [first, first + count).
    void add_block(std::string label, Vertex first, std::size_t count);

    bool has(std::string_view label) const;
    const VertexSet& at(std::string_view label) const;
    const std::vector<std::pair<std::string, VertexSet>>& regions() const noexcept { return regions_; }
    std::size_t order() const noexcept { return n_; }

    /// Set when the construction is instantiated at a parameter where a
    /// defining region is empty (H* at s = 2).
    bool degenerate = false;

    /// True iff the regions are pairwise disjoint and cover 0..n-1.
    bool is_partition() const;

private:
    std::size_t n_ = 0;
    std::vector<std::pair<std::string, VertexSet>> regions_;
};

struct Construction {
    Graph graph;
    Layout layout;
};

Construction construct(const FamilySpec& spec);

/// K_{floor(n/2), ceil(n/2)} with two disjoint K_s (odd s) or the near-regular
/// graph (even s) embedded on the lowest indices of the smaller side.
Construction efgg_extremal(int s, int n);

/// Havel-Hakimi realisation of the degree sequence (s-1,...,s-1,s-2) on 2s-1
/// vertices; the last vertex has degree s-2.
Graph near_regular(int s);

/// H* on 2s-1 vertices: regions w_0, A_1, A_2, u_0, B_1, B_2 in index order.
Construction hstar(int s);

/// K_{floor(n/2), ceil(n/2)} with K_s u K_s (odd s) or H* (even s) embedded on
/// the lowest indices of the floor(n/2) side.
Construction zlx_extremal(int s, int n);

}  // namespace speclab

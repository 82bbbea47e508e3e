#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace speclab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kMaxOrder = 4096;

/// A subset of {0, ..., universe-1}, stored as a bitset.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

    static VertexSet from_members(std::size_t universe, std::span<const Vertex> members);
    /// Vertices first, first+1, ..., last-1.
    static VertexSet range(std::size_t universe, Vertex first, Vertex last);
    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept;
    bool contains(Vertex v) const noexcept;

    void insert(Vertex v);
    void erase(Vertex v);

    std::vector<Vertex> members() const;
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool intersects(const VertexSet& other) const;
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void check_same_universe(const VertexSet& other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

VertexSet operator|(VertexSet a, const VertexSet& b);
VertexSet operator&(VertexSet a, const VertexSet& b);
VertexSet operator-(VertexSet a, const VertexSet& b);

/// Immutable simple undirected graph on vertices 0..n-1 with dense bit-row
/// adjacency. Build one with GraphBuilder or the edge-list constructor; every
/// edit returns a new graph.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph I_n.
    explicit Graph(std::size_t n);
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return m_; }

    bool adjacent(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::vector<std::size_t> degrees() const;
    std::vector<Vertex> neighbors(Vertex v) const;
    VertexSet neighborhood(Vertex v) const;
    /// Raw bit row of v; bit u set iff u ~ v.
    std::span<const std::uint64_t> row(Vertex v) const;
    /// Edges (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// Throws std::logic_error if symmetry, looplessness or the cached edge
    /// count is violated. Every constructor ends with this check.
    void check_invariants() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;

    void check_vertex(Vertex v) const;

    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);
    explicit GraphBuilder(const Graph& start);

    std::size_t order() const noexcept { return g_.n_; }
    bool has_edge(Vertex u, Vertex v) const;
    /// Adds uv; a repeated edge is ignored. Loops throw IndexOutOfRange.
    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& remove_edge(Vertex u, Vertex v);
    /// Makes the given vertices pairwise adjacent.
    GraphBuilder& add_clique(std::span<const Vertex> vertices);

    Graph build() &&;
    Graph build() const&;

private:
    void check_pair(Vertex u, Vertex v) const;

    Graph g_;
};

// Editing by copy. Vertex deletion and contraction re-pack indices by shifting
// every index above the removed vertex down by one.
Graph delete_vertex(const Graph& g, Vertex u);
Graph delete_edge(const Graph& g, Vertex u, Vertex v);
/// Merges v into u; the merged vertex sits at min(u, v) and max(u, v) is removed.
Graph contract_edge(const Graph& g, Vertex u, Vertex v);
Graph add_edges(const Graph& g, std::span<const Edge> edges);
/// g1's vertices keep indices 0..n1-1, g2's follow.
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// Subgraph induced by s, vertices renumbered in increasing order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
/// Vertex v of g becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

bool is_connected(const Graph& g);
/// Components ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
/// Vertices adjacent to every member of a (excluding a itself).
VertexSet common_neighborhood(const Graph& g, const VertexSet& a);

}  // namespace speclab

#pragma once

#include "speclab/graph.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace speclab {

inline constexpr std::size_t kMaxCanonicalOrder = 10;

/// Compact graph on at most 16 vertices: one 16-bit adjacency mask per vertex.
/// Used by the canonical form and the enumerator where Graph would be too heavy.
struct SmallGraph {
    std::uint8_t n = 0;
    std::array<std::uint16_t, 16> adj{};

    static SmallGraph from_graph(const Graph& g);
    Graph to_graph() const;

    int degree(int v) const;
    void add_edge(int u, int v);
    SmallGraph without_vertex(int v) const;

    friend bool operator==(const SmallGraph&, const SmallGraph&) = default;
};

/// The graph6 payload bits of g under a vertex order, packed into an integer
/// whose most significant bit is pair (0,1). order[k] is the vertex placed at
/// position k.
std::uint64_t payload_bits(const SmallGraph& g, const std::array<std::uint8_t, 16>& order);

struct CanonicalForm {
    std::uint64_t code = 0;                 // minimal payload bits
    std::array<std::uint8_t, 16> order{};  // order[k] = vertex at canonical position k
};

/// Minimum payload over all vertex orders reachable by colour refinement plus
/// individualisation; twins inside a cell are tried once.
CanonicalForm canonical_form(const SmallGraph& g);

/// graph6 string of the canonically relabelled graph. Two graphs get the same
/// code iff they are isomorphic. Throws SizeLimitExceeded for n > 10.
std::string canonical_code(const Graph& g);

}  // namespace speclab

#pragma once

#include "speclab/canonical.hpp"
#include "speclab/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace speclab {

inline constexpr std::size_t kMaxEnumerationOrder = 10;

/// A canonically labelled graph and its canonical payload code.
struct CanonicalGraph {
    SmallGraph graph;
    std::uint64_t code = 0;
};

/// `g` relabelled so that vertex k is form.order[k].
SmallGraph apply_order(const SmallGraph& g, const std::array<std::uint8_t, 16>& order);

/// Connected children of a canonical connected parent: one per isomorphism
/// class G whose canonical deletion returns the parent class. The deleted
/// vertex is the non-cut vertex of minimum degree with the largest canonical
/// position. Children are canonically labelled and sorted by code.
std::vector<CanonicalGraph> augment(const CanonicalGraph& parent);

/// Canonical representative of K_1, the root of the augmentation tree.
CanonicalGraph single_vertex();

/// Representatives of every level 1..n (index k holds the (k+1)-vertex
/// classes) in augmentation order. Throws SizeLimitExceeded outside 1..10.
std::vector<std::vector<CanonicalGraph>> connected_levels(std::size_t n);

/// One graph per isomorphism class of connected graphs on n vertices.
std::vector<Graph> enumerate_connected(std::size_t n);

/// Streams the n-vertex classes without storing the last level.
void for_each_connected(std::size_t n, const std::function<void(const CanonicalGraph&)>& visit);

}  // namespace speclab

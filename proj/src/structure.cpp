#include "speclab/error.hpp"
#include "speclab/minor.hpp"

#include <algorithm>
#include <cmath>

namespace speclab {

namespace {

StructureReport check_structure(const Graph& g, const VertexSet& a, const VertexSet& b, StructureMode mode)
{
    if (a.universe() != g.order() || b.universe() != g.order())
        throw Error(ErrorCode::IndexOutOfRange, "vertex sets do not match the host order");
    if (a.intersects(b))
        throw Error(ErrorCode::OverlappingSets, "A and B must be disjoint");

    StructureReport rep;
    rep.mode = mode;
    rep.a = a;
    rep.b = b;
    rep.r = VertexSet::full(g.order()) - a - b;
    rep.outside_bound = mode == StructureMode::Fs ? 1 : 2;

    rep.bipartite_complete = true;
    for (Vertex u : a.members()) {
        if ((b - g.neighborhood(u)).size() != 0) {
            rep.bipartite_complete = false;
            break;
        }
    }

    // Fs: G[B] has no edge. Qt: every component of G[B] has at most two vertices.
    const std::size_t max_inner = mode == StructureMode::Fs ? 0 : 1;
    rep.b_path_free = true;
    rep.d = VertexSet(g.order());
    for (Vertex v : b.members()) {
        const VertexSet nb = g.neighborhood(v);
        if ((nb & b).size() > max_inner)
            rep.b_path_free = false;
        if (!nb.intersects(rep.r))
            rep.d.insert(v);
    }

    for (Vertex v : rep.r.members())
        rep.max_outside_b_neighbors = std::max(rep.max_outside_b_neighbors, (g.neighborhood(v) & b).size());
    rep.outside_ok = rep.max_outside_b_neighbors <= rep.outside_bound;

    const double n = static_cast<double>(g.order());
    if (g.order() > 0) {
        rep.delta = 1.0 - static_cast<double>(b.size()) / n;
        const double factor = mode == StructureMode::Fs ? 2.0 : 3.0;
        rep.d_threshold = (1.0 - factor * rep.delta) * n;
    }
    rep.d_meets_threshold = static_cast<double>(rep.d.size()) >= rep.d_threshold - 1e-9;
    return rep;
}

MinorAnswer minor_test(const Graph& g, ClosureMode mode, std::uint64_t budget)
{
    return mode.kind == StructureMode::Fs ? has_fs_minor(g, mode.param, budget) : has_qt_minor(g, mode.param, budget);
}

}  // namespace

StructureReport check_structure_fs(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    return check_structure(g, a, b, StructureMode::Fs);
}

StructureReport check_structure_qt(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    return check_structure(g, a, b, StructureMode::Qt);
}

ClosureReport clique_closure_check(const Graph& g, const VertexSet& a, ClosureMode mode, std::uint64_t node_budget)
{
    if (a.universe() != g.order())
        throw Error(ErrorCode::IndexOutOfRange, "A does not match the host order");
    if (a.empty())
        throw Error(ErrorCode::PreconditionFailed, "A must be nonempty");

    ClosureReport rep;
    rep.mode = mode;
    rep.a = a;
    rep.b = common_neighborhood(g, a);
    rep.before = minor_test(g, mode, node_budget);
    if (rep.before.found())
        throw Error(ErrorCode::PreconditionFailed, "host already contains the pattern as a minor");

    GraphBuilder closed(g);
    const auto members = a.members();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!closed.has_edge(members[i], members[j])) {
                closed.add_edge(members[i], members[j]);
                ++rep.edges_added;
            }
    rep.after = minor_test(std::move(closed).build(), mode, node_budget);
    rep.consistent = rep.before.status == MinorStatus::NotFound && rep.after.status == MinorStatus::NotFound;
    return rep;
}

}  // namespace speclab

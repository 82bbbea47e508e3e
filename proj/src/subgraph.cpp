#include "speclab/minor.hpp"

#include "speclab/error.hpp"

namespace speclab {

namespace {

// Backtracking over arms x - y - z around a fixed centre. Within an arm x < z,
// and arms are listed by increasing x, so each arm set is visited once.
class QtBacktrack {
public:
    QtBacktrack(const Graph& g, int t, std::uint64_t budget)
        : g_(g), t_(static_cast<std::size_t>(t)), budget_(budget), used_(g.order(), false)
    {
    }

    std::optional<QtWitness> run()
    {
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (g_.degree(v) < 2 * t_)
                continue;
            nbrs_ = g_.neighbors(v);
            used_[v] = true;
            paths_.clear();
            const bool ok = arm(0);
            used_[v] = false;
            if (ok)
                return QtWitness{v, paths_};
            if (exhausted_)
                return std::nullopt;
        }
        return std::nullopt;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::size_t free_neighbours(std::size_t from) const
    {
        std::size_t c = 0;
        for (std::size_t i = from; i < nbrs_.size(); ++i)
            c += used_[nbrs_[i]] ? 0 : 1;
        return c;
    }

    bool arm(std::size_t first)
    {
        if (paths_.size() == t_)
            return true;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        if (free_neighbours(first) < 2 * (t_ - paths_.size()))
            return false;
        for (std::size_t i = first; i < nbrs_.size(); ++i) {
            const Vertex x = nbrs_[i];
            if (used_[x])
                continue;
            used_[x] = true;
            for (std::size_t j = i + 1; j < nbrs_.size(); ++j) {
                const Vertex z = nbrs_[j];
                if (used_[z])
                    continue;
                used_[z] = true;
                for (Vertex y : g_.neighbors(x)) {
                    if (used_[y] || !g_.adjacent(y, z))
                        continue;
                    used_[y] = true;
                    paths_.push_back({x, y, z});
                    if (arm(i + 1))
                        return true;
                    paths_.pop_back();
                    used_[y] = false;
                    if (exhausted_)
                        return false;
                }
                used_[z] = false;
            }
            used_[x] = false;
        }
        return false;
    }

    const Graph& g_;
    std::size_t t_;
    std::uint64_t budget_;
    std::vector<bool> used_;
    std::vector<Vertex> nbrs_;
    std::vector<std::array<Vertex, 3>> paths_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

QtSubgraphAnswer qt_subgraph_witness(const Graph& g, int t, std::uint64_t node_budget)
{
    if (t < 1)
        throw Error(ErrorCode::InvalidSpec, "Q_t needs t >= 1");
    QtSubgraphAnswer ans;
    if (g.order() < 3 * static_cast<std::size_t>(t) + 1)
        return ans;
    QtBacktrack search(g, t, node_budget);
    ans.witness = search.run();
    ans.nodes = search.nodes();
    if (ans.witness)
        ans.status = MinorStatus::Found;
    else if (search.exhausted())
        ans.status = MinorStatus::Exhausted;
    return ans;
}

bool verify_qt_witness(const Graph& g, const QtWitness& w)
{
    if (w.center >= g.order() || w.paths.empty())
        return false;
    VertexSet used(g.order());
    used.insert(w.center);
    for (const auto& p : w.paths) {
        for (Vertex v : p) {
            if (v >= g.order() || used.contains(v))
                return false;
            used.insert(v);
        }
        if (!g.adjacent(w.center, p[0]) || !g.adjacent(p[0], p[1]) || !g.adjacent(p[1], p[2]) ||
            !g.adjacent(p[2], w.center))
            return false;
    }
    return true;
}

}  // namespace speclab

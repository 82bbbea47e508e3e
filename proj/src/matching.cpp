#include "speclab/minor.hpp"

#include "speclab/error.hpp"

#include <algorithm>
#include <queue>

namespace speclab {

namespace {

// Edmonds' blossom algorithm on adjacency lists: grow an alternating BFS tree
// from each exposed vertex, shrinking odd cycles into their base.
class Blossom {
public:
    explicit Blossom(std::vector<std::vector<int>> adj)
        : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())), mate_(adj_.size(), -1), parent_(adj_.size()),
          base_(adj_.size()), used_(adj_.size()), in_blossom_(adj_.size())
    {
    }

    std::vector<int> solve(std::size_t enough)
    {
        std::size_t size = 0;
        for (int v = 0; v < n_ && size < enough; ++v) {
            if (mate_[v] != -1)
                continue;
            for (int u : adj_[v]) {
                if (mate_[u] == -1) {
                    mate_[u] = v;
                    mate_[v] = u;
                    ++size;
                    break;
                }
            }
        }
        for (int v = 0; v < n_ && size < enough; ++v) {
            if (mate_[v] != -1)
                continue;
            int end = find_path(v);
            if (end == -1)
                continue;
            while (end != -1) {
                const int pv = parent_[end];
                const int next = mate_[pv];
                mate_[end] = pv;
                mate_[pv] = end;
                end = next;
            }
            ++size;
        }
        return mate_;
    }

private:
    int lca(int a, int b) const
    {
        std::vector<bool> seen(adj_.size(), false);
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (mate_[a] == -1)
                break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b])
                return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child)
    {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    int find_path(int root)
    {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i)
            base_[i] = i;
        used_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || mate_[v] == to)
                    continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    const int b = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = b;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(i);
                            }
                        }
                    }
                }
                else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1)
                        return to;
                    used_[mate_[to]] = true;
                    q.push(mate_[to]);
                }
            }
        }
        return -1;
    }

    std::vector<std::vector<int>> adj_;
    int n_;
    std::vector<int> mate_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<bool> used_;
    std::vector<bool> in_blossom_;
};

}  // namespace

std::vector<int> maximum_matching(const Graph& g, std::size_t enough)
{
    std::vector<std::vector<int>> adj(g.order());
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(static_cast<int>(v));
        adj[v].push_back(static_cast<int>(u));
    }
    return Blossom(std::move(adj)).solve(enough);
}

std::optional<FsWitness> fs_subgraph_witness(const Graph& g, int s)
{
    if (s < 1)
        throw Error(ErrorCode::InvalidSpec, "F_s needs s >= 1");
    const auto want = static_cast<std::size_t>(s);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) < 2 * want)
            continue;
        const VertexSet nb = g.neighborhood(v);
        // Neighbours with no neighbour of their own inside N(v) can never be matched.
        std::vector<Vertex> keep;
        for (Vertex u : nb.members()) {
            VertexSet inside = g.neighborhood(u);
            inside &= nb;
            if (!inside.empty())
                keep.push_back(u);
        }
        if (keep.size() < 2 * want)
            continue;
        const Graph local = induced_subgraph(g, VertexSet::from_members(g.order(), keep));
        const auto mate = maximum_matching(local, want);
        FsWitness w{v, {}};
        for (std::size_t i = 0; i < mate.size() && w.matching.size() < want; ++i)
            if (mate[i] > static_cast<int>(i))
                w.matching.emplace_back(keep[i], keep[static_cast<std::size_t>(mate[i])]);
        if (w.matching.size() >= want)
            return w;
    }
    return std::nullopt;
}

bool verify_fs_witness(const Graph& g, const FsWitness& w)
{
    if (w.center >= g.order() || w.matching.empty())
        return false;
    VertexSet used(g.order());
    used.insert(w.center);
    for (auto [a, b] : w.matching) {
        if (a >= g.order() || b >= g.order() || a == b)
            return false;
        if (used.contains(a) || used.contains(b))
            return false;
        if (!g.adjacent(a, b) || !g.adjacent(w.center, a) || !g.adjacent(w.center, b))
            return false;
        used.insert(a);
        used.insert(b);
    }
    return true;
}

}  // namespace speclab

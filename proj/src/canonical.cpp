#include "speclab/canonical.hpp"

#include "speclab/error.hpp"
#include "speclab/graph6.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace speclab {

SmallGraph SmallGraph::from_graph(const Graph& g)
{
    if (g.order() > 16)
        throw Error(ErrorCode::SizeLimitExceeded, "small graph holds at most 16 vertices");
    SmallGraph s;
    s.n = static_cast<std::uint8_t>(g.order());
    for (auto [u, v] : g.edges())
        s.add_edge(static_cast<int>(u), static_cast<int>(v));
    return s;
}

Graph SmallGraph::to_graph() const
{
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((adj[u] >> v) & 1U)
                b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return std::move(b).build();
}

int SmallGraph::degree(int v) const { return std::popcount(adj[v]); }

void SmallGraph::add_edge(int u, int v)
{
    adj[u] |= static_cast<std::uint16_t>(1U << v);
    adj[v] |= static_cast<std::uint16_t>(1U << u);
}

SmallGraph SmallGraph::without_vertex(int v) const
{
    SmallGraph out;
    out.n = static_cast<std::uint8_t>(n - 1);
    const unsigned low = (1U << v) - 1;
    for (int u = 0, k = 0; u < n; ++u) {
        if (u == v)
            continue;
        unsigned a = adj[u];
        out.adj[k++] = static_cast<std::uint16_t>((a & low) | ((a >> 1) & ~low));
    }
    return out;
}

std::uint64_t payload_bits(const SmallGraph& g, const std::array<std::uint8_t, 16>& order)
{
    std::uint64_t code = 0;
    for (int j = 1; j < g.n; ++j) {
        const unsigned row = g.adj[order[j]];
        for (int i = 0; i < j; ++i)
            code = (code << 1) | ((row >> order[i]) & 1U);
    }
    return code;
}

namespace {

using Colours = std::array<std::uint8_t, 16>;

class Canonizer {
public:
    explicit Canonizer(const SmallGraph& g) : g_(g) {}

    CanonicalForm run()
    {
        Colours col{};
        int k = refine(col, g_.n == 0 ? 0 : 1);
        descend(col, k);
        return best_;
    }

private:
    // Splits colour classes by neighbour counts into every class until stable.
    // New colours are ranks of (old colour, count vector), so the ordering of
    // classes is invariant under relabelling.
    int refine(Colours& col, int k) const
    {
        const int n = g_.n;
        std::array<std::array<std::uint8_t, 17>, 16> sig{};
        std::array<int, 16> idx{};
        while (true) {
            std::array<std::uint16_t, 16> cell{};
            for (int v = 0; v < n; ++v)
                cell[col[v]] |= static_cast<std::uint16_t>(1U << v);
            for (int v = 0; v < n; ++v) {
                sig[v][0] = col[v];
                for (int c = 0; c < k; ++c)
                    sig[v][1 + c] = static_cast<std::uint8_t>(std::popcount(static_cast<unsigned>(g_.adj[v] & cell[c])));
                idx[v] = v;
            }
            const int width = 1 + k;
            auto less = [&](int a, int b) {
                return std::lexicographical_compare(sig[a].begin(), sig[a].begin() + width, sig[b].begin(),
                                                    sig[b].begin() + width);
            };
            std::sort(idx.begin(), idx.begin() + n, less);
            int rank = 0;
            for (int i = 0; i < n; ++i) {
                if (i > 0 && less(idx[i - 1], idx[i]))
                    ++rank;
                col[idx[i]] = static_cast<std::uint8_t>(rank);
            }
            const int fresh = n == 0 ? 0 : rank + 1;
            if (fresh == k)
                return k;
            k = fresh;
        }
    }

    bool twins(int u, int v) const
    {
        const unsigned a = g_.adj[u] & ~(1U << v);
        const unsigned b = g_.adj[v] & ~(1U << u);
        return a == b;
    }

    void descend(const Colours& col, int k)
    {
        const int n = g_.n;
        if (k == n) {
            std::array<std::uint8_t, 16> order{};
            for (int v = 0; v < n; ++v)
                order[col[v]] = static_cast<std::uint8_t>(v);
            const auto code = payload_bits(g_, order);
            if (!have_leaf_ || code < best_.code) {
                best_.code = code;
                best_.order = order;
                have_leaf_ = true;
            }
            return;
        }

        // First non-singleton cell.
        std::array<int, 16> size{};
        for (int v = 0; v < n; ++v)
            ++size[col[v]];
        int target = 0;
        while (size[target] < 2)
            ++target;

        unsigned tried = 0;
        for (int v = 0; v < n; ++v) {
            if (col[v] != target)
                continue;
            bool redundant = false;
            for (unsigned t = tried; t != 0; t &= t - 1)
                if (twins(std::countr_zero(t), v)) {
                    redundant = true;
                    break;
                }
            if (redundant)
                continue;
            tried |= 1U << v;

            Colours next = col;
            for (int w = 0; w < n; ++w) {
                if (col[w] > target || (col[w] == target && w != v))
                    ++next[w];
            }
            int k2 = refine(next, k + 1);
            descend(next, k2);
        }
    }

    const SmallGraph& g_;
    CanonicalForm best_;
    bool have_leaf_ = false;
};

}  // namespace

CanonicalForm canonical_form(const SmallGraph& g) { return Canonizer(g).run(); }

std::string canonical_code(const Graph& g)
{
    if (g.order() > kMaxCanonicalOrder)
        throw Error(ErrorCode::SizeLimitExceeded,
                    "canonical code supports n <= 10, got " + std::to_string(g.order()));
    const auto small = SmallGraph::from_graph(g);
    const auto form = canonical_form(small);
    std::vector<Vertex> perm(g.order());
    for (std::size_t k = 0; k < g.order(); ++k)
        perm[form.order[k]] = static_cast<Vertex>(k);
    return g6_encode(relabel(g, perm));
}

}  // namespace speclab

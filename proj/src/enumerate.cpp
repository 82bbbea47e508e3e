#include "speclab/enumerate.hpp"

#include "speclab/error.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace speclab {

namespace {

bool connected_within(const SmallGraph& g, unsigned alive)
{
    if (alive == 0)
        return true;
    unsigned seen = alive & (~alive + 1);
    unsigned frontier = seen;
    while (frontier != 0) {
        unsigned next = 0;
        for (unsigned f = frontier; f != 0; f &= f - 1)
            next |= g.adj[std::countr_zero(f)];
        next &= alive & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == alive;
}

void check_order(std::size_t n)
{
    if (n < 1 || n > kMaxEnumerationOrder)
        throw Error(ErrorCode::SizeLimitExceeded,
                    "enumeration supports 1 <= n <= 10, got " + std::to_string(n));
}

}  // namespace

SmallGraph apply_order(const SmallGraph& g, const std::array<std::uint8_t, 16>& order)
{
    SmallGraph out;
    out.n = g.n;
    for (int k = 0; k < g.n; ++k) {
        const unsigned row = g.adj[order[k]];
        for (int j = 0; j < g.n; ++j)
            if ((row >> order[j]) & 1U)
                out.adj[k] |= static_cast<std::uint16_t>(1U << j);
    }
    return out;
}

CanonicalGraph single_vertex()
{
    CanonicalGraph k1;
    k1.graph.n = 1;
    return k1;
}

std::vector<CanonicalGraph> augment(const CanonicalGraph& parent)
{
    const SmallGraph& p = parent.graph;
    const int m = p.n;
    const int v = m;
    const unsigned all = (1U << (m + 1)) - 1;

    std::vector<CanonicalGraph> out;
    for (unsigned s = 1; s < (1U << m); ++s) {
        SmallGraph g = p;
        g.n = static_cast<std::uint8_t>(m + 1);
        g.adj[v] = static_cast<std::uint16_t>(s);
        for (unsigned t = s; t != 0; t &= t - 1)
            g.adj[std::countr_zero(t)] |= static_cast<std::uint16_t>(1U << v);

        // v is never a cut vertex (p is connected), so the canonical deletion
        // can only return p's class when deg(v) is the minimum non-cut degree.
        const int dv = std::popcount(s);
        unsigned noncut = 0;
        bool reject = false;
        for (int w = 0; w <= m; ++w) {
            if (w != v && g.degree(w) > dv)
                continue;
            if (w != v && !connected_within(g, all & ~(1U << w)))
                continue;
            if (g.degree(w) < dv) {
                reject = true;
                break;
            }
            noncut |= 1U << w;
        }
        if (reject)
            continue;

        const CanonicalForm form = canonical_form(g);
        if (noncut != (1U << v)) {
            int chosen = -1;
            for (int k = m; k >= 0; --k)
                if ((noncut >> form.order[k]) & 1U) {
                    chosen = form.order[k];
                    break;
                }
            if (chosen != v) {
                const auto deleted = canonical_form(g.without_vertex(chosen));
                if (deleted.code != parent.code)
                    continue;
            }
        }
        out.push_back({apply_order(g, form.order), form.code});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.code < b.code; });
    out.erase(std::unique(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.code == b.code; }),
              out.end());
    return out;
}

std::vector<std::vector<CanonicalGraph>> connected_levels(std::size_t n)
{
    check_order(n);
    std::vector<std::vector<CanonicalGraph>> levels{{single_vertex()}};
    while (levels.size() < n) {
        std::vector<CanonicalGraph> next;
        for (const auto& parent : levels.back()) {
            auto kids = augment(parent);
            next.insert(next.end(), kids.begin(), kids.end());
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

std::vector<Graph> enumerate_connected(std::size_t n)
{
    std::vector<Graph> out;
    for_each_connected(n, [&](const CanonicalGraph& g) { out.push_back(g.graph.to_graph()); });
    return out;
}

void for_each_connected(std::size_t n, const std::function<void(const CanonicalGraph&)>& visit)
{
    check_order(n);
    if (n == 1) {
        visit(single_vertex());
        return;
    }
    const auto levels = connected_levels(n - 1);
    for (const auto& parent : levels.back())
        for (const auto& child : augment(parent))
            visit(child);
}

}  // namespace speclab

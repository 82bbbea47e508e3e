#include "speclab/graph.hpp"

#include "speclab/error.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace speclab {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void check_order(std::size_t n)
{
    if (n > kMaxOrder)
        throw Error(ErrorCode::SizeLimitExceeded,
                    "graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
}

}  // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe)
{
    for (Vertex v : members)
        insert(v);
}

VertexSet VertexSet::from_members(std::size_t universe, std::span<const Vertex> members)
{
    VertexSet s(universe);
    for (Vertex v : members)
        s.insert(v);
    return s;
}

VertexSet VertexSet::range(std::size_t universe, Vertex first, Vertex last)
{
    VertexSet s(universe);
    for (Vertex v = first; v < last; ++v)
        s.insert(v);
    return s;
}

VertexSet VertexSet::full(std::size_t universe) { return range(universe, 0, static_cast<Vertex>(universe)); }

std::size_t VertexSet::size() const noexcept
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::contains(Vertex v) const noexcept
{
    return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
}

void VertexSet::insert(Vertex v)
{
    if (v >= universe_)
        throw Error(ErrorCode::IndexOutOfRange,
                    "vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v)
{
    if (v < universe_)
        words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w != 0) {
            out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
            w &= w - 1;
        }
    }
    return out;
}

void VertexSet::check_same_universe(const VertexSet& other) const
{
    if (other.universe_ != universe_)
        throw Error(ErrorCode::IndexOutOfRange, "vertex sets over different universes");
}

bool VertexSet::intersects(const VertexSet& other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & other.words_[i]) != 0)
            return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

// ---------------------------------------------------------------- Graph

Graph::Graph(std::size_t n)
{
    check_order(n);
    n_ = n;
    stride_ = words_for(n);
    bits_.assign(n_ * stride_, 0);
}

Graph::Graph(std::size_t n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    *this = std::move(b).build();
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

void Graph::check_vertex(Vertex v) const
{
    if (v >= n_)
        throw Error(ErrorCode::IndexOutOfRange,
                    "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return ((bits_[u * stride_ + v / 64] >> (v % 64)) & 1U) != 0;
}

std::size_t Graph::degree(Vertex v) const
{
    check_vertex(v);
    std::size_t d = 0;
    for (auto w : row(v))
        d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::vector<std::size_t> Graph::degrees() const
{
    std::vector<std::size_t> out(n_);
    for (Vertex v = 0; v < n_; ++v)
        out[v] = degree(v);
    return out;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const
{
    check_vertex(v);
    std::vector<Vertex> out;
    auto r = row(v);
    for (std::size_t i = 0; i < r.size(); ++i) {
        auto w = r[i];
        while (w != 0) {
            out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
            w &= w - 1;
        }
    }
    return out;
}

VertexSet Graph::neighborhood(Vertex v) const
{
    auto nb = neighbors(v);
    return VertexSet::from_members(n_, nb);
}

std::span<const std::uint64_t> Graph::row(Vertex v) const
{
    check_vertex(v);
    return {bits_.data() + v * stride_, stride_};
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

void Graph::check_invariants() const
{
    std::size_t twice = 0;
    for (Vertex u = 0; u < n_; ++u) {
        if (adjacent(u, u))
            throw std::logic_error("graph has a loop at " + std::to_string(u));
        for (Vertex v : neighbors(u)) {
            if (!adjacent(v, u))
                throw std::logic_error("asymmetric adjacency");
            ++twice;
        }
    }
    if (twice != 2 * m_)
        throw std::logic_error("cached edge count is stale");
}

// ---------------------------------------------------------------- GraphBuilder

GraphBuilder::GraphBuilder(std::size_t n) : g_(n) {}

GraphBuilder::GraphBuilder(const Graph& start) : g_(start) {}

void GraphBuilder::check_pair(Vertex u, Vertex v) const
{
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (u == v)
        throw Error(ErrorCode::IndexOutOfRange, "loop at vertex " + std::to_string(u));
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v)
{
    check_pair(u, v);
    if (g_.adjacent(u, v))
        return *this;
    g_.bits_[u * g_.stride_ + v / 64] |= std::uint64_t{1} << (v % 64);
    g_.bits_[v * g_.stride_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++g_.m_;
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v)
{
    check_pair(u, v);
    if (!g_.adjacent(u, v))
        return *this;
    g_.bits_[u * g_.stride_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    g_.bits_[v * g_.stride_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    --g_.m_;
    return *this;
}

GraphBuilder& GraphBuilder::add_clique(std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            add_edge(vertices[i], vertices[j]);
    return *this;
}

Graph GraphBuilder::build() &&
{
    g_.check_invariants();
    return std::move(g_);
}

Graph GraphBuilder::build() const&
{
    g_.check_invariants();
    return g_;
}

// ---------------------------------------------------------------- edits

Graph delete_vertex(const Graph& g, Vertex u)
{
    if (u >= g.order())
        throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(u) + " out of range");
    auto shift = [u](Vertex x) { return x > u ? x - 1 : x; };
    GraphBuilder b(g.order() - 1);
    for (auto [x, y] : g.edges())
        if (x != u && y != u)
            b.add_edge(shift(x), shift(y));
    return std::move(b).build();
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v)
{
    if (u >= g.order() || v >= g.order())
        throw Error(ErrorCode::IndexOutOfRange, "edge endpoint out of range");
    if (u == v || !g.adjacent(u, v))
        throw Error(ErrorCode::NotAnEdge, std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    GraphBuilder b(g);
    b.remove_edge(u, v);
    return std::move(b).build();
}

Graph contract_edge(const Graph& g, Vertex u, Vertex v)
{
    if (u >= g.order() || v >= g.order())
        throw Error(ErrorCode::IndexOutOfRange, "edge endpoint out of range");
    if (u == v || !g.adjacent(u, v))
        throw Error(ErrorCode::NotAnEdge, std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    const Vertex keep = std::min(u, v);
    const Vertex gone = std::max(u, v);
    auto map = [&](Vertex x) {
        if (x == gone)
            x = keep;
        return x > gone ? x - 1 : x;
    };
    GraphBuilder b(g.order() - 1);
    for (auto [x, y] : g.edges()) {
        Vertex a = map(x);
        Vertex c = map(y);
        if (a != c)
            b.add_edge(a, c);
    }
    return std::move(b).build();
}

Graph add_edges(const Graph& g, std::span<const Edge> edges)
{
    GraphBuilder b(g);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

Graph join(const Graph& g1, const Graph& g2)
{
    const std::size_t n1 = g1.order();
    check_order(n1 + g2.order());
    GraphBuilder b(n1 + g2.order());
    for (auto [x, y] : g1.edges())
        b.add_edge(x, y);
    for (auto [x, y] : g2.edges())
        b.add_edge(static_cast<Vertex>(x + n1), static_cast<Vertex>(y + n1));
    for (Vertex x = 0; x < n1; ++x)
        for (Vertex y = 0; y < g2.order(); ++y)
            b.add_edge(x, static_cast<Vertex>(y + n1));
    return std::move(b).build();
}

Graph disjoint_union(const Graph& g1, const Graph& g2)
{
    const std::size_t n1 = g1.order();
    check_order(n1 + g2.order());
    GraphBuilder b(n1 + g2.order());
    for (auto [x, y] : g1.edges())
        b.add_edge(x, y);
    for (auto [x, y] : g2.edges())
        b.add_edge(static_cast<Vertex>(x + n1), static_cast<Vertex>(y + n1));
    return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.order())
        throw Error(ErrorCode::IndexOutOfRange, "vertex set universe does not match graph order");
    auto keep = s.members();
    std::vector<Vertex> index(g.order(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i)
        index[keep[i]] = static_cast<Vertex>(i);
    GraphBuilder b(keep.size());
    for (auto [x, y] : g.edges())
        if (s.contains(x) && s.contains(y))
            b.add_edge(index[x], index[y]);
    return std::move(b).build();
}

Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    if (perm.size() != g.order())
        throw Error(ErrorCode::IndexOutOfRange, "permutation length does not match graph order");
    std::vector<bool> seen(g.order(), false);
    for (Vertex p : perm) {
        if (p >= g.order() || seen[p])
            throw Error(ErrorCode::IndexOutOfRange, "not a permutation");
        seen[p] = true;
    }
    GraphBuilder b(g.order());
    for (auto [x, y] : g.edges())
        b.add_edge(perm[x], perm[y]);
    return std::move(b).build();
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        VertexSet comp(g.order());
        stack.push_back(s);
        seen[s] = true;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            comp.insert(x);
            for (Vertex y : g.neighbors(x))
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

VertexSet common_neighborhood(const Graph& g, const VertexSet& a)
{
    if (a.universe() != g.order())
        throw Error(ErrorCode::IndexOutOfRange, "vertex set universe does not match graph order");
    VertexSet out = VertexSet::full(g.order()) - a;
    for (Vertex x : a.members())
        out &= g.neighborhood(x);
    return out;
}

}  // namespace speclab

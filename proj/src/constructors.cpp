#include "speclab/constructors.hpp"

#include "speclab/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace speclab {

namespace {

struct FamilyInfo {
    FamilyKind kind;
    std::string_view name;
    std::vector<std::string> keys;
};

const std::vector<FamilyInfo>& family_table()
{
    static const std::vector<FamilyInfo> table = {
        {FamilyKind::Complete, "complete", {"n"}},
        {FamilyKind::Independent, "independent", {"n"}},
        {FamilyKind::CompleteBipartite, "complete-bipartite", {"a", "b"}},
        {FamilyKind::Path, "path", {"n"}},
        {FamilyKind::Cycle, "cycle", {"n"}},
        {FamilyKind::Matching, "matching", {"t"}},
        {FamilyKind::Friendship, "friendship", {"s"}},
        {FamilyKind::IntersectingC4, "intersecting-c4", {"t"}},
        {FamilyKind::KsJoinIndependent, "ks-join-independent", {"s", "n"}},
        {FamilyKind::KtJoinMatching, "kt-join-matching", {"t", "n"}},
        {FamilyKind::EfggExtremal, "efgg", {"s", "n"}},
        {FamilyKind::HStar, "hstar", {"s"}},
        {FamilyKind::ZlxExtremal, "zlx", {"s", "n"}},
        {FamilyKind::NearRegular, "near-regular", {"s"}},
    };
    return table;
}

const FamilyInfo& info(FamilyKind kind)
{
    for (const auto& f : family_table())
        if (f.kind == kind)
            return f;
    throw std::logic_error("unknown family kind");
}

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidSpec, what); }

void require(bool ok, const FamilySpec& spec, const char* rule)
{
    if (!ok)
        invalid(spec.to_string() + " violates " + rule);
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

FamilySpec make(FamilyKind kind, std::initializer_list<std::pair<const std::string, int>> params)
{
    FamilySpec spec{kind, std::map<std::string, int>(params)};
    return spec;
}

// K_{floor(n/2), ceil(n/2)} on indices [0, n); part 0 = [0, floor(n/2)).
GraphBuilder balanced_bipartite(int n)
{
    const auto half = static_cast<Vertex>(n / 2);
    GraphBuilder b(static_cast<std::size_t>(n));
    for (Vertex x = 0; x < half; ++x)
        for (Vertex y = half; y < static_cast<Vertex>(n); ++y)
            b.add_edge(x, y);
    return b;
}

std::vector<Vertex> block(Vertex first, std::size_t count)
{
    std::vector<Vertex> out(count);
    std::iota(out.begin(), out.end(), first);
    return out;
}

}  // namespace

std::string_view family_name(FamilyKind kind) noexcept
{
    for (const auto& f : family_table())
        if (f.kind == kind)
            return f.name;
    return "unknown";
}

FamilySpec FamilySpec::parse(std::string_view text)
{
    text = trim(text);
    const auto colon = text.find(':');
    const auto name = trim(text.substr(0, colon));
    const FamilyInfo* found = nullptr;
    for (const auto& f : family_table())
        if (f.name == name)
            found = &f;
    if (found == nullptr)
        invalid("unknown family '" + std::string(name) + "'");

    FamilySpec spec;
    spec.kind = found->kind;
    if (colon != std::string_view::npos) {
        auto rest = text.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            auto item = trim(rest.substr(0, comma));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            const auto eq = item.find('=');
            if (eq == std::string_view::npos)
                invalid("parameter '" + std::string(item) + "' is not key=value");
            const std::string key(trim(item.substr(0, eq)));
            const auto value = trim(item.substr(eq + 1));
            int parsed = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
            if (ec != std::errc{} || ptr != value.data() + value.size())
                invalid("parameter '" + key + "' is not an integer");
            if (std::find(found->keys.begin(), found->keys.end(), key) == found->keys.end())
                invalid("family '" + std::string(name) + "' has no parameter '" + key + "'");
            if (!spec.params.emplace(key, parsed).second)
                invalid("parameter '" + key + "' given twice");
        }
    }
    for (const auto& key : found->keys)
        if (!spec.params.contains(key))
            invalid("family '" + std::string(name) + "' requires parameter '" + key + "'");
    return spec;
}

std::string FamilySpec::to_string() const
{
    const auto& f = info(kind);
    std::string out(f.name);
    char sep = ':';
    for (const auto& key : f.keys) {
        auto it = params.find(key);
        if (it == params.end())
            continue;
        out += sep;
        out += key + "=" + std::to_string(it->second);
        sep = ',';
    }
    return out;
}

int FamilySpec::at(const std::string& key) const
{
    auto it = params.find(key);
    if (it == params.end())
        invalid(std::string(family_name(kind)) + " spec is missing parameter '" + key + "'");
    return it->second;
}

void FamilySpec::validate() const
{
    for (const auto& key : info(kind).keys)
        at(key);
    long long order = 0;
    switch (kind) {
    case FamilyKind::Complete:
    case FamilyKind::Independent:
    case FamilyKind::Path:
        require(at("n") >= 1, *this, "n >= 1");
        order = at("n");
        break;
    case FamilyKind::Cycle:
        require(at("n") >= 3, *this, "n >= 3");
        order = at("n");
        break;
    case FamilyKind::CompleteBipartite:
        require(at("a") >= 1 && at("b") >= 1, *this, "a, b >= 1");
        order = static_cast<long long>(at("a")) + at("b");
        break;
    case FamilyKind::Matching:
        require(at("t") >= 1, *this, "t >= 1");
        order = at("t");
        break;
    case FamilyKind::Friendship:
        require(at("s") >= 1, *this, "s >= 1");
        order = 2LL * at("s") + 1;
        break;
    case FamilyKind::IntersectingC4:
        require(at("t") >= 1, *this, "t >= 1");
        order = 3LL * at("t") + 1;
        break;
    case FamilyKind::KsJoinIndependent:
        require(at("s") >= 1 && at("s") < at("n"), *this, "1 <= s < n");
        order = at("n");
        break;
    case FamilyKind::KtJoinMatching:
        require(at("t") >= 1 && at("t") < at("n"), *this, "1 <= t < n");
        order = at("n");
        break;
    case FamilyKind::EfggExtremal: {
        const int s = at("s");
        require(s >= 1, *this, "s >= 1");
        if (s % 2 == 1)
            require(at("n") >= 4 * s, *this, "n >= 4s for odd s");
        else
            require(at("n") >= 2 * (2 * s - 1), *this, "n >= 2(2s-1) for even s");
        order = at("n");
        break;
    }
    case FamilyKind::HStar:
    case FamilyKind::NearRegular:
        require(at("s") >= 2 && at("s") % 2 == 0, *this, "s even, s >= 2");
        order = 2LL * at("s") - 1;
        break;
    case FamilyKind::ZlxExtremal: {
        const int s = at("s");
        require(s >= 1, *this, "s >= 1");
        require(at("n") >= 2 * (2 * s - 1) && at("n") >= 4 * s, *this, "n >= 2(2s-1) and n >= 4s");
        order = at("n");
        break;
    }
    }
    if (order > static_cast<long long>(kMaxOrder))
        throw Error(ErrorCode::SizeLimitExceeded, to_string() + " has " + std::to_string(order) + " vertices");
}

FamilySpec complete_spec(int n) { return make(FamilyKind::Complete, {{"n", n}}); }
FamilySpec complete_bipartite_spec(int a, int b) { return make(FamilyKind::CompleteBipartite, {{"a", a}, {"b", b}}); }
FamilySpec friendship_spec(int s) { return make(FamilyKind::Friendship, {{"s", s}}); }
FamilySpec intersecting_c4_spec(int t) { return make(FamilyKind::IntersectingC4, {{"t", t}}); }
FamilySpec ks_join_independent_spec(int s, int n) { return make(FamilyKind::KsJoinIndependent, {{"s", s}, {"n", n}}); }
FamilySpec kt_join_matching_spec(int t, int n) { return make(FamilyKind::KtJoinMatching, {{"t", t}, {"n", n}}); }
FamilySpec efgg_spec(int s, int n) { return make(FamilyKind::EfggExtremal, {{"s", s}, {"n", n}}); }
FamilySpec zlx_spec(int s, int n) { return make(FamilyKind::ZlxExtremal, {{"s", s}, {"n", n}}); }

// ---------------------------------------------------------------- Layout

void Layout::add(std::string label, VertexSet region)
{
    if (region.universe() != n_)
        throw Error(ErrorCode::IndexOutOfRange, "layout region over wrong universe");
    regions_.emplace_back(std::move(label), std::move(region));
}

void Layout::add_block(std::string label, Vertex first, std::size_t count)
{
    add(std::move(label), VertexSet::range(n_, first, static_cast<Vertex>(first + count)));
}

bool Layout::has(std::string_view label) const
{
    return std::any_of(regions_.begin(), regions_.end(), [&](const auto& r) { return r.first == label; });
}

const VertexSet& Layout::at(std::string_view label) const
{
    for (const auto& r : regions_)
        if (r.first == label)
            return r.second;
    throw Error(ErrorCode::InvalidSpec, "layout has no region '" + std::string(label) + "'");
}

bool Layout::is_partition() const
{
    VertexSet seen(n_);
    std::size_t total = 0;
    for (const auto& [label, region] : regions_) {
        if (seen.intersects(region))
            return false;
        seen |= region;
        total += region.size();
    }
    return total == n_;
}

// ---------------------------------------------------------------- builders

Graph near_regular(int s)
{
    if (s < 2 || s % 2 != 0)
        invalid("near-regular requires even s >= 2, got s=" + std::to_string(s));
    const int n = 2 * s - 1;
    std::vector<int> remaining(static_cast<std::size_t>(n), s - 1);
    remaining.back() = s - 2;

    GraphBuilder b(static_cast<std::size_t>(n));
    std::vector<int> others;
    while (true) {
        int v = 0;
        for (int x = 1; x < n; ++x)
            if (remaining[x] > remaining[v])
                v = x;
        const int need = remaining[v];
        if (need == 0)
            break;
        others.clear();
        for (int x = 0; x < n; ++x)
            if (x != v && remaining[x] > 0)
                others.push_back(x);
        std::stable_sort(others.begin(), others.end(),
                         [&](int a, int c) { return remaining[a] > remaining[c]; });
        if (static_cast<int>(others.size()) < need)
            throw std::logic_error("degree sequence is not graphic");
        for (int i = 0; i < need; ++i) {
            b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(others[i]));
            --remaining[others[i]];
        }
        remaining[v] = 0;
    }
    return std::move(b).build();
}

Construction hstar(int s)
{
    if (s < 2 || s % 2 != 0)
        invalid("H* requires even s >= 2, got s=" + std::to_string(s));
    const std::size_t n = 2 * static_cast<std::size_t>(s) - 1;
    const std::size_t half = static_cast<std::size_t>(s - 2) / 2;  // |A_1| = |A_2| = |B_2|
    const std::size_t b1 = static_cast<std::size_t>(s) / 2;

    const Vertex w0 = 0;
    const Vertex a1 = 1;
    const auto a2 = static_cast<Vertex>(a1 + half);
    const auto u0 = static_cast<Vertex>(a2 + half);
    const Vertex b1_first = u0 + 1;
    const auto b2 = static_cast<Vertex>(b1_first + b1);

    GraphBuilder b(n);
    const auto clique_a = block(a1, 2 * half);
    for (Vertex x : clique_a)
        b.add_edge(w0, x);
    for (Vertex x : block(a1, half))
        b.add_edge(u0, x);
    for (Vertex x : block(b1_first, b1))
        b.add_edge(u0, x);
    for (std::size_t i = 0; i < half; ++i)
        b.add_edge(static_cast<Vertex>(b2 + i), static_cast<Vertex>(a2 + i));
    b.add_clique(clique_a);
    b.add_clique(block(b1_first, b1 + half));

    Construction c{std::move(b).build(), Layout(n)};
    c.layout.add_block("w_0", w0, 1);
    c.layout.add_block("A_1", a1, half);
    c.layout.add_block("A_2", a2, half);
    c.layout.add_block("u_0", u0, 1);
    c.layout.add_block("B_1", b1_first, b1);
    c.layout.add_block("B_2", b2, half);
    c.layout.degenerate = (s == 2);
    return c;
}

namespace {

// Balanced complete bipartite host plus an embedded graph copied onto the
// lowest indices of part 0. The layout lists the embedded regions (shifted
// copies of embed_layout), then the rest of part 0, then part 1.
Construction embed_in_balanced(int n, const Graph& embed, const Layout& embed_layout)
{
    auto b = balanced_bipartite(n);
    for (auto [x, y] : embed.edges())
        b.add_edge(x, y);
    Construction c{std::move(b).build(), Layout(static_cast<std::size_t>(n))};
    for (const auto& [label, region] : embed_layout.regions()) {
        VertexSet shifted(static_cast<std::size_t>(n));
        for (Vertex v : region.members())
            shifted.insert(v);
        c.layout.add(label, std::move(shifted));
    }
    c.layout.degenerate = embed_layout.degenerate;
    const auto half = static_cast<std::size_t>(n / 2);
    c.layout.add_block("part0", static_cast<Vertex>(embed.order()), half - embed.order());
    c.layout.add_block("part1", static_cast<Vertex>(half), static_cast<std::size_t>(n) - half);
    return c;
}

Construction two_cliques(int s)
{
    const auto k = static_cast<std::size_t>(s);
    GraphBuilder b(2 * k);
    b.add_clique(block(0, k));
    b.add_clique(block(static_cast<Vertex>(k), k));
    Construction c{std::move(b).build(), Layout(2 * k)};
    c.layout.add_block("clique1", 0, k);
    c.layout.add_block("clique2", static_cast<Vertex>(k), k);
    return c;
}

}  // namespace

Construction efgg_extremal(int s, int n)
{
    efgg_spec(s, n).validate();
    if (s % 2 == 1) {
        auto h = two_cliques(s);
        return embed_in_balanced(n, h.graph, h.layout);
    }
    const Graph h = near_regular(s);
    Layout l(h.order());
    l.add_block("embed", 0, h.order());
    return embed_in_balanced(n, h, l);
}

Construction zlx_extremal(int s, int n)
{
    zlx_spec(s, n).validate();
    auto h = s % 2 == 1 ? two_cliques(s) : hstar(s);
    return embed_in_balanced(n, h.graph, h.layout);
}

Construction construct(const FamilySpec& spec)
{
    spec.validate();
    switch (spec.kind) {
    case FamilyKind::Complete: {
        const auto n = static_cast<std::size_t>(spec.at("n"));
        GraphBuilder b(n);
        b.add_clique(block(0, n));
        Construction c{std::move(b).build(), Layout(n)};
        c.layout.add_block("A", 0, n);
        return c;
    }
    case FamilyKind::Independent: {
        const auto n = static_cast<std::size_t>(spec.at("n"));
        Construction c{Graph(n), Layout(n)};
        c.layout.add_block("B", 0, n);
        return c;
    }
    case FamilyKind::CompleteBipartite: {
        const auto a = static_cast<std::size_t>(spec.at("a"));
        const auto bsize = static_cast<std::size_t>(spec.at("b"));
        Construction c{join(Graph(a), Graph(bsize)), Layout(a + bsize)};
        c.layout.add_block("A", 0, a);
        c.layout.add_block("B", static_cast<Vertex>(a), bsize);
        return c;
    }
    case FamilyKind::Path:
    case FamilyKind::Cycle: {
        const auto n = static_cast<std::size_t>(spec.at("n"));
        GraphBuilder b(n);
        for (Vertex v = 0; v + 1 < n; ++v)
            b.add_edge(v, v + 1);
        if (spec.kind == FamilyKind::Cycle)
            b.add_edge(static_cast<Vertex>(n - 1), 0);
        Construction c{std::move(b).build(), Layout(n)};
        c.layout.add_block(spec.kind == FamilyKind::Cycle ? "cycle" : "path", 0, n);
        return c;
    }
    case FamilyKind::Matching: {
        const auto t = static_cast<std::size_t>(spec.at("t"));
        GraphBuilder b(t);
        for (Vertex v = 0; v + 1 < t; v += 2)
            b.add_edge(v, v + 1);
        Construction c{std::move(b).build(), Layout(t)};
        c.layout.add_block("B", 0, t);
        return c;
    }
    case FamilyKind::Friendship: {
        const auto s = static_cast<std::size_t>(spec.at("s"));
        GraphBuilder b(2 * s + 1);
        for (Vertex i = 1; i <= s; ++i) {
            b.add_edge(0, 2 * i - 1).add_edge(0, 2 * i).add_edge(2 * i - 1, 2 * i);
        }
        Construction c{std::move(b).build(), Layout(2 * s + 1)};
        c.layout.add_block("center", 0, 1);
        c.layout.add_block("B", 1, 2 * s);
        return c;
    }
    case FamilyKind::IntersectingC4: {
        // Arm j (1-based) is the 4-cycle 0, 3j-2, 3j-1, 3j.
        const auto t = static_cast<std::size_t>(spec.at("t"));
        GraphBuilder b(3 * t + 1);
        for (Vertex j = 1; j <= t; ++j) {
            b.add_edge(0, 3 * j - 2).add_edge(3 * j - 2, 3 * j - 1).add_edge(3 * j - 1, 3 * j).add_edge(3 * j, 0);
        }
        Construction c{std::move(b).build(), Layout(3 * t + 1)};
        c.layout.add_block("center", 0, 1);
        c.layout.add_block("B", 1, 3 * t);
        return c;
    }
    case FamilyKind::KsJoinIndependent: {
        const auto s = static_cast<std::size_t>(spec.at("s"));
        const auto n = static_cast<std::size_t>(spec.at("n"));
        auto clique = construct(complete_spec(static_cast<int>(s))).graph;
        Construction c{join(clique, Graph(n - s)), Layout(n)};
        c.layout.add_block("A", 0, s);
        c.layout.add_block("B", static_cast<Vertex>(s), n - s);
        return c;
    }
    case FamilyKind::KtJoinMatching: {
        const int t = spec.at("t");
        const int n = spec.at("n");
        auto clique = construct(complete_spec(t)).graph;
        auto matching = construct(FamilySpec{FamilyKind::Matching, {{"t", n - t}}}).graph;
        Construction c{join(clique, matching), Layout(static_cast<std::size_t>(n))};
        c.layout.add_block("A", 0, static_cast<std::size_t>(t));
        c.layout.add_block("B", static_cast<Vertex>(t), static_cast<std::size_t>(n - t));
        return c;
    }
    case FamilyKind::EfggExtremal:
        return efgg_extremal(spec.at("s"), spec.at("n"));
    case FamilyKind::HStar:
        return hstar(spec.at("s"));
    case FamilyKind::ZlxExtremal:
        return zlx_extremal(spec.at("s"), spec.at("n"));
    case FamilyKind::NearRegular: {
        Graph g = near_regular(spec.at("s"));
        Construction c{g, Layout(g.order())};
        c.layout.add_block("embed", 0, g.order());
        return c;
    }
    }
    throw std::logic_error("unhandled family kind");
}

}  // namespace speclab

#include "speclab/minor.hpp"

#include "bitmask.hpp"
#include "speclab/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace speclab {

std::string_view to_string(MinorStatus status) noexcept
{
    switch (status) {
    case MinorStatus::Found: return "Found";
    case MinorStatus::NotFound: return "NotFound";
    case MinorStatus::Exhausted: return "Exhausted";
    }
    return "Unknown";
}

bool verify_model(const Graph& host, const MinorModel& model)
{
    if (model.host_n != host.order())
        throw Error(ErrorCode::IndexOutOfRange, "model host_n does not match host order");
    if (model.branch_sets.size() != model.pattern.order())
        return false;
    VertexSet used(host.order());
    for (const auto& s : model.branch_sets) {
        if (s.universe() != host.order())
            throw Error(ErrorCode::IndexOutOfRange, "branch set universe does not match host order");
        if (s.empty() || used.intersects(s))
            return false;
        used |= s;
        if (!is_connected(induced_subgraph(host, s)))
            return false;
    }
    for (auto [i, j] : model.pattern.edges()) {
        bool touching = false;
        for (Vertex x : model.branch_sets[i].members()) {
            if (host.neighborhood(x).intersects(model.branch_sets[j])) {
                touching = true;
                break;
            }
        }
        if (!touching)
            return false;
    }
    return true;
}

namespace {

constexpr std::size_t kMemoCap = 4'000'000;

template <class Mask>
class GenericSearch {
public:
    GenericSearch(const Graph& host, const Graph& pattern, std::uint64_t budget)
        : pattern_(pattern), masks_(host), budget_(budget), n_(host.order()), k_(pattern.order()),
          owner_(n_, static_cast<char>(-1)), sets_(k_, Mask(n_)), nbr_(k_, Mask(n_)), root_(k_, -1), free_(n_)
    {
        for (std::size_t v = 0; v < n_; ++v)
            free_.set(v);
        order_.resize(k_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
        for (auto [i, j] : pattern.edges())
            pedges_.emplace_back(static_cast<int>(i), static_cast<int>(j));
        pcomp_.assign(k_, 0);
        int id = 0;
        for (const auto& comp : connected_components(pattern)) {
            for (Vertex v : comp.members())
                pcomp_[v] = id;
            pcomp_size_.push_back(comp.size());
            ++id;
        }
    }

    MinorAnswer run()
    {
        MinorAnswer ans;
        const bool ok = place(0);
        ans.nodes = nodes_;
        if (ok) {
            ans.status = MinorStatus::Found;
            MinorModel m{n_, pattern_, {}};
            for (std::size_t p = 0; p < k_; ++p) {
                VertexSet s(n_);
                sets_[p].for_each([&](std::size_t v) { s.insert(static_cast<Vertex>(v)); });
                m.branch_sets.push_back(std::move(s));
            }
            ans.model = std::move(m);
        }
        else {
            ans.status = exhausted_ ? MinorStatus::Exhausted : MinorStatus::NotFound;
        }
        return ans;
    }

private:
    bool tick()
    {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        return true;
    }

    void assign(int p, std::size_t v)
    {
        sets_[p].set(v);
        nbr_[p] |= masks_.rows[v];
        free_.reset(v);
        owner_[v] = static_cast<char>(p);
    }

    void unassign(int p, std::size_t v)
    {
        sets_[p].reset(v);
        nbr_[p] = masks_.neighbours_of(sets_[p]);
        free_.set(v);
        owner_[v] = static_cast<char>(-1);
    }

    bool met(int p, int q) const { return (nbr_[p] & sets_[q]).any(); }

    // Candidate growth vertices for edge (p, q): free neighbours of S_p above
    // root_p that still reach S_q through allowed free vertices, and vice versa.
    void candidates(int p, int q, Mask& cp, Mask& cq) const
    {
        const Mask allowed = free_ & masks_.above[std::min(root_[p], root_[q])];
        const Mask reach_q = masks_.closure(nbr_[q], allowed);
        const Mask reach_p = masks_.closure(nbr_[p], allowed);
        cp = nbr_[p] & free_ & masks_.above[root_[p]] & reach_q;
        cq = nbr_[q] & free_ & masks_.above[root_[q]] & reach_p;
    }

    bool reachable(int p, int q) const
    {
        Mask cp(n_), cq(n_);
        candidates(p, q, cp, cq);
        return cp.any() || cq.any();
    }

    bool place(std::size_t idx)
    {
        if (idx == k_)
            return grow();
        if (!tick())
            return false;
        const int p = order_[idx];
        const bool needs_edge = pattern_.degree(static_cast<Vertex>(p)) > 0;
        int anchor = -1;  // host component forced by an already placed vertex
        for (std::size_t j = 0; j < idx; ++j)
            if (pcomp_[order_[j]] == pcomp_[p]) {
                anchor = masks_.component[root_[order_[j]]];
                break;
            }

        std::vector<std::size_t> roots;
        free_.for_each([&](std::size_t r) { roots.push_back(r); });
        for (std::size_t r : roots) {
            if (masks_.component_size[masks_.component[r]] < pcomp_size_[pcomp_[p]])
                continue;
            if (anchor >= 0 && masks_.component[r] != anchor)
                continue;
            if (needs_edge && !masks_.rows[r].any())
                continue;
            assign(p, r);
            root_[p] = static_cast<int>(r);
            bool ok = free_.count() >= k_ - idx - 1;
            for (auto [a, b] : pedges_) {
                if (!ok)
                    break;
                if (root_[a] < 0 || root_[b] < 0 || (a != p && b != p))
                    continue;
                if (!met(a, b) && !reachable(a, b))
                    ok = false;
            }
            if (ok && place(idx + 1))
                return true;
            root_[p] = -1;
            unassign(p, r);
            if (exhausted_)
                return false;
        }
        return false;
    }

    bool grow()
    {
        if (!tick())
            return false;
        if (memo_.contains(owner_))
            return false;

        int best = -1;
        std::size_t best_count = SIZE_MAX;
        Mask best_p(n_), best_q(n_);
        for (std::size_t e = 0; e < pedges_.size(); ++e) {
            auto [p, q] = pedges_[e];
            if (met(p, q))
                continue;
            Mask cp(n_), cq(n_);
            candidates(p, q, cp, cq);
            const std::size_t c = cp.count() + cq.count();
            if (c == 0) {
                remember();
                return false;
            }
            if (c < best_count) {
                best_count = c;
                best = static_cast<int>(e);
                best_p = cp;
                best_q = cq;
            }
        }
        if (best < 0)
            return true;

        auto [p, q] = pedges_[static_cast<std::size_t>(best)];
        for (auto [side, cand] : {std::pair{p, best_p}, std::pair{q, best_q}}) {
            std::vector<std::size_t> ws;
            cand.for_each([&](std::size_t w) { ws.push_back(w); });
            for (std::size_t w : ws) {
                assign(side, w);
                if (grow())
                    return true;
                unassign(side, w);
                if (exhausted_)
                    return false;
            }
        }
        remember();
        return false;
    }

    void remember()
    {
        if (memo_.size() < kMemoCap)
            memo_.insert(owner_);
    }

    const Graph& pattern_;
    detail::HostMasks<Mask> masks_;
    std::uint64_t budget_;
    std::size_t n_;
    std::size_t k_;

    std::vector<int> order_;
    std::vector<std::pair<int, int>> pedges_;
    std::vector<int> pcomp_;
    std::vector<std::size_t> pcomp_size_;

    std::string owner_;
    std::vector<Mask> sets_;
    std::vector<Mask> nbr_;
    std::vector<int> root_;
    Mask free_;

    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::unordered_set<std::string> memo_;
};

}  // namespace

MinorAnswer find_minor_model(const Graph& host, const Graph& pattern, std::uint64_t node_budget)
{
    if (pattern.order() > kMaxPatternOrder)
        throw Error(ErrorCode::PatternTooLarge,
                    "pattern has " + std::to_string(pattern.order()) + " vertices, limit is 12");
    MinorAnswer ans;
    if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) {
        ans.status = MinorStatus::NotFound;
        return ans;
    }
    if (detail::Mask64::fits(host.order()))
        ans = GenericSearch<detail::Mask64>(host, pattern, node_budget).run();
    else
        ans = GenericSearch<detail::MaskWide>(host, pattern, node_budget).run();
    if (ans.found() && !verify_model(host, *ans.model))
        throw std::logic_error("generic minor search produced an invalid certificate");
    return ans;
}

}  // namespace speclab

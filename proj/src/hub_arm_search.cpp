// Fragment search specialised to hub-and-arms patterns: F_s (arms are edges
// S_{2i-1} S_{2i}, both joined to the hub S_0) and Q_t (arms are paths
// S_{3j-2} S_{3j-1} S_{3j} whose ends are joined to the hub). Arms are built
// one at a time: place the arm's roots, then grow fragments until the arm's
// adjacencies hold, then move on. Shares no search code with find_minor_model
// so the two can cross-check each other.

#include "speclab/constructors.hpp"
#include "speclab/error.hpp"
#include "speclab/minor.hpp"

#include "bitmask.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace speclab {

namespace {

constexpr std::size_t kMemoLimit = 4'000'000;

enum class Shape { Friendship, Quadrilateral };

template <class Mask>
class HubArmSearch {
public:
    HubArmSearch(const Graph& host, Shape shape, int arms, std::uint64_t budget)
        : host_(host), masks_(host), shape_(shape), arms_(arms), arm_len_(shape == Shape::Friendship ? 2 : 3),
          slots_(1 + arms * arm_len_), budget_(budget), frag_(static_cast<std::size_t>(slots_), Mask(host.order())),
          touch_(static_cast<std::size_t>(slots_), Mask(host.order())), root_(static_cast<std::size_t>(slots_), -1),
          free_(host.order()), state_(host.order(), '.')
    {
        // Both patterns have minimum degree 2, so a vertex that peels off in
        // the 2-core of the host can be dropped from any model.
        std::vector<std::size_t> deg(host.order());
        std::vector<bool> alive(host.order(), true);
        std::vector<std::size_t> queue;
        for (std::size_t v = 0; v < host.order(); ++v) {
            deg[v] = masks_.rows[v].count();
            if (deg[v] < 2) {
                alive[v] = false;
                queue.push_back(v);
            }
        }
        while (!queue.empty()) {
            const auto v = queue.back();
            queue.pop_back();
            masks_.rows[v].for_each([&](std::size_t u) {
                if (alive[u] && --deg[u] < 2) {
                    alive[u] = false;
                    queue.push_back(u);
                }
            });
        }
        for (std::size_t v = 0; v < host.order(); ++v)
            if (alive[v])
                free_.set(v);
    }

    MinorStatus run()
    {
        if (place_hub())
            return MinorStatus::Found;
        return exhausted_ ? MinorStatus::Exhausted : MinorStatus::NotFound;
    }

    std::uint64_t nodes() const { return nodes_; }

    std::vector<VertexSet> fragments() const
    {
        std::vector<VertexSet> out;
        for (const auto& f : frag_) {
            VertexSet s(host_.order());
            f.for_each([&](std::size_t v) { s.insert(static_cast<Vertex>(v)); });
            out.push_back(std::move(s));
        }
        return out;
    }

private:
    int slot(int arm, int pos) const { return 1 + (arm - 1) * arm_len_ + pos; }

    // Adjacent fragment pairs required by one arm.
    std::vector<std::pair<int, int>> arm_pairs(int arm) const
    {
        if (shape_ == Shape::Friendship) {
            const int a = slot(arm, 0);
            const int b = slot(arm, 1);
            return {{0, a}, {0, b}, {a, b}};
        }
        const int x = slot(arm, 0);
        const int y = slot(arm, 1);
        const int z = slot(arm, 2);
        return {{0, x}, {x, y}, {y, z}, {z, 0}};
    }

    bool spend()
    {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        return true;
    }

    void take(int s, std::size_t v)
    {
        frag_[s].set(v);
        touch_[s] |= masks_.rows[v];
        free_.reset(v);
        state_[v] = static_cast<char>('A' + s);
    }

    void give_back(int s, std::size_t v)
    {
        frag_[s].reset(v);
        touch_[s] = masks_.neighbours_of(frag_[s]);
        free_.set(v);
        state_[v] = '.';
    }

    // Smallest admissible root for a slot, encoding the symmetry reduction:
    // fragments are identified by their minimum vertex, and arm/within-arm
    // permutations that fix the pattern are broken by ordering those minima.
    int lower_bound(int s) const
    {
        if (s == 0)
            return 0;
        const int arm = 1 + (s - 1) / arm_len_;
        const int pos = (s - 1) % arm_len_;
        int lo = 0;
        const bool fully_symmetric = arms_ == 1;  // K_3 or C_4: the hub is not special
        if (fully_symmetric)
            lo = root_[0] + 1;
        if (shape_ == Shape::Friendship) {
            if (pos == 1)
                lo = std::max(lo, root_[slot(arm, 0)] + 1);
            else if (arm > 1)
                lo = std::max(lo, root_[slot(arm - 1, 0)] + 1);
        }
        else {
            if (pos == 2)
                lo = std::max(lo, root_[slot(arm, 0)] + 1);
            else if (pos == 0 && arm > 1)
                lo = std::max(lo, root_[slot(arm - 1, 0)] + 1);
        }
        return lo;
    }

    int unplaced_after(int s) const { return slots_ - 1 - s; }

    bool place_hub()
    {
        if (!spend())
            return false;
        std::vector<std::size_t> options;
        free_.for_each([&](std::size_t v) { options.push_back(v); });
        for (std::size_t r : options) {
            if (masks_.component_size[masks_.component[r]] < static_cast<std::size_t>(slots_))
                continue;
            take(0, r);
            root_[0] = static_cast<int>(r);
            if (place_root(1, 0))
                return true;
            root_[0] = -1;
            give_back(0, r);
            if (exhausted_)
                return false;
        }
        return false;
    }

    bool place_root(int arm, int pos)
    {
        if (pos == arm_len_)
            return grow(arm);
        if (!spend())
            return false;
        const int s = slot(arm, pos);
        const int lo = lower_bound(s);
        const int hub_comp = masks_.component[static_cast<std::size_t>(root_[0])];
        std::vector<std::size_t> options;
        free_.for_each([&](std::size_t v) {
            if (static_cast<int>(v) >= lo && masks_.component[v] == hub_comp)
                options.push_back(v);
        });
        for (std::size_t r : options) {
            take(s, r);
            root_[s] = static_cast<int>(r);
            if (free_.count() >= static_cast<std::size_t>(unplaced_after(s)) && place_root(arm, pos + 1))
                return true;
            root_[s] = -1;
            give_back(s, r);
            if (exhausted_)
                return false;
        }
        return false;
    }

    bool adjacent_fragments(int a, int b) const { return (touch_[a] & frag_[b]).any(); }

    // Free vertices that can extend fragment a toward fragment b (and b toward
    // a) along a path of free vertices usable by one of them.
    void extensions(int a, int b, Mask& grow_a, Mask& grow_b) const
    {
        const int low = std::min(root_[a], root_[b]);
        const Mask usable = free_ & masks_.above[static_cast<std::size_t>(low)];
        const Mask toward_b = masks_.closure(touch_[b], usable);
        const Mask toward_a = masks_.closure(touch_[a], usable);
        grow_a = touch_[a] & free_ & masks_.above[static_cast<std::size_t>(root_[a])] & toward_b;
        grow_b = touch_[b] & free_ & masks_.above[static_cast<std::size_t>(root_[b])] & toward_a;
    }

    bool grow(int arm)
    {
        if (!spend())
            return false;
        if (dead_.contains(state_))
            return false;

        const auto pairs = arm_pairs(arm);
        int pick = -1;
        std::size_t fewest = SIZE_MAX;
        Mask pick_a(host_.order()), pick_b(host_.order());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            auto [a, b] = pairs[i];
            if (adjacent_fragments(a, b))
                continue;
            Mask ga(host_.order()), gb(host_.order());
            extensions(a, b, ga, gb);
            const std::size_t options = ga.count() + gb.count();
            if (options == 0) {
                mark_dead();
                return false;
            }
            if (options < fewest) {
                fewest = options;
                pick = static_cast<int>(i);
                pick_a = ga;
                pick_b = gb;
            }
        }

        if (pick < 0) {
            if (arm == arms_)
                return true;
            if (free_.count() < static_cast<std::size_t>(arm_len_))
                return false;
            if (place_root(arm + 1, 0))
                return true;
            if (!exhausted_)
                mark_dead();
            return false;
        }

        auto [a, b] = pairs[static_cast<std::size_t>(pick)];
        if (try_extend(arm, a, pick_a) || exhausted_)
            return !exhausted_;
        if (try_extend(arm, b, pick_b) || exhausted_)
            return !exhausted_;
        mark_dead();
        return false;
    }

    bool try_extend(int arm, int s, const Mask& options)
    {
        std::vector<std::size_t> vs;
        options.for_each([&](std::size_t v) { vs.push_back(v); });
        for (std::size_t v : vs) {
            take(s, v);
            if (grow(arm))
                return true;
            give_back(s, v);
            if (exhausted_)
                return false;
        }
        return false;
    }

    void mark_dead()
    {
        if (dead_.size() < kMemoLimit)
            dead_.insert(state_);
    }

    const Graph& host_;
    detail::HostMasks<Mask> masks_;
    Shape shape_;
    int arms_;
    int arm_len_;
    int slots_;
    std::uint64_t budget_;

    std::vector<Mask> frag_;
    std::vector<Mask> touch_;
    std::vector<int> root_;
    Mask free_;
    std::string state_;

    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::unordered_set<std::string> dead_;
};

template <class Mask>
MinorAnswer run_search(const Graph& host, Shape shape, int arms, std::uint64_t budget, const Graph& pattern)
{
    HubArmSearch<Mask> search(host, shape, arms, budget);
    MinorAnswer ans;
    ans.status = search.run();
    ans.nodes = search.nodes();
    if (ans.found())
        ans.model = MinorModel{host.order(), pattern, search.fragments()};
    return ans;
}

MinorAnswer hub_arm_minor(const Graph& host, Shape shape, int arms, std::uint64_t budget)
{
    const Graph pattern = construct(shape == Shape::Friendship ? friendship_spec(arms) : intersecting_c4_spec(arms)).graph;
    if (pattern.order() > kMaxPatternOrder)
        throw Error(ErrorCode::PatternTooLarge,
                    "pattern has " + std::to_string(pattern.order()) + " vertices, limit is 12");
    MinorAnswer ans;
    if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count())
        return ans;
    if (detail::Mask64::fits(host.order()))
        ans = run_search<detail::Mask64>(host, shape, arms, budget, pattern);
    else
        ans = run_search<detail::MaskWide>(host, shape, arms, budget, pattern);
    if (ans.found() && !verify_model(host, *ans.model))
        throw std::logic_error("fragment search produced an invalid certificate");
    return ans;
}

}  // namespace

MinorAnswer has_fs_minor(const Graph& host, int s, std::uint64_t node_budget)
{
    if (s < 1)
        throw Error(ErrorCode::InvalidSpec, "F_s needs s >= 1");
    return hub_arm_minor(host, Shape::Friendship, s, node_budget);
}

MinorAnswer has_qt_minor(const Graph& host, int t, std::uint64_t node_budget)
{
    if (t < 1)
        throw Error(ErrorCode::InvalidSpec, "Q_t needs t >= 1");
    return hub_arm_minor(host, Shape::Quadrilateral, t, node_budget);
}

}  // namespace speclab

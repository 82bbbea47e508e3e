#pragma once

// Host-vertex masks for the minor searches: a single word for hosts of at most
// 64 vertices, a word vector otherwise. Both expose the same interface so the
// search engines are written once as templates.

#include "speclab/graph.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace speclab::detail {

class Mask64 {
public:
    Mask64() = default;
    explicit Mask64(std::size_t /*n*/) {}

    static bool fits(std::size_t n) { return n <= 64; }

    void set(std::size_t v) { w_ |= std::uint64_t{1} << v; }
    void reset(std::size_t v) { w_ &= ~(std::uint64_t{1} << v); }
    bool test(std::size_t v) const { return ((w_ >> v) & 1U) != 0; }
    bool any() const { return w_ != 0; }
    std::size_t count() const { return static_cast<std::size_t>(std::popcount(w_)); }

    Mask64& operator|=(const Mask64& o) { w_ |= o.w_; return *this; }
    Mask64& operator&=(const Mask64& o) { w_ &= o.w_; return *this; }
    Mask64& remove(const Mask64& o) { w_ &= ~o.w_; return *this; }
    friend Mask64 operator&(Mask64 a, const Mask64& b) { return a &= b; }
    friend Mask64 operator|(Mask64 a, const Mask64& b) { return a |= b; }
    friend bool operator==(const Mask64&, const Mask64&) = default;

    template <class F>
    void for_each(F&& f) const
    {
        for (auto w = w_; w != 0; w &= w - 1)
            f(static_cast<std::size_t>(std::countr_zero(w)));
    }

private:
    std::uint64_t w_ = 0;
};

class MaskWide {
public:
    MaskWide() = default;
    explicit MaskWide(std::size_t n) : w_((n + 63) / 64, 0) {}

    static bool fits(std::size_t) { return true; }

    void set(std::size_t v) { w_[v / 64] |= std::uint64_t{1} << (v % 64); }
    void reset(std::size_t v) { w_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
    bool test(std::size_t v) const { return ((w_[v / 64] >> (v % 64)) & 1U) != 0; }
    bool any() const
    {
        for (auto w : w_)
            if (w != 0)
                return true;
        return false;
    }
    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : w_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    MaskWide& operator|=(const MaskWide& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
        return *this;
    }
    MaskWide& operator&=(const MaskWide& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= o.w_[i];
        return *this;
    }
    MaskWide& remove(const MaskWide& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= ~o.w_[i];
        return *this;
    }
    friend MaskWide operator&(MaskWide a, const MaskWide& b) { return a &= b; }
    friend MaskWide operator|(MaskWide a, const MaskWide& b) { return a |= b; }
    friend bool operator==(const MaskWide&, const MaskWide&) = default;

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            for (auto w = w_[i]; w != 0; w &= w - 1)
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }

private:
    std::vector<std::uint64_t> w_;
};

/// Adjacency rows and "strictly above v" masks of a host graph.
template <class Mask>
struct HostMasks {
    std::size_t n = 0;
    std::vector<Mask> rows;
    std::vector<Mask> above;
    std::vector<int> component;  // component index per vertex
    std::vector<std::size_t> component_size;

    explicit HostMasks(const Graph& g) : n(g.order()), rows(n, Mask(n)), above(n, Mask(n)), component(n, -1)
    {
        for (auto [u, v] : g.edges()) {
            rows[u].set(v);
            rows[v].set(u);
        }
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = v + 1; u < n; ++u)
                above[v].set(u);
        int id = 0;
        for (const auto& comp : connected_components(g)) {
            for (Vertex v : comp.members())
                component[v] = id;
            component_size.push_back(comp.size());
            ++id;
        }
    }

    Mask neighbours_of(const Mask& s) const
    {
        Mask out(n);
        s.for_each([&](std::size_t v) { out |= rows[v]; });
        return out;
    }

    /// Vertices of `allowed` connected to `start` through `allowed` (start
    /// itself is intersected with allowed first).
    Mask closure(Mask start, const Mask& allowed) const
    {
        start &= allowed;
        Mask reach = start;
        Mask frontier = start;
        while (frontier.any()) {
            Mask next = neighbours_of(frontier);
            next &= allowed;
            next.remove(reach);
            reach |= next;
            frontier = next;
        }
        return reach;
    }
};

}  // namespace speclab::detail

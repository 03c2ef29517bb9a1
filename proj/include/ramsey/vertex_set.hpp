#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ramsey {

// Fixed-width bitset over vertex indices 0..127. Two machine words; all the
// solvers below live in intersections of these.
class VertexSet {
public:
    static constexpr int capacity = 128;

    constexpr VertexSet() = default;

    static constexpr VertexSet first_n(int n)
    {
        VertexSet s;
        for (int i = 0; i < n; ++i)
            s.set(i);
        return s;
    }

    static VertexSet of(std::initializer_list<int> vs)
    {
        VertexSet s;
        for (int v : vs)
            s.set(v);
        return s;
    }

    constexpr bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    constexpr void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    constexpr void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    constexpr int count() const
    {
        return std::popcount(w_[0]) + std::popcount(w_[1]);
    }
    constexpr bool empty() const { return w_[0] == 0 && w_[1] == 0; }
    constexpr bool any() const { return !empty(); }

    // Lowest set index, or -1 when empty.
    constexpr int lowest() const
    {
        if (w_[0] != 0)
            return std::countr_zero(w_[0]);
        if (w_[1] != 0)
            return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    // Lowest set index strictly above i, or -1.
    constexpr int next_after(int i) const
    {
        VertexSet t = *this;
        t.clear_through(i);
        return t.lowest();
    }

    constexpr bool intersects(const VertexSet& o) const
    {
        return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
    }
    constexpr bool is_subset_of(const VertexSet& o) const
    {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }

    friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b)
    {
        a.w_[0] &= b.w_[0];
        a.w_[1] &= b.w_[1];
        return a;
    }
    friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b)
    {
        a.w_[0] |= b.w_[0];
        a.w_[1] |= b.w_[1];
        return a;
    }
    // a with the members of b removed
    friend constexpr VertexSet minus(VertexSet a, const VertexSet& b)
    {
        a.w_[0] &= ~b.w_[0];
        a.w_[1] &= ~b.w_[1];
        return a;
    }
    friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(count());
        for (int v = lowest(); v >= 0; v = next_after(v))
            out.push_back(v);
        return out;
    }

    // "0 3 7" — used by failure witnesses and trace dumps.
    std::string to_string() const
    {
        std::string out;
        for (int v = lowest(); v >= 0; v = next_after(v)) {
            if (!out.empty())
                out += ' ';
            out += std::to_string(v);
        }
        return out;
    }

    struct iterator {
        const VertexSet* set;
        int v;
        int operator*() const { return v; }
        iterator& operator++()
        {
            v = set->next_after(v);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {this, lowest()}; }
    iterator end() const { return {this, -1}; }

private:
    // Clears bits 0..i inclusive.
    constexpr void clear_through(int i)
    {
        if (i < 63) {
            w_[0] &= ~((std::uint64_t{1} << (i + 1)) - 1);
        } else {
            w_[0] = 0;
            if (i >= 127)
                w_[1] = 0;
            else if (i > 63)
                w_[1] &= ~((std::uint64_t{1} << (i - 63)) - 1);
        }
    }

    std::array<std::uint64_t, 2> w_{};
};

} // namespace ramsey

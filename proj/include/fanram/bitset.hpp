#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace fanram {

inline constexpr int kMaxOrder = 128;

/// Fixed 128-bit vertex set. Adjacency rows and vertex subsets share this type.
class Bitset128 {
public:
    constexpr Bitset128() = default;

    static constexpr Bitset128 prefix(int n) {
        Bitset128 b;
        if (n >= 64) {
            b.w_[0] = ~std::uint64_t{0};
            b.w_[1] = n >= 128 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
        } else if (n > 0) {
            b.w_[0] = (std::uint64_t{1} << n) - 1;
        }
        return b;
    }

    static Bitset128 of(std::initializer_list<int> vs) {
        Bitset128 b;
        for (int v : vs) b.set(v);
        return b;
    }

    constexpr bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1U; }
    constexpr void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    constexpr void reset(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    constexpr int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
    constexpr bool empty() const { return (w_[0] | w_[1]) == 0; }
    constexpr bool any() const { return !empty(); }

    /// Lowest member, or -1 when empty.
    constexpr int first() const {
        if (w_[0]) return std::countr_zero(w_[0]);
        if (w_[1]) return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    constexpr int pop_first() {
        int v = first();
        if (v >= 0) reset(v);
        return v;
    }

    constexpr Bitset128& operator&=(const Bitset128& o) { w_[0] &= o.w_[0]; w_[1] &= o.w_[1]; return *this; }
    constexpr Bitset128& operator|=(const Bitset128& o) { w_[0] |= o.w_[0]; w_[1] |= o.w_[1]; return *this; }
    constexpr Bitset128& operator^=(const Bitset128& o) { w_[0] ^= o.w_[0]; w_[1] ^= o.w_[1]; return *this; }
    constexpr Bitset128& subtract(const Bitset128& o) { w_[0] &= ~o.w_[0]; w_[1] &= ~o.w_[1]; return *this; }

    friend constexpr Bitset128 operator&(Bitset128 a, const Bitset128& b) { return a &= b; }
    friend constexpr Bitset128 operator|(Bitset128 a, const Bitset128& b) { return a |= b; }
    friend constexpr Bitset128 operator^(Bitset128 a, const Bitset128& b) { return a ^= b; }
    friend constexpr Bitset128 minus(Bitset128 a, const Bitset128& b) { return a.subtract(b); }
    friend constexpr bool operator==(const Bitset128&, const Bitset128&) = default;
    friend constexpr auto operator<=>(const Bitset128&, const Bitset128&) = default;

    constexpr bool is_subset_of(const Bitset128& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (Bitset128 it = *this; !it.empty();) out.push_back(it.pop_first());
        return out;
    }

    template <typename F>
    constexpr void for_each(F&& f) const {
        for (Bitset128 it = *this; !it.empty();) f(it.pop_first());
    }

    constexpr std::uint64_t word(int i) const { return w_[i]; }

    std::size_t hash() const {
        std::uint64_t h = w_[0] * 0x9E3779B97F4A7C15ULL;
        h ^= (w_[1] + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
        return static_cast<std::size_t>(h);
    }

private:
    std::array<std::uint64_t, 2> w_{};
};

using VertexSet = Bitset128;

struct Bitset128Hash {
    std::size_t operator()(const Bitset128& b) const { return b.hash(); }
};

}  // namespace fanram

#pragma once

// Internal dynamic bitset sized at construction; fine at desk scale.

#include <bit>
#include <cstdint>
#include <vector>

namespace minoruniv::detail {

struct Bits {
    std::vector<std::uint64_t> w;

    Bits() = default;
    explicit Bits(int n) : w((n + 63) / 64, 0) {}

    void set(int i) { w[i >> 6] |= (std::uint64_t(1) << (i & 63)); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }

    int lowest() const {  // -1 when empty
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k]) return static_cast<int>(k * 64 + std::countr_zero(w[k]));
        return -1;
    }

    Bits& operator|=(const Bits& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] &= o.w[k];
        return *this;
    }
    Bits& subtract(const Bits& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] &= ~o.w[k];
        return *this;
    }

    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

    bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k] & o.w[k]) return true;
        return false;
    }

    bool operator==(const Bits&) const = default;
    auto operator<=>(const Bits&) const = default;

    template <typename F>
    void for_each(F f) const {
        for (std::size_t k = 0; k < w.size(); ++k) {
            std::uint64_t x = w[k];
            while (x) {
                f(static_cast<int>(k * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }
};

}  // namespace minoruniv::detail

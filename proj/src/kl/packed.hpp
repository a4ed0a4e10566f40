#pragma once

// Nibble-packed permutations for the KL kernels. Nibble i of `word` holds
// w(i+1)-1 and nibble i of `inv` holds w^{-1}(i+1)-1, so n <= 16.

#include <bit>
#include <cstdint>
#include <vector>

#include "klforge/symgroup.hpp"

namespace klforge::detail {

inline constexpr int kMaxPackedSize = 16;

struct Packed {
    std::uint64_t word = 0;
    std::uint64_t inv = 0;

    friend bool operator==(const Packed& a, const Packed& b) { return a.word == b.word; }
};

inline int nib(std::uint64_t v, int i) { return static_cast<int>((v >> (4 * i)) & 0xFu); }

inline std::uint64_t swap_nibbles(std::uint64_t v, int i, int j) {
    const std::uint64_t a = (v >> (4 * i)) & 0xFu;
    const std::uint64_t b = (v >> (4 * j)) & 0xFu;
    const std::uint64_t x = a ^ b;
    return v ^ ((x << (4 * i)) | (x << (4 * j)));
}

inline Packed pack(const Permutation& p) {
    Packed out;
    for (int i = 0; i < p.size(); ++i) {
        const auto v = static_cast<std::uint64_t>(p.word()[static_cast<std::size_t>(i)] - 1);
        out.word |= v << (4 * i);
        out.inv |= static_cast<std::uint64_t>(i) << (4 * static_cast<int>(v));
    }
    return out;
}

inline Permutation unpack(const Packed& p, int n) {
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = nib(p.word, i) + 1;
    return Permutation(std::move(word));
}

inline Packed packed_identity(int n) {
    Packed out;
    for (int i = 0; i < n; ++i) {
        out.word |= static_cast<std::uint64_t>(i) << (4 * i);
        out.inv |= static_cast<std::uint64_t>(i) << (4 * i);
    }
    return out;
}

// 0-based simple index i swaps positions/values i and i+1.
inline Packed right_mul(const Packed& p, int i) {
    const int a = nib(p.word, i), b = nib(p.word, i + 1);
    return {swap_nibbles(p.word, i, i + 1), swap_nibbles(p.inv, a, b)};
}

inline Packed left_mul(const Packed& p, int i) {
    const int a = nib(p.inv, i), b = nib(p.inv, i + 1);
    return {swap_nibbles(p.word, a, b), swap_nibbles(p.inv, i, i + 1)};
}

inline bool right_descent(const Packed& p, int i) { return nib(p.word, i) > nib(p.word, i + 1); }
inline bool left_descent(const Packed& p, int i) { return nib(p.inv, i) > nib(p.inv, i + 1); }

inline std::uint32_t right_descent_mask(const Packed& p, int n) {
    std::uint32_t m = 0;
    for (int i = 0; i + 1 < n; ++i)
        if (right_descent(p, i)) m |= 1u << i;
    return m;
}

inline std::uint32_t left_descent_mask(const Packed& p, int n) {
    std::uint32_t m = 0;
    for (int i = 0; i + 1 < n; ++i)
        if (left_descent(p, i)) m |= 1u << i;
    return m;
}

inline int packed_length(const Packed& p, int n) {
    int inv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inv += nib(p.word, i) > nib(p.word, j);
    return inv;
}

/// Raise x to the maximal element of W_I x W_J (I, J given as masks).
inline Packed raise_to_extremal(Packed x, std::uint32_t left_mask, std::uint32_t right_mask) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint32_t m = left_mask; m; m &= m - 1) {
            const int i = std::countr_zero(m);
            if (!left_descent(x, i)) {
                x = left_mul(x, i);
                changed = true;
            }
        }
        for (std::uint32_t m = right_mask; m; m &= m - 1) {
            const int i = std::countr_zero(m);
            if (!right_descent(x, i)) {
                x = right_mul(x, i);
                changed = true;
            }
        }
    }
    return x;
}

}  // namespace klforge::detail

#pragma once

// Brute-force oracles used only by the tests. They work on plain words and
// maps and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using VPoly = std::map<int, long long>;  // v-exponent -> coefficient

inline int inversions(const Word& w) {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
    return c;
}

inline Word identity(int n) {
    Word w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return w;
}

inline std::vector<Word> all_words(int n) {
    std::vector<Word> out;
    Word w = identity(n);
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// Right multiplication by s_i (1-based): swap positions i, i+1.
inline Word swap_pos(Word w, int i) {
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
    return w;
}

/// Left multiplication by s_i: swap values i, i+1.
inline Word swap_val(Word w, int i) {
    for (auto& x : w) {
        if (x == i)
            x = i + 1;
        else if (x == i + 1)
            x = i;
    }
    return w;
}

/// A reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}, by bubble sort.
inline std::vector<int> reduced_word(Word w) {
    std::vector<int> rev;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                rev.push_back(static_cast<int>(i) + 1);
                moved = true;
            }
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

/// x <= y iff x is the product of a subword of a reduced word of y.
inline bool bruhat_subword(const Word& x, const Word& y) {
    std::set<Word> reach{identity(static_cast<int>(y.size()))};
    for (int i : reduced_word(y)) {
        std::set<Word> next = reach;
        for (const auto& w : reach) next.insert(swap_pos(w, i));
        reach = std::move(next);
    }
    return reach.count(x) != 0;
}

inline void add_into(VPoly& acc, const VPoly& p, int shift = 0, long long factor = 1) {
    for (const auto& [e, c] : p) {
        auto& slot = acc[e + shift];
        slot += factor * c;
        if (slot == 0) acc.erase(e + shift);
    }
}

/// Hecke algebra element in the standard basis T_w, coefficients in Z[v, v^-1]
/// with q = v^-2 and (T_s - q)(T_s + 1) = 0.
using Hecke = std::map<Word, VPoly>;

inline void hecke_add(Hecke& acc, const Word& w, const VPoly& p, int shift = 0, long long factor = 1) {
    auto& slot = acc[w];
    add_into(slot, p, shift, factor);
    if (slot.empty()) acc.erase(w);
}

/// T_s * h.
inline Hecke left_mul_T(int s, const Hecke& h) {
    Hecke out;
    for (const auto& [x, p] : h) {
        const Word sx = swap_val(x, s);
        if (inversions(sx) > inversions(x)) {
            hecke_add(out, sx, p);
        } else {
            hecke_add(out, x, p, -2);      // q T_x
            hecke_add(out, x, p, 0, -1);   // -T_x
            hecke_add(out, sx, p, -2);     // q T_sx
        }
    }
    return out;
}

/// Table of P_{x,w}(q) for all x, w in S_n, computed from the canonical basis
/// C'_w = v^{l(w)} sum_x P_{x,w}(v^-2) T_x built as products C'_s C'_{sw}.
class HeckeKL {
public:
    explicit HeckeKL(int n) {
        auto words = all_words(n);
        std::stable_sort(words.begin(), words.end(),
                         [](const Word& a, const Word& b) { return inversions(a) < inversions(b); });
        for (const auto& w : words) {
            const int lw = inversions(w);
            Hecke c;
            if (lw == 0) {
                c[w] = {{0, 1}};
            } else {
                int s = 1;
                while (inversions(swap_val(w, s)) > lw) ++s;
                const Word v = swap_val(w, s);
                const Hecke& cv = basis_.at(v);
                // C'_s = v (T_s + 1)
                Hecke prod = left_mul_T(s, cv);
                for (const auto& [x, p] : cv) hecke_add(prod, x, p);
                Hecke shifted;
                for (const auto& [x, p] : prod) hecke_add(shifted, x, p, 1);
                c = std::move(shifted);
                const int lv = lw - 1;
                for (const auto& [z, cz] : basis_) {
                    const int lz = inversions(z);
                    if (lz >= lv || (lv - lz) % 2 == 0) continue;
                    if (inversions(swap_val(z, s)) > lz) continue;
                    const long long mu = q_coeff(z, v, (lv - lz - 1) / 2);
                    if (mu == 0) continue;
                    for (const auto& [x, p] : cz) hecke_add(c, x, p, 0, -mu);
                }
            }
            basis_.emplace(w, std::move(c));
        }
    }

    /// P_{x,w} as q-exponent -> coefficient.
    std::map<int, long long> P(const Word& x, const Word& w) const {
        std::map<int, long long> out;
        const auto& c = basis_.at(w);
        auto it = c.find(x);
        if (it == c.end()) return out;
        const int lw = inversions(w);
        for (const auto& [e, k] : it->second) out[-(e - lw) / 2] = k;
        return out;
    }

private:
    long long q_coeff(const Word& x, const Word& w, int d) const {
        auto p = P(x, w);
        auto it = p.find(d);
        return it == p.end() ? 0 : it->second;
    }

    std::map<Word, Hecke> basis_;
};

}  // namespace oracle

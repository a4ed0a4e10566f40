#pragma once

// Column-at-a-time KL polynomials P_{x,y} over S_n, n <= 16.
//
// A column stores P_{x,y} only for x <= y extremal w.r.t. the descent sets of
// y (x maximal in W_{DL(y)} x W_{DR(y)}); every other x is raised to its
// extremal representative on lookup.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <omp.h>

#include "kl/coeff_ops.hpp"
#include "kl/packed.hpp"

namespace klforge::detail {

template <class C>
class PolyStore {
public:
    static constexpr std::uint32_t kZero = 0;
    static constexpr std::uint32_t kOne = 1;

    PolyStore() {
        polys_.emplace_back();
        polys_.push_back({C(1)});
        index_.emplace(polys_[0], kZero);
        index_.emplace(polys_[1], kOne);
    }

    std::uint32_t intern(std::vector<C>&& p) {
        auto it = index_.find(p);
        if (it != index_.end()) return it->second;
        const auto id = static_cast<std::uint32_t>(polys_.size());
        polys_.push_back(p);
        index_.emplace(std::move(p), id);
        return id;
    }

    const std::vector<C>& operator[](std::uint32_t id) const { return polys_[id]; }
    std::size_t size() const { return polys_.size(); }

private:
    struct Hash {
        std::size_t operator()(const std::vector<C>& v) const {
            std::size_t h = v.size();
            for (const auto& c : v) h = h * 1000003u ^ CoeffOps<C>::hash(c);
            return h;
        }
    };
    std::vector<std::vector<C>> polys_;
    std::unordered_map<std::vector<C>, std::uint32_t, Hash> index_;
};

/// Bruhat-closed set of permutations with per-element data for the column scan.
class Universe {
public:
    explicit Universe(int n) : n_(n), stride_(std::max(1, (n - 1) * (n - 1))) {
        by_length_.resize(static_cast<std::size_t>(n * (n - 1) / 2 + 1));
    }

    int n() const { return n_; }
    std::size_t size() const { return elems_.size(); }
    bool contains(std::uint64_t word) const { return index_.count(word) != 0; }

    /// Adds the Bruhat down-set of top.
    void add_downset(const Packed& top) {
        if (contains(top.word)) return;
        std::vector<Packed> stack{top};
        insert(top);
        while (!stack.empty()) {
            const Packed u = stack.back();
            stack.pop_back();
            for_each_coatom(u, [&](const Packed& c) {
                if (contains(c.word)) return;
                insert(c);
                stack.push_back(c);
            });
        }
    }

    std::uint32_t id(std::uint64_t word) const { return index_.at(word); }
    const Packed& elem(std::uint32_t i) const { return elems_[i]; }
    int length(std::uint32_t i) const { return lengths_[i]; }
    std::uint32_t left_mask(std::uint32_t i) const { return dl_[i]; }
    std::uint32_t right_mask(std::uint32_t i) const { return dr_[i]; }
    const std::vector<std::uint32_t>& of_length(int l) const {
        return by_length_[static_cast<std::size_t>(l)];
    }

    /// Bruhat order by comparing prefix rank counts.
    bool leq(std::uint32_t x, std::uint32_t y) const {
        const std::uint8_t* rx = &ranks_[static_cast<std::size_t>(x) * stride_];
        const std::uint8_t* ry = &ranks_[static_cast<std::size_t>(y) * stride_];
        unsigned bad = 0;
        for (std::size_t k = 0; k < stride_; ++k) bad |= rx[k] > ry[k];
        return bad == 0;
    }

    template <class F>
    void for_each_coatom(const Packed& u, F&& f) const {
        for (int i = 0; i < n_; ++i) {
            const int wi = nib(u.word, i);
            int ceiling = -1;
            for (int j = i + 1; j < n_; ++j) {
                const int wj = nib(u.word, j);
                if (wj < wi && wj > ceiling) {
                    ceiling = wj;
                    f(Packed{swap_nibbles(u.word, i, j), swap_nibbles(u.inv, wi, wj)});
                }
            }
        }
    }

private:
    void insert(const Packed& p) {
        const auto id = static_cast<std::uint32_t>(elems_.size());
        index_.emplace(p.word, id);
        elems_.push_back(p);
        const int l = packed_length(p, n_);
        lengths_.push_back(static_cast<std::uint8_t>(l));
        dl_.push_back(left_descent_mask(p, n_));
        dr_.push_back(right_descent_mask(p, n_));
        by_length_[static_cast<std::size_t>(l)].push_back(id);
        const std::size_t base = ranks_.size();
        ranks_.resize(base + stride_, 0);
        // r[i][t] = #{j <= i : w(j) >= t + 2}, 0-based i < n-1, t < n-1.
        for (int t = 0; t + 1 < n_; ++t) {
            int count = 0;
            for (int i = 0; i + 1 < n_; ++i) {
                count += nib(p.word, i) >= t + 1;
                ranks_[base + static_cast<std::size_t>(i * (n_ - 1) + t)] = static_cast<std::uint8_t>(count);
            }
        }
    }

    int n_;
    std::size_t stride_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<Packed> elems_;
    std::vector<std::uint8_t> lengths_;
    std::vector<std::uint32_t> dl_, dr_;
    std::vector<std::uint8_t> ranks_;
    std::vector<std::vector<std::uint32_t>> by_length_;
};

template <class C>
struct MuEntry {
    Packed z;
    int length;
    C mu;
};

template <class C>
struct Column {
    Packed y;
    int length = 0;
    std::uint32_t left_mask = 0, right_mask = 0;
    std::vector<std::uint64_t> keys;
    std::vector<std::uint32_t> polys;
    bool mu_ready = false;
    std::vector<MuEntry<C>> mu;
};

template <class C>
class ColumnEngine {
public:
    explicit ColumnEngine(int n) : n_(n), universe_(n) {
        if (n < 1 || n > kMaxPackedSize) throw std::invalid_argument("ColumnEngine: n out of range");
    }

    int n() const { return n_; }
    void set_threads(int t) { threads_ = std::max(1, t); }

    /// q-coefficients of P_{x,y} (empty when x is not below y).
    std::vector<C> poly(const Packed& x, const Packed& y) {
        const Column<C>& col = ensure(y);
        return store_[lookup(col, x)];
    }

    /// Sum of (-1)^{l(x)} P_{x,y} over xs.
    std::vector<C> signed_sum(const std::vector<Packed>& xs, const Packed& y) {
        const Column<C>& col = ensure(y);
        std::vector<C> total(static_cast<std::size_t>(col.length / 2 + 1), C(0));
        std::exception_ptr failure;
#pragma omp parallel num_threads(threads_)
        {
            std::vector<C> local(total.size(), C(0));
#pragma omp for schedule(static)
            for (std::size_t k = 0; k < xs.size(); ++k) {
                try {
                    const auto& p = store_[lookup(col, xs[k])];
                    const C sign(packed_length(xs[k], n_) % 2 == 0 ? 1 : -1);
                    for (std::size_t i = 0; i < p.size(); ++i) CoeffOps<C>::add_mul(local[i], p[i], sign);
                } catch (...) {
#pragma omp critical(klforge_column_failure)
                    if (!failure) failure = std::current_exception();
                }
            }
#pragma omp critical(klforge_signed_sum)
            {
                try {
                    for (std::size_t i = 0; i < total.size(); ++i) CoeffOps<C>::add(total[i], local[i]);
                } catch (...) {
                    if (!failure) failure = std::current_exception();
                }
            }
        }
        if (failure) std::rethrow_exception(failure);
        while (!total.empty() && CoeffOps<C>::is_zero(total.back())) total.pop_back();
        return total;
    }

    std::size_t column_count() const { return columns_.size(); }
    std::size_t entry_count() const {
        std::size_t s = 0;
        for (const auto& [w, c] : columns_) s += c->keys.size();
        return s;
    }
    std::size_t universe_size() const { return universe_.size(); }

private:
    const Column<C>& ensure(const Packed& y) {
        universe_.add_downset(y);
        return ensure_column(y);
    }

    std::uint32_t lookup(const Column<C>& col, Packed x) const {
        x = raise_to_extremal(x, col.left_mask, col.right_mask);
        auto it = std::lower_bound(col.keys.begin(), col.keys.end(), x.word);
        if (it == col.keys.end() || *it != x.word) return PolyStore<C>::kZero;
        return col.polys[static_cast<std::size_t>(it - col.keys.begin())];
    }

    Column<C>& ensure_column(const Packed& y) {
        if (auto it = columns_.find(y.word); it != columns_.end()) return *it->second;

        const std::uint32_t yid = universe_.id(y.word);
        auto col = std::make_unique<Column<C>>();
        col->y = y;
        col->length = universe_.length(yid);
        col->left_mask = universe_.left_mask(yid);
        col->right_mask = universe_.right_mask(yid);

        if (col->length == 0) {
            col->keys.push_back(y.word);
            col->polys.push_back(PolyStore<C>::kOne);
            return *columns_.emplace(y.word, std::move(col)).first->second;
        }

        const int s = std::countr_zero(col->left_mask);
        const Packed v = left_mul(y, s);
        Column<C>& vcol = ensure_column(v);
        ensure_mu(vcol);
        std::vector<const Column<C>*> zcols;
        std::vector<const MuEntry<C>*> zmu;
        for (const auto& e : vcol.mu) {
            if (!left_descent(e.z, s)) continue;
            zcols.push_back(&ensure_column(e.z));
            zmu.push_back(&e);
        }

        const std::vector<std::uint32_t> cand = candidates(yid, *col);
        const int ly = col->length;
        std::vector<std::vector<C>> values(cand.size());
        std::vector<char> trivial(cand.size(), 0);
        std::exception_ptr failure;
        std::atomic<bool> failed{false};

#pragma omp parallel for schedule(dynamic, 64) num_threads(threads_)
        for (std::size_t k = 0; k < cand.size(); ++k) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                const std::uint32_t xid = cand[k];
                const int lx = universe_.length(xid);
                if (ly - lx <= 2) {
                    trivial[k] = 1;
                    continue;
                }
                values[k] = entry(universe_.elem(xid), lx, ly, s, vcol, zcols, zmu);
            } catch (...) {
#pragma omp critical(klforge_column_failure)
                if (!failure) failure = std::current_exception();
                failed = true;
            }
        }
        if (failure) std::rethrow_exception(failure);

        std::vector<std::pair<std::uint64_t, std::uint32_t>> rows;
        rows.reserve(cand.size());
        for (std::size_t k = 0; k < cand.size(); ++k) {
            const std::uint32_t pid = trivial[k] ? PolyStore<C>::kOne : store_.intern(std::move(values[k]));
            if (pid != PolyStore<C>::kZero) rows.emplace_back(universe_.elem(cand[k]).word, pid);
        }
        std::sort(rows.begin(), rows.end());
        col->keys.reserve(rows.size());
        col->polys.reserve(rows.size());
        for (const auto& [w, p] : rows) {
            col->keys.push_back(w);
            col->polys.push_back(p);
        }
        return *columns_.emplace(y.word, std::move(col)).first->second;
    }

    /// Extremal x <= y, gathered in parallel per length.
    std::vector<std::uint32_t> candidates(std::uint32_t yid, const Column<C>& col) const {
        std::vector<std::uint32_t> out;
        for (int l = 0; l <= col.length; ++l) {
            const auto& bucket = universe_.of_length(l);
            std::vector<char> keep(bucket.size(), 0);
#pragma omp parallel for schedule(static) num_threads(threads_) if (bucket.size() > 4096)
            for (std::size_t k = 0; k < bucket.size(); ++k) {
                const std::uint32_t x = bucket[k];
                if ((universe_.left_mask(x) & col.left_mask) != col.left_mask) continue;
                if ((universe_.right_mask(x) & col.right_mask) != col.right_mask) continue;
                keep[k] = universe_.leq(x, yid);
            }
            for (std::size_t k = 0; k < bucket.size(); ++k)
                if (keep[k]) out.push_back(bucket[k]);
        }
        return out;
    }

    static void accumulate(std::vector<C>& acc, const std::vector<C>& p, std::size_t shift, const C& factor) {
        for (std::size_t i = 0; i < p.size(); ++i) CoeffOps<C>::add_mul(acc[i + shift], p[i], factor);
    }

    std::vector<C> entry(const Packed& x, int lx, int ly, int s, const Column<C>& vcol,
                         const std::vector<const Column<C>*>& zcols,
                         const std::vector<const MuEntry<C>*>& zmu) const {
        std::vector<C> acc(static_cast<std::size_t>((ly - lx) / 2 + 2), C(0));
        const C one(1);
        accumulate(acc, store_[lookup(vcol, left_mul(x, s))], 0, one);
        accumulate(acc, store_[lookup(vcol, x)], 1, one);
        for (std::size_t k = 0; k < zcols.size(); ++k) {
            const MuEntry<C>& e = *zmu[k];
            if (e.length < lx) continue;
            const auto& p = store_[lookup(*zcols[k], x)];
            if (p.empty()) continue;
            accumulate(acc, p, static_cast<std::size_t>((ly - e.length) / 2), C(-e.mu));
        }
        while (!acc.empty() && CoeffOps<C>::is_zero(acc.back())) acc.pop_back();
        if (!acc.empty() && static_cast<int>(acc.size()) - 1 > (ly - lx - 1) / 2)
            throw std::logic_error("KL recursion produced a polynomial above the degree bound");
        return acc;
    }

    void ensure_mu(Column<C>& col) {
        if (col.mu_ready) return;
        std::unordered_set<std::uint64_t> seen;
        for (std::size_t k = 0; k < col.keys.size(); ++k) {
            if (col.keys[k] == col.y.word) continue;
            const std::uint32_t zid = universe_.id(col.keys[k]);
            const int d = col.length - universe_.length(zid);
            if (d % 2 == 0) continue;
            const auto& p = store_[col.polys[k]];
            const auto top = static_cast<std::size_t>((d - 1) / 2);
            if (p.size() <= top || CoeffOps<C>::is_zero(p[top])) continue;
            col.mu.push_back({universe_.elem(zid), universe_.length(zid), p[top]});
        }
        auto add_neighbour = [&](const Packed& z) {
            if (seen.insert(z.word).second) col.mu.push_back({z, col.length - 1, C(1)});
        };
        for (std::uint32_t m = col.left_mask; m; m &= m - 1) add_neighbour(left_mul(col.y, std::countr_zero(m)));
        for (std::uint32_t m = col.right_mask; m; m &= m - 1) add_neighbour(right_mul(col.y, std::countr_zero(m)));
        col.mu_ready = true;
    }

    int n_;
    int threads_ = 1;
    Universe universe_;
    PolyStore<C> store_;
    std::unordered_map<std::uint64_t, std::unique_ptr<Column<C>>> columns_;
};

}  // namespace klforge::detail

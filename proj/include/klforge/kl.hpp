#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "klforge/poly.hpp"
#include "klforge/symgroup.hpp"

namespace klforge {

/// Memoized Kazhdan-Lusztig polynomials P_{x,y}(q) on S_n, n <= 16.
///
/// Values are computed column by column with an OpenMP-parallel fill and kept
/// in a memo keyed up to the symmetries P_{x,y} = P_{x^-1,y^-1} =
/// P_{w0 x w0, w0 y w0}. An optional JSON-lines file persists the memo.
class KLTable {
public:
    explicit KLTable(int threads = 1);
    ~KLTable();
    KLTable(const KLTable&) = delete;
    KLTable& operator=(const KLTable&) = delete;

    /// Loads existing records and appends new ones. Corrupt trailing records
    /// are truncated away.
    void attach_cache(const std::filesystem::path& path);
    void flush();

    void set_threads(int threads);
    int threads() const { return threads_; }

    /// P_{x,y} in the v-view (q = v^-2); zero when x is not below y.
    LaurentPoly kl_poly(const Permutation& x, const Permutation& y);

    /// Sum over xs of (-1)^{l(x)} P_{x,y}, evaluated in one parallel pass over
    /// the column of y. Bypasses the memo.
    LaurentPoly signed_kl_sum(const std::vector<Permutation>& xs, const Permutation& y);

    std::size_t memo_size() const;
    std::size_t records_loaded() const { return loaded_; }

private:
    struct Engines;
    using Key = std::tuple<int, std::vector<int>, std::vector<int>>;

    static Key normalize(const Permutation& x, const Permutation& y);
    QCoeffs compute(const Permutation& x, const Permutation& y);
    template <class F>
    QCoeffs with_engine(int n, F&& f);
    void persist(const Key& key, const QCoeffs& value);

    int threads_;
    std::unique_ptr<Engines> engines_;
    mutable std::shared_mutex memo_mutex_;
    std::map<Key, QCoeffs> memo_;
    std::mutex file_mutex_;
    std::filesystem::path cache_path_;
    std::unique_ptr<std::FILE, int (*)(std::FILE*)> cache_file_{nullptr, &std::fclose};
    std::size_t loaded_ = 0;
};

/// Serial memoized pair recursion on the full Bruhat interval; independent of
/// KLTable and used as its test oracle and benchmark baseline.
class ReferenceKL {
public:
    LaurentPoly kl_poly(const Permutation& x, const Permutation& y);
    std::size_t memo_size() const { return memo_.size(); }

private:
    const QCoeffs& get(const Permutation& x, const Permutation& y);
    std::map<std::pair<Permutation, Permutation>, QCoeffs> memo_;
};

LaurentPoly kl_poly(KLTable& table, const Permutation& x, const Permutation& y);

/// P^q for the cosets of t_m(s), t_m(w) in S_{mk}/W_m: the signed sum over
/// x in W_m of P_{t_m(s) x, t_m(w)}. Throws NotComparable when t_m(s) is not
/// below t_m(w).
LaurentPoly parabolic_kl_q(KLTable& table, const Permutation& s, const Permutation& w, int m);

/// P^{-1} = P_{t_m(s) w_m, t_m(w) w_m}, w_m the longest element of W_m.
LaurentPoly parabolic_kl_neg1(KLTable& table, const Permutation& s, const Permutation& w, int m);

/// Parameter of the parabolic Hecke module: u = -1 or u = q.
enum class ParabolicParameter { minus_one, q };

/// Parabolic KL polynomial of minimal coset representatives u <= w of
/// S_n / W_J, from the R-polynomial recursion of the parabolic Hecke module.
LaurentPoly deodhar_parabolic_kl(const Permutation& u, const Permutation& w,
                                 const ParabolicShape& shape, ParabolicParameter parameter);

/// deodhar_parabolic_kl on t_m(s), t_m(w), W_m with the parameter whose
/// polynomials are the signed sums of parabolic_kl_q.
LaurentPoly parabolic_kl_deodhar(const Permutation& s, const Permutation& w, int m);

/// Sum over s <= x <= w of (-1)^{l(x)-l(s)} P_{s,x} P_{w0 w, w0 x} equals
/// the Kronecker delta of (s, w).
bool kl_inversion_check(KLTable& table, const Permutation& s, const Permutation& w);

}  // namespace klforge

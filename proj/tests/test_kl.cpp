#include <doctest.h>

#include "test_support.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "klforge/errors.hpp"
#include "klforge/kl.hpp"
#include "oracles.hpp"

using namespace klforge;

namespace {

QCoeffs to_q(const std::map<int, long long>& m) {
    QCoeffs out;
    for (const auto& [e, c] : m) out[e] = Integer(static_cast<long>(c));
    return out;
}

LaurentPoly one_plus_q() { return LaurentPoly(1) + LaurentPoly::q(); }

}  // namespace

TEST_CASE("kl_poly small values") {
    KLTable table;
    const Permutation e4 = Permutation::identity(4);
    CHECK(kl_poly(table, Permutation{3, 4, 1, 2}, Permutation{3, 4, 1, 2}).is_one());
    for (const auto& x : all_permutations(3))
        for (const auto& y : all_permutations(3)) {
            const auto p = kl_poly(table, x, y);
            CHECK((bruhat_leq(x, y) ? p.is_one() : p.is_zero()));
        }
    CHECK(kl_poly(table, e4, Permutation{3, 4, 1, 2}) == one_plus_q());
    CHECK(kl_poly(table, Permutation{2, 1, 3}, Permutation{1, 2, 3}).is_zero());
}

TEST_CASE("column engine and serial reference agree with the Hecke-algebra oracle") {
    for (int n = 1; n <= 5; ++n) {
        const oracle::HeckeKL hecke(n);
        KLTable table(2);
        ReferenceKL ref;
        const auto all = all_permutations(n);
        for (const auto& x : all)
            for (const auto& y : all) {
                const LaurentPoly expected = LaurentPoly::from_q(to_q(hecke.P(x.word(), y.word())));
                CHECK(table.kl_poly(x, y) == expected);
                CHECK(ref.kl_poly(x, y) == expected);
            }
    }
}

TEST_CASE("column engine matches the serial reference on S6 columns") {
    KLTable table(4);
    ReferenceKL ref;
    const std::vector<Permutation> tops{Permutation::longest(6), Permutation{4, 6, 2, 5, 1, 3},
                                        Permutation{3, 4, 5, 6, 1, 2}, Permutation{5, 6, 3, 4, 1, 2}};
    for (const auto& y : tops)
        for (const auto& x : enumerate_interval(Permutation::identity(6), y)) CHECK(table.kl_poly(x, y) == ref.kl_poly(x, y));
}

TEST_CASE("structural properties on S5") {
    KLTable table;
    const auto all = all_permutations(5);
    const auto w0 = Permutation::longest(5);
    for (const auto& x : all)
        for (const auto& y : all) {
            const auto p = table.kl_poly(x, y);
            if (!bruhat_leq(x, y)) {
                CHECK(p.is_zero());
                continue;
            }
            const auto q = p.as_q_polynomial();
            CHECK(q.at(0) == 1);
            for (const auto& [d, c] : q) CHECK(c > 0);
            if (x != y) CHECK(2 * q.rbegin()->first <= y.length() - x.length() - 1);
            CHECK(table.kl_poly(x.inverse(), y.inverse()) == p);
            CHECK(table.kl_poly(w0 * x * w0, w0 * y * w0) == p);
        }
}

TEST_CASE("column engine agrees with the Hecke-algebra oracle on S6") {
    const oracle::HeckeKL hecke(6);
    KLTable table(4);
    const auto all = all_permutations(6);
    for (std::size_t j = 0; j < all.size(); j += 7)
        for (const auto& x : all) {
            const auto& y = all[j];
            CHECK(table.kl_poly(x, y) == LaurentPoly::from_q(to_q(hecke.P(x.word(), y.word()))));
        }
    CHECK(table.kl_poly(Permutation::identity(7), Permutation::longest(7)).is_one());
}

TEST_CASE("kl inversion identity") {
    KLTable table;
    CHECK(kl_inversion_check(table, Permutation{2, 1, 3}, Permutation{2, 1, 3}));
    for (const auto& x : all_permutations(4))
        for (const auto& y : all_permutations(4))
            if (bruhat_leq(x, y)) CHECK(kl_inversion_check(table, x, y));
    std::mt19937 rng(2024);
    const auto all5 = all_permutations(5);
    std::uniform_int_distribution<std::size_t> pick(0, all5.size() - 1);
    int done = 0;
    while (done < 200) {
        const auto& x = all5[pick(rng)];
        const auto& y = all5[pick(rng)];
        if (!bruhat_leq(x, y)) continue;
        CHECK(kl_inversion_check(table, x, y));
        ++done;
    }
}

TEST_CASE("parabolic polynomials") {
    KLTable table;
    const Permutation e{1, 2}, s{2, 1};
    CHECK(parabolic_kl_q(table, s, s, 3).is_one());
    CHECK(parabolic_kl_q(table, e, s, 2) == LaurentPoly::q());
    CHECK(parabolic_kl_q(table, e, s, 3) == LaurentPoly::q(3));
    CHECK(parabolic_kl_neg1(table, e, s, 1).is_one());
    CHECK(parabolic_kl_neg1(table, e, s, 2) == table.kl_poly(Permutation{2, 1, 4, 3}, Permutation{4, 3, 2, 1}));
    CHECK_THROWS_AS(parabolic_kl_q(table, s, e, 2), NotComparable);
    CHECK_THROWS_AS(parabolic_kl_neg1(table, s, e, 2), NotComparable);
}

TEST_CASE("signed coset sums equal the parabolic module recursion") {
    KLTable table;
    for (int k = 1; k <= 3; ++k)
        for (int m = 1; m <= 2; ++m)
            for (const auto& s : all_permutations(k))
                for (const auto& w : all_permutations(k)) {
                    if (!bruhat_leq(replicate_perm(s, m), replicate_perm(w, m))) continue;
                    CHECK(parabolic_kl_deodhar(s, w, m) == parabolic_kl_q(table, s, w, m));
                }
}

TEST_CASE("the u=-1 module recursion gives the shifted ordinary polynomial") {
    KLTable table;
    for (int k = 2; k <= 3; ++k)
        for (const auto& s : all_permutations(k))
            for (const auto& w : all_permutations(k)) {
                if (!bruhat_leq(s, w)) continue;
                const auto shape = ParabolicShape::uniform(k, 2);
                const auto ts = replicate_perm(s, 2), tw = replicate_perm(w, 2);
                CHECK(deodhar_parabolic_kl(ts, tw, shape, ParabolicParameter::minus_one) == parabolic_kl_neg1(table, s, w, 2));
            }
}

TEST_CASE("cache persistence survives reload and truncates a corrupt tail") {
    const auto path = std::filesystem::temp_directory_path() / "klforge_test_cache.jsonl";
    std::filesystem::remove(path);
    const Permutation e4 = Permutation::identity(4), y{3, 4, 1, 2}, y6{4, 5, 6, 1, 2, 3};
    LaurentPoly first;
    {
        KLTable table;
        table.attach_cache(path);
        CHECK(table.kl_poly(e4, y) == one_plus_q());
        first = table.kl_poly(Permutation::identity(6), y6);
    }
    const auto good_size = std::filesystem::file_size(path);
    {
        std::ofstream out(path, std::ios::app);
        out << "{\"n\":4,\"s\":[1,2,3";
    }
    {
        KLTable table;
        table.attach_cache(path);
        CHECK(table.records_loaded() == 2);
        CHECK(std::filesystem::file_size(path) == good_size);
        CHECK(table.memo_size() == 2);
        CHECK(table.kl_poly(e4, y) == one_plus_q());
        CHECK(table.memo_size() == 2);
        CHECK(table.kl_poly(Permutation::identity(6), y6) == first);
    }
    std::filesystem::remove(path);
}

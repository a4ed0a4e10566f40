#include <doctest.h>

#include "test_support.hpp"

#include <set>

#include "klforge/errors.hpp"
#include "klforge/symgroup.hpp"
#include "oracles.hpp"

using namespace klforge;

TEST_CASE("length") {
    CHECK(length(Permutation::identity(4)) == 0);
    CHECK(length(Permutation{3, 2, 1}) == 3);
    CHECK(length(Permutation{3, 4, 1, 2}) == 4);
    for (const auto& w : all_permutations(5)) CHECK(w.length() == oracle::inversions(w.word()));
}

TEST_CASE("products compose as functions") {
    const Permutation x{2, 3, 1}, y{1, 3, 2};
    const Permutation xy = x * y;
    for (int i = 1; i <= 3; ++i) CHECK(xy(i) == x(y(i)));
    CHECK(Permutation{3, 1, 2}.right_mul_simple(1) == Permutation{1, 3, 2});
    CHECK(Permutation{3, 1, 2}.left_mul_simple(1) == Permutation{3, 2, 1});
}

TEST_CASE("parse") {
    CHECK(parse_permutation("3,4,1,2") == Permutation{3, 4, 1, 2});
    CHECK_THROWS_AS(parse_permutation("1,1"), InvalidArgument);
    CHECK_THROWS_AS(parse_permutation("1,x"), InvalidArgument);
    CHECK_THROWS_AS(parse_permutation("2,3"), InvalidArgument);
}

TEST_CASE("bruhat order") {
    for (const auto& w : all_permutations(4)) CHECK(bruhat_leq(Permutation::identity(4), w));
    CHECK_FALSE(bruhat_leq(Permutation{3, 2, 1}, Permutation{2, 1, 3}));
    CHECK(bruhat_leq(Permutation{2, 1, 3, 4}, Permutation{3, 4, 1, 2}));
}

TEST_CASE("bruhat order matches the subword criterion on S4") {
    const auto all = all_permutations(4);
    for (const auto& x : all)
        for (const auto& y : all) CHECK(bruhat_leq(x, y) == oracle::bruhat_subword(x.word(), y.word()));
}

TEST_CASE("coset representatives") {
    const auto blocks22 = ParabolicShape({2, 2});
    CHECK(min_coset_rep(Permutation::identity(4), blocks22) == Permutation::identity(4));
    CHECK(min_coset_rep(Permutation{2, 1, 4, 3}, blocks22) == Permutation::identity(4));
    CHECK(min_coset_rep(Permutation{4, 3, 1, 2}, blocks22) == Permutation{3, 4, 1, 2});

    const auto s1 = ParabolicShape({2, 1});
    CHECK(min_double_coset_rep(Permutation::identity(3), s1, s1) == Permutation::identity(3));
    CHECK(min_double_coset_rep(Permutation{2, 1, 3}, ParabolicShape({2, 1}), ParabolicShape({1, 2})) ==
          Permutation::identity(3));
    CHECK(min_double_coset_rep(Permutation{3, 4, 1, 2}, blocks22, blocks22) == Permutation{3, 4, 1, 2});
}

TEST_CASE("coset representatives are shortest and factor w") {
    for (const auto& shape : {ParabolicShape({2, 2}), ParabolicShape({1, 3}), ParabolicShape({2, 1, 2})}) {
        const auto sub = shape.elements();
        for (const auto& w : all_permutations(shape.n())) {
            const auto rep = min_coset_rep(w, shape);
            bool found = false;
            for (const auto& u : sub) {
                CHECK((w * u).length() >= rep.length());
                if (rep * u == w) {
                    found = true;
                    CHECK(w.length() == rep.length() + u.length());
                }
            }
            CHECK(found);

            const auto dc = double_coset_elements(w, shape, shape);
            const auto drep = min_double_coset_rep(w, shape, shape);
            std::set<Permutation> brute;
            for (const auto& a : sub)
                for (const auto& b : sub) brute.insert(a * w * b);
            CHECK(std::set<Permutation>(dc.begin(), dc.end()) == brute);
            for (const auto& x : brute) CHECK(x.length() >= drep.length());
            CHECK(brute.count(drep) == 1);
        }
    }
}

TEST_CASE("replicate_perm") {
    CHECK(replicate_perm(Permutation{1, 2}, 2) == Permutation{1, 2, 3, 4});
    CHECK(replicate_perm(Permutation{2, 1}, 2) == Permutation{3, 4, 1, 2});
    CHECK(replicate_perm(Permutation{2, 1}, 3) == Permutation{4, 5, 6, 1, 2, 3});
    for (int k = 1; k <= 4; ++k) {
        const auto w0k = Permutation::longest(k);
        for (int m = 1; m <= 3; ++m) {
            const auto wm = ParabolicShape::uniform(k, m).longest();
            CHECK(replicate_perm(w0k, m) * wm == Permutation::longest(m * k));
            for (const auto& t : all_permutations(k)) {
                const auto tm = replicate_perm(t, m);
                CHECK(tm.length() == m * m * t.length());
                CHECK(replicate_perm(t * w0k, m) == tm * replicate_perm(w0k, m));
                CHECK(min_coset_rep(tm, ParabolicShape::uniform(k, m)) == tm);
            }
        }
    }
}

TEST_CASE("pattern avoidance") {
    const Permutation p213{2, 1, 3};
    CHECK(is_pattern_avoiding(Permutation::identity(5), p213));
    CHECK_FALSE(is_pattern_avoiding(p213, p213));
    CHECK(is_pattern_avoiding(Permutation{2, 3, 1}, p213));
    const int catalan[] = {1, 1, 2, 5, 14, 42};
    for (int k = 1; k <= 5; ++k) {
        int count = 0;
        for (const auto& w : all_permutations(k)) count += is_pattern_avoiding(w, p213);
        CHECK(count == catalan[k]);
    }
}

TEST_CASE("intervals") {
    const Permutation w{3, 4, 1, 2};
    CHECK(enumerate_interval(w, w) == std::vector<Permutation>{w});
    CHECK(enumerate_interval(Permutation::identity(3), Permutation::longest(3)).size() == 6);
    CHECK(enumerate_interval(Permutation::identity(4), w).size() == 14);
    CHECK_THROWS_AS(enumerate_interval(Permutation{3, 2, 1}, Permutation{2, 1, 3}), EmptyInterval);
    const auto all = all_permutations(4);
    for (const auto& x : all)
        for (const auto& y : all) {
            if (!bruhat_leq(x, y)) continue;
            std::size_t brute = 0;
            for (const auto& z : all) brute += bruhat_leq(x, z) && bruhat_leq(z, y);
            CHECK(enumerate_interval(x, y).size() == brute);
        }
}

TEST_CASE("coatoms are exactly the elements covered in Bruhat order") {
    const auto all = all_permutations(4);
    for (const auto& w : all) {
        std::set<Permutation> brute;
        for (const auto& x : all)
            if (x.length() + 1 == w.length() && oracle::bruhat_subword(x.word(), w.word())) brute.insert(x);
        const auto c = coatoms(w);
        CHECK(std::set<Permutation>(c.begin(), c.end()) == brute);
    }
}

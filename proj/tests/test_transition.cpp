#include <doctest.h>

#include "test_support.hpp"

#include <set>

#include "klforge/errors.hpp"
#include "klforge/transition.hpp"

using namespace klforge;

namespace {

LaurentPoly v(int e) { return LaurentPoly::v(e); }

std::vector<BiSequence> strongly_regular_families(int kmax) {
    std::vector<BiSequence> out;
    for (int k = 1; k <= kmax; ++k)
        for (const auto& w : all_permutations(k))
            if (is_pattern_avoiding(w, Permutation{2, 1, 3})) out.push_back(construct_strongly_regular(w));
    return out;
}

/// Every u*s*x with u permuting values inside value blocks and x permuting
/// positions inside position blocks.
std::set<Permutation> brute_coset(const Permutation& s, const ParabolicShape& values, const ParabolicShape& positions) {
    std::set<Permutation> out;
    for (const auto& u : values.elements())
        for (const auto& x : positions.elements()) out.insert(u * s * x);
    return out;
}

}  // namespace

TEST_CASE("endomorphism dimension") {
    CHECK(endomorphism_dimension(Multisegment{}) == 0);
    CHECK(endomorphism_dimension(Multisegment{{1, 7}}) == 1);
    CHECK(endomorphism_dimension(Multisegment{{1, 7}, {5, 5}}) == 2);
    CHECK(endomorphism_dimension(Multisegment{{1, 5}, {5, 7}}) == 3);
    CHECK(endomorphism_dimension(Multisegment{{1, 2}, {1, 2}}) == 4);
}

TEST_CASE("family shape") {
    const BiSequence A({1, 5}, {7, 5});
    const Family f(A);
    CHECK(f.replication() == 1);
    CHECK(f.index() == std::vector<Permutation>{{1, 2}, {2, 1}});
    const Family g(replicate(A, 2));
    CHECK(g.replication() == 2);
    CHECK(g.base() == A);
    CHECK(g.index().size() == 3);
    CHECK_THROWS_AS(Family(BiSequence({1, 3}, {3, 2})), UnsupportedFamily);
    CHECK_THROWS_AS(Family(BiSequence({1, 1, 5}, {7, 5, 5})), UnsupportedFamily);
}

TEST_CASE("family index is the set of minimal representatives above sigma0") {
    for (const auto& B : strongly_regular_families(3))
        for (int m = 1; m <= 2; ++m) {
            const BiSequence A = replicate(B, m);
            const Family f(A);
            std::set<Permutation> expected;
            for (const auto& w : all_permutations(A.k())) {
                const Permutation r = min_double_coset_rep(w, A.right_shape(), A.left_shape());
                if (dominates_sigma0(A, r)) expected.insert(r);
            }
            CHECK(std::set<Permutation>(f.index().begin(), f.index().end()) == expected);
            for (const auto& s : f.index()) {
                const auto members = f.coset(s);
                CHECK(std::set<Permutation>(members.begin(), members.end()) ==
                      brute_coset(s, A.right_shape(), A.left_shape()));
            }
        }
}

TEST_CASE("codimension on replicated cosets") {
    for (const auto& B : strongly_regular_families(3))
        for (int m = 1; m <= 3 && m * B.k() <= 9; ++m) {
            const Family f(replicate(B, m));
            const Family base(B);
            for (const auto& s : base.index())
                for (const auto& w : base.index())
                    if (bruhat_leq(s, w))
                        CHECK(f.codimension(replicate_perm(s, m), replicate_perm(w, m)) ==
                              m * m * (w.length() - s.length()));
        }
}

TEST_CASE("expansions in rank two") {
    KLTable table;
    const BiSequence A({1, 5}, {7, 5});
    const Permutation e{1, 2}, s{2, 1};

    CHECK(expand_E_in_G(table, A, e) == Expansion{{e, LaurentPoly(1)}});
    CHECK(expand_G_in_E(table, A, e) == Expansion{{e, LaurentPoly(1)}});
    CHECK(expand_E_in_G(table, A, s) == Expansion{{s, LaurentPoly(1)}, {e, v(1)}});
    CHECK(expand_G_in_E(table, A, s) == Expansion{{s, LaurentPoly(1)}, {e, -v(1)}});

    const BiSequence A2 = replicate(A, 2);
    const Expansion g2 = expand_G_in_E(table, A2, replicate_perm(s, 2));
    CHECK(g2.at(Permutation{1, 2, 3, 4}) == v(2));
}

TEST_CASE("expansion at sigma0 is a single term") {
    KLTable table;
    for (const auto& B : strongly_regular_families(3)) {
        const Permutation s0 = sigma0(B);
        CHECK(expand_E_in_G(table, B, s0) == Expansion{{s0, LaurentPoly(1)}});
        CHECK(expand_G_in_E(table, B, s0) == Expansion{{s0, LaurentPoly(1)}});
    }
}

TEST_CASE("longest element of a rank three family") {
    KLTable table;
    const BiSequence A({1, 2, 3}, {8, 7, 6});
    const Permutation w0 = Permutation::longest(3);
    const Expansion e = expand_E_in_G(table, A, w0);
    CHECK(e.size() == 6);
    for (const auto& [s, c] : e) CHECK(c == v(3 - s.length()));
}

TEST_CASE("expansion errors") {
    KLTable table;
    const BiSequence A = construct_strongly_regular(Permutation{2, 3, 1});
    CHECK_THROWS_AS(expand_E_in_G(table, A, Permutation{1, 2, 3}), BelowSigma0);
    CHECK_THROWS_AS(expand_G_in_E(table, BiSequence({1, 3}, {3, 2}), Permutation{2, 1}), UnsupportedFamily);
}

TEST_CASE("G to E coefficients against a brute-force coset sum") {
    KLTable table;
    ReferenceKL ref;
    for (const auto& B : strongly_regular_families(2)) {
        const BiSequence A = replicate(B, 2);
        const Family f(A);
        for (const auto& w : f.index()) {
            const Expansion got = expand_G_in_E(table, A, w);
            for (const auto& s : f.index()) {
                LaurentPoly sum;
                for (const auto& x : brute_coset(s, A.right_shape(), A.left_shape())) {
                    LaurentPoly term = ref.kl_poly(x, w);
                    if ((x.length() + w.length()) % 2 != 0) term = -term;
                    sum += term;
                }
                sum.shift(f.codimension(s, w));
                auto it = got.find(s);
                CHECK((it == got.end() ? LaurentPoly() : it->second) == sum);
            }
        }
    }
}

TEST_CASE("transition matrices are triangular and mutually inverse") {
    KLTable table;
    for (const auto& B : strongly_regular_families(3))
        for (int m = 1; m <= 2; ++m) {
            const BiSequence A = replicate(B, m);
            const TransitionMatrix eg = transition_matrix(table, A, Direction::e_in_g);
            const TransitionMatrix ge = transition_matrix(table, A, Direction::g_in_e);
            CHECK((eg * ge).is_identity());
            CHECK((ge * eg).is_identity());
            for (const auto* M : {&eg, &ge})
                for (std::size_t i = 0; i < M->index.size(); ++i)
                    for (std::size_t j = 0; j < M->index.size(); ++j) {
                        if (i == j) CHECK(M->entries[i][j].is_one());
                        if (!bruhat_leq(M->index[i], M->index[j])) CHECK(M->entries[i][j].is_zero());
                    }
        }
}

TEST_CASE("closed-form coefficients match the replicated expansions") {
    KLTable table;
    const int m = 2;
    for (const auto& B : strongly_regular_families(3)) {
        const BiSequence A = replicate(B, m);
        const Family base(B);
        for (const auto& w : base.index()) {
            const Permutation tw = replicate_perm(w, m);
            const Expansion eg = expand_E_in_G(table, A, tw);
            const Expansion ge = expand_G_in_E(table, A, tw);
            for (const auto& s : base.index()) {
                if (!bruhat_leq(s, w)) {
                    CHECK_THROWS_AS(coeff_parab(table, B, s, w, m, Direction::e_in_g), NotComparable);
                    continue;
                }
                const Permutation ts = replicate_perm(s, m);
                auto get = [&](const Expansion& x) {
                    auto it = x.find(ts);
                    return it == x.end() ? LaurentPoly() : it->second;
                };
                CHECK(coeff_parab(table, B, s, w, m, Direction::e_in_g) == get(eg));
                CHECK(coeff_parab(table, B, s, w, m, Direction::g_in_e) == get(ge));
            }
        }
    }
}

TEST_CASE("coeff_parab examples") {
    KLTable table;
    const BiSequence A({1, 5}, {7, 5});
    const Permutation e{1, 2}, s{2, 1};
    for (auto d : {Direction::e_in_g, Direction::g_in_e}) {
        CHECK(coeff_parab(table, A, s, s, 2, d).is_one());
        CHECK(coeff_parab(table, A, e, e, 3, d).is_one());
    }
    CHECK(coeff_parab(table, A, e, s, 2, Direction::g_in_e) == v(2));
    CHECK(coeff_parab(table, A, e, s, 2, Direction::e_in_g) ==
          v(4) * parabolic_kl_neg1(table, s * s, e * s, 2));
    const BiSequence C = construct_strongly_regular(Permutation{2, 3, 1});
    CHECK_THROWS_AS(coeff_parab(table, C, Permutation{1, 2, 3}, Permutation{3, 2, 1}, 2, Direction::e_in_g),
                    BelowSigma0);
}

TEST_CASE("powers of dual canonical elements") {
    KLTable table;
    const BiSequence A({1, 5}, {7, 5});
    const Family f(A);
    const Permutation e{1, 2}, s{2, 1};
    CHECK(g_star_power_in_E(table, A, s, 1) == to_pbw(f, expand_G_in_E(table, A, s)));
    const Multisegment doubled = multisegment_of(replicate(A, 2), replicate_perm(e, 2));
    CHECK(g_star_power_in_E(table, A, e, 2) == PBWElement::basis(doubled, v(-2)));
}

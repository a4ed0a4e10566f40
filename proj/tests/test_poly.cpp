#include <doctest.h>

#include "test_support.hpp"

#include <random>

#include "klforge/errors.hpp"
#include "klforge/json_io.hpp"
#include "klforge/poly.hpp"

using namespace klforge;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-5, 5), coef(-4, 4), terms(0, 4);
    LaurentPoly p;
    for (int t = terms(rng); t > 0; --t) p.add_term(exp(rng), coef(rng));
    return p;
}

}  // namespace

TEST_CASE("addition cancels and drops zero terms") {
    const LaurentPoly v = LaurentPoly::v();
    CHECK((v + 1) + (-v) == LaurentPoly(1));
    CHECK(((v + 1) + (-v)).size() == 1);
    const LaurentPoly p = LaurentPoly(1) + LaurentPoly::q();
    CHECK(LaurentPoly() + p == p);
    CHECK(p + 1 == LaurentPoly(2) + LaurentPoly::v(-2));
}

TEST_CASE("multiplication") {
    const LaurentPoly p = LaurentPoly::v(-1) - LaurentPoly::v();
    CHECK(p * LaurentPoly::v() == LaurentPoly(1) - LaurentPoly::v(2));
    CHECK(p * 1 == p);
    CHECK(LaurentPoly::v(3) * LaurentPoly::v(-7) == LaurentPoly::v(-4));
}

TEST_CASE("q-view") {
    const QCoeffs one_plus_q = (LaurentPoly(1) + LaurentPoly::v(-2)).as_q_polynomial();
    CHECK(one_plus_q == QCoeffs{{0, 1}, {1, 1}});
    CHECK(LaurentPoly::v(-4).as_q_polynomial() == QCoeffs{{2, 1}});
    CHECK_THROWS_AS(LaurentPoly::v(1).as_q_polynomial(), NotAQPolynomial);
    CHECK_THROWS_AS(LaurentPoly::v(2).as_q_polynomial(), NotAQPolynomial);
    CHECK((LaurentPoly(1) + LaurentPoly::q()).to_q_string() == "1+q");
    CHECK((LaurentPoly(1) - 2 * LaurentPoly::q(3)).to_q_string() == "1-2q^3");
    CHECK(LaurentPoly().to_q_string() == "0");
    CHECK((LaurentPoly::v(-2) + LaurentPoly::v(3)).to_string() == "v^-2+v^3");
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937 rng(7);
    for (int t = 0; t < 300; ++t) {
        const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        const auto ab = a * b;
        for (const auto& [e, k] : ab.coeffs()) CHECK(k != 0);
    }
}

TEST_CASE("as_q_polynomial inverts the q-embedding") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> exp(0, 6), coef(-9, 9);
    for (int t = 0; t < 200; ++t) {
        QCoeffs q;
        for (int i = 0; i < 4; ++i) {
            const int c = coef(rng);
            if (c != 0) q[exp(rng)] += c;
        }
        for (auto it = q.begin(); it != q.end();) it = it->second == 0 ? q.erase(it) : std::next(it);
        CHECK(LaurentPoly::from_q(q).as_q_polynomial() == q);
    }
}

TEST_CASE("json round trip with big coefficients") {
    LaurentPoly p = LaurentPoly::q(2) * Integer("123456789012345678901234567890") + LaurentPoly(-3);
    const Json j = poly_to_json(p);
    CHECK(j["var"] == "q");
    CHECK(j["coeffs"]["0"] == -3);
    CHECK(j["coeffs"]["2"].is_string());
    CHECK(poly_from_json(j) == p);
    const LaurentPoly odd = LaurentPoly::v(1) + LaurentPoly::v(-3);
    CHECK(poly_to_json(odd).dump() == R"({"var":"v","coeffs":{"-3":1,"1":1}})");
    CHECK(poly_from_json(poly_to_json(odd)) == odd);
}

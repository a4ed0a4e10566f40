#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace klforge {

using Integer = mpz_class;

/// Map from q-exponent to coefficient, the image of a LaurentPoly under q = v^-2.
using QCoeffs = std::map<int, Integer>;

/// Sparse Laurent polynomial in v with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored, so structural equality of the
/// coefficient maps is polynomial equality. Kazhdan-Lusztig polynomials live
/// in the subring Z[q] with q = v^-2 and are converted at the I/O boundary.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: integers embed as constants
    LaurentPoly(const Integer& c);  // NOLINT

    static LaurentPoly monomial(int exponent, const Integer& coeff = 1);
    static LaurentPoly v(int exponent = 1) { return monomial(exponent); }
    /// q^exponent = v^(-2 exponent).
    static LaurentPoly q(int exponent = 1) { return monomial(-2 * exponent); }
    static LaurentPoly from_q(const QCoeffs& coeffs);

    const std::map<int, Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return coeffs_.size() == 1; }
    Integer coeff(int exponent) const;
    std::size_t size() const { return coeffs_.size(); }

    /// Lowest/highest v-exponent; the polynomial must be nonzero.
    int min_exponent() const;
    int max_exponent() const;

    /// Preimage under q -> v^-2. Throws NotAQPolynomial when p is not in Z[q].
    QCoeffs as_q_polynomial() const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);
    LaurentPoly& operator*=(const Integer& scalar);
    /// Multiply in place by v^k.
    LaurentPoly& shift(int k);
    void add_term(int exponent, const Integer& coeff);

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Bar involution v -> v^-1.
    LaurentPoly bar() const;

    /// "1-v^2+3v^-1" style rendering in v, ascending exponents.
    std::string to_string() const;
    /// Rendering in q; throws NotAQPolynomial when p is not in Z[q].
    std::string to_q_string() const;

private:
    std::map<int, Integer> coeffs_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& r);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& r);
QCoeffs as_q_polynomial(const LaurentPoly& p);

/// Renders a polynomial in an arbitrary variable name, ascending exponents.
std::string render_polynomial(const std::map<int, Integer>& coeffs, const std::string& var);

}  // namespace klforge

#include "klforge/poly.hpp"

#include <sstream>

#include "klforge/errors.hpp"

namespace klforge {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) coeffs_.emplace(0, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
    if (c != 0) coeffs_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Integer& coeff) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_.emplace(exponent, coeff);
    return p;
}

LaurentPoly LaurentPoly::from_q(const QCoeffs& coeffs) {
    LaurentPoly p;
    for (const auto& [e, c] : coeffs) p.add_term(-2 * e, c);
    return p;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

Integer LaurentPoly::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent() const {
    if (coeffs_.empty()) throw InvalidArgument("min_exponent of the zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (coeffs_.empty()) throw InvalidArgument("max_exponent of the zero polynomial");
    return coeffs_.rbegin()->first;
}

QCoeffs LaurentPoly::as_q_polynomial() const {
    QCoeffs out;
    for (const auto& [e, c] : coeffs_) {
        if (e > 0 || e % 2 != 0)
            throw NotAQPolynomial("v-exponent " + std::to_string(e) + " has no preimage in Z[q]");
        out.emplace(-e / 2, c);
    }
    return out;
}

void LaurentPoly::add_term(int exponent, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.coeffs_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.coeffs_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, c] : coeffs_) c *= scalar;
    return *this;
}

LaurentPoly& LaurentPoly::shift(int k) {
    if (k == 0 || coeffs_.empty()) return *this;
    std::map<int, Integer> shifted;
    for (auto& [e, c] : coeffs_) shifted.emplace_hint(shifted.end(), e + k, std::move(c));
    coeffs_ = std::move(shifted);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& [e, c] : p.coeffs_) c = -c;
    return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly p;
    for (const auto& [e, c] : coeffs_) p.coeffs_.emplace(-e, c);
    return p;
}

std::string render_polynomial(const std::map<int, Integer>& coeffs, const std::string& var) {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs) {
        Integer mag = abs(c);
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str();
        os << var;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

std::string LaurentPoly::to_string() const { return render_polynomial(coeffs_, "v"); }

std::string LaurentPoly::to_q_string() const {
    const QCoeffs q = as_q_polynomial();
    return render_polynomial(std::map<int, Integer>(q.begin(), q.end()), "q");
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& r) { return p + r; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& r) { return p * r; }
QCoeffs as_q_polynomial(const LaurentPoly& p) { return p.as_q_polynomial(); }

}  // namespace klforge

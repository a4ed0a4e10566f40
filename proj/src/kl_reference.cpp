#include "klforge/kl.hpp"

namespace klforge {

namespace {

int first_left_descent(const Permutation& y) {
    for (int i = 1; i < y.size(); ++i)
        if (y.has_left_descent(i)) return i;
    return 0;
}

void add_shifted(QCoeffs& acc, const QCoeffs& p, int shift, const Integer& factor) {
    for (const auto& [e, c] : p) {
        Integer& slot = acc[e + shift];
        slot += factor * c;
        if (slot == 0) acc.erase(e + shift);
    }
}

}  // namespace

LaurentPoly ReferenceKL::kl_poly(const Permutation& x, const Permutation& y) {
    return LaurentPoly::from_q(get(x, y));
}

const QCoeffs& ReferenceKL::get(const Permutation& x, const Permutation& y) {
    static const QCoeffs zero;
    if (!bruhat_leq(x, y)) return zero;
    auto key = std::make_pair(x, y);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    QCoeffs p;
    if (x == y) {
        p[0] = 1;
    } else {
        const int s = first_left_descent(y);
        const Permutation v = y.left_mul_simple(s);
        const Permutation sx = x.left_mul_simple(s);
        if (!x.has_left_descent(s)) {
            p = get(sx, y);
        } else {
            const int ly = y.length();
            add_shifted(p, get(sx, v), 0, 1);
            add_shifted(p, get(x, v), 1, 1);
            if (bruhat_leq(x, v)) {
                for (const auto& z : enumerate_interval(x, v)) {
                    if (z == v || !z.has_left_descent(s)) continue;
                    const int d = v.length() - z.length();
                    if (d % 2 == 0) continue;
                    const QCoeffs& pzv = get(z, v);
                    auto mu = pzv.find((d - 1) / 2);
                    if (mu == pzv.end()) continue;
                    const Integer factor = -mu->second;
                    const QCoeffs pxz = get(x, z);
                    add_shifted(p, pxz, (ly - z.length()) / 2, factor);
                }
            }
        }
    }
    return memo_.emplace(std::move(key), std::move(p)).first->second;
}

}  // namespace klforge

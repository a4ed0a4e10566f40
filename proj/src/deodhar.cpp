#include <algorithm>
#include <map>

#include "klforge/errors.hpp"
#include "klforge/kl.hpp"

namespace klforge {

namespace {

class ParabolicR {
public:
    ParabolicR(const ParabolicShape& shape, ParabolicParameter parameter)
        : shape_(shape), u_(parameter == ParabolicParameter::q ? LaurentPoly::q() : LaurentPoly(-1)) {}

    bool is_min_rep(const Permutation& a) const { return min_coset_rep(a, shape_) == a; }

    const LaurentPoly& get(const Permutation& a, const Permutation& b) {
        static const LaurentPoly zero;
        static const LaurentPoly one(1);
        if (a == b) return one;
        if (!bruhat_leq(a, b)) return zero;
        auto key = std::make_pair(a, b);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        int s = 1;
        while (!b.has_left_descent(s)) ++s;
        const Permutation sa = a.left_mul_simple(s), sb = b.left_mul_simple(s);
        const LaurentPoly q_minus_one = LaurentPoly::q() - LaurentPoly(1);
        LaurentPoly r;
        if (a.has_left_descent(s)) {
            r = get(sa, sb);
        } else if (is_min_rep(sa)) {
            r = q_minus_one * get(a, sb) + LaurentPoly::q() * get(sa, sb);
        } else {
            r = (q_minus_one - u_) * get(a, sb);
        }
        return memo_.emplace(std::move(key), std::move(r)).first->second;
    }

private:
    ParabolicShape shape_;
    LaurentPoly u_;
    std::map<std::pair<Permutation, Permutation>, LaurentPoly> memo_;
};

LaurentPoly truncate_below(const LaurentPoly& p, int max_q_degree) {
    LaurentPoly out;
    for (const auto& [e, c] : p.coeffs())
        if (-e <= 2 * max_q_degree) out.add_term(e, c);
    return out;
}

}  // namespace

LaurentPoly deodhar_parabolic_kl(const Permutation& u, const Permutation& w, const ParabolicShape& shape,
                                 ParabolicParameter parameter) {
    if (u.size() != w.size() || shape.n() != w.size()) throw InvalidArgument("size mismatch");
    ParabolicR R(shape, parameter);
    if (!R.is_min_rep(u) || !R.is_min_rep(w)) throw InvalidArgument("arguments must be minimal coset representatives");
    if (!bruhat_leq(u, w)) throw NotComparable(u.to_string() + " and " + w.to_string());

    std::vector<Permutation> reps;
    for (auto& z : enumerate_interval(u, w))
        if (R.is_min_rep(z)) reps.push_back(std::move(z));
    std::sort(reps.begin(), reps.end(),
              [](const Permutation& a, const Permutation& b) { return a.length() > b.length(); });

    // q^{d} bar(P_{a,w}) - P_{a,w} = sum_{a < z <= w} R_{a,z} P_{z,w}, d = l(w) - l(a).
    std::map<Permutation, LaurentPoly> P;
    for (const auto& a : reps) {
        if (a == w) {
            P[a] = LaurentPoly(1);
            continue;
        }
        LaurentPoly rhs;
        for (const auto& [z, pz] : P)
            if (z != a && bruhat_leq(a, z)) rhs += R.get(a, z) * pz;
        const int d = w.length() - a.length();
        P[a] = -truncate_below(rhs, (d - 1) / 2);
    }
    return P.at(u);
}

LaurentPoly parabolic_kl_deodhar(const Permutation& s, const Permutation& w, int m) {
    if (m < 1) throw InvalidArgument("m must be positive");
    return deodhar_parabolic_kl(replicate_perm(s, m), replicate_perm(w, m), ParabolicShape::uniform(s.size(), m),
                                ParabolicParameter::q);
}

}  // namespace klforge

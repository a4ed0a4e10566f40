#include "klforge/verify.hpp"

#include <chrono>
#include <map>

#include "klforge/errors.hpp"
#include "klforge/transition.hpp"

namespace klforge {

namespace {

using Clock = std::chrono::steady_clock;

int choose2(int m) { return m * (m - 1) / 2; }

double since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void settle(VerificationReport& r, Clock::time_point start) {
    if (r.status != Status::skipped) r.status = r.claimed == r.computed ? Status::pass : Status::fail;
    r.elapsed_ms = since(start);
}

std::string q_string(const LaurentPoly& p) {
    try {
        return p.to_q_string();
    } catch (const NotAQPolynomial&) {
        return p.to_string();
    }
}

void require_strongly_regular(const BiSequence& A) {
    if (!is_strongly_regular(A)) throw InvalidArgument(A.to_string() + " is not strongly regular");
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "";
}

Json report_to_json(const VerificationReport& r) {
    Json c{{"k", r.k}, {"m", r.m}};
    if (r.family) c["family"] = bisequence_to_json(*r.family);
    if (r.sigma0) c["sigma0"] = perm_to_json(*r.sigma0);
    if (r.lower) c["lower"] = perm_to_json(*r.lower);
    if (r.sigma) c["sigma"] = perm_to_json(*r.sigma);
    if (r.omega) c["omega"] = perm_to_json(*r.omega);
    Json out{{"kind", r.kind}, {"case", c}};
    out["claimed"] = poly_to_json(r.claimed);
    out["computed"] = poly_to_json(r.computed);
    out["status"] = to_string(r.status);
    if (!r.reason.empty()) out["reason"] = r.reason;
    if (r.exponent) out["exponent"] = *r.exponent;
    out["elapsed_ms"] = static_cast<double>(static_cast<long long>(r.elapsed_ms * 1000)) / 1000;
    return out;
}

bool is_square_irreducible(KLTable& table, const BiSequence& A, const Permutation& s) {
    if (!A.is_regular()) throw InvalidArgument(A.to_string() + " is not regular");
    if (!dominates_sigma0(A, s)) throw BelowSigma0(s.to_string() + " for " + A.to_string());
    return table.kl_poly(sigma0(A), s).is_one();
}

VerificationReport verify_main_theorem(KLTable& table, const Permutation& s0, const Permutation& s,
                                       const Permutation& w, int m) {
    const auto start = Clock::now();
    VerificationReport r;
    r.kind = "main_theorem";
    r.k = w.size();
    r.m = m;
    r.sigma0 = s0;
    r.sigma = s;
    r.omega = w;
    auto skip = [&](const std::string& why) {
        r.reason = "HypothesisFailed: " + why;
        settle(r, start);
        return r;
    };
    if (m < 2) return skip("m must be at least 2");
    if (s0.size() != w.size() || s.size() != w.size()) return skip("permutations of different sizes");
    if (!is_pattern_avoiding(s0, Permutation{2, 1, 3})) return skip(s0.to_string() + " contains 213");
    if (!bruhat_leq(s0, s)) return skip(s0.to_string() + " is not below " + s.to_string());
    if (!bruhat_leq(s, w)) return skip(s.to_string() + " is not below " + w.to_string());
    const LaurentPoly p = table.kl_poly(s0, w);
    if (!p.is_one()) return skip("P_{sigma0,omega} = " + q_string(p));

    r.status = Status::fail;
    r.claimed = LaurentPoly::q(choose2(m) * (w.length() - s.length()));
    r.computed = parabolic_kl_q(table, s, w, m);
    settle(r, start);
    return r;
}

std::vector<VerificationReport> verify_corollary_smooth(KLTable& table, const Permutation& w, int m) {
    const auto start = Clock::now();
    const Permutation e = Permutation::identity(w.size());
    const LaurentPoly p = table.kl_poly(e, w);
    if (!p.is_one()) {
        VerificationReport r;
        r.kind = "corollary";
        r.k = w.size();
        r.m = m;
        r.omega = w;
        r.reason = "not smooth: P_{e,omega} = " + q_string(p);
        settle(r, start);
        return {r};
    }
    std::vector<VerificationReport> out;
    for (const auto& s : enumerate_interval(e, w)) {
        out.push_back(verify_main_theorem(table, e, s, w, m));
        out.back().kind = "corollary";
    }
    return out;
}

VerificationReport verify_prop1_general(KLTable&, const BiSequence& A, const Permutation& lower,
                                        const Permutation& s, const Permutation& w, int m) {
    const auto start = Clock::now();
    require_strongly_regular(A);
    if (m < 2) throw InvalidArgument("m must be at least 2");
    VerificationReport r;
    r.kind = "prop1";
    r.k = A.k();
    r.m = m;
    r.family = A;
    r.lower = lower;
    r.sigma = s;
    r.omega = w;
    r.status = Status::fail;

    const BiSequence below = replicate(A, m - 1);
    const Multisegment left = multisegment_of(below, lower);
    StraightenOptions opts;
    opts.rules = ExchangeRules::shared_endpoint;
    const PBWElement product =
        multiply(PBWElement::basis(left), PBWElement::basis(multisegment_of(A, w)), opts);
    r.computed = product.coeff(multisegment_of(replicate(A, m), replicate_perm(s, m)));
    if (w == s && left == multisegment_of(below, replicate_perm(s, m - 1)))
        r.claimed = LaurentPoly::v(A.k() * (choose2(m - 1) - choose2(m)));
    settle(r, start);
    return r;
}

VerificationReport verify_prop1(KLTable& table, const BiSequence& A, const Permutation& s, const Permutation& w,
                                int m) {
    VerificationReport r = verify_prop1_general(table, A, replicate_perm(s, m - 1), s, w, m);
    r.lower.reset();
    return r;
}

VerificationReport verify_power_identity(KLTable& table, const BiSequence& A, const Permutation& w, int m,
                                         std::optional<int> expected) {
    const auto start = Clock::now();
    require_strongly_regular(A);
    if (m < 2) throw InvalidArgument("m must be at least 2");
    if (!is_square_irreducible(table, A, w))
        throw NotSquareIrreducible("P_{sigma0,omega} = " + q_string(table.kl_poly(sigma0(A), w)) + " for " +
                                   w.to_string());
    VerificationReport r;
    r.kind = "power_identity";
    r.k = A.k();
    r.m = m;
    r.family = A;
    r.omega = w;
    r.status = Status::fail;

    const BiSequence Am = replicate(A, m);
    const PBWElement lhs = to_pbw(Family(Am), expand_G_in_E(table, Am, replicate_perm(w, m)));
    const PBWElement rhs = g_star_power_in_E(table, A, w, m);

    std::optional<int> e;
    std::string problem;
    for (const auto& [mseg, c] : rhs.terms())
        if (lhs.coeff(mseg).is_zero()) problem = mseg.to_string() + " appears only in the power";
    for (const auto& [mseg, c] : lhs.terms()) {
        if (!problem.empty()) break;
        const LaurentPoly d = rhs.coeff(mseg);
        if (d.is_zero()) {
            problem = mseg.to_string() + " appears only in the replicated element";
            break;
        }
        const int shift = d.min_exponent() - c.min_exponent();
        if (LaurentPoly(c).shift(shift) != d) {
            problem = "coefficients of " + mseg.to_string() + " are not proportional by a monomial";
        } else if (e && *e != shift) {
            problem = "exponent differs between terms";
        }
        e = shift;
    }
    if (!problem.empty() || !e) {
        r.reason = "NotMonomialRatio: " + (problem.empty() ? std::string("empty expansion") : problem);
        r.claimed = LaurentPoly(1);
        settle(r, start);
        return r;
    }
    r.exponent = e;
    r.computed = LaurentPoly::v(*e);
    r.claimed = LaurentPoly::v(expected.value_or(*e));
    if (expected && *expected != *e) r.reason = "exponent differs from the first case of this (k, m)";
    settle(r, start);
    return r;
}

std::vector<VerificationReport> sweep(KLTable& table, const SweepOptions& options) {
    std::vector<VerificationReport> out;
    std::map<std::pair<int, int>, int> exponents;
    const Permutation avoid{2, 1, 3};
    for (int k = 1; k <= options.kmax; ++k) {
        for (const auto& s0 : all_permutations(k)) {
            if (!is_pattern_avoiding(s0, avoid)) continue;
            const BiSequence A = construct_strongly_regular(s0);
            const Family family(A);
            std::vector<Permutation> omegas;
            for (const auto& w : family.index())
                if (table.kl_poly(s0, w).is_one()) omegas.push_back(w);
            for (int m = 2; m <= options.mmax && m * k <= options.nmax; ++m) {
                if (options.main_theorem)
                    for (const auto& w : omegas)
                        for (const auto& s : enumerate_interval(s0, w))
                            out.push_back(verify_main_theorem(table, s0, s, w, m));
                if (options.prop1)
                    for (const auto& s : family.index())
                        for (const auto& w : family.index()) out.push_back(verify_prop1(table, A, s, w, m));
                if (options.power_identity)
                    for (const auto& w : omegas) {
                        auto it = exponents.find({k, m});
                        out.push_back(verify_power_identity(
                            table, A, w, m, it == exponents.end() ? std::nullopt : std::optional<int>(it->second)));
                        if (it == exponents.end() && out.back().exponent) exponents[{k, m}] = *out.back().exponent;
                    }
            }
        }
        if (options.corollary)
            for (int m = 2; m <= options.mmax && m * k <= options.nmax; ++m)
                for (const auto& w : all_permutations(k)) {
                    auto reports = verify_corollary_smooth(table, w, m);
                    out.insert(out.end(), reports.begin(), reports.end());
                }
    }
    return out;
}

SweepSummary summarize(const std::vector<VerificationReport>& reports) {
    SweepSummary s;
    for (const auto& r : reports) {
        if (r.status == Status::pass) ++s.passed;
        else if (r.status == Status::fail) ++s.failed;
        else ++s.skipped;
    }
    return s;
}

}  // namespace klforge

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "klforge/json_io.hpp"
#include "klforge/kl.hpp"
#include "klforge/segcomb.hpp"

namespace klforge {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

struct VerificationReport {
    std::string kind;
    int k = 0;
    int m = 0;
    std::optional<BiSequence> family;
    std::optional<Permutation> sigma0, sigma, omega;
    /// Lower multisegment index for the general product check.
    std::optional<Permutation> lower;
    LaurentPoly claimed, computed;
    Status status = Status::skipped;
    std::string reason;
    double elapsed_ms = 0;
    /// Measured v-exponent of the power identity.
    std::optional<int> exponent;
};

/// One JSON object, suitable for a JSON-lines stream.
Json report_to_json(const VerificationReport& r);

/// True iff P_{sigma0(A), s} = 1. A must be regular; throws BelowSigma0.
bool is_square_irreducible(KLTable& table, const BiSequence& A, const Permutation& s);

/// P^q(t_m(s), t_m(w)) against q^{C(m,2)(l(w)-l(s))}. Unmet hypotheses
/// yield a skipped report whose reason starts with "HypothesisFailed".
VerificationReport verify_main_theorem(KLTable& table, const Permutation& s0, const Permutation& s,
                                       const Permutation& w, int m);

/// One skipped report when P_{e,w} != 1, otherwise verify_main_theorem(e, s, w, m)
/// for every s <= w.
std::vector<VerificationReport> verify_corollary_smooth(KLTable& table, const Permutation& w, int m);

/// Coefficient of E*(M_{t_m(s)}(A^m)) in E*(M_{t_{m-1}(s)}(A^{m-1})) E*(M_w(A)),
/// expected v^{k(C(m-1,2)-C(m,2))} when w = s and 0 otherwise.
VerificationReport verify_prop1(KLTable& table, const BiSequence& A, const Permutation& s, const Permutation& w,
                                int m);

/// Same coefficient with the left factor E*(M_lower(A^{m-1})) for an arbitrary
/// family index `lower`; nonzero only when lower is t_{m-1}(s) and w = s.
VerificationReport verify_prop1_general(KLTable& table, const BiSequence& A, const Permutation& lower,
                                        const Permutation& s, const Permutation& w, int m);

/// Compares G*(M_{t_m(w)}(A^m)) with G*(M_w(A))^m in the dual PBW basis. Passes
/// when the ratio is a single monomial v^e (and e equals `expected` if given).
/// Throws NotSquareIrreducible when P_{sigma0(A), w} != 1.
VerificationReport verify_power_identity(KLTable& table, const BiSequence& A, const Permutation& w, int m,
                                         std::optional<int> expected = std::nullopt);

struct SweepOptions {
    int kmax = 3;
    int mmax = 3;
    /// Largest mk considered.
    int nmax = 9;
    bool main_theorem = true;
    bool corollary = true;
    bool prop1 = true;
    bool power_identity = true;
};

/// Every verifier over strongly regular families with k <= kmax and
/// 2 <= m <= mmax, mk <= nmax, in a deterministic order. Power identity
/// reports after the first of each (k, m) expect its exponent.
std::vector<VerificationReport> sweep(KLTable& table, const SweepOptions& options);

struct SweepSummary {
    int passed = 0, failed = 0, skipped = 0;
};
SweepSummary summarize(const std::vector<VerificationReport>& reports);

}  // namespace klforge

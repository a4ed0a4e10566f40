#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "klforge/poly.hpp"
#include "klforge/segcomb.hpp"

namespace klforge {

/// Product T_{s_1} ... T_{s_r} of segment generators times a scalar prefix.
struct TWord {
    LaurentPoly prefix{1};
    std::vector<Segment> segments;
};

/// Linear combination of dual PBW basis elements E*(M).
class PBWElement {
public:
    PBWElement() = default;

    /// E*(0) = 1.
    static PBWElement unit();
    static PBWElement basis(const Multisegment& m, const LaurentPoly& coeff = LaurentPoly(1));

    void add(const Multisegment& m, const LaurentPoly& coeff);
    LaurentPoly coeff(const Multisegment& m) const;
    const std::map<Multisegment, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PBWElement& operator+=(const PBWElement& other);
    PBWElement& operator*=(const LaurentPoly& scalar);
    friend bool operator==(const PBWElement&, const PBWElement&) = default;

    /// "(1)E*[1,3]+[2,4] + (v^-1-v)E*[1,4]+[2,3]"
    std::string to_string() const;

private:
    std::map<Multisegment, LaurentPoly> terms_;
};

/// Exchange relations available to the rewriting engine.
enum class ExchangeRules {
    /// Only pairs in general position; anything else throws
    /// NonGeneralPositionExchange.
    general_position,
    /// Additionally commutes unlinked pairs sharing exactly one endpoint,
    /// T_{D2} T_{D1} = v^-1 T_{D1} T_{D2} for D1 < D2.
    shared_endpoint,
};

/// Which out-of-order adjacent pair is rewritten next.
enum class RewriteStrategy { leftmost, rightmost, random };

struct StraightenOptions {
    ExchangeRules rules = ExchangeRules::general_position;
    RewriteStrategy strategy = RewriteStrategy::leftmost;
    std::uint64_t seed = 0;
};

/// v^{sum C(m_i,2)} and the sorted word of E*(M).
TWord e_star(const Multisegment& m);

/// Normal form of a word in the dual PBW basis.
PBWElement straighten(const TWord& word, const StraightenOptions& options = {});

PBWElement multiply(const PBWElement& x, const PBWElement& y, const StraightenOptions& options = {});

/// m^2 (l(w) - l(s)) for s <= w. Throws NotComparable.
int c_strongly_regular(const Permutation& s, const Permutation& w, int m);

}  // namespace klforge

#include "klforge/pbw.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "klforge/errors.hpp"

namespace klforge {

namespace {

struct WordLess {
    bool operator()(const std::vector<Segment>& x, const std::vector<Segment>& y) const {
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), segment_less);
    }
};

int binomial2(int m) { return m * (m - 1) / 2; }

/// Multisegment of a sorted word and its E* exponent.
std::pair<Multisegment, int> collect(const std::vector<Segment>& word) {
    Multisegment m;
    for (const auto& s : word) m.add(s);
    int e = 0;
    for (const auto& [s, k] : m.entries()) e += binomial2(k);
    return {m, e};
}

bool shares_one_endpoint(const Segment& lo, const Segment& hi) {
    return (lo.a == hi.a) != (lo.b == hi.b) && lo.a != hi.b + 1 && hi.a != lo.b + 1;
}

}  // namespace

PBWElement PBWElement::unit() { return basis(Multisegment()); }

PBWElement PBWElement::basis(const Multisegment& m, const LaurentPoly& coeff) {
    PBWElement out;
    out.add(m, coeff);
    return out;
}

void PBWElement::add(const Multisegment& m, const LaurentPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly PBWElement::coeff(const Multisegment& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

PBWElement& PBWElement::operator+=(const PBWElement& other) {
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
}

PBWElement& PBWElement::operator*=(const LaurentPoly& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

std::string PBWElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.to_string() << ")E*" << m.to_string();
    }
    return os.str();
}

TWord e_star(const Multisegment& m) {
    TWord w;
    int e = 0;
    for (const auto& [s, k] : m.entries()) {
        e += binomial2(k);
        for (int i = 0; i < k; ++i) w.segments.push_back(s);
    }
    w.prefix = LaurentPoly::v(e);
    return w;
}

PBWElement straighten(const TWord& word, const StraightenOptions& options) {
    PBWElement out;
    std::map<std::vector<Segment>, LaurentPoly, WordLess> pending;
    if (!word.prefix.is_zero()) pending.emplace(word.segments, word.prefix);
    std::mt19937_64 rng(options.seed);
    const LaurentPoly linked_factor = LaurentPoly::v(-1) - LaurentPoly::v(1);

    auto push = [&](std::vector<Segment> w, const LaurentPoly& c) {
        auto [it, inserted] = pending.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) pending.erase(it);
        }
    };

    std::vector<std::size_t> disorder;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        std::vector<Segment>& w = node.key();
        const LaurentPoly c = std::move(node.mapped());

        disorder.clear();
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (segment_less(w[i + 1], w[i])) disorder.push_back(i);
        if (disorder.empty()) {
            auto [m, e] = collect(w);
            out.add(m, c * LaurentPoly::v(-e));
            continue;
        }

        std::size_t i = disorder.front();
        if (options.strategy == RewriteStrategy::rightmost) {
            i = disorder.back();
        } else if (options.strategy == RewriteStrategy::random) {
            i = disorder[std::uniform_int_distribution<std::size_t>(0, disorder.size() - 1)(rng)];
        }
        const Segment hi = w[i], lo = w[i + 1];
        if (general_position(lo, hi)) {
            std::vector<Segment> swapped = w;
            std::swap(swapped[i], swapped[i + 1]);
            if (precedes(lo, hi)) {
                std::vector<Segment> exchanged = w;
                exchanged[i] = Segment(hi.a, lo.b);
                exchanged[i + 1] = Segment(lo.a, hi.b);
                push(std::move(exchanged), c * linked_factor);
            }
            push(std::move(swapped), c);
        } else if (options.rules == ExchangeRules::shared_endpoint && !precedes(lo, hi) &&
                   shares_one_endpoint(lo, hi)) {
            std::swap(w[i], w[i + 1]);
            push(std::move(w), c * LaurentPoly::v(-1));
        } else {
            throw NonGeneralPositionExchange(hi.to_string() + " before " + lo.to_string());
        }
    }
    return out;
}

PBWElement multiply(const PBWElement& x, const PBWElement& y, const StraightenOptions& options) {
    PBWElement out;
    for (const auto& [mx, cx] : x.terms()) {
        const TWord wx = e_star(mx);
        for (const auto& [my, cy] : y.terms()) {
            const TWord wy = e_star(my);
            TWord w;
            w.prefix = cx * cy * wx.prefix * wy.prefix;
            w.segments = wx.segments;
            w.segments.insert(w.segments.end(), wy.segments.begin(), wy.segments.end());
            out += straighten(w, options);
        }
    }
    return out;
}

int c_strongly_regular(const Permutation& s, const Permutation& w, int m) {
    if (m < 1) throw InvalidArgument("m must be positive");
    if (!bruhat_leq(s, w)) throw NotComparable(s.to_string() + " is not below " + w.to_string());
    return m * m * (w.length() - s.length());
}

}  // namespace klforge

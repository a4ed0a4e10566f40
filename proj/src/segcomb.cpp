#include "klforge/segcomb.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "klforge/errors.hpp"

namespace klforge {

Segment::Segment(int a_, int b_) : a(a_), b(b_) {
    if (a > b) throw InvalidArgument("segment [" + std::to_string(a) + "," + std::to_string(b) + "] is empty");
}

std::string Segment::to_string() const { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; }

bool segment_less(const Segment& x, const Segment& y) { return x.b < y.b || (x.b == y.b && x.a < y.a); }

Multisegment::Multisegment(std::initializer_list<Segment> segments) {
    for (const auto& s : segments) add(s);
}

void Multisegment::add(const Segment& s, int multiplicity) {
    if (multiplicity < 0) throw InvalidArgument("negative multiplicity");
    if (multiplicity > 0) mult_[s] += multiplicity;
}

int Multisegment::multiplicity(const Segment& s) const {
    auto it = mult_.find(s);
    return it == mult_.end() ? 0 : it->second;
}

int Multisegment::count() const {
    int c = 0;
    for (const auto& [s, m] : mult_) c += m;
    return c;
}

Multisegment Multisegment::scaled(int m) const {
    if (m < 0) throw InvalidArgument("negative scale");
    Multisegment out;
    for (const auto& [s, k] : mult_) out.add(s, k * m);
    return out;
}

std::string Multisegment::to_string() const {
    if (mult_.empty()) return "0";
    std::vector<std::pair<Segment, int>> items(mult_.begin(), mult_.end());
    // Text form lists segments by left endpoint, then right endpoint.
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
        return std::tie(x.first.a, x.first.b) < std::tie(y.first.a, y.first.b);
    });
    std::ostringstream os;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) os << '+';
        if (items[i].second != 1) os << items[i].second;
        os << items[i].first.to_string();
    }
    return os.str();
}

bool operator<(const Multisegment& x, const Multisegment& y) {
    return std::lexicographical_compare(
        x.mult_.begin(), x.mult_.end(), y.mult_.begin(), y.mult_.end(), [](const auto& p, const auto& q) {
            if (segment_less(p.first, q.first)) return true;
            if (segment_less(q.first, p.first)) return false;
            return p.second < q.second;
        });
}

BiSequence::BiSequence(std::vector<int> a, std::vector<int> b) : a_(std::move(a)), b_(std::move(b)) {
    const std::size_t k = a_.size();
    if (k == 0 || b_.size() != k) throw InvalidArgument("a bi-sequence needs two nonempty sequences of equal length");
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (a_[i] > a_[i + 1]) throw InvalidArgument("a must be non-decreasing");
        if (b_[i] < b_[i + 1]) throw InvalidArgument("b must be non-increasing");
    }
    for (std::size_t i = 0; i < k; ++i)
        if (a_[i] > b_[k - 1 - i] + 1)
            throw InvalidArgument("a_" + std::to_string(i + 1) + " exceeds b_" + std::to_string(k - i) + "+1");
}

namespace {

ParabolicShape runs(const std::vector<int>& v) {
    std::vector<int> blocks;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0 && v[i] == v[i - 1])
            ++blocks.back();
        else
            blocks.push_back(1);
    }
    return ParabolicShape(std::move(blocks));
}

std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

ParabolicShape BiSequence::left_shape() const { return runs(a_); }
ParabolicShape BiSequence::right_shape() const { return runs(b_); }

bool BiSequence::is_regular() const { return left_shape().is_trivial() && right_shape().is_trivial(); }

std::string BiSequence::to_string() const { return "(" + join(a_) + " / " + join(b_) + ")"; }

bool precedes(const Segment& x, const Segment& y) { return x.a < y.a && x.b < y.b && y.a <= x.b + 1; }

bool general_position(const Segment& x, const Segment& y) {
    return x.a != y.a && x.b != y.b && x.a != y.b + 1 && y.a != x.b + 1;
}

std::pair<Segment, std::optional<Segment>> union_intersection(const Segment& x, const Segment& y) {
    if (!precedes(x, y)) throw NotLinked(x.to_string() + " does not precede " + y.to_string());
    std::optional<Segment> meet;
    if (general_position(x, y)) meet = Segment(y.a, x.b);
    return {Segment(x.a, y.b), meet};
}

Permutation sigma0(const BiSequence& A) {
    const int k = A.k();
    std::vector<int> inv(static_cast<std::size_t>(k), 0);
    std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
    for (int i = k; i >= 1; --i) {
        int best = 0;
        for (int j = 1; j <= k; ++j)
            if (!used[static_cast<std::size_t>(j)] && A.a(j) <= A.b(i) + 1) best = j;
        if (best == 0) throw std::logic_error("sigma0 recursion found no admissible index");
        used[static_cast<std::size_t>(best)] = true;
        inv[static_cast<std::size_t>(i - 1)] = best;
    }
    return Permutation(std::move(inv)).inverse();
}

bool dominates_sigma0(const BiSequence& A, const Permutation& w) {
    if (w.size() != A.k()) throw InvalidArgument("permutation size differs from the bi-sequence length");
    for (int i = 1; i <= A.k(); ++i)
        if (A.a(i) > A.b(w(i)) + 1) return false;
    return true;
}

Multisegment multisegment_of(const BiSequence& A, const Permutation& w) {
    if (!dominates_sigma0(A, w)) throw BelowSigma0(w.to_string() + " for " + A.to_string());
    Multisegment out;
    for (int i = 1; i <= A.k(); ++i) {
        const int a = A.a(i), b = A.b(w(i));
        if (a <= b) out.add(Segment(a, b));
    }
    return out;
}

BiSequence replicate(const BiSequence& A, int m) {
    if (m < 1) throw InvalidArgument("m must be positive");
    std::vector<int> a, b;
    for (int i = 1; i <= A.k(); ++i)
        for (int r = 0; r < m; ++r) {
            a.push_back(A.a(i));
            b.push_back(A.b(i));
        }
    return BiSequence(std::move(a), std::move(b));
}

bool is_strongly_regular(const BiSequence& A) {
    if (!A.is_regular()) return false;
    for (int i : A.a())
        for (int j : A.b())
            if (i == j + 1) return false;
    return true;
}

BiSequence construct_strongly_regular(const Permutation& w) {
    if (!is_pattern_avoiding(w, Permutation{2, 1, 3})) throw Not213Avoiding(w.to_string());
    const int k = w.size();
    const int gap = 2 * k + 2;
    const Permutation winv = w.inverse();
    std::vector<int> a(static_cast<std::size_t>(k) + 2);
    for (int j = 1; j <= k + 1; ++j) a[static_cast<std::size_t>(j)] = j * gap;
    std::vector<int> b(static_cast<std::size_t>(k) + 1);
    b[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(winv(k))];
    for (int i = k - 1; i >= 1; --i) {
        const int next = b[static_cast<std::size_t>(i) + 1];
        int j = winv(i);
        while (j < k && !(next + 1 < a[static_cast<std::size_t>(j) + 1])) ++j;
        b[static_cast<std::size_t>(i)] = std::max(next + 1, a[static_cast<std::size_t>(j)]);
    }
    BiSequence A(std::vector<int>(a.begin() + 1, a.begin() + k + 1), std::vector<int>(b.begin() + 1, b.end()));
    if (sigma0(A) != w || !is_strongly_regular(A))
        throw std::logic_error("strongly regular construction failed for " + w.to_string());
    return A;
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        const std::string_view tok = text.substr(pos, end - pos);
        int value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
            throw InvalidArgument("bad integer list '" + std::string(text) + "'");
        out.push_back(value);
        pos = end + 1;
    }
    return out;
}

}  // namespace klforge

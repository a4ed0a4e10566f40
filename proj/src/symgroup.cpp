#include "klforge/symgroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "klforge/errors.hpp"

namespace klforge {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = size();
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int i) {
    if (i < 1 || i >= n) throw InvalidArgument("simple transposition index out of range");
    return identity(n).right_mul_simple(i);
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i)
        inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
    Permutation p;
    p.word_ = std::move(inv);
    return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (size() != rhs.size()) throw InvalidArgument("product of permutations of different sizes");
    Permutation p;
    p.word_.resize(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i)
        p.word_[i] = word_[static_cast<std::size_t>(rhs.word_[i] - 1)];
    return p;
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < word_.size(); ++i)
        for (std::size_t j = i + 1; j < word_.size(); ++j) inv += word_[i] > word_[j];
    return inv;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < word_.size(); ++i)
        if (word_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

bool Permutation::has_right_descent(int i) const {
    return word_[static_cast<std::size_t>(i - 1)] > word_[static_cast<std::size_t>(i)];
}

bool Permutation::has_left_descent(int i) const {
    // value i+1 appears before value i
    for (int v : word_) {
        if (v == i) return false;
        if (v == i + 1) return true;
    }
    return false;
}

Permutation Permutation::right_mul_simple(int i) const {
    Permutation p = *this;
    std::swap(p.word_[static_cast<std::size_t>(i - 1)], p.word_[static_cast<std::size_t>(i)]);
    return p;
}

Permutation Permutation::left_mul_simple(int i) const {
    Permutation p = *this;
    for (int& v : p.word_) {
        if (v == i)
            v = i + 1;
        else if (v == i + 1)
            v = i;
    }
    return p;
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(word_[i]);
    }
    return out;
}

Permutation parse_permutation(std::string_view text) {
    std::vector<int> word;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw InvalidArgument("malformed permutation '" + std::string(text) + "'");
        word.push_back(value);
        pos = end + 1;
    }
    return Permutation(std::move(word));
}

ParabolicShape::ParabolicShape(std::vector<int> block_sizes) : blocks_(std::move(block_sizes)) {
    int pos = 0;
    for (int b : blocks_) {
        if (b <= 0) throw InvalidArgument("parabolic block sizes must be positive");
        for (int j = 1; j < b; ++j) generators_.push_back(pos + j);
        pos += b;
    }
    n_ = pos;
}

ParabolicShape ParabolicShape::uniform(int k, int m) {
    return ParabolicShape(std::vector<int>(static_cast<std::size_t>(k), m));
}

bool ParabolicShape::is_generator(int i) const {
    return std::binary_search(generators_.begin(), generators_.end(), i);
}

std::size_t ParabolicShape::order() const {
    std::size_t total = 1;
    for (int b : blocks_)
        for (int j = 2; j <= b; ++j) total *= static_cast<std::size_t>(j);
    return total;
}

std::vector<Permutation> ParabolicShape::elements() const {
    // odometer over the permutations of each block
    std::vector<std::vector<int>> parts;
    int pos = 0;
    for (int b : blocks_) {
        std::vector<int> block(static_cast<std::size_t>(b));
        std::iota(block.begin(), block.end(), pos + 1);
        parts.push_back(std::move(block));
        pos += b;
    }
    std::vector<Permutation> out;
    out.reserve(order());
    while (true) {
        std::vector<int> word;
        word.reserve(static_cast<std::size_t>(n_));
        for (const auto& part : parts) word.insert(word.end(), part.begin(), part.end());
        out.emplace_back(std::move(word));
        std::size_t b = 0;
        for (; b < parts.size(); ++b) {
            if (std::next_permutation(parts[b].begin(), parts[b].end())) break;
        }
        if (b == parts.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Permutation ParabolicShape::longest() const {
    std::vector<int> word;
    int pos = 0;
    for (int b : blocks_) {
        for (int j = b; j >= 1; --j) word.push_back(pos + j);
        pos += b;
    }
    return Permutation(std::move(word));
}

int length(const Permutation& w) { return w.length(); }

bool bruhat_leq(const Permutation& x, const Permutation& y) {
    const int n = x.size();
    if (n != y.size()) throw InvalidArgument("Bruhat comparison of different sizes");
    // tableau criterion: for each prefix, the sorted prefix of x is
    // dominated entrywise by the sorted prefix of y
    std::vector<int> cx(static_cast<std::size_t>(n) + 2, 0), cy(static_cast<std::size_t>(n) + 2, 0);
    for (int i = 0; i + 1 < n; ++i) {
        ++cx[static_cast<std::size_t>(x.word()[static_cast<std::size_t>(i)])];
        ++cy[static_cast<std::size_t>(y.word()[static_cast<std::size_t>(i)])];
        int ax = 0, ay = 0;
        for (int t = n; t >= 1; --t) {
            ax += cx[static_cast<std::size_t>(t)];
            ay += cy[static_cast<std::size_t>(t)];
            if (ax > ay) return false;
        }
    }
    return true;
}

Permutation min_coset_rep(const Permutation& w, const ParabolicShape& shape) {
    if (shape.n() != w.size()) throw InvalidArgument("shape does not match permutation size");
    std::vector<int> word = w.word();
    std::size_t pos = 0;
    for (int b : shape.block_sizes()) {
        std::sort(word.begin() + static_cast<std::ptrdiff_t>(pos),
                  word.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(b)));
        pos += static_cast<std::size_t>(b);
    }
    return Permutation(std::move(word));
}

Permutation min_double_coset_rep(const Permutation& w, const ParabolicShape& left,
                                 const ParabolicShape& right) {
    if (left.n() != w.size() || right.n() != w.size())
        throw InvalidArgument("shape does not match permutation size");
    Permutation cur = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i : left.generators()) {
            if (cur.has_left_descent(i)) {
                cur = cur.left_mul_simple(i);
                changed = true;
            }
        }
        for (int i : right.generators()) {
            if (cur.has_right_descent(i)) {
                cur = cur.right_mul_simple(i);
                changed = true;
            }
        }
    }
    return cur;
}

std::vector<Permutation> double_coset_elements(const Permutation& w, const ParabolicShape& left,
                                               const ParabolicShape& right) {
    std::set<Permutation> seen{w};
    std::vector<Permutation> stack{w};
    while (!stack.empty()) {
        Permutation cur = std::move(stack.back());
        stack.pop_back();
        for (int i : left.generators()) {
            Permutation nxt = cur.left_mul_simple(i);
            if (seen.insert(nxt).second) stack.push_back(std::move(nxt));
        }
        for (int i : right.generators()) {
            Permutation nxt = cur.right_mul_simple(i);
            if (seen.insert(nxt).second) stack.push_back(std::move(nxt));
        }
    }
    return {seen.begin(), seen.end()};
}

Permutation replicate_perm(const Permutation& x, int m) {
    if (m < 1) throw InvalidArgument("replication factor must be positive");
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(x.size() * m));
    for (int i = 1; i <= x.size(); ++i)
        for (int j = 1; j <= m; ++j) word.push_back((x(i) - 1) * m + j);
    return Permutation(std::move(word));
}

bool is_pattern_avoiding(const Permutation& w, const Permutation& pattern) {
    const int n = w.size();
    const int k = pattern.size();
    if (k == 0) return false;
    if (k > n) return true;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        bool match = true;
        for (int a = 0; a < k && match; ++a)
            for (int b = a + 1; b < k && match; ++b) {
                const bool wl = w.word()[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])] <
                                w.word()[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])];
                const bool pl = pattern.word()[static_cast<std::size_t>(a)] <
                                pattern.word()[static_cast<std::size_t>(b)];
                match = wl == pl;
            }
        if (match) return false;
        // next k-subset of {0..n-1}
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::vector<Permutation> coatoms(const Permutation& w) {
    std::vector<Permutation> out;
    const auto& a = w.word();
    const int n = w.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int hi = a[static_cast<std::size_t>(i)], lo = a[static_cast<std::size_t>(j)];
            if (hi < lo) continue;
            bool cover = true;
            for (int t = i + 1; t < j && cover; ++t) {
                const int mid = a[static_cast<std::size_t>(t)];
                cover = !(lo < mid && mid < hi);
            }
            if (!cover) continue;
            std::vector<int> word = a;
            std::swap(word[static_cast<std::size_t>(i)], word[static_cast<std::size_t>(j)]);
            out.emplace_back(std::move(word));
        }
    return out;
}

std::vector<Permutation> enumerate_interval(const Permutation& x, const Permutation& y) {
    if (!bruhat_leq(x, y))
        throw EmptyInterval("[" + x.to_string() + "] is not below [" + y.to_string() + "]");
    std::set<Permutation> seen{y};
    std::vector<Permutation> frontier{y};
    const int lx = x.length();
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& z : frontier) {
            if (z.length() == lx) continue;
            for (auto& c : coatoms(z)) {
                if (seen.count(c) || !bruhat_leq(x, c)) continue;
                seen.insert(c);
                next.push_back(std::move(c));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

}  // namespace klforge

std::size_t std::hash<klforge::Permutation>::operator()(const klforge::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : p.word()) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ULL;
    }
    return h;
}

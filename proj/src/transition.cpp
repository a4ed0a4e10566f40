#include "klforge/transition.hpp"

#include <algorithm>
#include <functional>

#include "klforge/errors.hpp"

namespace klforge {

namespace {

bool uniform_blocks(const ParabolicShape& shape, int m) {
    return std::all_of(shape.block_sizes().begin(), shape.block_sizes().end(), [m](int b) { return b == m; });
}

/// Minimal representatives of W_cols \ S_n / W_rows from the contingency
/// tables N with N_ij = #{p in position block i : w(p) in value block j}.
std::vector<Permutation> double_coset_reps(const ParabolicShape& rows, const ParabolicShape& cols) {
    const auto& r = rows.block_sizes();
    const auto& c = cols.block_sizes();
    const std::size_t R = r.size(), C = c.size();
    std::vector<int> col_start(C, 1);
    for (std::size_t j = 1; j < C; ++j) col_start[j] = col_start[j - 1] + c[j - 1];

    std::vector<Permutation> out;
    std::vector<std::vector<int>> N(R, std::vector<int>(C, 0));
    std::vector<int> col_left(c.begin(), c.end());
    std::function<void(std::size_t, std::size_t, int)> fill = [&](std::size_t i, std::size_t j, int row_left) {
        if (i == R) {
            std::vector<int> word;
            std::vector<int> next = col_start;
            for (std::size_t a = 0; a < R; ++a)
                for (std::size_t b = 0; b < C; ++b)
                    for (int t = 0; t < N[a][b]; ++t) word.push_back(next[b]++);
            out.emplace_back(std::move(word));
            return;
        }
        if (j + 1 == C) {
            if (row_left > col_left[j]) return;
            N[i][j] = row_left;
            col_left[j] -= row_left;
            fill(i + 1, 0, i + 1 < R ? r[i + 1] : 0);
            col_left[j] += row_left;
            N[i][j] = 0;
            return;
        }
        for (int x = std::min(row_left, col_left[j]); x >= 0; --x) {
            N[i][j] = x;
            col_left[j] -= x;
            fill(i, j + 1, row_left - x);
            col_left[j] += x;
        }
        N[i][j] = 0;
    };
    fill(0, 0, r.empty() ? 0 : r[0]);
    return out;
}

bool by_length(const Permutation& x, const Permutation& y) {
    const int lx = x.length(), ly = y.length();
    return lx != ly ? lx < ly : x < y;
}

}  // namespace

Family::Family(BiSequence A) : A_(std::move(A)) {
    values_ = A_.right_shape();
    positions_ = A_.left_shape();
    m_ = positions_.block_sizes().front();
    if (!uniform_blocks(positions_, m_) || !uniform_blocks(values_, m_))
        throw UnsupportedFamily(A_.to_string() + " is not a replicated bi-sequence");
    std::vector<int> a, b;
    for (int i = 1; i <= A_.k(); i += m_) {
        a.push_back(A_.a(i));
        b.push_back(A_.b(i));
    }
    base_ = BiSequence(std::move(a), std::move(b));
    if (!is_strongly_regular(base_) || !(replicate(base_, m_) == A_))
        throw UnsupportedFamily(A_.to_string() + " is not a replication of a strongly regular bi-sequence");
    for (auto& w : double_coset_reps(positions_, values_))
        if (dominates_sigma0(A_, w)) index_.push_back(std::move(w));
    std::sort(index_.begin(), index_.end(), by_length);
}

Permutation Family::representative(const Permutation& w) const {
    if (w.size() != n()) throw InvalidArgument("permutation size differs from the family");
    return min_double_coset_rep(w, values_, positions_);
}

std::vector<Permutation> Family::coset(const Permutation& w) const {
    return double_coset_elements(w, values_, positions_);
}

int endomorphism_dimension(const Multisegment& m) {
    int dim = 0;
    for (const auto& [x, mx] : m.entries())
        for (const auto& [y, my] : m.entries())
            if (x.a <= y.a && y.a <= x.b && x.b <= y.b) dim += mx * my;
    return dim;
}

int Family::codimension(const Permutation& s, const Permutation& w) const {
    return endomorphism_dimension(multisegment(w)) - endomorphism_dimension(multisegment(s));
}

namespace {

Permutation checked_representative(const Family& f, const Permutation& w) {
    const Permutation rep = f.representative(w);
    if (!dominates_sigma0(f.bisequence(), rep))
        throw BelowSigma0(w.to_string() + " for " + f.bisequence().to_string());
    return rep;
}

}  // namespace

Expansion expand_E_in_G(KLTable& table, const BiSequence& A, const Permutation& w) {
    const Family f(A);
    const Permutation wr = checked_representative(f, w);
    const Permutation w0 = Permutation::longest(f.n());
    Expansion out;
    for (const auto& s : f.index()) {
        if (!bruhat_leq(s, wr)) continue;
        LaurentPoly c = table.kl_poly(wr * w0, s * w0);
        c.shift(f.codimension(s, wr));
        if (!c.is_zero()) out.emplace(s, std::move(c));
    }
    return out;
}

Expansion expand_G_in_E(KLTable& table, const BiSequence& A, const Permutation& w) {
    const Family f(A);
    const Permutation wr = checked_representative(f, w);
    const int lw = wr.length();
    Expansion out;
    for (const auto& s : f.index()) {
        if (!bruhat_leq(s, wr)) continue;
        std::vector<Permutation> members;
        for (auto& x : f.coset(s))
            if (x.length() <= lw) members.push_back(std::move(x));
        LaurentPoly c = table.signed_kl_sum(members, wr);
        if (lw % 2 != 0) c = -c;
        c.shift(f.codimension(s, wr));
        if (!c.is_zero()) out.emplace(s, std::move(c));
    }
    return out;
}

LaurentPoly coeff_parab(KLTable& table, const BiSequence& A, const Permutation& s, const Permutation& w, int m,
                        Direction direction) {
    if (!A.is_regular()) throw InvalidArgument(A.to_string() + " is not regular");
    if (s.size() != A.k() || w.size() != A.k()) throw InvalidArgument("permutation size differs from the bi-sequence");
    if (!dominates_sigma0(A, s)) throw BelowSigma0(s.to_string() + " for " + A.to_string());
    if (!bruhat_leq(s, w)) throw NotComparable(s.to_string() + " is not below " + w.to_string());
    const int shift = m * m * (w.length() - s.length());
    LaurentPoly out;
    if (direction == Direction::e_in_g) {
        const Permutation w0 = Permutation::longest(A.k());
        out = parabolic_kl_neg1(table, w * w0, s * w0, m);
    } else {
        out = parabolic_kl_q(table, s, w, m);
        if ((m * (s.length() + w.length())) % 2 != 0) out = -out;
    }
    return out.shift(shift);
}

PBWElement to_pbw(const Family& family, const Expansion& e) {
    PBWElement out;
    for (const auto& [s, c] : e) out.add(family.multisegment(s), c);
    return out;
}

PBWElement g_star_power_in_E(KLTable& table, const BiSequence& A, const Permutation& w, int m) {
    if (m < 1) throw InvalidArgument("m must be positive");
    const Family f(A);
    const PBWElement g = to_pbw(f, expand_G_in_E(table, A, w));
    StraightenOptions opts;
    opts.rules = ExchangeRules::shared_endpoint;
    PBWElement out = g;
    for (int i = 1; i < m; ++i) out = multiply(out, g, opts);
    return out;
}

TransitionMatrix TransitionMatrix::operator*(const TransitionMatrix& other) const {
    if (index != other.index) throw InvalidArgument("matrices over different index sets");
    const std::size_t n = index.size();
    TransitionMatrix out{index, std::vector<std::vector<LaurentPoly>>(n, std::vector<LaurentPoly>(n))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (entries[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!other.entries[k][j].is_zero()) out.entries[i][j] += entries[i][k] * other.entries[k][j];
        }
    return out;
}

bool TransitionMatrix::is_identity() const {
    for (std::size_t i = 0; i < index.size(); ++i)
        for (std::size_t j = 0; j < index.size(); ++j)
            if (i == j ? !entries[i][j].is_one() : !entries[i][j].is_zero()) return false;
    return true;
}

TransitionMatrix transition_matrix(KLTable& table, const BiSequence& A, Direction direction) {
    const Family f(A);
    TransitionMatrix out;
    out.index = f.index();
    const std::size_t n = out.index.size();
    out.entries.assign(n, std::vector<LaurentPoly>(n));
    for (std::size_t j = 0; j < n; ++j) {
        const Expansion e = direction == Direction::e_in_g ? expand_E_in_G(table, A, out.index[j])
                                                           : expand_G_in_E(table, A, out.index[j]);
        for (std::size_t i = 0; i < n; ++i) {
            auto it = e.find(out.index[i]);
            if (it != e.end()) out.entries[i][j] = it->second;
        }
    }
    return out;
}

}  // namespace klforge

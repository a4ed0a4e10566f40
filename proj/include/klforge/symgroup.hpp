#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace klforge {

/// Element of S_n in one-line notation (w(1), ..., w(n)).
///
/// Products compose as functions, (xy)(i) = x(y(i)). Right multiplication by
/// the simple transposition s_i swaps positions i and i+1; left
/// multiplication swaps the values i and i+1.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);
    Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

    static Permutation identity(int n);
    /// The longest element w_0 = (n, n-1, ..., 1).
    static Permutation longest(int n);
    /// s_i, 1 <= i < n.
    static Permutation simple(int n, int i);

    int size() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

    Permutation inverse() const;
    Permutation operator*(const Permutation& rhs) const;

    /// Inversion count.
    int length() const;
    /// (-1)^length.
    int sign() const { return length() % 2 == 0 ? 1 : -1; }
    bool is_identity() const;

    /// s_i w < w.
    bool has_left_descent(int i) const;
    /// w s_i < w.
    bool has_right_descent(int i) const;
    Permutation left_mul_simple(int i) const;
    Permutation right_mul_simple(int i) const;

    /// "1,2,3"
    std::string to_string() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

/// Parses comma-separated one-line notation, e.g. "3,4,1,2".
Permutation parse_permutation(std::string_view text);

/// Standard parabolic subgroup S_{n1} x ... x S_{nr} of S_n given by its block sizes.
class ParabolicShape {
public:
    ParabolicShape() = default;
    explicit ParabolicShape(std::vector<int> block_sizes);

    /// k blocks of size m: the subgroup W_m of S_{mk}.
    static ParabolicShape uniform(int k, int m);
    /// Trivial subgroup of S_n.
    static ParabolicShape trivial(int n) { return uniform(n, 1); }

    const std::vector<int>& block_sizes() const { return blocks_; }
    int n() const { return n_; }
    /// Indices i such that s_i lies in the subgroup.
    const std::vector<int>& generators() const { return generators_; }
    bool is_generator(int i) const;
    bool is_trivial() const { return generators_.empty(); }

    std::size_t order() const;
    /// All elements of the subgroup.
    std::vector<Permutation> elements() const;
    /// Longest element (each block reversed).
    Permutation longest() const;

    friend bool operator==(const ParabolicShape&, const ParabolicShape&) = default;

private:
    std::vector<int> blocks_;
    std::vector<int> generators_;
    int n_ = 0;
};

int length(const Permutation& w);
bool bruhat_leq(const Permutation& x, const Permutation& y);

/// Shortest element of w W_shape.
Permutation min_coset_rep(const Permutation& w, const ParabolicShape& shape);
/// Shortest element of W_left w W_right.
Permutation min_double_coset_rep(const Permutation& w, const ParabolicShape& left,
                                 const ParabolicShape& right);
/// Every element of W_left w W_right, sorted.
std::vector<Permutation> double_coset_elements(const Permutation& w, const ParabolicShape& left,
                                               const ParabolicShape& right);

/// t_m(x): the minimal-length representative of r_m(x) in S_{mk}/W_m,
/// sending block i to block x(i) in increasing order.
Permutation replicate_perm(const Permutation& x, int m);

/// True iff no subsequence of w is order-isomorphic to pattern.
bool is_pattern_avoiding(const Permutation& w, const Permutation& pattern);

/// Bruhat interval [x, y], sorted. Throws EmptyInterval when x is not below y.
std::vector<Permutation> enumerate_interval(const Permutation& x, const Permutation& y);

/// Elements covered by w in Bruhat order.
std::vector<Permutation> coatoms(const Permutation& w);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace klforge

template <>
struct std::hash<klforge::Permutation> {
    std::size_t operator()(const klforge::Permutation& p) const noexcept;
};

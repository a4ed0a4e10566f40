#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klforge/symgroup.hpp"

namespace klforge {

/// Integer segment [a, b], a <= b.
struct Segment {
    int a = 0;
    int b = 0;

    Segment() = default;
    Segment(int a_, int b_);

    std::string to_string() const;
    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Total order on segments: [a,b] < [c,d] iff b < d, or b = d and a < c.
bool segment_less(const Segment& x, const Segment& y);

struct SegmentOrder {
    bool operator()(const Segment& x, const Segment& y) const { return segment_less(x, y); }
};

/// Finite multiset of segments, iterated in segment order.
class Multisegment {
public:
    Multisegment() = default;
    Multisegment(std::initializer_list<Segment> segments);

    void add(const Segment& s, int multiplicity = 1);
    int multiplicity(const Segment& s) const;
    const std::map<Segment, int, SegmentOrder>& entries() const { return mult_; }
    bool empty() const { return mult_.empty(); }
    /// Number of segments counted with multiplicity.
    int count() const;

    /// Every multiplicity multiplied by m.
    Multisegment scaled(int m) const;

    /// "[1,8]+[2,7]+[3,6]", multiplicities written "2[1,2]"; "0" when empty.
    std::string to_string() const;

    friend bool operator==(const Multisegment&, const Multisegment&) = default;
    friend bool operator<(const Multisegment& x, const Multisegment& y);

private:
    std::map<Segment, int, SegmentOrder> mult_;
};

/// Pair of sequences a_1 <= ... <= a_k, b_1 >= ... >= b_k with
/// a_i <= b_{k+1-i} + 1.
class BiSequence {
public:
    BiSequence() = default;
    BiSequence(std::vector<int> a, std::vector<int> b);

    int k() const { return static_cast<int>(a_.size()); }
    const std::vector<int>& a() const { return a_; }
    const std::vector<int>& b() const { return b_; }
    int a(int i) const { return a_[static_cast<std::size_t>(i - 1)]; }
    int b(int i) const { return b_[static_cast<std::size_t>(i - 1)]; }

    /// Block sizes of the subgroup generated by s_i with a_i = a_{i+1}.
    ParabolicShape left_shape() const;
    /// Block sizes of the subgroup generated by s_i with b_i = b_{i+1}.
    ParabolicShape right_shape() const;

    bool is_regular() const;

    std::string to_string() const;
    friend bool operator==(const BiSequence&, const BiSequence&) = default;

private:
    std::vector<int> a_, b_;
};

/// a1 < a2, b1 < b2 and a2 <= b1 + 1.
bool precedes(const Segment& x, const Segment& y);
/// a1 != a2, b1 != b2, a1 != b2 + 1 and a2 != b1 + 1.
bool general_position(const Segment& x, const Segment& y);
/// ([a1,b2], [a2,b1]) for x preceding y; the second segment only when x and y
/// are also in general position. Throws NotLinked.
std::pair<Segment, std::optional<Segment>> union_intersection(const Segment& x, const Segment& y);

/// The minimal permutation of the family.
Permutation sigma0(const BiSequence& A);
/// a_i <= b_{w(i)} + 1 for all i.
bool dominates_sigma0(const BiSequence& A, const Permutation& w);
/// Sum of [a_i, b_{w(i)}], empty segments dropped. Throws BelowSigma0.
Multisegment multisegment_of(const BiSequence& A, const Permutation& w);
/// Every entry repeated m times.
BiSequence replicate(const BiSequence& A, int m);
bool is_strongly_regular(const BiSequence& A);
/// A strongly regular bi-sequence whose minimal permutation is w. Throws
/// Not213Avoiding.
BiSequence construct_strongly_regular(const Permutation& w);

/// Parses "1,2,3" into integers.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace klforge

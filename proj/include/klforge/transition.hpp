#pragma once

#include <map>
#include <vector>

#include "klforge/kl.hpp"
#include "klforge/pbw.hpp"
#include "klforge/segcomb.hpp"

namespace klforge {

/// The multisegments M_w(A) of a bi-sequence A = B^m with B strongly
/// regular, indexed by minimal double coset representatives
/// W_{b-runs} w W_{a-runs} lying above sigma0(A).
class Family {
public:
    /// Throws UnsupportedFamily unless A is a replication of a strongly
    /// regular bi-sequence.
    explicit Family(BiSequence A);

    const BiSequence& bisequence() const { return A_; }
    const BiSequence& base() const { return base_; }
    int replication() const { return m_; }
    int n() const { return A_.k(); }

    /// Minimal double coset representative of w.
    Permutation representative(const Permutation& w) const;
    /// Every representative above sigma0(A), sorted by length then word.
    const std::vector<Permutation>& index() const { return index_; }
    /// All members of the double coset of w.
    std::vector<Permutation> coset(const Permutation& w) const;

    Multisegment multisegment(const Permutation& w) const { return multisegment_of(A_, w); }

    /// c(s, w, A) = dim End(M_w) - dim End(M_s), where the dimension counts
    /// pairs of segments [a,b], [c,d] with a <= c <= b <= d.
    int codimension(const Permutation& s, const Permutation& w) const;

private:
    BiSequence A_, base_;
    int m_ = 1;
    ParabolicShape values_, positions_;
    std::vector<Permutation> index_;
};

/// Number of pairs (x, y) of segments of m, with multiplicity, such that
/// x.a <= y.a <= x.b <= y.b.
int endomorphism_dimension(const Multisegment& m);

using Expansion = std::map<Permutation, LaurentPoly>;

/// Coefficients of G*(M_s(A)) in E*(M_w(A)): v^{c(s,w)} P_{w w0, s w0}.
Expansion expand_E_in_G(KLTable& table, const BiSequence& A, const Permutation& w);
/// Coefficients of E*(M_s(A)) in G*(M_w(A)):
/// v^{c(s,w)} e(w) sum_{x in W s W} e(x) P_{x,w}.
Expansion expand_G_in_E(KLTable& table, const BiSequence& A, const Permutation& w);

enum class Direction { e_in_g, g_in_e };

/// Closed forms for the coefficient between M_{t_m(s)}(A^m) and
/// M_{t_m(w)}(A^m), A regular of length k, s and w in S_k:
///   e_in_g: v^{m^2 (l(w)-l(s))} P^{-1}(w w0, s w0; m)
///   g_in_e: e(s)^m e(w)^m v^{m^2 (l(w)-l(s))} P^q(s, w; m)
LaurentPoly coeff_parab(KLTable& table, const BiSequence& A, const Permutation& s, const Permutation& w, int m,
                        Direction direction);

/// G*(M_w(A))^m expanded in the dual PBW basis.
PBWElement g_star_power_in_E(KLTable& table, const BiSequence& A, const Permutation& w, int m);

/// Expansion re-keyed by multisegment.
PBWElement to_pbw(const Family& family, const Expansion& e);

/// Square matrix over the family index; entry(i, j) is the coefficient of
/// basis element i in the expansion of element j.
struct TransitionMatrix {
    std::vector<Permutation> index;
    std::vector<std::vector<LaurentPoly>> entries;

    TransitionMatrix operator*(const TransitionMatrix& other) const;
    bool is_identity() const;
};

TransitionMatrix transition_matrix(KLTable& table, const BiSequence& A, Direction direction);

}  // namespace klforge

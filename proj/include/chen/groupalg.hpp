#pragma once

#include <optional>
#include <vector>

#include "chen/chartab.hpp"
#include "chen/gl2.hpp"
#include "chen/qmatrix.hpp"
#include "chen/rational.hpp"

namespace chen {

/// Element of Q[G]: a dense rational coefficient vector indexed like
/// Group::elements().
struct AlgebraElement {
    std::vector<Rational> coeffs;
    bool operator==(const AlgebraElement&) const = default;
};

/// Exact arithmetic in the rational group algebra of a fixed group.  The
/// constructor builds packed multiplication tables so convolution runs on
/// machine integers whenever the scaled coefficients permit.
class GroupAlgebra {
public:
    explicit GroupAlgebra(const Group& g);
    explicit GroupAlgebra(Group&&) = delete;  // the algebra keeps a reference

    const Group& group() const { return g_; }

    AlgebraElement zero() const;
    AlgebraElement identity() const;
    AlgebraElement basis_element(int element_index) const;

    AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement subtract(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement scale(const Rational& r, const AlgebraElement& a) const;

    /// Exact convolution (a*b)(g) = sum_h a(h) b(h^{-1}g).  Integer-scaled
    /// fast path with automatic big-integer fallback.
    AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b) const;
    /// Textbook all-rational convolution; cross-check oracle for the fast path.
    AlgebraElement convolve_reference(const AlgebraElement& a, const AlgebraElement& b) const;

    /// x a x^{-1} for the group element with the given index.
    AlgebraElement conjugate(int element_index, const AlgebraElement& a) const;

    bool is_idempotent(const AlgebraElement& a) const;
    /// Central iff the coefficients are constant on conjugacy classes.
    bool is_central(const AlgebraElement& a) const;

    /// Averaging projector (1/|H|) sum_{h in H} h.
    AlgebraElement projector(SubgroupId h) const;
    /// Central idempotent of the Steinberg character st(0): coefficient
    /// (p/|G|) chi(g^{-1}) at g; all values rational.
    AlgebraElement steinberg_idempotent(const CharacterTable& t) const;

    /// Sum of all coefficients (the trivial-character trace).
    Rational augmentation(const AlgebraElement& a) const;
    std::vector<Rational> class_coefficient_sums(const AlgebraElement& a) const;

    /// chi extended to Q[G]: sum_g a(g) chi(g), via class sums.  For an
    /// idempotent this is its rank in the chi-isotypic factor.
    Rational algebra_trace(const CharacterTable& t, int char_index,
                           const AlgebraElement& a) const;
    std::vector<Rational> trace_vector(const CharacterTable& t, const AlgebraElement& a) const;

    /// Matrix of x -> a*x in the element basis: entry (g, k) = a(g k^{-1}).
    QMatrix regular_matrix(const AlgebraElement& a) const;

    /// Two-sided inverse in Q[G], or nullopt when the element is singular
    /// (certified by an exact rank computation).  Returned inverses are
    /// verified by exact convolution on both sides.
    std::optional<AlgebraElement> invert(const AlgebraElement& a) const;

    int mul_index(int i, int j) const {
        unsigned p = p_;
        const unsigned* mm = mulmod_.data();
        unsigned a1 = ea_[i], b1 = eb_[i], c1 = ec_[i], d1 = ed_[i];
        unsigned a2 = ea_[j], b2 = eb_[j], c2 = ec_[j], d2 = ed_[j];
        unsigned ra = mm[a1 * p + a2] + mm[b1 * p + c2];
        unsigned rb = mm[a1 * p + b2] + mm[b1 * p + d2];
        unsigned rc = mm[c1 * p + a2] + mm[d1 * p + c2];
        unsigned rd = mm[c1 * p + b2] + mm[d1 * p + d2];
        if (ra >= p) ra -= p;
        if (rb >= p) rb -= p;
        if (rc >= p) rc -= p;
        if (rd >= p) rd -= p;
        return pack_[((ra * p + rb) * p + rc) * p + rd];
    }

private:
    void check_size(const AlgebraElement& a) const;

    const Group& g_;
    unsigned p_;
    std::vector<int> pack_;
    std::vector<unsigned> mulmod_;
    std::vector<unsigned char> ea_, eb_, ec_, ed_;
};

}  // namespace chen

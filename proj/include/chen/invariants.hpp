#pragma once

#include <array>
#include <vector>

#include "chen/chartab.hpp"
#include "chen/gl2.hpp"
#include "chen/rational.hpp"

namespace chen {

/// Number of elements of H lying in each conjugacy class of G.
std::vector<long long> class_histogram(const Group& g, SubgroupId h);

/// Values of the permutation character of G acting on G/H, one per class:
/// psi(C) = |{x in G : x^{-1} rep_C x in H}| / |H|.  Brute force over G.
std::vector<long long> permutation_character(const Group& g, SubgroupId h);

/// dim V_chi^H as the average of chi over H.  Throws unless the result is a
/// non-negative integer.
long long dim_by_sum(const CharacterTable& t, SubgroupId h, int char_index);

/// The same dimension from the Kronecker-delta closed forms, evaluated on
/// the character's parameters.  Only the six tabulated subgroups are valid;
/// the same formula row serves both Borels.  Throws on a negative value
/// (which would indicate a transcription error) rather than clamping.
long long dim_by_closed_form(const CharacterTable& t, SubgroupId h, int char_index);

/// The same dimension as <chi, Ind_H^G 1>, through the brute-force
/// permutation character; an oracle independent of the other two routes.
long long dim_by_frobenius(const CharacterTable& t, SubgroupId h, int char_index);

/// Term-by-term breakdown of dim V^{N'} for a discrete-series character,
/// following the two-coset computation: the torus part splits into a full
/// character sum (which vanishes) plus a base-field average, and the
/// reflected part splits into a square-point correction plus a full sum.
/// Every term is already divided by |N'|.
struct NonsplitNormalizerBreakdown {
    Rational torus_series;      // -(sum over T' of both Galois-orbit values)
    Rational torus_average;     // (p+1) times the sum over F_p^*
    Rational reflected_square;  // correction from torus points with square dlog
    Rational reflected_full;    // -(sum over all torus points of the halved-norm values)
    bool norm_restriction_trivial = false;  // Lambda trivial on F_p^*
    bool half_power_trivial = false;        // Lambda^((p+1)/2) trivial
    Rational total;
};

/// Computes the breakdown by direct summation and asserts the total equals
/// dim_by_sum(N', chi).  Requires a Discrete character.
NonsplitNormalizerBreakdown nonsplit_normalizer_breakdown(const CharacterTable& t, int char_index);

/// The six subgroup rows of the dimension table, in display order.
const std::array<SubgroupId, 6>& dim_table_rows();

/// Invariant dimensions for all characters and the six tabulated subgroups,
/// each computed by H-averaging and by closed form (and optionally by the
/// permutation-character oracle), with the structural cross-checks.
class DimTable {
public:
    DimTable(const CharacterTable& t, bool with_frobenius);
    DimTable(CharacterTable&&, bool) = delete;  // the table keeps a reference

    const CharacterTable& table() const { return t_; }
    bool has_frobenius() const { return with_frobenius_; }

    long long by_sum(SubgroupId h, int char_index) const;
    long long by_closed_form(SubgroupId h, int char_index) const;
    long long by_frobenius(SubgroupId h, int char_index) const;

    bool check_agreement() const;       // all computed routes identical
    bool check_sum_vs_closed_form() const;
    bool check_oracle_agreement() const;  // vacuous unless has_frobenius()
    bool check_borel_symmetry() const;  // B+ and B- columns identical
    bool check_mass_balance() const;    // sum_chi degree*dim = [G:H]
    bool check_normalizer_monotonicity() const;  // dims shrink from torus to normalizer
    /// dim V^{T'} = dim V^T - 2*[chi = st(0)], and away from the trivial
    /// character dim V^{N'} + dim V^{B+} = dim V^N.
    bool check_claim_identities() const;
    /// dim V^T = dim V^{B+} + dim V^{B-} = 2 at chi = st(0).
    bool check_old_part_identity() const;

private:
    int row_of(SubgroupId h) const;

    const CharacterTable& t_;
    bool with_frobenius_;
    std::vector<std::vector<long long>> sum_, closed_, frob_;
};

}  // namespace chen

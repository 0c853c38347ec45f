#pragma once

#include <string>
#include <vector>

#include "chen/cyclotomic.hpp"
#include "chen/gl2.hpp"
#include "chen/rational.hpp"

namespace chen {

/// The four families of irreducible characters of GL_2(F_p).
enum class CharKind {
    OneDimensional,   // alpha(det), parameter k
    SteinbergTwist,   // Steinberg tensored with alpha(det), parameter k
    PrincipalSeries,  // induced from a pair of distinct characters (i, j), i < j
    Discrete,         // parametrized by a character of F_{p^2}^* with l not fixed
                      // by Frobenius, canonicalized to l < l*p mod (p^2-1)
};

struct Character {
    CharKind kind;
    unsigned par1 = 0, par2 = 0;
    long long degree = 0;
    std::string label;
    std::vector<RootSum> values;  // one sparse root-of-unity sum per class
};

/// Full irreducible character table of GL_2(F_p).  All values live in
/// Q(zeta_n) with n = p^2 - 1; multiplicative characters of F_p^* are read
/// through zeta_{p-1} = zeta_n^{p+1}.  Discrete logarithms are taken with
/// respect to generators fixed deterministically: the smallest generator of
/// F_p^* and the lexicographically first (a, b) generating F_{p^2}^*.
class CharacterTable {
public:
    explicit CharacterTable(const Group& g);
    explicit CharacterTable(Group&&) = delete;  // the table keeps a reference

    const Group& group() const { return g_; }
    unsigned conductor() const { return n_; }

    int count() const { return static_cast<int>(chars_.size()); }
    const std::vector<Character>& characters() const { return chars_; }
    const Character& character(int i) const { return chars_[i]; }

    /// Materialized value chi_i on class c.
    Cyclotomic value(int char_index, int class_index) const;

    unsigned fp_generator() const { return g1_; }
    Fp2El fp2_generator() const { return g2_; }
    unsigned dlog_fp(unsigned x) const;
    unsigned dlog_fp2(Fp2El z) const;

    int index_of_trivial() const { return 0; }
    int index_of_steinberg_trivial() const { return static_cast<int>(g_.p()) - 1; }

    /// Exponent of zeta_n for the multiplicative character with parameter k
    /// at x in F_p^*, and for the F_{p^2}^* character with parameter l at z.
    unsigned alpha_exponent(unsigned k, unsigned x) const;
    unsigned lambda_exponent(unsigned l, Fp2El z) const;

    /// The table entry whose parameters canonicalize to the given ones
    /// (pairs are unordered, discrete parameters form Frobenius orbits).
    /// Throws when the parameters do not name an irreducible character.
    const Character& character_by_params(CharKind kind, unsigned p1, unsigned p2 = 0) const;

    /// (sum_c weights[c] * chi_i(class c)) / denominator.  Throws when the
    /// sum is not rational; used for invariant dimensions and traces.
    Rational weighted_value_sum(int char_index, const std::vector<mpz_class>& weights,
                                const mpz_class& denominator) const;

    /// <chi_i, chi_j> = (1/|G|) sum_C |C| chi_i(C) conj(chi_j(C)).
    Rational inner_product(int i, int j) const;

    bool verify_row_orthonormality() const;
    bool verify_column_orthogonality() const;

private:
    void fix_generators();
    void build_characters();
    RootSum value_on_class(const Character& ch, const ConjClass& c) const;

    const Group& g_;
    unsigned n_;  // p^2 - 1
    unsigned g1_ = 0;
    Fp2El g2_{};
    std::vector<unsigned> dlog1_;  // index x in [1, p)
    std::vector<unsigned> dlog2_;  // index fp2().encode(z)
    std::vector<Character> chars_;
};

}  // namespace chen

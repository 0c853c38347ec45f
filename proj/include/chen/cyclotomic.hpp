#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chen/rational.hpp"

namespace chen {

/// Shared per-conductor data for the cyclotomic field Q(zeta_n): the n-th
/// cyclotomic polynomial Phi_n and a table expressing zeta_n^e in the power
/// basis {1, zeta, ..., zeta^(phi(n)-1)} for every exponent needed by
/// products and by root-of-unity construction.  Instances are built once per
/// conductor and cached; lookups are thread-safe.
class CycBasis {
public:
    static const CycBasis& get(unsigned n);

    unsigned conductor() const { return n_; }
    unsigned phi() const { return phi_; }

    /// Coefficients of Phi_n, little-endian, monic of degree phi(n).
    const std::vector<mpz_class>& polynomial() const { return poly_; }

    /// zeta_n^e in the power basis, for 0 <= e < table_size().
    const std::vector<mpz_class>& power(unsigned e) const { return pow_[e]; }
    unsigned table_size() const { return static_cast<unsigned>(pow_.size()); }

    /// True when every entry of the power table fits in int64; callers may
    /// then run reductions in machine integers.
    bool power_fits_int64() const { return fits64_; }
    const long long* power_int64(unsigned e) const { return pow64_.data() + e * phi_; }

private:
    explicit CycBasis(unsigned n);

    unsigned n_ = 0;
    unsigned phi_ = 0;
    std::vector<mpz_class> poly_;
    std::vector<std::vector<mpz_class>> pow_;
    std::vector<long long> pow64_;
    bool fits64_ = false;
};

/// Element of the cyclotomic field Q(zeta_n), stored as a dense coefficient
/// vector of length phi(n) over the power basis, i.e. fully reduced modulo
/// Phi_n.  Two values are equal iff their conductors and coefficient vectors
/// are identical; the representation is canonical for a fixed conductor.
/// Values are immutable; all operations are pure.  Mixed-conductor
/// arithmetic throws; callers promote explicitly with embed().
class Cyclotomic {
public:
    static Cyclotomic zero(unsigned n);
    static Cyclotomic one(unsigned n);
    static Cyclotomic from_rational(const Rational& r, unsigned n);

    /// zeta_n^k, with k taken modulo n (negative k allowed).
    static Cyclotomic root_of_unity(unsigned n, long long k);

    /// Builds sum_e acc[e] * zeta_n^e * scale from an exponent accumulator of
    /// length n.  This is the bulk entry point used by character sums.
    static Cyclotomic from_root_accumulator(unsigned n, const std::vector<mpz_class>& acc,
                                            const Rational& scale);

    unsigned conductor() const { return n_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The value as a Rational when it lies in Q, nullopt otherwise.
    std::optional<Rational> as_rational() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Rational& r) const;

    /// Multiplicative inverse; throws std::domain_error on zero.
    Cyclotomic inverse() const;

    /// Reinterprets the value in Q(zeta_m) for a multiple m of the conductor,
    /// using zeta_n = zeta_m^(m/n).
    Cyclotomic embed(unsigned m) const;

    bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::string str() const;

private:
    Cyclotomic(unsigned n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}

    unsigned n_;
    std::vector<Rational> c_;
};

/// Sparse sum of roots of unity with integer multiplicities: a list of
/// (exponent, multiplicity) pairs denoting sum_i m_i * zeta_n^{e_i}.  The
/// conductor is supplied by context.  Character values have at most two
/// terms, which keeps inner products in machine integers until a final
/// basis reduction.
struct RootSum {
    std::vector<std::pair<unsigned, long long>> terms;

    void add(unsigned exponent, long long multiplicity) {
        if (multiplicity == 0) return;
        for (auto& t : terms) {
            if (t.first == exponent) {
                t.second += multiplicity;
                if (t.second == 0) {
                    t.first = terms.back().first;
                    t.second = terms.back().second;
                    terms.pop_back();
                }
                return;
            }
        }
        terms.emplace_back(exponent, multiplicity);
    }

    Cyclotomic to_cyclotomic(unsigned n) const;

    bool operator==(const RootSum&) const = default;
};

unsigned euler_phi(unsigned n);

}  // namespace chen

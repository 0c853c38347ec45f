#include "chen/groupalg.hpp"

#include <stdexcept>

namespace chen {

namespace {

mpz_class int128_to_mpz(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class r = (hi << 64) + mpz_class(static_cast<unsigned long>(u));
    return neg ? mpz_class(-r) : r;
}

/// Common denominator and scaled integer numerators of a coefficient vector.
mpz_class scale_to_integers(const std::vector<Rational>& c, std::vector<mpz_class>& out) {
    mpz_class den = 1;
    for (const Rational& r : c) {
        mpz_class d = r.denominator();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    out.resize(c.size());
    for (size_t i = 0; i < c.size(); ++i)
        out[i] = c[i].numerator() * mpz_class(den / c[i].denominator());
    return den;
}

}  // namespace

GroupAlgebra::GroupAlgebra(const Group& g) : g_(g), p_(g.p()) {
    mulmod_.resize(p_ * p_);
    for (unsigned x = 0; x < p_; ++x)
        for (unsigned y = 0; y < p_; ++y) mulmod_[x * p_ + y] = (x * y) % p_;
    pack_.assign(static_cast<size_t>(p_) * p_ * p_ * p_, -1);
    int n = g_.size();
    ea_.resize(n);
    eb_.resize(n);
    ec_.resize(n);
    ed_.resize(n);
    for (int i = 0; i < n; ++i) {
        const Mat2& m = g_.element(i);
        ea_[i] = static_cast<unsigned char>(m.a);
        eb_[i] = static_cast<unsigned char>(m.b);
        ec_[i] = static_cast<unsigned char>(m.c);
        ed_[i] = static_cast<unsigned char>(m.d);
        pack_[((m.a * p_ + m.b) * p_ + m.c) * p_ + m.d] = i;
    }
}

void GroupAlgebra::check_size(const AlgebraElement& a) const {
    if (static_cast<int>(a.coeffs.size()) != g_.size())
        throw std::invalid_argument("AlgebraElement has the wrong length");
}

AlgebraElement GroupAlgebra::zero() const {
    return AlgebraElement{std::vector<Rational>(g_.size())};
}

AlgebraElement GroupAlgebra::identity() const {
    AlgebraElement e = zero();
    e.coeffs[g_.identity_index()] = Rational(1);
    return e;
}

AlgebraElement GroupAlgebra::basis_element(int element_index) const {
    AlgebraElement e = zero();
    e.coeffs.at(element_index) = Rational(1);
    return e;
}

AlgebraElement GroupAlgebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
    check_size(a);
    check_size(b);
    AlgebraElement r = a;
    for (int i = 0; i < g_.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

AlgebraElement GroupAlgebra::subtract(const AlgebraElement& a, const AlgebraElement& b) const {
    check_size(a);
    check_size(b);
    AlgebraElement r = a;
    for (int i = 0; i < g_.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

AlgebraElement GroupAlgebra::scale(const Rational& r, const AlgebraElement& a) const {
    check_size(a);
    AlgebraElement out = a;
    for (Rational& c : out.coeffs) c *= r;
    return out;
}

AlgebraElement GroupAlgebra::convolve(const AlgebraElement& a, const AlgebraElement& b) const {
    check_size(a);
    check_size(b);
    int n = g_.size();
    std::vector<mpz_class> A, B;
    mpz_class da = scale_to_integers(a.coeffs, A);
    mpz_class db = scale_to_integers(b.coeffs, B);
    mpz_class den = da * db;

    std::vector<int> nza, nzb;
    mpz_class maxa = 0, maxb = 0;
    bool fits = true;
    for (int i = 0; i < n; ++i) {
        if (A[i] != 0) {
            nza.push_back(i);
            mpz_class m = abs(A[i]);
            if (m > maxa) maxa = m;
            if (!A[i].fits_slong_p()) fits = false;
        }
        if (B[i] != 0) {
            nzb.push_back(i);
            mpz_class m = abs(B[i]);
            if (m > maxb) maxb = m;
            if (!B[i].fits_slong_p()) fits = false;
        }
    }
    // Accumulator bound: at most n products of size maxa*maxb land per entry.
    if (fits && maxa * maxb * n >= (mpz_class(1) << 126)) fits = false;

    AlgebraElement out = zero();
    if (fits) {
        std::vector<long long> A64(n), B64(n);
        for (int i : nza) A64[i] = static_cast<long long>(A[i].get_si());
        for (int i : nzb) B64[i] = static_cast<long long>(B[i].get_si());
        std::vector<__int128> acc(n, 0);
        for (int j : nza) {
            __int128 aj = A64[j];
            for (int k : nzb) acc[mul_index(j, k)] += aj * B64[k];
        }
        for (int gidx = 0; gidx < n; ++gidx)
            if (acc[gidx] != 0) out.coeffs[gidx] = Rational(int128_to_mpz(acc[gidx]), den);
    } else {
        std::vector<mpz_class> acc(n);
        for (int j : nza)
            for (int k : nzb) acc[mul_index(j, k)] += A[j] * B[k];
        for (int gidx = 0; gidx < n; ++gidx)
            if (acc[gidx] != 0) out.coeffs[gidx] = Rational(acc[gidx], den);
    }
    return out;
}

AlgebraElement GroupAlgebra::convolve_reference(const AlgebraElement& a,
                                                const AlgebraElement& b) const {
    check_size(a);
    check_size(b);
    AlgebraElement out = zero();
    for (int j = 0; j < g_.size(); ++j) {
        if (a.coeffs[j].is_zero()) continue;
        for (int k = 0; k < g_.size(); ++k) {
            if (b.coeffs[k].is_zero()) continue;
            out.coeffs[g_.mul_index(j, k)].addmul(a.coeffs[j], b.coeffs[k]);
        }
    }
    return out;
}

AlgebraElement GroupAlgebra::conjugate(int element_index, const AlgebraElement& a) const {
    check_size(a);
    AlgebraElement out = zero();
    int xinv = g_.inv_index(element_index);
    for (int i = 0; i < g_.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        out.coeffs[mul_index(mul_index(element_index, i), xinv)] = a.coeffs[i];
    }
    return out;
}

bool GroupAlgebra::is_idempotent(const AlgebraElement& a) const {
    return convolve(a, a) == a;
}

bool GroupAlgebra::is_central(const AlgebraElement& a) const {
    check_size(a);
    for (int i = 0; i < g_.size(); ++i) {
        int rep = g_.classes()[g_.class_of_index(i)].rep_index;
        if (a.coeffs[i] != a.coeffs[rep]) return false;
    }
    return true;
}

AlgebraElement GroupAlgebra::projector(SubgroupId h) const {
    const Subgroup& H = g_.subgroup(h);
    AlgebraElement e = zero();
    Rational w(1, H.order);
    for (int i : H.elements) e.coeffs[i] = w;
    return e;
}

AlgebraElement GroupAlgebra::steinberg_idempotent(const CharacterTable& t) const {
    int st0 = t.index_of_steinberg_trivial();
    std::vector<Rational> class_value(g_.class_count());
    for (int c = 0; c < g_.class_count(); ++c) {
        auto r = t.value(st0, c).as_rational();
        if (!r) throw std::logic_error("steinberg_idempotent: non-rational value");
        class_value[c] = *r;
    }
    Rational scale(static_cast<long long>(g_.p()), g_.order());
    AlgebraElement e = zero();
    for (int i = 0; i < g_.size(); ++i)
        e.coeffs[i] = scale * class_value[g_.class_of_index(g_.inv_index(i))];
    return e;
}

Rational GroupAlgebra::augmentation(const AlgebraElement& a) const {
    check_size(a);
    Rational s;
    for (const Rational& c : a.coeffs) s += c;
    return s;
}

std::vector<Rational> GroupAlgebra::class_coefficient_sums(const AlgebraElement& a) const {
    check_size(a);
    std::vector<Rational> s(g_.class_count());
    for (int i = 0; i < g_.size(); ++i)
        if (!a.coeffs[i].is_zero()) s[g_.class_of_index(i)] += a.coeffs[i];
    return s;
}

Rational GroupAlgebra::algebra_trace(const CharacterTable& t, int char_index,
                                     const AlgebraElement& a) const {
    std::vector<Rational> s = class_coefficient_sums(a);
    std::vector<mpz_class> w;
    mpz_class den = scale_to_integers(s, w);
    return t.weighted_value_sum(char_index, w, den);
}

std::vector<Rational> GroupAlgebra::trace_vector(const CharacterTable& t,
                                                 const AlgebraElement& a) const {
    std::vector<Rational> s = class_coefficient_sums(a);
    std::vector<mpz_class> w;
    mpz_class den = scale_to_integers(s, w);
    std::vector<Rational> out(t.count());
    for (int i = 0; i < t.count(); ++i) out[i] = t.weighted_value_sum(i, w, den);
    return out;
}

QMatrix GroupAlgebra::regular_matrix(const AlgebraElement& a) const {
    check_size(a);
    int n = g_.size();
    QMatrix m(n, n);
    for (int g = 0; g < n; ++g)
        for (int k = 0; k < n; ++k) {
            const Rational& c = a.coeffs[mul_index(g, g_.inv_index(k))];
            if (!c.is_zero()) m.set(g, k, c);
        }
    return m;
}

std::optional<AlgebraElement> GroupAlgebra::invert(const AlgebraElement& a) const {
    check_size(a);
    int n = g_.size();
    std::vector<mpz_class> A;
    mpz_class den = scale_to_integers(a.coeffs, A);

    IntegerSystem sys;
    sys.n = n;
    sys.A.resize(static_cast<size_t>(n) * n);
    sys.b.assign(n, 0);
    for (int g = 0; g < n; ++g)
        for (int k = 0; k < n; ++k)
            sys.A[static_cast<size_t>(g) * n + k] = A[mul_index(g, g_.inv_index(k))];
    sys.b[g_.identity_index()] = den;

    std::optional<std::vector<Rational>> x = lift_solve(sys);
    if (!x) {
        // Presumed singular; certify by exact elimination before reporting.
        QMatrix m = regular_matrix(a);
        if (m.rank() < n) return std::nullopt;
        std::vector<Rational> rhs(n);
        rhs[g_.identity_index()] = Rational(1);
        x = m.solve(rhs);
        if (!x) throw std::logic_error("invert: full-rank system with no solution");
    }
    AlgebraElement inv{std::move(*x)};
    if (convolve(a, inv) != identity() || convolve(inv, a) != identity())
        throw std::logic_error("invert: verification failed");
    return inv;
}

}  // namespace chen

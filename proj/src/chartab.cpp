#include "chen/chartab.hpp"

#include <algorithm>
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

/// sum_e acc[e] * zeta_n^e, which must be rational; returned divided by den.
Rational fold_exponent_accumulator(unsigned n, const std::vector<long long>& acc,
                                   const mpz_class& den) {
    const CycBasis& basis = CycBasis::get(n);
    unsigned phi = basis.phi();
    if (basis.power_fits_int64()) {
        std::vector<__int128> coord(phi, 0);
        for (unsigned e = 0; e < n; ++e) {
            if (acc[e] == 0) continue;
            const long long* pw = basis.power_int64(e);
            __int128 a = acc[e];
            for (unsigned i = 0; i < phi; ++i) coord[i] += a * pw[i];
        }
        for (unsigned i = 1; i < phi; ++i)
            if (coord[i] != 0) throw std::domain_error("character sum is not rational");
        return Rational(int128_to_mpz(coord[0]), den);
    }
    std::vector<mpz_class> coord(phi);
    for (unsigned e = 0; e < n; ++e) {
        if (acc[e] == 0) continue;
        const auto& pw = basis.power(e);
        for (unsigned i = 0; i < phi; ++i)
            if (pw[i] != 0) coord[i] += pw[i] * static_cast<long>(acc[e]);
    }
    for (unsigned i = 1; i < phi; ++i)
        if (coord[i] != 0) throw std::domain_error("character sum is not rational");
    return Rational(coord[0], den);
}

}  // namespace

CharacterTable::CharacterTable(const Group& g) : g_(g), n_(g.p() * g.p() - 1) {
    fix_generators();
    build_characters();
    if (count() != g_.class_count()) throw std::logic_error("CharacterTable: count mismatch");
    long long sq = 0;
    for (const Character& ch : chars_) sq += ch.degree * ch.degree;
    if (sq != g_.order()) throw std::logic_error("CharacterTable: degree mass mismatch");
    int id_class = g_.class_of_index(g_.identity_index());
    for (int i = 0; i < count(); ++i)
        if (value(i, id_class) != Cyclotomic::from_rational(Rational(chars_[i].degree), n_))
            throw std::logic_error("CharacterTable: identity value is not the degree");
}

void CharacterTable::fix_generators() {
    unsigned p = g_.p();
    for (unsigned cand = 2; cand < p; ++cand) {
        unsigned x = cand, ord = 1;
        while (x != 1) {
            x = (x * cand) % p;
            ++ord;
        }
        if (ord == p - 1) {
            g1_ = cand;
            break;
        }
    }
    if (g1_ == 0) throw std::logic_error("CharacterTable: F_p^* has no generator");
    dlog1_.assign(p, 0);
    unsigned x = 1;
    for (unsigned k = 0; k + 1 < p; ++k) {
        dlog1_[x] = k;
        x = (x * g1_) % p;
    }

    const Fp2& f = g_.fp2();
    bool found = false;
    for (unsigned a = 0; a < p && !found; ++a)
        for (unsigned b = 0; b < p && !found; ++b) {
            if (a == 0 && b == 0) continue;
            Fp2El z{a, b};
            Fp2El w = z;
            unsigned ord = 1;
            while (!(w.a == 1 && w.b == 0)) {
                w = f.mul(w, z);
                ++ord;
            }
            if (ord == n_) {
                g2_ = z;
                found = true;
            }
        }
    if (!found) throw std::logic_error("CharacterTable: F_{p^2}^* has no generator");
    dlog2_.assign(p * p, 0);
    Fp2El w{1, 0};
    for (unsigned k = 0; k < n_; ++k) {
        dlog2_[f.encode(w)] = k;
        w = f.mul(w, g2_);
    }

    // The norm map must agree with the (p+1)-st power inside the dlog tables.
    Fp2El nm = f.pow(g2_, p + 1);
    if (!f.in_base_field(nm) || nm.a != f.norm(g2_))
        throw std::logic_error("CharacterTable: norm of the fixed generator is inconsistent");
}

unsigned CharacterTable::dlog_fp(unsigned x) const {
    x %= g_.p();
    if (x == 0) throw std::domain_error("dlog_fp: zero");
    return dlog1_[x];
}

unsigned CharacterTable::dlog_fp2(Fp2El z) const {
    if (z.a == 0 && z.b == 0) throw std::domain_error("dlog_fp2: zero");
    return dlog2_[g_.fp2().encode(z)];
}

unsigned CharacterTable::alpha_exponent(unsigned k, unsigned x) const {
    unsigned long long e = static_cast<unsigned long long>(g_.p() + 1) * (k % (g_.p() - 1)) *
                           dlog_fp(x);
    return static_cast<unsigned>(e % n_);
}

unsigned CharacterTable::lambda_exponent(unsigned l, Fp2El z) const {
    unsigned long long e = static_cast<unsigned long long>(l % n_) * dlog_fp2(z);
    return static_cast<unsigned>(e % n_);
}

RootSum CharacterTable::value_on_class(const Character& ch, const ConjClass& c) const {
    unsigned p = g_.p();
    RootSum v;
    switch (ch.kind) {
        case CharKind::OneDimensional:
            switch (c.kind) {
                case ClassKind::Central:
                case ClassKind::Jordan: v.add(alpha_exponent(ch.par1, (c.x * c.x) % p), 1); break;
                case ClassKind::Split: v.add(alpha_exponent(ch.par1, (c.x * c.y) % p), 1); break;
                case ClassKind::NonSplit:
                    v.add(alpha_exponent(ch.par1, g_.fp2().norm(c.z)), 1);
                    break;
            }
            break;
        case CharKind::SteinbergTwist:
            switch (c.kind) {
                case ClassKind::Central: v.add(alpha_exponent(ch.par1, (c.x * c.x) % p), p); break;
                case ClassKind::Split: v.add(alpha_exponent(ch.par1, (c.x * c.y) % p), 1); break;
                case ClassKind::Jordan: break;
                case ClassKind::NonSplit:
                    v.add(alpha_exponent(ch.par1, g_.fp2().norm(c.z)), -1);
                    break;
            }
            break;
        case CharKind::PrincipalSeries:
            switch (c.kind) {
                case ClassKind::Central:
                    v.add((alpha_exponent(ch.par1, c.x) + alpha_exponent(ch.par2, c.x)) % n_,
                          p + 1);
                    break;
                case ClassKind::Split:
                    v.add((alpha_exponent(ch.par1, c.x) + alpha_exponent(ch.par2, c.y)) % n_, 1);
                    v.add((alpha_exponent(ch.par1, c.y) + alpha_exponent(ch.par2, c.x)) % n_, 1);
                    break;
                case ClassKind::Jordan:
                    v.add((alpha_exponent(ch.par1, c.x) + alpha_exponent(ch.par2, c.x)) % n_, 1);
                    break;
                case ClassKind::NonSplit: break;
            }
            break;
        case CharKind::Discrete:
            switch (c.kind) {
                case ClassKind::Central:
                    v.add(lambda_exponent(ch.par1, Fp2El{c.x, 0}), static_cast<long long>(p) - 1);
                    break;
                case ClassKind::Split: break;
                case ClassKind::Jordan: v.add(lambda_exponent(ch.par1, Fp2El{c.x, 0}), -1); break;
                case ClassKind::NonSplit:
                    v.add(lambda_exponent(ch.par1, c.z), -1);
                    v.add(lambda_exponent(ch.par1, g_.fp2().frobenius(c.z)), -1);
                    break;
            }
            break;
    }
    return v;
}

void CharacterTable::build_characters() {
    unsigned p = g_.p();
    auto push = [&](CharKind kind, unsigned p1, unsigned p2, long long degree, std::string label) {
        Character ch;
        ch.kind = kind;
        ch.par1 = p1;
        ch.par2 = p2;
        ch.degree = degree;
        ch.label = std::move(label);
        ch.values.reserve(g_.class_count());
        for (const ConjClass& c : g_.classes()) ch.values.push_back(value_on_class(ch, c));
        chars_.push_back(std::move(ch));
    };
    for (unsigned k = 0; k + 1 < p; ++k)
        push(CharKind::OneDimensional, k, 0, 1, "det(" + std::to_string(k) + ")");
    for (unsigned k = 0; k + 1 < p; ++k)
        push(CharKind::SteinbergTwist, k, 0, p, "st(" + std::to_string(k) + ")");
    for (unsigned i = 0; i + 2 < p; ++i)
        for (unsigned j = i + 1; j + 1 < p; ++j)
            push(CharKind::PrincipalSeries, i, j, p + 1,
                 "pi(" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (unsigned l = 1; l < n_; ++l) {
        if (l % (p + 1) == 0) continue;
        if ((l * p) % n_ < l) continue;  // keep one representative per Frobenius orbit
        push(CharKind::Discrete, l, 0, p - 1, "piL(" + std::to_string(l) + ")");
    }
}

Cyclotomic CharacterTable::value(int char_index, int class_index) const {
    return chars_[char_index].values[class_index].to_cyclotomic(n_);
}

const Character& CharacterTable::character_by_params(CharKind kind, unsigned p1,
                                                     unsigned p2) const {
    unsigned p = g_.p(), m = p - 1;
    unsigned a = 0, b = 0;
    switch (kind) {
        case CharKind::OneDimensional:
        case CharKind::SteinbergTwist: a = p1 % m; break;
        case CharKind::PrincipalSeries:
            a = p1 % m;
            b = p2 % m;
            if (a == b)
                throw std::invalid_argument("principal series parameters must be distinct");
            if (a > b) std::swap(a, b);
            break;
        case CharKind::Discrete:
            a = p1 % n_;
            if (a == 0 || a % (p + 1) == 0)
                throw std::invalid_argument("discrete parameter must not be Frobenius-fixed");
            a = std::min(a, (a * p) % n_);
            break;
    }
    for (const Character& ch : chars_)
        if (ch.kind == kind && ch.par1 == a && ch.par2 == b) return ch;
    throw std::logic_error("character_by_params: not found");
}

Rational CharacterTable::weighted_value_sum(int char_index, const std::vector<mpz_class>& weights,
                                            const mpz_class& denominator) const {
    if (static_cast<int>(weights.size()) != g_.class_count())
        throw std::invalid_argument("weighted_value_sum: wrong weight count");
    if (denominator == 0) throw std::domain_error("weighted_value_sum: zero denominator");
    std::vector<mpz_class> acc(n_);
    const Character& ch = chars_[char_index];
    for (int c = 0; c < g_.class_count(); ++c) {
        if (weights[c] == 0) continue;
        for (const auto& [e, m] : ch.values[c].terms) acc[e] += weights[c] * static_cast<long>(m);
    }
    const CycBasis& basis = CycBasis::get(n_);
    std::vector<mpz_class> coord(basis.phi());
    for (unsigned e = 0; e < n_; ++e) {
        if (acc[e] == 0) continue;
        const auto& pw = basis.power(e);
        for (unsigned i = 0; i < basis.phi(); ++i)
            if (pw[i] != 0) coord[i] += acc[e] * pw[i];
    }
    for (unsigned i = 1; i < basis.phi(); ++i)
        if (coord[i] != 0) throw std::domain_error("weighted_value_sum: sum is not rational");
    return Rational(coord[0], denominator);
}

Rational CharacterTable::inner_product(int i, int j) const {
    std::vector<long long> acc(n_, 0);
    for (int c = 0; c < g_.class_count(); ++c) {
        const RootSum& a = chars_[i].values[c];
        if (a.terms.empty()) continue;
        const RootSum& b = chars_[j].values[g_.inverse_class(c)];
        if (b.terms.empty()) continue;
        long long w = g_.classes()[c].size;
        for (const auto& [ea, ma] : a.terms)
            for (const auto& [eb, mb] : b.terms) acc[(ea + eb) % n_] += w * ma * mb;
    }
    return fold_exponent_accumulator(n_, acc, mpz_class(static_cast<long>(g_.order())));
}

bool CharacterTable::verify_row_orthonormality() const {
    for (int i = 0; i < count(); ++i)
        for (int j = i; j < count(); ++j)
            if (inner_product(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

bool CharacterTable::verify_column_orthogonality() const {
    int nc = g_.class_count();
    for (int ci = 0; ci < nc; ++ci)
        for (int cj = ci; cj < nc; ++cj) {
            std::vector<long long> acc(n_, 0);
            int cjinv = g_.inverse_class(cj);
            for (const Character& ch : chars_)
                for (const auto& [ea, ma] : ch.values[ci].terms)
                    for (const auto& [eb, mb] : ch.values[cjinv].terms)
                        acc[(ea + eb) % n_] += ma * mb;
            Rational v = fold_exponent_accumulator(n_, acc, 1);
            Rational expect(ci == cj ? g_.centralizer_order(ci) : 0);
            if (v != expect) return false;
        }
    return true;
}

}  // namespace chen

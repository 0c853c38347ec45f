#include "chen/invariants.hpp"

#include <stdexcept>

namespace chen {

std::vector<long long> class_histogram(const Group& g, SubgroupId h) {
    std::vector<long long> hist(g.class_count(), 0);
    for (int i : g.subgroup(h).elements) ++hist[g.class_of_index(i)];
    return hist;
}

std::vector<long long> permutation_character(const Group& g, SubgroupId h) {
    const Subgroup& H = g.subgroup(h);
    std::vector<long long> psi(g.class_count(), 0);
    for (int c = 0; c < g.class_count(); ++c) {
        int rep = g.classes()[c].rep_index;
        long long count = 0;
        for (int x = 0; x < g.size(); ++x) {
            int conj = g.mul_index(g.mul_index(g.inv_index(x), rep), x);
            if (H.member[conj]) ++count;
        }
        if (count % H.order != 0)
            throw std::logic_error("permutation_character: count not divisible by |H|");
        psi[c] = count / H.order;
    }
    return psi;
}

namespace {

long long as_dimension(const Rational& r, const char* what) {
    if (!r.is_integer()) throw std::logic_error(std::string(what) + ": not an integer");
    long long v = r.as_int64();
    if (v < 0) throw std::logic_error(std::string(what) + ": negative");
    return v;
}

}  // namespace

long long dim_by_sum(const CharacterTable& t, SubgroupId h, int char_index) {
    const Group& g = t.group();
    std::vector<long long> hist = class_histogram(g, h);
    std::vector<mpz_class> w(hist.size());
    for (std::size_t i = 0; i < hist.size(); ++i) w[i] = static_cast<long>(hist[i]);
    Rational r = t.weighted_value_sum(char_index, w,
                                      mpz_class(static_cast<long>(g.subgroup(h).order)));
    return as_dimension(r, "dim_by_sum");
}

long long dim_by_frobenius(const CharacterTable& t, SubgroupId h, int char_index) {
    const Group& g = t.group();
    std::vector<long long> psi = permutation_character(g, h);
    std::vector<mpz_class> w(g.class_count());
    for (int c = 0; c < g.class_count(); ++c)
        w[c] = mpz_class(static_cast<long>(g.classes()[c].size)) * static_cast<long>(psi[c]);
    Rational r = t.weighted_value_sum(char_index, w, mpz_class(static_cast<long>(g.order())));
    return as_dimension(r, "dim_by_frobenius");
}

long long dim_by_closed_form(const CharacterTable& t, SubgroupId h, int char_index) {
    const Group& g = t.group();
    unsigned p = g.p(), m = p - 1, n = t.conductor();
    const Character& ch = t.character(char_index);

    unsigned dm1 = t.dlog_fp(p - 1);
    auto alpha_trivial = [&](unsigned k) { return k % m == 0; };
    auto alpha_sq_trivial = [&](unsigned k) { return (2ULL * k) % m == 0; };
    auto alpha_at_minus1_trivial = [&](unsigned k) {
        return (static_cast<unsigned long long>(k) * dm1) % m == 0;
    };
    auto lambda_norm_trivial = [&](unsigned l) {
        return (static_cast<unsigned long long>(l) * (p + 1)) % n == 0;
    };
    auto lambda_half_trivial = [&](unsigned l) {
        return (static_cast<unsigned long long>(l) * ((p + 1) / 2)) % n == 0;
    };

    long long v = 0;
    switch (h) {
        case SubgroupId::SplitTorus:
            switch (ch.kind) {
                case CharKind::PrincipalSeries: v = alpha_trivial(ch.par1 + ch.par2); break;
                case CharKind::SteinbergTwist:
                    v = static_cast<long long>(alpha_trivial(ch.par1)) +
                        alpha_sq_trivial(ch.par1);
                    break;
                case CharKind::OneDimensional: v = alpha_trivial(ch.par1); break;
                case CharKind::Discrete: v = lambda_norm_trivial(ch.par1); break;
            }
            break;
        case SubgroupId::SplitNormalizer:
            switch (ch.kind) {
                case CharKind::PrincipalSeries:
                    v = alpha_trivial(ch.par1 + ch.par2) && alpha_at_minus1_trivial(ch.par1);
                    break;
                case CharKind::SteinbergTwist:
                    v = alpha_at_minus1_trivial(ch.par1) && alpha_sq_trivial(ch.par1);
                    break;
                case CharKind::OneDimensional: v = alpha_trivial(ch.par1); break;
                case CharKind::Discrete:
                    v = static_cast<long long>(lambda_norm_trivial(ch.par1)) -
                        lambda_half_trivial(ch.par1);
                    break;
            }
            break;
        case SubgroupId::NonsplitTorus:
            switch (ch.kind) {
                case CharKind::PrincipalSeries: v = alpha_trivial(ch.par1 + ch.par2); break;
                case CharKind::SteinbergTwist:
                    v = -static_cast<long long>(alpha_trivial(ch.par1)) +
                        alpha_sq_trivial(ch.par1);
                    break;
                case CharKind::OneDimensional: v = alpha_trivial(ch.par1); break;
                case CharKind::Discrete: v = lambda_norm_trivial(ch.par1); break;
            }
            break;
        case SubgroupId::NonsplitNormalizer:
            switch (ch.kind) {
                case CharKind::PrincipalSeries:
                    v = alpha_trivial(ch.par1 + ch.par2) && alpha_at_minus1_trivial(ch.par1);
                    break;
                case CharKind::SteinbergTwist:
                    v = -static_cast<long long>(alpha_trivial(ch.par1)) +
                        (alpha_at_minus1_trivial(ch.par1) && alpha_sq_trivial(ch.par1));
                    break;
                case CharKind::OneDimensional: v = alpha_trivial(ch.par1); break;
                case CharKind::Discrete:
                    v = static_cast<long long>(lambda_norm_trivial(ch.par1)) -
                        lambda_half_trivial(ch.par1);
                    break;
            }
            break;
        case SubgroupId::BorelUpper:
        case SubgroupId::BorelLower:
            switch (ch.kind) {
                case CharKind::PrincipalSeries: v = 0; break;
                case CharKind::SteinbergTwist: v = alpha_trivial(ch.par1); break;
                case CharKind::OneDimensional: v = alpha_trivial(ch.par1); break;
                case CharKind::Discrete: v = 0; break;
            }
            break;
        default: throw std::invalid_argument("dim_by_closed_form: subgroup not tabulated");
    }
    if (v < 0) throw std::logic_error("dim_by_closed_form: negative entry");
    return v;
}

NonsplitNormalizerBreakdown nonsplit_normalizer_breakdown(const CharacterTable& t,
                                                          int char_index) {
    const Character& ch = t.character(char_index);
    if (ch.kind != CharKind::Discrete)
        throw std::invalid_argument("breakdown requires a discrete-series character");
    const Group& g = t.group();
    const Fp2& f = g.fp2();
    unsigned p = g.p(), n = t.conductor(), l = ch.par1;
    mpz_class den = 2 * mpz_class(static_cast<long>(n));  // |N'| = 2(p^2-1)

    std::vector<mpz_class> acc1(n), acc2(n), acc3(n), acc4(n);
    for (unsigned a = 0; a < p; ++a)
        for (unsigned b = 0; b < p; ++b) {
            if (a == 0 && b == 0) continue;
            Fp2El z{a, b};
            acc1[t.lambda_exponent(l, z)] -= 1;
            acc1[t.lambda_exponent(l, f.frobenius(z))] -= 1;
        }
    for (unsigned x = 1; x < p; ++x) acc2[t.lambda_exponent(l, Fp2El{x, 0})] += p + 1;
    Fp2El g2 = t.fp2_generator();
    for (unsigned k = 0; k < n; ++k) {
        Fp2El w = f.pow(g2, static_cast<unsigned long long>(k) * ((p + 1) / 2));
        unsigned e1 = t.lambda_exponent(l, w);
        unsigned e2 = t.lambda_exponent(l, f.negate(w));
        if (k % 2 == 0) {
            acc3[e1] += 1;
            acc3[e2] += 1;
        }
        acc4[e1] -= 1;
        acc4[e2] -= 1;
    }

    auto fold = [&](const std::vector<mpz_class>& acc) {
        Cyclotomic v = Cyclotomic::from_root_accumulator(n, acc, Rational(mpz_class(1), den));
        auto r = v.as_rational();
        if (!r) throw std::logic_error("breakdown term is not rational");
        return *r;
    };
    NonsplitNormalizerBreakdown out;
    out.torus_series = fold(acc1);
    out.torus_average = fold(acc2);
    out.reflected_square = fold(acc3);
    out.reflected_full = fold(acc4);
    out.norm_restriction_trivial = (static_cast<unsigned long long>(l) * (p + 1)) % n == 0;
    out.half_power_trivial = (static_cast<unsigned long long>(l) * ((p + 1) / 2)) % n == 0;
    out.total = out.torus_series + out.torus_average + out.reflected_square + out.reflected_full;
    if (out.total != Rational(dim_by_sum(t, SubgroupId::NonsplitNormalizer, char_index)))
        throw std::logic_error("breakdown total disagrees with the direct average");
    return out;
}

const std::array<SubgroupId, 6>& dim_table_rows() {
    static const std::array<SubgroupId, 6> rows = {
        SubgroupId::SplitTorus,   SubgroupId::SplitNormalizer, SubgroupId::NonsplitTorus,
        SubgroupId::NonsplitNormalizer, SubgroupId::BorelUpper, SubgroupId::BorelLower};
    return rows;
}

DimTable::DimTable(const CharacterTable& t, bool with_frobenius)
    : t_(t), with_frobenius_(with_frobenius) {
    const Group& g = t.group();
    int nch = t.count();
    for (SubgroupId h : dim_table_rows()) {
        std::vector<long long> hist = class_histogram(g, h);
        std::vector<mpz_class> w(hist.size());
        for (std::size_t i = 0; i < hist.size(); ++i) w[i] = static_cast<long>(hist[i]);
        mpz_class order(static_cast<long>(g.subgroup(h).order));
        std::vector<long long> s(nch), c(nch);
        for (int i = 0; i < nch; ++i) {
            s[i] = as_dimension(t.weighted_value_sum(i, w, order), "dim_by_sum");
            c[i] = dim_by_closed_form(t, h, i);
        }
        sum_.push_back(std::move(s));
        closed_.push_back(std::move(c));
        if (with_frobenius_) {
            std::vector<long long> psi = permutation_character(g, h);
            std::vector<mpz_class> wf(g.class_count());
            for (int cc = 0; cc < g.class_count(); ++cc)
                wf[cc] = mpz_class(static_cast<long>(g.classes()[cc].size)) * static_cast<long>(psi[cc]);
            mpz_class gorder(static_cast<long>(g.order()));
            std::vector<long long> fr(nch);
            for (int i = 0; i < nch; ++i)
                fr[i] = as_dimension(t.weighted_value_sum(i, wf, gorder), "dim_by_frobenius");
            frob_.push_back(std::move(fr));
        }
    }
}

int DimTable::row_of(SubgroupId h) const {
    const auto& rows = dim_table_rows();
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i] == h) return static_cast<int>(i);
    throw std::invalid_argument("DimTable: subgroup not tabulated");
}

long long DimTable::by_sum(SubgroupId h, int char_index) const {
    return sum_[row_of(h)][char_index];
}

long long DimTable::by_closed_form(SubgroupId h, int char_index) const {
    return closed_[row_of(h)][char_index];
}

long long DimTable::by_frobenius(SubgroupId h, int char_index) const {
    if (!with_frobenius_) throw std::logic_error("DimTable: oracle not computed");
    return frob_[row_of(h)][char_index];
}

bool DimTable::check_agreement() const {
    return check_sum_vs_closed_form() && check_oracle_agreement();
}

bool DimTable::check_sum_vs_closed_form() const {
    return sum_ == closed_;
}

bool DimTable::check_oracle_agreement() const {
    return !with_frobenius_ || sum_ == frob_;
}

bool DimTable::check_borel_symmetry() const {
    int bp = row_of(SubgroupId::BorelUpper), bm = row_of(SubgroupId::BorelLower);
    if (sum_[bp] != sum_[bm]) return false;
    if (with_frobenius_ && frob_[bp] != frob_[bm]) return false;
    return true;
}

bool DimTable::check_mass_balance() const {
    const Group& g = t_.group();
    for (SubgroupId h : dim_table_rows()) {
        long long mass = 0;
        for (int i = 0; i < t_.count(); ++i)
            mass += t_.character(i).degree * sum_[row_of(h)][i];
        if (mass != g.order() / g.subgroup(h).order) return false;
    }
    return true;
}

bool DimTable::check_normalizer_monotonicity() const {
    int tt = row_of(SubgroupId::SplitTorus), nn = row_of(SubgroupId::SplitNormalizer);
    int tt2 = row_of(SubgroupId::NonsplitTorus), nn2 = row_of(SubgroupId::NonsplitNormalizer);
    for (int i = 0; i < t_.count(); ++i) {
        if (sum_[nn][i] > sum_[tt][i]) return false;
        if (sum_[nn2][i] > sum_[tt2][i]) return false;
    }
    return true;
}

bool DimTable::check_claim_identities() const {
    int st0 = t_.index_of_steinberg_trivial();
    int triv = t_.index_of_trivial();
    int tt = row_of(SubgroupId::SplitTorus), tt2 = row_of(SubgroupId::NonsplitTorus);
    int nn = row_of(SubgroupId::SplitNormalizer), nn2 = row_of(SubgroupId::NonsplitNormalizer);
    int bp = row_of(SubgroupId::BorelUpper);
    for (int i = 0; i < t_.count(); ++i) {
        if (sum_[tt2][i] != sum_[tt][i] - 2 * (i == st0 ? 1 : 0)) return false;
        if (i != triv && sum_[nn2][i] + sum_[bp][i] != sum_[nn][i]) return false;
    }
    return true;
}

bool DimTable::check_old_part_identity() const {
    int st0 = t_.index_of_steinberg_trivial();
    long long vt = sum_[row_of(SubgroupId::SplitTorus)][st0];
    long long vbp = sum_[row_of(SubgroupId::BorelUpper)][st0];
    long long vbm = sum_[row_of(SubgroupId::BorelLower)][st0];
    return vt == 2 && vbp == 1 && vbm == 1 && vt == vbp + vbm;
}

}  // namespace chen

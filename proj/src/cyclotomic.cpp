#include "chen/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace chen {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            result -= result / q;
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using Poly = std::vector<mpz_class>;  // little-endian coefficients

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Exact division of integer polynomials; the quotient must be integral.
Poly poly_divide_exact(const Poly& num, const Poly& den) {
    Poly r = num;
    poly_trim(r);
    Poly d = den;
    poly_trim(d);
    if (d.empty()) throw std::domain_error("poly_divide_exact: zero divisor");
    if (r.size() < d.size()) throw std::domain_error("poly_divide_exact: not divisible");
    Poly q(r.size() - d.size() + 1, mpz_class(0));
    for (size_t k = q.size(); k-- > 0;) {
        mpz_class c = r[k + d.size() - 1];
        if (c == 0) continue;
        mpz_class qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), d.back().get_mpz_t());
        if (rem != 0) throw std::domain_error("poly_divide_exact: not divisible");
        q[k] = qc;
        for (size_t i = 0; i < d.size(); ++i) r[k + i] -= qc * d[i];
    }
    for (const auto& c : r)
        if (c != 0) throw std::domain_error("poly_divide_exact: nonzero remainder");
    return q;
}

std::vector<unsigned> divisors_of(unsigned n) {
    std::vector<unsigned> ds;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) ds.push_back(d);
    return ds;
}

// Phi_n via Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
Poly cyclotomic_polynomial(unsigned n) {
    std::map<unsigned, Poly> phi;
    for (unsigned d : divisors_of(n)) {
        Poly xd_minus_1(d + 1, mpz_class(0));
        xd_minus_1[0] = -1;
        xd_minus_1[d] = 1;
        Poly acc = xd_minus_1;
        for (unsigned e : divisors_of(d)) {
            if (e == d) continue;
            acc = poly_divide_exact(acc, phi.at(e));
        }
        phi[d] = acc;
    }
    return phi.at(n);
}

std::mutex g_basis_mutex;
std::map<unsigned, std::unique_ptr<CycBasis>>& basis_registry() {
    static std::map<unsigned, std::unique_ptr<CycBasis>> reg;
    return reg;
}

}  // namespace

CycBasis::CycBasis(unsigned n) : n_(n) {
    if (n == 0) throw std::invalid_argument("CycBasis: conductor must be positive");
    phi_ = euler_phi(n);
    poly_ = cyclotomic_polynomial(n);
    if (poly_.size() != phi_ + 1 || poly_.back() != 1)
        throw std::logic_error("CycBasis: bad cyclotomic polynomial");

    unsigned limit = std::max(n, 2 * phi_ - 1);
    pow_.resize(limit);
    for (unsigned e = 0; e < limit; ++e) {
        if (e < phi_) {
            pow_[e].assign(phi_, mpz_class(0));
            pow_[e][e] = 1;
            continue;
        }
        // x * pow_[e-1] reduced by the monic Phi_n.
        const auto& prev = pow_[e - 1];
        std::vector<mpz_class> cur(phi_, mpz_class(0));
        for (unsigned i = 0; i + 1 < phi_; ++i) cur[i + 1] = prev[i];
        const mpz_class& lead = prev[phi_ - 1];
        if (lead != 0)
            for (unsigned i = 0; i < phi_; ++i) cur[i] -= lead * poly_[i];
        pow_[e] = std::move(cur);
    }

    fits64_ = true;
    pow64_.assign(static_cast<size_t>(limit) * phi_, 0);
    for (unsigned e = 0; e < limit && fits64_; ++e)
        for (unsigned i = 0; i < phi_; ++i) {
            if (!pow_[e][i].fits_slong_p()) {
                fits64_ = false;
                break;
            }
            pow64_[static_cast<size_t>(e) * phi_ + i] = pow_[e][i].get_si();
        }
    if (!fits64_) pow64_.clear();
}

const CycBasis& CycBasis::get(unsigned n) {
    std::lock_guard<std::mutex> lock(g_basis_mutex);
    auto& reg = basis_registry();
    auto it = reg.find(n);
    if (it == reg.end())
        it = reg.emplace(n, std::unique_ptr<CycBasis>(new CycBasis(n))).first;
    return *it->second;
}

Cyclotomic Cyclotomic::zero(unsigned n) {
    const auto& basis = CycBasis::get(n);
    return Cyclotomic(n, std::vector<Rational>(basis.phi()));
}

Cyclotomic Cyclotomic::one(unsigned n) {
    return from_rational(Rational(1), n);
}

Cyclotomic Cyclotomic::from_rational(const Rational& r, unsigned n) {
    const auto& basis = CycBasis::get(n);
    std::vector<Rational> c(basis.phi());
    c[0] = r;
    return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long long k) {
    const auto& basis = CycBasis::get(n);
    long long e = k % static_cast<long long>(n);
    if (e < 0) e += n;
    const auto& row = basis.power(static_cast<unsigned>(e));
    std::vector<Rational> c(basis.phi());
    for (unsigned i = 0; i < basis.phi(); ++i)
        if (row[i] != 0) c[i] = Rational(row[i], mpz_class(1));
    return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::from_root_accumulator(unsigned n, const std::vector<mpz_class>& acc,
                                             const Rational& scale) {
    if (acc.size() != n) throw std::invalid_argument("from_root_accumulator: accumulator length");
    const auto& basis = CycBasis::get(n);
    std::vector<mpz_class> out(basis.phi(), mpz_class(0));
    for (unsigned e = 0; e < n; ++e) {
        if (acc[e] == 0) continue;
        const auto& row = basis.power(e);
        for (unsigned i = 0; i < basis.phi(); ++i)
            if (row[i] != 0) out[i] += acc[e] * row[i];
    }
    std::vector<Rational> c(basis.phi());
    for (unsigned i = 0; i < basis.phi(); ++i)
        if (out[i] != 0) c[i] = Rational(out[i], mpz_class(1)) * scale;
    return Cyclotomic(n, std::move(c));
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Cyclotomic: conductor mismatch");
    std::vector<Rational> c(c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Cyclotomic: conductor mismatch");
    std::vector<Rational> c(c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
    return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = c_[i] * r;
    return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Cyclotomic: conductor mismatch");
    const auto& basis = CycBasis::get(n_);
    unsigned phi = basis.phi();
    std::vector<Rational> prod(2 * phi - 1);
    for (unsigned i = 0; i < phi; ++i) {
        if (c_[i].is_zero()) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (o.c_[j].is_zero()) continue;
            prod[i + j].addmul(c_[i], o.c_[j]);
        }
    }
    std::vector<Rational> c(prod.begin(), prod.begin() + phi);
    for (unsigned e = phi; e < 2 * phi - 1; ++e) {
        if (prod[e].is_zero()) continue;
        const auto& row = basis.power(e);
        for (unsigned i = 0; i < phi; ++i)
            if (row[i] != 0) c[i].addmul(prod[e], Rational(row[i], mpz_class(1)));
    }
    return Cyclotomic(n_, std::move(c));
}

namespace {

using QPoly = std::vector<Rational>;  // little-endian, rational coefficients

void qpoly_trim(QPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Remainder-producing division over Q; returns {quotient, remainder}.
std::pair<QPoly, QPoly> qpoly_divmod(QPoly num, const QPoly& den) {
    qpoly_trim(num);
    QPoly d = den;
    qpoly_trim(d);
    if (d.empty()) throw std::domain_error("qpoly_divmod: zero divisor");
    if (num.size() < d.size()) return {QPoly{}, std::move(num)};
    QPoly q(num.size() - d.size() + 1);
    for (size_t k = q.size(); k-- > 0;) {
        Rational c = num[k + d.size() - 1] / d.back();
        if (c.is_zero()) continue;
        q[k] = c;
        for (size_t i = 0; i < d.size(); ++i) num[k + i] -= c * d[i];
    }
    num.resize(d.size() - 1);
    qpoly_trim(num);
    return {std::move(q), std::move(num)};
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j].addmul(a[i], b[j]);
    }
    return r;
}

QPoly qpoly_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qpoly_trim(a);
    return a;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
    const auto& basis = CycBasis::get(n_);

    // Extended Euclid for gcd(a, Phi_n) = 1 over Q[x]; Phi_n is irreducible,
    // so the gcd is a nonzero constant and s*a = gcd (mod Phi_n).
    QPoly r0(basis.polynomial().size());
    for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(basis.polynomial()[i], mpz_class(1));
    QPoly r1(c_.begin(), c_.end());
    qpoly_trim(r1);
    QPoly s0{}, s1{Rational(1)};
    while (!r1.empty() && r1.size() > 1) {
        auto [q, r] = qpoly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly s2 = qpoly_sub(std::move(s0), qpoly_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::logic_error("Cyclotomic: gcd with Phi_n not constant");
    // r1 is the constant gcd and s1 the cofactor of this value; the cofactor
    // degree is below phi(n) by the Euclid degree bounds.
    Rational g = r1[0];
    if (s1.size() > basis.phi()) throw std::logic_error("Cyclotomic: cofactor degree too large");
    std::vector<Rational> c(basis.phi());
    for (size_t i = 0; i < s1.size(); ++i) c[i] = s1[i] / g;
    return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::embed(unsigned m) const {
    if (m % n_ != 0) throw std::invalid_argument("Cyclotomic: embed target not a multiple");
    if (m == n_) return *this;
    unsigned step = m / n_;
    Cyclotomic out = Cyclotomic::zero(m);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        out = out + Cyclotomic::root_of_unity(m, static_cast<long long>(j) * step) * c_[j];
    }
    return out;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].str();
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    os << "  (z = zeta_" << n_ << ")";
    return os.str();
}

Cyclotomic RootSum::to_cyclotomic(unsigned n) const {
    std::vector<mpz_class> acc(n, mpz_class(0));
    for (const auto& [e, m] : terms) acc[e % n] += static_cast<long>(m);
    return Cyclotomic::from_root_accumulator(n, acc, Rational(1));
}

}  // namespace chen

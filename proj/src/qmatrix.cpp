#include "chen/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace chen {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: dimension mismatch");
    QMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.e_[static_cast<size_t>(i) * o.cols_ + j].addmul(a, o.at(k, j));
            }
        }
    return r;
}

namespace {

// In-place reduced row echelon form on a rows x width array, using only the
// first `cols` columns for pivot search (anything beyond is carried along,
// e.g. an augmented identity).  Returns the pivot columns in order.
std::vector<int> rref(std::vector<Rational>& m, int rows, int width, int cols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int r = row; r < rows; ++r)
            if (!m[static_cast<size_t>(r) * width + col].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < width; ++j)
                std::swap(m[static_cast<size_t>(pr) * width + j],
                          m[static_cast<size_t>(row) * width + j]);
        Rational inv = Rational(1) / m[static_cast<size_t>(row) * width + col];
        for (int j = col; j < width; ++j) {
            Rational& x = m[static_cast<size_t>(row) * width + j];
            if (!x.is_zero()) x *= inv;
        }
        for (int r = 0; r < rows; ++r) {
            if (r == row) continue;
            Rational f = m[static_cast<size_t>(r) * width + col];
            if (f.is_zero()) continue;
            for (int j = col; j < width; ++j) {
                const Rational& pv = m[static_cast<size_t>(row) * width + j];
                if (!pv.is_zero()) m[static_cast<size_t>(r) * width + j].submul(f, pv);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int QMatrix::rank() const {
    std::vector<Rational> m = e_;
    return static_cast<int>(rref(m, rows_, cols_, cols_).size());
}

std::vector<std::vector<Rational>> QMatrix::kernel_basis() const {
    std::vector<Rational> m = e_;
    std::vector<int> pivots = rref(m, rows_, cols_, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols_);
        v[free_col] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r * cols_ + free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QMatrix> QMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("QMatrix: inverse of non-square matrix");
    int n = rows_;
    int width = 2 * n;
    std::vector<Rational> m(static_cast<size_t>(n) * width);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i) * width + j] = at(i, j);
        m[static_cast<size_t>(i) * width + n + i] = Rational(1);
    }
    if (static_cast<int>(rref(m, n, width, n).size()) < n) return std::nullopt;
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.set(i, j, m[static_cast<size_t>(i) * width + n + j]);
    return inv;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("QMatrix: rhs length");
    int width = cols_ + 1;
    std::vector<Rational> m(static_cast<size_t>(rows_) * width);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m[static_cast<size_t>(i) * width + j] = at(i, j);
        m[static_cast<size_t>(i) * width + cols_] = b[i];
    }
    std::vector<int> pivots = rref(m, rows_, width, cols_);
    // Inconsistent if any zero row has a nonzero augmented entry.
    for (int r = static_cast<int>(pivots.size()); r < rows_; ++r)
        if (!m[static_cast<size_t>(r) * width + cols_].is_zero()) return std::nullopt;
    std::vector<Rational> x(cols_);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r * width + cols_];
    return x;
}

// ---------------------------------------------------------------------------
// p-adic lifting solver.

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

u64 mulmod(u64 a, u64 b, u64 q) { return static_cast<u64>((static_cast<u128>(a) * b) % q); }

u64 powmod(u64 a, u64 e, u64 q) {
    u64 r = 1 % q;
    while (e) {
        if (e & 1) r = mulmod(r, a, q);
        a = mulmod(a, a, q);
        e >>= 1;
    }
    return r;
}

// Deterministic sequence of word-size primes used for factorizations and
// solution fingerprints.
u64 nth_prime(int i) {
    static std::vector<u64> primes;
    static mpz_class cursor = (mpz_class(1) << 62);
    while (static_cast<int>(primes.size()) <= i) {
        mpz_nextprime(cursor.get_mpz_t(), cursor.get_mpz_t());
        primes.push_back(cursor.get_ui());
    }
    return primes[i];
}

// Dense LU factorization mod q with row pivoting, P A = L U stored in place.
// Returns false when A is singular mod q.
struct ModLU {
    int n = 0;
    u64 q = 0;
    std::vector<u64> lu;
    std::vector<int> perm;
    std::vector<u64> pivot_inv;

    bool factor(const std::vector<u64>& a, int n_, u64 q_) {
        n = n_;
        q = q_;
        lu = a;
        perm.resize(n);
        pivot_inv.assign(n, 0);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int k = 0; k < n; ++k) {
            int pr = -1;
            for (int r = k; r < n; ++r)
                if (lu[static_cast<size_t>(r) * n + k] != 0) {
                    pr = r;
                    break;
                }
            if (pr < 0) return false;
            if (pr != k) {
                for (int j = 0; j < n; ++j)
                    std::swap(lu[static_cast<size_t>(pr) * n + j],
                              lu[static_cast<size_t>(k) * n + j]);
                std::swap(perm[pr], perm[k]);
            }
            u64 pinv = powmod(lu[static_cast<size_t>(k) * n + k], q - 2, q);
            pivot_inv[k] = pinv;
            for (int r = k + 1; r < n; ++r) {
                u64& lrk = lu[static_cast<size_t>(r) * n + k];
                if (lrk == 0) continue;
                u64 f = mulmod(lrk, pinv, q);
                lrk = f;
                const u64* krow = &lu[static_cast<size_t>(k) * n];
                u64* rrow = &lu[static_cast<size_t>(r) * n];
                for (int j = k + 1; j < n; ++j) {
                    u64 t = mulmod(f, krow[j], q);
                    rrow[j] = (rrow[j] >= t) ? rrow[j] - t : rrow[j] + q - t;
                }
            }
        }
        return true;
    }

    void solve(const std::vector<u64>& rhs, std::vector<u64>& x) const {
        x.resize(n);
        for (int i = 0; i < n; ++i) x[i] = rhs[perm[i]];
        for (int i = 1; i < n; ++i) {
            const u64* row = &lu[static_cast<size_t>(i) * n];
            u64 v = x[i];
            for (int j = 0; j < i; ++j) {
                u64 t = mulmod(row[j], x[j], q);
                v = (v >= t) ? v - t : v + q - t;
            }
            x[i] = v;
        }
        for (int i = n - 1; i >= 0; --i) {
            const u64* row = &lu[static_cast<size_t>(i) * n];
            u64 v = x[i];
            for (int j = i + 1; j < n; ++j) {
                u64 t = mulmod(row[j], x[j], q);
                v = (v >= t) ? v - t : v + q - t;
            }
            x[i] = mulmod(v, pivot_inv[i], q);
        }
    }
};

// Rational reconstruction of v mod M with numerator/denominator below
// sqrt(M/2); nullopt when no admissible fraction exists.
std::optional<Rational> rational_reconstruct(const mpz_class& v, const mpz_class& M) {
    mpz_class bound;
    mpz_class half = M / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = M, r1 = v % M;
    if (r1 < 0) r1 += M;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class qt = r0 / r1;
        mpz_class r2 = r0 - qt * r1;
        r0 = r1;
        r1 = r2;
        mpz_class t2 = t0 - qt * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    mpz_class num = r1, den = t1;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (den > bound + 1) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1 && !(num == 0 && den == 1)) return std::nullopt;
    return Rational(num, den);
}

}  // namespace

std::optional<std::vector<Rational>> lift_solve(const IntegerSystem& sys) {
    const int n = sys.n;
    if (n == 0) return std::vector<Rational>{};

    // Fast-path bounds: residuals stay below n*maxA which must fit
    // comfortably in int64; otherwise fall back to mpz residuals.
    mpz_class max_a = 0, max_b = 0;
    for (const auto& v : sys.A) {
        mpz_class a = abs(v);
        if (a > max_a) max_a = a;
    }
    for (const auto& v : sys.b) {
        mpz_class a = abs(v);
        if (a > max_b) max_b = a;
    }
    mpz_class residual_bound = max_a * n + max_b + 1;
    bool small = residual_bound.fits_slong_p() &&
                 residual_bound < (mpz_class(1) << 62);

    // Hard cap on lifting steps from a Hadamard-style bound on the solution
    // numerators and denominators.
    double bits_a = std::max(1.0, mpz_sizeinbase(max_a.get_mpz_t(), 2) + 0.0);
    double bits_b = std::max(1.0, mpz_sizeinbase(max_b.get_mpz_t(), 2) + 0.0);
    double det_bits = n * (bits_a + 0.5 * std::max(1.0, std::log2(static_cast<double>(n)))) + bits_b;
    int k_max = static_cast<int>(2.2 * det_bits / 61.0) + 8;

    ModLU lu;
    u64 q = 0;
    int prime_index = 0;
    for (; prime_index < 2; ++prime_index) {
        q = nth_prime(prime_index);
        std::vector<u64> aq(static_cast<size_t>(n) * n);
        for (size_t i = 0; i < aq.size(); ++i) {
            mpz_class m = sys.A[i] % q;
            if (m < 0) m += q;
            aq[i] = m.get_ui();
        }
        if (lu.factor(aq, n, q)) break;
    }
    if (prime_index == 2) return std::nullopt;

    std::vector<long long> a64;
    std::vector<long long> r64;
    std::vector<mpz_class> rz;
    if (small) {
        a64.resize(sys.A.size());
        for (size_t i = 0; i < sys.A.size(); ++i) a64[i] = sys.A[i].get_si();
        r64.resize(n);
        for (int i = 0; i < n; ++i) r64[i] = sys.b[i].get_si();
    } else {
        rz = sys.b;
    }

    std::vector<mpz_class> digits_acc(n, mpz_class(0));
    mpz_class qpow = 1;
    std::vector<u64> rhs_mod(n), y(n);
    int steps_done = 0;
    int next_check = 16;

    while (steps_done < k_max) {
        int target = std::min(k_max, next_check);
        for (; steps_done < target; ++steps_done) {
            if (small) {
                for (int i = 0; i < n; ++i) {
                    long long m = r64[i] % static_cast<long long>(q);
                    if (m < 0) m += q;
                    rhs_mod[i] = static_cast<u64>(m);
                }
            } else {
                for (int i = 0; i < n; ++i) {
                    mpz_class m = rz[i] % q;
                    if (m < 0) m += q;
                    rhs_mod[i] = m.get_ui();
                }
            }
            lu.solve(rhs_mod, y);
            for (int i = 0; i < n; ++i)
                if (y[i]) digits_acc[i] += qpow * static_cast<unsigned long>(y[i]);
            // r := (r - A y) / q, exactly.
            if (small) {
                for (int i = 0; i < n; ++i) {
                    i128 acc = r64[i];
                    const long long* row = &a64[static_cast<size_t>(i) * n];
                    for (int j = 0; j < n; ++j)
                        if (y[j]) acc -= static_cast<i128>(row[j]) * static_cast<long long>(y[j]);
                    r64[i] = static_cast<long long>(acc / static_cast<i128>(q));
                }
            } else {
                for (int i = 0; i < n; ++i) {
                    mpz_class acc = rz[i];
                    const mpz_class* row = &sys.A[static_cast<size_t>(i) * n];
                    for (int j = 0; j < n; ++j)
                        if (y[j]) acc -= row[j] * static_cast<unsigned long>(y[j]);
                    rz[i] = acc / q;
                }
            }
            qpow *= q;
        }
        next_check *= 2;

        // Attempt reconstruction and verify with modular fingerprints before
        // paying for the exact check.
        std::vector<Rational> x(n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            auto rec = rational_reconstruct(digits_acc[i], qpow);
            if (!rec) ok = false;
            else x[i] = *rec;
        }
        if (!ok) continue;

        bool fingerprints_ok = true;
        for (int f = 0; f < 2 && fingerprints_ok; ++f) {
            u64 qf = nth_prime(prime_index + 1 + f);
            std::vector<u64> xm(n);
            bool usable = true;
            for (int i = 0; i < n; ++i) {
                mpz_class den = x[i].denominator() % qf;
                if (den == 0) {
                    usable = false;
                    break;
                }
                mpz_class num = x[i].numerator() % qf;
                if (num < 0) num += qf;
                xm[i] = mulmod(num.get_ui(), powmod(den.get_ui(), qf - 2, qf), qf);
            }
            if (!usable) continue;
            for (int i = 0; i < n && fingerprints_ok; ++i) {
                u64 acc = 0;
                for (int j = 0; j < n; ++j) {
                    mpz_class av = sys.A[static_cast<size_t>(i) * n + j] % qf;
                    if (av < 0) av += qf;
                    acc = (acc + static_cast<u128>(av.get_ui()) * xm[j]) % qf;
                }
                mpz_class bv = sys.b[i] % qf;
                if (bv < 0) bv += qf;
                if (acc != bv.get_ui()) fingerprints_ok = false;
            }
        }
        if (!fingerprints_ok) continue;

        // Exact verification: A x == b over Q.
        bool exact = true;
        for (int i = 0; i < n && exact; ++i) {
            Rational acc;
            const mpz_class* row = &sys.A[static_cast<size_t>(i) * n];
            for (int j = 0; j < n; ++j)
                if (!x[j].is_zero() && row[j] != 0)
                    acc += x[j] * Rational(row[j], mpz_class(1));
            if (acc != Rational(sys.b[i], mpz_class(1))) exact = false;
        }
        if (exact) return x;
    }
    return std::nullopt;
}

std::optional<std::vector<Rational>> lift_solve(const QMatrix& A, const std::vector<Rational>& b) {
    if (A.rows() != A.cols()) throw std::invalid_argument("lift_solve: matrix must be square");
    if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("lift_solve: rhs length");
    const int n = A.rows();
    mpz_class scale = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), A.at(i, j).denominator().get_mpz_t());
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b[i].denominator().get_mpz_t());
    }
    IntegerSystem sys;
    sys.n = n;
    sys.A.resize(static_cast<size_t>(n) * n);
    sys.b.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            sys.A[static_cast<size_t>(i) * n + j] =
                A.at(i, j).numerator() * (scale / A.at(i, j).denominator());
        sys.b[i] = b[i].numerator() * (scale / b[i].denominator());
    }
    return lift_solve(sys);
}

}  // namespace chen

#pragma once

#include <optional>
#include <vector>

#include "chen/rational.hpp"

namespace chen {

/// Dense matrix over Q, row-major.  Elimination uses plain Gauss-Jordan with
/// eagerly reduced fractions and first-nonzero pivoting; exactness makes
/// pivot magnitude irrelevant.
class QMatrix {
public:
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, const Rational& v) { e_[static_cast<size_t>(r) * cols_ + c] = v; }

    QMatrix operator*(const QMatrix& o) const;
    bool operator==(const QMatrix& o) const = default;

    int rank() const;

    /// Basis of the right kernel {v : A v = 0}; size cols - rank.
    std::vector<std::vector<Rational>> kernel_basis() const;

    /// Exact inverse, or nullopt when singular; throws on non-square input.
    std::optional<QMatrix> inverse() const;

    /// Exact solution of A x = b via elimination, nullopt when none exists.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

private:
    int rows_;
    int cols_;
    std::vector<Rational> e_;
};

/// Square integer linear system for the lifting solver.  A is row-major n*n.
struct IntegerSystem {
    int n = 0;
    std::vector<mpz_class> A;
    std::vector<mpz_class> b;
};

/// Solves A x = b exactly by p-adic lifting with rational reconstruction.
/// Any returned solution has been verified exactly; nullopt means the matrix
/// was singular modulo the word-size primes tried (for our callers this is
/// treated as "presumed singular" and certified separately when needed).
std::optional<std::vector<Rational>> lift_solve(const IntegerSystem& sys);

/// Convenience wrapper: scales a rational system to integers and lifts.
std::optional<std::vector<Rational>> lift_solve(const QMatrix& A, const std::vector<Rational>& b);

}  // namespace chen

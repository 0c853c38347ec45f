#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace chen {

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator.  Zero is canonically 0/1.  Thin value wrapper
/// around GMP's mpq_class; all arithmetic is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(mpz_class(static_cast<long>(n))) {}
    Rational(long long num, long long den)
        : v_(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) {
        v_.canonicalize();
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }

    /// Exact conversion to a machine integer; throws unless the value is an
    /// integer that fits in long long.
    long long as_int64() const {
        if (!is_integer()) throw std::domain_error("Rational: not an integer");
        mpz_class n = v_.get_num();
        if (!n.fits_slong_p()) throw std::overflow_error("Rational: out of int64 range");
        return n.get_si();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    /// Fused this -= a*b, saving a temporary in elimination inner loops.
    void submul(const Rational& a, const Rational& b) { v_ -= a.v_ * b.v_; }
    void addmul(const Rational& a, const Rational& b) { v_ += a.v_ * b.v_; }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Human-readable form: "3", "-1/2".
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Explicit fraction form with the denominator always present: "3/1".
    std::string frac_str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    mpq_class v_;
};

}  // namespace chen

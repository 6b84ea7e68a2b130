#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "zinbiel/error.hpp"

namespace zinbiel {

/// Arbitrary-precision rational, always stored canonically:
/// gcd(|num|, den) = 1, den > 0, zero is 0/1.  Thin wrapper around
/// GMP's mpq_class that re-canonicalizes after construction.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, unsigned long d) : q_(n, d) { canonicalize(); }
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) { canonicalize(); }
    explicit Rational(const mpq_class& q) : q_(q) { canonicalize(); }

    /// Parses "p" or "p/q" with optional leading '-'.
    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw Error(ErrorCode::SyntaxError, "bad rational literal: " + s);
        return Rational(q);
    }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero())
            throw Error(ErrorCode::DivisionByZero, "rational division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    Rational inverse() const {
        if (is_zero())
            throw Error(ErrorCode::DivisionByZero, "inverse of zero");
        return Rational(mpq_class(1 / q_));
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }

    /// Canonical form: "p" when integral, "p/q" otherwise.
    std::string str() const { return q_.get_str(); }

private:
    void canonicalize() {
        if (q_.get_den() < 0) { q_.get_num() = -q_.get_num(); q_.get_den() = -q_.get_den(); }
        q_.canonicalize();
    }

    mpq_class q_;
};

/// Binomial coefficient C(s, t); zero when t > s.
inline Rational binomial(unsigned long s, unsigned long t) {
    if (t > s) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), s, t);
    return Rational(r);
}

} // namespace zinbiel

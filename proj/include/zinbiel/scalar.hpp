#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "zinbiel/polynomial.hpp"

namespace zinbiel {

/// Element of the fraction field Q(parameters), kept canonical:
/// gcd(num, den) = 1, den primitive with integer coefficients and positive
/// leading coefficient, zero is 0/1.  Equality is structural equality.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long n) : num_(n), den_(1) {}
    Scalar(const Rational& r) : num_(r), den_(1) {}
    explicit Scalar(const Polynomial& p) : num_(p), den_(1) {}
    Scalar(const Polynomial& num, const Polynomial& den) { assign(num, den); }

    static Scalar parameter(const std::string& name) {
        return Scalar(Polynomial::variable(name));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rational rational_value() const { return num_.constant_value() / den_.constant_value(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    void collect_vars(std::set<std::string>& out) const {
        num_.collect_vars(out);
        den_.collect_vars(out);
    }

    /// Exact substitution; throws PoleAtAssignment when the denominator
    /// vanishes and MissingParameter when a parameter is not assigned.
    Rational eval(const std::map<std::string, Rational>& assignment) const;

private:
    void assign(const Polynomial& num, const Polynomial& den);

    Polynomial num_;
    Polynomial den_;
};

/// Parses the coefficient grammar; `allowed` restricts parameter names
/// (UnknownParameter otherwise); nullopt admits any identifier.
Scalar parse_scalar(const std::string& text,
                    const std::optional<std::set<std::string>>& allowed = std::nullopt);

/// Deterministic canonical rendering; parse_scalar(print_scalar(a)) == a.
std::string print_scalar(const Scalar& a);

} // namespace zinbiel

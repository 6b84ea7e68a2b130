#include "zinbiel/scalar.hpp"

namespace zinbiel {

void Scalar::assign(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero())
        throw Error(ErrorCode::DivisionByZero, "zero denominator");
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial(1);
        return;
    }
    Polynomial n = num, d = den;
    if (!d.is_constant()) {
        Polynomial g = poly_gcd(n, d);
        if (!g.is_one()) {
            n = divexact(n, g);
            d = divexact(d, g);
        }
    }
    // Push the denominator's rational content into the numerator so the
    // denominator is a primitive integer polynomial with positive lead.
    Rational c = rational_content(d);
    den_ = make_primitive(d);
    Polynomial scaled;
    for (const auto& [m, coeff] : n.terms()) scaled.add_term(m, coeff / c);
    num_ = scaled;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero())
        throw Error(ErrorCode::DivisionByZero, "scalar division by zero");
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw Error(ErrorCode::DivisionByZero, "inverse of zero scalar");
    return Scalar(den_, num_);
}

Rational Scalar::eval(const std::map<std::string, Rational>& assignment) const {
    Rational d = den_.eval(assignment);
    if (d.is_zero())
        throw Error(ErrorCode::PoleAtAssignment, "denominator vanishes at assignment");
    return num_.eval(assignment) / d;
}

} // namespace zinbiel

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "zinbiel/rational.hpp"

namespace zinbiel {

/// Power product of named parameters; empty map is the unit monomial.
struct Monomial {
    std::map<std::string, unsigned> exps; // only nonzero exponents stored

    bool is_one() const { return exps.empty(); }
    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [_, e] : exps) d += e;
        return d;
    }
    unsigned degree_in(const std::string& var) const {
        auto it = exps.find(var);
        return it == exps.end() ? 0 : it->second;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (const auto& [v, e] : o.exps) r.exps[v] += e;
        return r;
    }
    bool divides(const Monomial& o) const {
        for (const auto& [v, e] : exps)
            if (o.degree_in(v) < e) return false;
        return true;
    }
    /// Quotient; requires divides(o) in the opposite direction: *this / o.
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (const auto& [v, e] : exps) {
            unsigned q = e - o.degree_in(v);
            if (q) r.exps[v] = q;
        }
        return r;
    }

    // Lexicographic on parameter names: earlier name dominates, larger
    // exponent is greater.  Fixes the canonical printed order.
    friend int cmp(const Monomial& a, const Monomial& b) {
        auto ia = a.exps.begin(), ib = b.exps.begin();
        while (ia != a.exps.end() || ib != b.exps.end()) {
            if (ia == a.exps.end()) return -1;
            if (ib == b.exps.end()) return 1;
            if (ia->first != ib->first) return ia->first < ib->first ? 1 : -1;
            if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
            ++ia; ++ib;
        }
        return 0;
    }
    bool operator==(const Monomial& o) const { return cmp(*this, o) == 0; }
};

struct MonomialDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
};

/// Sparse multivariate polynomial over Q; terms kept in descending
/// monomial order, zero coefficients never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialDescending>;

    Polynomial() = default;
    Polynomial(long n) : Polynomial(Rational(n)) {}
    explicit Polynomial(const Rational& c) {
        if (!c.is_zero()) terms_[Monomial{}] = c;
    }
    static Polynomial variable(const std::string& name) {
        Polynomial p;
        Monomial m;
        m.exps[name] = 1;
        p.terms_[m] = Rational(1);
        return p;
    }
    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p;
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    bool is_one() const { return is_constant() && constant_value().is_one(); }
    Rational constant_value() const {
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Rational& leading_coeff() const { return terms_.begin()->second; }

    unsigned degree_in(const std::string& var) const;
    void collect_vars(std::set<std::string>& out) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Coefficient of var^k, a polynomial in the remaining parameters.
    Polynomial coeff_wrt(const std::string& var, unsigned k) const;

    Rational eval(const std::map<std::string, Rational>& assignment) const;

    void add_term(const Monomial& m, const Rational& c);

private:
    TermMap terms_;
};

/// Exact quotient a / b; throws if the division is not exact.
Polynomial divexact(const Polynomial& a, const Polynomial& b);

/// Rational content: gcd of numerators over lcm of denominators, carrying
/// the sign of the leading coefficient.  content(0) = 0.
Rational rational_content(const Polynomial& p);

/// p divided by its rational content: integer coefficients with gcd 1 and
/// positive leading coefficient.
Polynomial make_primitive(const Polynomial& p);

/// Primitive gcd (positive leading coefficient); gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Canonical rendering under the coefficient grammar, e.g. "alpha^2-1/2".
std::string to_string(const Polynomial& p);

} // namespace zinbiel

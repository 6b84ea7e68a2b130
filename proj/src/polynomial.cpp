#include "zinbiel/polynomial.hpp"

#include <cassert>
#include <sstream>

namespace zinbiel {

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

unsigned Polynomial::degree_in(const std::string& var) const {
    unsigned d = 0;
    for (const auto& [m, _] : terms_) d = std::max(d, m.degree_in(var));
    return d;
}

void Polynomial::collect_vars(std::set<std::string>& out) const {
    for (const auto& [m, _] : terms_)
        for (const auto& [v, e] : m.exps) out.insert(v);
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::coeff_wrt(const std::string& var, unsigned k) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.degree_in(var) != k) continue;
        Monomial rest = m;
        rest.exps.erase(var);
        r.add_term(rest, c);
    }
    return r;
}

Rational Polynomial::eval(const std::map<std::string, Rational>& assignment) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m.exps) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw Error(ErrorCode::MissingParameter, "no value for parameter '" + v + "'");
            for (unsigned i = 0; i < e; ++i) t *= it->second;
        }
        acc += t;
    }
    return acc;
}

Polynomial divexact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    Polynomial r = a, q;
    while (!r.is_zero()) {
        const Monomial& lm = r.leading_monomial();
        if (!b.leading_monomial().divides(lm))
            throw Error(ErrorCode::DivisionByZero, "polynomial division is not exact");
        Monomial qm = lm / b.leading_monomial();
        Rational qc = r.leading_coeff() / b.leading_coeff();
        Polynomial qt = Polynomial::term(qm, qc);
        q += qt;
        r -= qt * b;
    }
    return q;
}

Rational rational_content(const Polynomial& p) {
    if (p.is_zero()) return Rational(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    return p.leading_coeff().sign() < 0 ? -content : content;
}

Polynomial make_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    Rational c = rational_content(p);
    Polynomial r;
    for (const auto& [m, coeff] : p.terms()) r.add_term(m, coeff / c);
    return r;
}

namespace {

// Pseudo-remainder of a by b, both viewed as univariate in var over the
// polynomial ring in the remaining parameters.
Polynomial pseudo_rem(Polynomial a, const Polynomial& b, const std::string& var) {
    const unsigned db = b.degree_in(var);
    const Polynomial lcb = b.coeff_wrt(var, db);
    while (!a.is_zero() && a.degree_in(var) >= db) {
        const unsigned da = a.degree_in(var);
        Polynomial lca = a.coeff_wrt(var, da);
        Monomial shift;
        if (da > db) shift.exps[var] = da - db;
        a = a * lcb - b * (lca * Polynomial::term(shift, Rational(1)));
    }
    return a;
}

// gcd of the univariate-in-var coefficients of p (recursive).
Polynomial content_wrt(const Polynomial& p, const std::string& var) {
    Polynomial c;
    for (unsigned k = 0; k <= p.degree_in(var); ++k)
        c = poly_gcd(c, p.coeff_wrt(var, k));
    return c;
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return make_primitive(b);
    if (b.is_zero()) return make_primitive(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(1);

    std::set<std::string> vars;
    a.collect_vars(vars);
    b.collect_vars(vars);
    const std::string var = *vars.begin();

    Polynomial ca = content_wrt(a, var);
    Polynomial cb = content_wrt(b, var);
    Polynomial cg = poly_gcd(ca, cb);
    Polynomial pa = divexact(a, ca);
    Polynomial pb = divexact(b, cb);

    if (pa.degree_in(var) == 0 || pb.degree_in(var) == 0)
        return make_primitive(cg);

    // Primitive Euclidean remainder sequence in var.
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Polynomial r = pseudo_rem(pa, pb, var);
        pa = pb;
        if (!r.is_zero()) r = divexact(r, content_wrt(r, var));
        pb = r;
    }
    return make_primitive(cg * pa);
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational ac = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? "-" : "+");
        }
        bool coeff_shown = false;
        if (m.is_one() || !ac.is_one()) {
            out << ac.str();
            coeff_shown = true;
        }
        for (const auto& [v, e] : m.exps) {
            if (coeff_shown) out << "*";
            out << v;
            if (e > 1) out << "^" << e;
            coeff_shown = true;
        }
    }
    return out.str();
}

} // namespace zinbiel

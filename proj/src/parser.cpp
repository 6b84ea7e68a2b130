#include <cctype>

#include "zinbiel/scalar.hpp"

namespace zinbiel {

namespace {

// Recursive descent over the coefficient grammar:
//   scalar := expr ('/' '(' expr ')')?
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | ident ('^' uint)? | '(' expr ')' | '-' factor
//   rational := int ('/' uint)?
class Parser {
public:
    Parser(const std::string& text, const std::optional<std::set<std::string>>& allowed)
        : text_(text), allowed_(allowed) {}

    Scalar parse() {
        Polynomial num = parse_expr();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            expect('(');
            Polynomial den = parse_expr();
            expect(')');
            skip_ws();
            if (pos_ != text_.size()) fail("trailing input");
            if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
            return Scalar(num, den);
        }
        if (pos_ != text_.size()) fail("trailing input");
        return Scalar(num);
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorCode::SyntaxError,
                    "syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Polynomial parse_expr() {
        skip_ws();
        Polynomial acc = parse_term();
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Polynomial t = parse_term();
            acc = c == '+' ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        skip_ws();
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -parse_factor();
        }
        if (c == '(') {
            ++pos_;
            Polynomial e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        fail("expected factor");
    }

    Polynomial parse_rational() {
        std::string digits = parse_digits();
        // '/' followed by a digit is part of the literal; '/' '(' belongs
        // to the enclosing scalar form.
        if (peek() == '/' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            std::string den = parse_digits();
            return Polynomial(Rational::from_string(digits + "/" + den));
        }
        return Polynomial(Rational::from_string(digits));
    }

    std::string parse_digits() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return text_.substr(start, pos_ - start);
    }

    Polynomial parse_ident() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (allowed_ && !allowed_->count(name))
            throw Error(ErrorCode::UnknownParameter,
                        "parameter '" + name + "' is not declared");
        skip_ws();
        unsigned exp = 1;
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            exp = static_cast<unsigned>(std::stoul(parse_digits()));
        }
        Monomial m;
        if (exp) m.exps[name] = exp;
        return Polynomial::term(m, Rational(1));
    }

    const std::string& text_;
    const std::optional<std::set<std::string>>& allowed_;
    size_t pos_ = 0;
};

} // namespace

Scalar parse_scalar(const std::string& text,
                    const std::optional<std::set<std::string>>& allowed) {
    return Parser(text, allowed).parse();
}

std::string print_scalar(const Scalar& a) {
    if (a.den().is_one()) return to_string(a.num());
    return "(" + to_string(a.num()) + ")/(" + to_string(a.den()) + ")";
}

} // namespace zinbiel

#include "pbcert/parse.hpp"

#include <cctype>

#include "pbcert/errors.hpp"

namespace pbcert {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char take() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& message) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(message, line, col);
    }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    Int take_nat() {
        if (!at_digit()) fail("expected a number");
        Int n = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            n = n * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return n;
    }

    unsigned take_exponent() {
        Int n = take_nat();
        if (n > 100000) fail("exponent too large");
        return static_cast<unsigned>(n);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

Rational parse_coef(Cursor& c) {
    Int num = c.take_nat();
    if (c.peek() == '/') {
        c.take();
        if (!c.at_digit()) c.fail("expected a denominator");
        Int den = c.take_nat();
        if (den == 0) c.fail("zero denominator");
        return make_rational(num, den);
    }
    return Rational(num);
}

Poly2 parse_term(Cursor& c) {
    Rational coef(1);
    bool any = false;
    if (c.at_digit()) {
        coef = parse_coef(c);
        any = true;
    }
    Mono m;
    while (true) {
        const char v = c.peek();
        if (v != 'x' && v != 'y') break;
        c.take();
        unsigned e = 1;
        if (c.peek() == '^') {
            c.take();
            e = c.take_exponent();
        }
        if (v == 'x')
            m.dx += e;
        else
            m.dy += e;
        any = true;
    }
    if (!any) c.fail("expected a coefficient or monomial");
    return Poly2::monomial(m, coef);
}

}  // namespace

Poly2 parse_polynomial(const std::string& text) {
    Cursor c(text);
    Poly2 p;
    if (c.done()) c.fail("empty polynomial");
    bool negate = false;
    if (c.peek() == '-') {
        c.take();
        negate = true;
    }
    while (true) {
        Poly2 t = parse_term(c);
        p += negate ? -t : t;
        if (c.done()) break;
        const char op = c.peek();
        if (op != '+' && op != '-') c.fail("expected '+' or '-'");
        c.take();
        negate = (op == '-');
    }
    return p;
}

namespace {

std::string term_body(const Mono& m, const Rational& coef_abs) {
    std::string s;
    if (m == Mono{0, 0}) return rational_to_string(coef_abs);
    if (coef_abs != 1) s += rational_to_string(coef_abs);
    if (m.dx > 0) {
        s += "x";
        if (m.dx > 1) s += "^" + std::to_string(m.dx);
    }
    if (m.dy > 0) {
        s += "y";
        if (m.dy > 1) s += "^" + std::to_string(m.dy);
    }
    return s;
}

}  // namespace

std::string poly_to_string(const Poly2& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        s += term_body(m, abs_of(c));
    }
    return s;
}

Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&]() -> Int {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected digits in rational '" + text + "'");
        Int n = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            n = n * 10 + (text[i] - '0');
            ++i;
        }
        return n;
    };
    Int num = digits();
    Int den = 1;
    skip();
    if (i < text.size() && text[i] == '/') {
        ++i;
        skip();
        den = digits();
        if (den == 0) throw ParseError("zero denominator in rational '" + text + "'");
    }
    skip();
    if (i != text.size()) throw ParseError("trailing characters in rational '" + text + "'");
    Rational q = make_rational(num, den);
    return neg ? Rational(-q) : q;
}

}  // namespace pbcert

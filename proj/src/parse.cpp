#include "odes/parse.h"
#include "odes/errors.h"

#include <cctype>

namespace odes {

namespace {

class parser {
  public:
    parser(const std::string& s, const rational& center) : s_(s), center_(center) {}

    expr run() {
        expr e = parse_expr();
        skip_ws();
        if (pos_ != s_.size())
            throw syntax_error("unexpected trailing input", pos_);
        return e;
    }

  private:
    const std::string& s_;
    rational center_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_]))
            pos_++;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            throw syntax_error(std::string("expected '") + c + "'", pos_);
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat_word(const char* w) {
        skip_ws();
        std::size_t n = 0;
        while (w[n])
            n++;
        if (s_.compare(pos_, n, w) != 0)
            return false;
        // 'e' must not swallow the start of 'exp'
        if (pos_ + n < s_.size() && std::isalpha((unsigned char)s_[pos_ + n]))
            return false;
        pos_ += n;
        return true;
    }

    rational parse_unsigned_rational(bool allow_slash = true) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
            pos_++;
        if (pos_ == start)
            throw syntax_error("expected a number", pos_);
        std::string num = s_.substr(start, pos_ - start);
        if (allow_slash && pos_ < s_.size() && s_[pos_] == '.') {
            pos_++;
            std::size_t fstart = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
                pos_++;
            return rat_from_string(num + "." + s_.substr(fstart, pos_ - fstart));
        }
        // a '/' directly between digits binds as part of the rational
        if (allow_slash && pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
            std::isdigit((unsigned char)s_[pos_ + 1])) {
            pos_++;
            std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
                pos_++;
            return make_rat(bigint(num, 10), bigint(s_.substr(dstart, pos_ - dstart), 10));
        }
        return rational(bigint(num, 10));
    }

    rational parse_signed_rational() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        rational q = parse_unsigned_rational();
        return neg ? rational(-q) : q;
    }

    // A bare exponent is an integer; fractional exponents take parens,
    // so that "x^6/180" reads as (x^6)/180 like the report output.
    rational parse_exponent() {
        if (eat('(')) {
            rational q = parse_signed_rational();
            expect(')');
            return q;
        }
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        rational q = parse_unsigned_rational(false);
        return neg ? rational(-q) : q;
    }

    // interior of sin/cos: [rational ['*']] 'x'
    rational parse_trig_arg() {
        skip_ws();
        rational m(1);
        if (pos_ < s_.size() && (std::isdigit((unsigned char)s_[pos_]) || s_[pos_] == '(')) {
            bool paren = eat('(');
            m = parse_signed_rational();
            if (paren)
                expect(')');
            eat('*');
        }
        if (!eat_word("x"))
            throw syntax_error("expected 'x' in trig argument", pos_);
        if (m <= 0)
            throw unsupported_combination("trig frequency must be positive");
        return m;
    }

    // interior of exp/e^: must normalize to k*u
    rational parse_exp_arg() {
        expr a = parse_expr();
        if (!a.is_single_term())
            throw unsupported_combination("exp argument must be a multiple of the shifted base");
        const term& t = a.terms.front();
        if (t.pow != 1 || t.logq != 0 || t.expk != 0 || t.trig != trig_kind::none)
            throw unsupported_combination("exp argument must be a multiple of the shifted base");
        return t.coeff;
    }

    // interior of ln/sqrt: a pure power of the shifted base
    term parse_shift_power(const char* what) {
        expr a = parse_expr();
        if (!a.is_single_term())
            throw unsupported_combination(std::string(what) +
                                          " argument must be a power of the shifted base");
        const term& t = a.terms.front();
        if (t.coeff != 1 || t.logq != 0 || t.expk != 0 || t.trig != trig_kind::none)
            throw unsupported_combination(std::string(what) +
                                          " argument must be a power of the shifted base");
        return t;
    }

    expr parse_base() {
        skip_ws();
        if (pos_ >= s_.size())
            throw syntax_error("unexpected end of input", pos_);
        char c = s_[pos_];
        if (std::isdigit((unsigned char)c))
            return make_const(parse_unsigned_rational(), center_);
        if (eat('(')) {
            expr e = parse_expr();
            expect(')');
            return e;
        }
        if (eat_word("ln")) {
            expect('(');
            term t = parse_shift_power("ln");
            expect(')');
            if (t.pow != 1)
                throw unsupported_combination("ln argument must be the shifted base");
            term r;
            r.coeff = 1;
            r.logq = 1;
            return make_term(r, center_);
        }
        if (eat_word("sqrt")) {
            expect('(');
            term t = parse_shift_power("sqrt");
            expect(')');
            term r;
            r.coeff = 1;
            r.pow = t.pow / 2;
            return make_term(r, center_);
        }
        if (eat_word("exp")) {
            expect('(');
            rational k = parse_exp_arg();
            expect(')');
            term r;
            r.coeff = 1;
            r.expk = k;
            if (k == 0)
                return make_const(1, center_);
            return make_term(r, center_);
        }
        if (eat_word("sin")) {
            expect('(');
            rational m = parse_trig_arg();
            expect(')');
            term r;
            r.coeff = 1;
            r.trig = trig_kind::sin;
            r.trigm = m;
            return make_term(r, center_);
        }
        if (eat_word("cos")) {
            expect('(');
            rational m = parse_trig_arg();
            expect(')');
            term r;
            r.coeff = 1;
            r.trig = trig_kind::cos;
            r.trigm = m;
            return make_term(r, center_);
        }
        if (eat_word("e")) {
            expect('^');
            if (eat('(')) {
                rational k = parse_exp_arg();
                expect(')');
                term r;
                r.coeff = 1;
                r.expk = k;
                if (k == 0)
                    return make_const(1, center_);
                return make_term(r, center_);
            }
            rational k = parse_exp_arg();
            term r;
            r.coeff = 1;
            r.expk = k;
            return make_term(r, center_);
        }
        if (eat_word("x"))
            return make_x(center_);
        throw syntax_error("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    expr apply_power(const expr& base, const rational& r) {
        if (r == 1)
            return base;
        if (base.is_single_term() && base.terms.front().trig == trig_kind::none) {
            const term& t = base.terms.front();
            if (t.logq == 0) {
                term p;
                if (is_integer(r))
                    p.coeff = rat_pow(t.coeff, to_long(r));
                else if (t.coeff == 1)
                    p.coeff = 1;
                else
                    throw unsupported_combination(
                        "fractional power of a non-unit coefficient");
                p.pow = t.pow * r;
                p.expk = t.expk * r;
                return make_term(p, base.center);
            }
            if (is_integer(r) && r >= 0) {
                term p = t;
                p.coeff = rat_pow(t.coeff, to_long(r));
                p.pow = t.pow * r;
                p.logq = t.logq * (int)to_long(r);
                return make_term(p, base.center);
            }
            throw unsupported_combination("power of a log term");
        }
        if (is_integer(r) && r >= 0)
            return expr_pow(base, (unsigned)to_long(r));
        if (is_integer(r))
            return div_single(make_const(1, base.center),
                              expr_pow(base, (unsigned)to_long(-r)));
        throw unsupported_combination("unsupported exponent on this base");
    }

    expr parse_factor() {
        expr b = parse_base();
        skip_ws();
        if (eat('^'))
            return apply_power(b, parse_exponent());
        return b;
    }

    expr parse_term() {
        expr acc = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                acc = mul(acc, parse_factor());
            } else if (peek_is('/')) {
                pos_++;
                expr d = parse_factor();
                bool constant = d.is_single_term() && d.terms.front().is_const();
                if (constant)
                    acc = scale(acc, rational(1) / d.terms.front().coeff);
                else
                    acc = div_single(acc, d);
            } else {
                break;
            }
        }
        return acc;
    }

    expr parse_expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        expr acc = parse_term();
        if (neg)
            acc = negate(acc);
        for (;;) {
            skip_ws();
            if (eat('+'))
                acc = add(acc, parse_term());
            else if (eat('-'))
                acc = sub(acc, parse_term());
            else
                break;
        }
        return acc;
    }
};

} // namespace

expr parse(const std::string& text, const rational& center) {
    return parser(text, center).run();
}

} // namespace odes

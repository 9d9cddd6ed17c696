#include "odes/expr.h"
#include "odes/errors.h"

#include <algorithm>
#include <sstream>

namespace odes {

bool term::same_signature(const term& o) const {
    return pow == o.pow && logq == o.logq && expk == o.expk &&
           trig == o.trig && (trig == trig_kind::none || trigm == o.trigm);
}

bool term::is_const() const {
    return pow == 0 && logq == 0 && expk == 0 && trig == trig_kind::none;
}

static int trig_rank(trig_kind t) {
    switch (t) {
        case trig_kind::none: return 0;
        case trig_kind::sin: return 1;
        case trig_kind::cos: return 2;
    }
    return 0;
}

// Fixed display/merge order: larger signatures first.
static bool sig_less(const term& a, const term& b) {
    if (a.pow != b.pow) return a.pow > b.pow;
    if (a.logq != b.logq) return a.logq > b.logq;
    if (a.expk != b.expk) return a.expk > b.expk;
    int ra = trig_rank(a.trig), rb = trig_rank(b.trig);
    if (ra != rb) return ra > rb;
    if (a.trig != trig_kind::none && a.trigm != b.trigm) return a.trigm > b.trigm;
    return false;
}

static void check_term(const term& t) {
    int transcendental = (t.logq > 0 ? 1 : 0) + (t.expk != 0 ? 1 : 0) +
                         (t.trig != trig_kind::none ? 1 : 0);
    if (transcendental > 1)
        throw unsupported_combination("term mixes more than one transcendental factor");
    if ((t.expk != 0 || t.trig != trig_kind::none) &&
        (!is_integer(t.pow) || t.pow < 0))
        throw unsupported_combination(
            "exp/trig factor requires a non-negative integer power");
    if (t.logq < 0)
        throw unsupported_combination("negative ln power");
    if (t.trig != trig_kind::none && t.trigm <= 0)
        throw unsupported_combination("trig frequency must be positive");
}

expr make_zero(const rational& center) {
    return expr{center, {}};
}

expr make_const(const rational& c, const rational& center) {
    if (c == 0)
        return make_zero(center);
    term t;
    t.coeff = c;
    return expr{center, {t}};
}

expr make_term(const term& t, const rational& center) {
    return normalize(expr{center, {t}});
}

expr make_u(const rational& center) {
    term t;
    t.coeff = 1;
    t.pow = 1;
    return expr{center, {t}};
}

expr make_x(const rational& center) {
    return add(make_u(center), make_const(center, center));
}

expr normalize(expr e) {
    for (const term& t : e.terms)
        check_term(t);
    std::sort(e.terms.begin(), e.terms.end(), sig_less);
    std::vector<term> out;
    for (const term& t : e.terms) {
        if (!out.empty() && out.back().same_signature(t))
            out.back().coeff += t.coeff;
        else
            out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const term& t) { return t.coeff == 0; }),
              out.end());
    e.terms = std::move(out);
    return e;
}

// Centers must agree; zero and pure-constant operands adopt the other
// center rather than failing.
static bool adopt_center(expr& a, expr& b) {
    if (a.center == b.center)
        return true;
    auto constant_only = [](const expr& e) {
        for (const term& t : e.terms)
            if (!t.is_const())
                return false;
        return true;
    };
    if (constant_only(a)) {
        a.center = b.center;
        return true;
    }
    if (constant_only(b)) {
        b.center = a.center;
        return true;
    }
    return false;
}

expr add(const expr& a0, const expr& b0) {
    expr a = a0, b = b0;
    if (!adopt_center(a, b))
        throw center_mismatch("cannot add expressions centered at " +
                              rat_to_string(a.center) + " and " +
                              rat_to_string(b.center));
    expr r;
    r.center = a.center;
    r.terms = a.terms;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return normalize(std::move(r));
}

expr negate(const expr& a) {
    expr r = a;
    for (term& t : r.terms)
        t.coeff = -t.coeff;
    return r;
}

expr sub(const expr& a, const expr& b) {
    return add(a, negate(b));
}

expr scale(const expr& a, const rational& c) {
    if (c == 0)
        return make_zero(a.center);
    expr r = a;
    for (term& t : r.terms)
        t.coeff *= c;
    return r;
}

// trig(am*x) * trig(bm*x) rewritten by product-to-sum so the result
// stays inside the term family.
static void mul_trig(const term& base, trig_kind ta, const rational& am,
                     trig_kind tb, const rational& bm, std::vector<term>& out) {
    struct part {
        rational coeff;
        trig_kind kind;
        rational m;
    };
    auto emit = [&](rational c, trig_kind kind, rational m) {
        if (m < 0) {
            if (kind == trig_kind::sin)
                c = -c;
            m = -m;
        }
        if (m == 0) {
            if (kind == trig_kind::sin)
                return; // sin(0) = 0
            kind = trig_kind::none;
        }
        term t = base;
        t.coeff *= c;
        t.trig = kind;
        t.trigm = kind == trig_kind::none ? rational(0) : m;
        if (t.coeff != 0)
            out.push_back(t);
    };
    rational half = make_rat(1, 2);
    if (ta == trig_kind::sin && tb == trig_kind::sin) {
        emit(half, trig_kind::cos, am - bm);
        emit(-half, trig_kind::cos, am + bm);
    } else if (ta == trig_kind::cos && tb == trig_kind::cos) {
        emit(half, trig_kind::cos, am - bm);
        emit(half, trig_kind::cos, am + bm);
    } else {
        // order so the sin factor comes first
        rational sm = ta == trig_kind::sin ? am : bm;
        rational cm = ta == trig_kind::sin ? bm : am;
        emit(half, trig_kind::sin, sm + cm);
        emit(half, trig_kind::sin, sm - cm);
    }
}

static void mul_terms(const term& a, const term& b, std::vector<term>& out) {
    term t;
    t.coeff = a.coeff * b.coeff;
    t.pow = a.pow + b.pow;
    t.logq = a.logq + b.logq;
    t.expk = a.expk + b.expk;
    bool atrig = a.trig != trig_kind::none;
    bool btrig = b.trig != trig_kind::none;
    if (atrig && btrig) {
        if (t.logq > 0 || t.expk != 0)
            throw unsupported_combination("product leaves the closed term family");
        mul_trig(t, a.trig, a.trigm, b.trig, b.trigm, out);
        for (term& o : out)
            check_term(o);
        return;
    }
    if (atrig || btrig) {
        t.trig = atrig ? a.trig : b.trig;
        t.trigm = atrig ? a.trigm : b.trigm;
    }
    check_term(t);
    if (t.coeff != 0)
        out.push_back(t);
}

expr mul(const expr& a0, const expr& b0) {
    expr a = a0, b = b0;
    if (!adopt_center(a, b))
        throw center_mismatch("cannot multiply expressions centered at " +
                              rat_to_string(a.center) + " and " +
                              rat_to_string(b.center));
    expr r;
    r.center = a.center;
    for (const term& ta : a.terms)
        for (const term& tb : b.terms)
            mul_terms(ta, tb, r.terms);
    return normalize(std::move(r));
}

expr expr_pow(const expr& a, unsigned n) {
    expr acc = make_const(1, a.center);
    for (unsigned i = 0; i < n; i++)
        acc = mul(acc, a);
    return acc;
}

expr div_single(const expr& num, const expr& den) {
    if (!den.is_single_term())
        throw unsupported_combination("division by a multi-term expression");
    const term& d = den.terms.front();
    if (d.logq != 0 || d.trig != trig_kind::none)
        throw unsupported_combination("division by a log/trig term");
    term inv;
    inv.coeff = rational(1) / d.coeff;
    inv.pow = -d.pow;
    inv.expk = -d.expk;
    return mul(num, make_term(inv, den.center));
}

static void diff_term(const term& t, std::vector<term>& out) {
    if (t.pow != 0) {
        term d = t;
        d.coeff = t.coeff * t.pow;
        d.pow = t.pow - 1;
        out.push_back(d);
    }
    if (t.logq > 0) {
        term d = t;
        d.coeff = t.coeff * rational((long)t.logq);
        d.pow = t.pow - 1;
        d.logq = t.logq - 1;
        out.push_back(d);
    }
    if (t.expk != 0) {
        term d = t;
        d.coeff = t.coeff * t.expk;
        out.push_back(d);
    }
    if (t.trig == trig_kind::sin) {
        term d = t;
        d.coeff = t.coeff * t.trigm;
        d.trig = trig_kind::cos;
        out.push_back(d);
    } else if (t.trig == trig_kind::cos) {
        term d = t;
        d.coeff = -t.coeff * t.trigm;
        d.trig = trig_kind::sin;
        out.push_back(d);
    }
}

expr differentiate(const expr& e, unsigned times) {
    expr cur = e;
    for (unsigned i = 0; i < times; i++) {
        expr r;
        r.center = cur.center;
        for (const term& t : cur.terms)
            diff_term(t, r.terms);
        cur = normalize(std::move(r));
    }
    return cur;
}

// One canonical antiderivative of a single term, by-parts recursion per
// family, with no constants added at any level.
static void antider_term(const term& t, std::vector<term>& out) {
    if (t.logq > 0) {
        if (t.pow == -1) {
            term r = t;
            r.coeff = t.coeff / rational(t.logq + 1);
            r.pow = 0;
            r.logq = t.logq + 1;
            out.push_back(r);
            return;
        }
        term r = t;
        r.coeff = t.coeff / (t.pow + 1);
        r.pow = t.pow + 1;
        out.push_back(r);
        term rest = t;
        rest.coeff = -t.coeff * rational((long)t.logq) / (t.pow + 1);
        rest.logq = t.logq - 1;
        antider_term(rest, out);
        return;
    }
    if (t.expk != 0) {
        term r = t;
        r.coeff = t.coeff / t.expk;
        out.push_back(r);
        if (t.pow > 0) {
            term rest = t;
            rest.coeff = -t.coeff * t.pow / t.expk;
            rest.pow = t.pow - 1;
            antider_term(rest, out);
        }
        return;
    }
    if (t.trig == trig_kind::sin || t.trig == trig_kind::cos) {
        bool s = t.trig == trig_kind::sin;
        term r = t;
        r.coeff = rational(t.coeff / t.trigm);
        if (s)
            r.coeff = -r.coeff;
        r.trig = s ? trig_kind::cos : trig_kind::sin;
        out.push_back(r);
        if (t.pow > 0) {
            term rest = t;
            rest.coeff = rational(t.coeff * t.pow / t.trigm);
            if (!s)
                rest.coeff = -rest.coeff;
            rest.pow = t.pow - 1;
            rest.trig = s ? trig_kind::cos : trig_kind::sin;
            antider_term(rest, out);
        }
        return;
    }
    if (t.pow == -1) {
        term r = t;
        r.pow = 0;
        r.logq = 1;
        out.push_back(r);
        return;
    }
    term r = t;
    r.coeff = t.coeff / (t.pow + 1);
    r.pow = t.pow + 1;
    out.push_back(r);
}

expr antiderivative(const expr& e) {
    expr r;
    r.center = e.center;
    for (const term& t : e.terms) {
        try {
            check_term(t); // cannot fail for a normalized expr
        } catch (const unsupported_combination& ex) {
            throw non_elementary(ex.what());
        }
        antider_term(t, r.terms);
    }
    return normalize(std::move(r));
}

expr antiderivative(const expr& e, unsigned times) {
    expr cur = e;
    for (unsigned i = 0; i < times; i++)
        cur = antiderivative(cur);
    return cur;
}

expr dn(long n, const expr& e) {
    if (n >= 0)
        return differentiate(e, (unsigned)n);
    return antiderivative(e, (unsigned)(-n));
}

bool operator==(const expr& a, const expr& b) {
    if (a.is_zero() && b.is_zero())
        return true;
    if (a.center != b.center || a.terms.size() != b.terms.size())
        return false;
    for (std::size_t i = 0; i < a.terms.size(); i++) {
        if (!a.terms[i].same_signature(b.terms[i]) ||
            a.terms[i].coeff != b.terms[i].coeff)
            return false;
    }
    return true;
}

rational coefficient(const expr& e, const term& signature) {
    for (const term& t : e.terms)
        if (t.same_signature(signature))
            return t.coeff;
    return rational(0);
}

// ---- formatting ----------------------------------------------------

static std::string shift_text(const rational& center) {
    if (center == 0)
        return "x";
    rational c = -center;
    if (c > 0)
        return "(x+" + rat_to_string(c) + ")";
    return "(x-" + rat_to_string(-c) + ")";
}

static std::string shift_latex(const rational& center) {
    if (center == 0)
        return "x";
    rational c = -center;
    if (c > 0)
        return "(x+" + rat_to_string(c) + ")";
    return "(x-" + rat_to_string(-c) + ")";
}

static std::string pow_suffix_text(const rational& p) {
    if (p == 1)
        return "";
    if (is_integer(p) && p >= 0)
        return "^" + rat_to_string(p);
    return "^(" + rat_to_string(p) + ")";
}

static std::string rat_factor_text(const rational& q) {
    if (is_integer(q))
        return rat_to_string(q);
    return "(" + rat_to_string(q) + ")";
}

static void term_factors_text(const term& t, const rational& center,
                              std::vector<std::string>& f) {
    if (t.pow != 0)
        f.push_back(shift_text(center) + pow_suffix_text(t.pow));
    if (t.logq > 0) {
        std::string ln = "ln(" + shift_text(center) + ")";
        if (center != 0)
            ln = "ln" + shift_text(center); // shift already carries parens
        f.push_back(t.logq == 1 ? ln : ln + "^" + std::to_string(t.logq));
    }
    if (t.expk != 0) {
        std::string arg;
        if (t.expk == 1)
            arg = shift_text(center);
        else if (t.expk == -1)
            arg = "-" + shift_text(center);
        else
            arg = rat_factor_text(t.expk) + "*" + shift_text(center);
        f.push_back("exp(" + arg + ")");
    }
    if (t.trig != trig_kind::none) {
        std::string arg = t.trigm == 1 ? "x" : rat_factor_text(t.trigm) + "*x";
        f.push_back((t.trig == trig_kind::sin ? "sin(" : "cos(") + arg + ")");
    }
}

// Text form of one term without leading sign, e.g. "x^6/180" for 1/180*x^6.
static std::string term_text(const term& t, const rational& center) {
    std::vector<std::string> f;
    term_factors_text(t, center, f);
    rational c = abs(t.coeff);
    bigint num = c.get_num(), den = c.get_den();
    std::ostringstream os;
    if (f.empty()) {
        os << rat_to_string(c);
        return os.str();
    }
    if (num != 1)
        os << num.get_str() << "*";
    for (std::size_t i = 0; i < f.size(); i++) {
        if (i)
            os << "*";
        os << f[i];
    }
    if (den != 1)
        os << "/" << den.get_str();
    return os.str();
}

static std::string term_latex(const term& t, const rational& center) {
    std::vector<std::string> f;
    const std::string sh = shift_latex(center);
    if (t.pow != 0) {
        if (t.pow == 1)
            f.push_back(sh);
        else
            f.push_back(sh + "^{" + rat_to_string(t.pow) + "}");
    }
    if (t.logq > 0) {
        std::string ln = "\\ln" + std::string(center == 0 ? "(x)" : sh);
        f.push_back(t.logq == 1 ? ln : ln + "^{" + std::to_string(t.logq) + "}");
    }
    if (t.expk != 0)
        f.push_back("e^{" + rat_to_string(t.expk) + sh + "}");
    if (t.trig != trig_kind::none)
        f.push_back(std::string(t.trig == trig_kind::sin ? "\\sin" : "\\cos") +
                    "(" + rat_to_string(t.trigm) + "x)");
    rational c = abs(t.coeff);
    std::string body;
    for (std::size_t i = 0; i < f.size(); i++)
        body += (i ? " " : "") + f[i];
    std::string out;
    if (c.get_den() == 1) {
        if (c != 1 || body.empty())
            out = c.get_num().get_str() + (body.empty() ? "" : " ");
        out += body;
    } else {
        std::string numpart = c.get_num() == 1 && !body.empty()
                                  ? body
                                  : c.get_num().get_str() + (body.empty() ? "" : " ") + body;
        out = "\\frac{" + numpart + "}{" + c.get_den().get_str() + "}";
    }
    return out;
}

std::string format(const expr& e, format_style style) {
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const term& t : e.terms) {
        bool neg = t.coeff < 0;
        if (first) {
            if (neg)
                os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        os << (style == format_style::text ? term_text(t, e.center)
                                           : term_latex(t, e.center));
    }
    return os.str();
}

} // namespace odes

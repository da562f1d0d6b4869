#include "cychains/expr.hpp"

#include "cychains/cartan.hpp"
#include "cychains/extended.hpp"

#include <cctype>
#include <vector>

namespace cychains {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    bool eat_word(const std::string& w) {
        skip_ws();
        if (s.compare(pos, w.size(), w) == 0) {
            size_t end = pos + w.size();
            if (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_'))
                return false;
            pos = end;
            return true;
        }
        return false;
    }
    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) throw ParseError("expected a name", pos);
        return s.substr(start, pos - start);
    }
    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected an integer", start);
        return std::stol(s.substr(start, pos - start));
    }
};

Rational parse_rational(Lexer& lx) {
    long num = lx.integer();
    if (lx.eat('/')) {
        long den = lx.integer();
        return Rational(num, den);
    }
    return Rational(num);
}

struct TermFactors {
    Rational coef = Rational(1);
    ExpVec exp;
    LaurentPoly poly_factor; // parenthesized coefficient sums, empty = 1
    Mask gens = 0;
    bool has_gens = false;

    LaurentPoly coefficient(int dim) const {
        LaurentPoly m = LaurentPoly::monomial(dim, exp, coef);
        return poly_factor.is_zero() && poly_factor.dim() < 0 ? m : m * poly_factor;
    }
};

void parse_term(Lexer& lx, int dim, const std::string& gen, TermFactors& out);

// a parenthesized polynomial sum (no wedge generators inside)
LaurentPoly parse_poly_group(Lexer& lx, int dim) {
    lx.expect('(');
    LaurentPoly out(dim);
    bool negate = lx.eat('-');
    while (true) {
        TermFactors t;
        parse_term(lx, dim, "", t);
        if (t.has_gens) throw ParseError("unexpected generator inside a coefficient", lx.pos);
        LaurentPoly c = t.coefficient(dim);
        out += negate ? -c : c;
        if (lx.eat('+')) {
            negate = false;
        } else if (lx.eat('-')) {
            negate = true;
        } else {
            break;
        }
    }
    lx.expect(')');
    return out;
}

// one product term: `c * t^[e1,..,ed] * g1^g2`, with t<i>^<k> shorthand
// for single-variable monomials and parenthesized polynomial factors;
// gen names are "d<i>" or "dt<i>"
void parse_term(Lexer& lx, int dim, const std::string& gen, TermFactors& out) {
    out.exp = exp_zero(dim);
    while (true) {
        lx.skip_ws();
        char c = lx.peek();
        if (c == '(') {
            LaurentPoly p = parse_poly_group(lx, dim);
            out.poly_factor = (out.poly_factor.is_zero() && out.poly_factor.dim() < 0)
                                  ? p
                                  : out.poly_factor * p;
        } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            out.coef *= parse_rational(lx);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t save = lx.pos;
            std::string w = lx.word();
            if (w == "t") {
                lx.expect('^');
                lx.expect('[');
                for (int i = 0; i < dim; ++i) {
                    if (i) lx.expect(',');
                    out.exp[static_cast<size_t>(i)] += static_cast<int>(lx.integer());
                }
                lx.expect(']');
            } else if (w.size() > 1 && w[0] == 't' &&
                       std::isdigit(static_cast<unsigned char>(w[1]))) {
                int axis = std::stoi(w.substr(1));
                if (axis < 1 || axis > dim) throw ParseError("variable index out of range", save);
                int power = 1;
                if (lx.eat('^')) power = static_cast<int>(lx.integer());
                out.exp[static_cast<size_t>(axis - 1)] += power;
            } else if (w.size() > gen.size() && w.compare(0, gen.size(), gen) == 0 &&
                       std::isdigit(static_cast<unsigned char>(w[gen.size()]))) {
                lx.pos = save;
                while (true) {
                    std::string gword = lx.word();
                    int axis = std::stoi(gword.substr(gen.size()));
                    if (axis < 1 || axis > dim)
                        throw ParseError("generator index out of range", save);
                    Mask bit = Mask(1) << (axis - 1);
                    if (out.gens & bit) {
                        out.coef = Rational(0);
                    } else {
                        out.coef *= Rational(mask_merge_sign(out.gens, bit));
                        out.gens |= bit;
                    }
                    out.has_gens = true;
                    size_t save2 = lx.pos;
                    if (!lx.eat('^')) break;
                    lx.skip_ws();
                    if (!std::isalpha(static_cast<unsigned char>(lx.peek()))) {
                        lx.pos = save2;
                        break;
                    }
                }
            } else {
                throw ParseError("unexpected token '" + w + "'", save);
            }
        } else {
            throw ParseError("unexpected character in term", lx.pos);
        }
        size_t save = lx.pos;
        if (!lx.eat('*')) {
            lx.pos = save;
            break;
        }
    }
}

template <class Obj>
Obj parse_sum(Lexer& lx, int dim, const std::string& gen) {
    Obj out(dim);
    bool negate = lx.eat('-');
    while (true) {
        TermFactors t;
        parse_term(lx, dim, gen, t);
        LaurentPoly c = t.coefficient(dim);
        out.add_component(t.gens, negate ? -c : c);
        if (lx.eat('+')) {
            negate = false;
        } else if (lx.eat('-')) {
            negate = true;
        } else {
            break;
        }
    }
    return out;
}

} // namespace

MultiVector parse_multivector(const std::string& text, int dim) {
    Lexer lx(text);
    MultiVector r = parse_sum<MultiVector>(lx, dim, "d");
    if (!lx.done()) throw ParseError("trailing input", lx.pos);
    return r;
}

DiffForm parse_form(const std::string& text, int dim) {
    Lexer lx(text);
    DiffForm r = parse_sum<DiffForm>(lx, dim, "dt");
    if (!lx.done()) throw ParseError("trailing input", lx.pos);
    return r;
}

HochChain parse_chain(const std::string& text, int dim) {
    Lexer lx(text);
    HochChain out(dim);
    bool negate = lx.eat('-');
    while (true) {
        std::vector<LaurentPoly> entries;
        Rational sign = negate ? Rational(-1) : Rational(1);
        while (true) {
            TermFactors t;
            parse_term(lx, dim, "d", t);
            if (t.has_gens) throw ParseError("chain entries must be polynomials", lx.pos);
            entries.push_back(t.coefficient(dim));
            size_t save = lx.pos;
            if (lx.eat('(') && lx.eat('x') && lx.eat(')')) continue;
            lx.pos = save;
            break;
        }
        entries[0] = entries[0].scaled(sign);
        out = out + HochChain::elementary(dim, entries);
        if (lx.eat('+')) {
            negate = false;
        } else if (lx.eat('-')) {
            negate = true;
        } else {
            break;
        }
    }
    if (!lx.done()) throw ParseError("trailing input", lx.pos);
    return out;
}

VolumeForm parse_volume(const std::string& text, int dim) {
    Lexer lx(text);
    if (lx.eat_word("w_std")) {
        if (!lx.done()) throw ParseError("trailing input", lx.pos);
        return VolumeForm::standard(dim);
    }
    Rational c(1);
    ExpVec k = exp_zero(dim);
    char ch = lx.peek();
    if (ch == '-' || ch == '+' || std::isdigit(static_cast<unsigned char>(ch))) {
        c = parse_rational(lx);
        lx.eat('*');
    }
    if (lx.peek() == 't') {
        lx.expect('t');
        lx.expect('^');
        lx.expect('[');
        for (int i = 0; i < dim; ++i) {
            if (i) lx.expect(',');
            k[static_cast<size_t>(i)] = static_cast<int>(lx.integer());
        }
        lx.expect(']');
        lx.eat('*');
    }
    if (!lx.eat_word("w_std")) throw ParseError("expected w_std", lx.pos);
    if (!lx.done()) throw ParseError("trailing input", lx.pos);
    return VolumeForm::with_density(dim, c, k);
}

std::string eval_expr(const std::string& text, int dim) {
    Lexer lx(text);
    std::string op = lx.word();

    auto arg = [&]() {
        lx.expect('(');
        size_t start = lx.pos;
        int depth = 1;
        while (lx.pos < lx.s.size() && depth > 0) {
            if (lx.s[lx.pos] == '(') ++depth;
            if (lx.s[lx.pos] == ')') --depth;
            ++lx.pos;
        }
        if (depth != 0) throw ParseError("unbalanced parentheses", start);
        return lx.s.substr(start, lx.pos - start - 1);
    };

    std::string result;
    if (op == "schouten") {
        MultiVector a = parse_multivector(arg(), dim);
        MultiVector b = parse_multivector(arg(), dim);
        result = schouten(a, b).str();
    } else if (op == "wedge") {
        MultiVector a = parse_multivector(arg(), dim);
        MultiVector b = parse_multivector(arg(), dim);
        result = wedge(a, b).str();
    } else if (op == "contract") {
        MultiVector a = parse_multivector(arg(), dim);
        DiffForm f = parse_form(arg(), dim);
        result = contract(a, f).str();
    } else if (op == "lie") {
        MultiVector a = parse_multivector(arg(), dim);
        DiffForm f = parse_form(arg(), dim);
        result = lie_derivative(a, f).str();
    } else if (op == "d") {
        DiffForm f = parse_form(arg(), dim);
        result = de_rham(f).str();
    } else if (op == "div") {
        VolumeForm vol = parse_volume(arg(), dim);
        MultiVector a = parse_multivector(arg(), dim);
        result = divergence(vol, a).str();
    } else if (op == "bh") {
        HochChain c = parse_chain(arg(), dim);
        result = chain_boundary(c).str();
    } else if (op == "B") {
        HochChain c = parse_chain(arg(), dim);
        result = connes_B(c).str();
    } else if (op == "hkr") {
        HochChain c = parse_chain(arg(), dim);
        result = hkr_chains(c).str();
    } else {
        throw ParseError("unknown operation '" + op + "'", 0);
    }
    if (!lx.done()) throw ParseError("trailing input", lx.pos);
    return result;
}

} // namespace cychains

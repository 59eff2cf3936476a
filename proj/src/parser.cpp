#include "telesum/parser.hpp"

#include <cctype>

namespace telesum {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Bang, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }
    bool at(Tok k) const { return cur_.kind == k; }
    Token expect(Tok k, const char* what) {
        if (cur_.kind != k) throw ParseError(std::string("expected ") + what, cur_.pos);
        return take();
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        cur_.pos = i_;
        if (i_ >= s_.size()) {
            cur_ = {Tok::End, "", i_};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            cur_ = {Tok::Int, s_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            cur_ = {Tok::Ident, s_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '!': k = Tok::Bang; break;
            case ',': k = Tok::Comma; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i_);
        }
        cur_ = {k, std::string(1, c), i_};
        ++i_;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token cur_{Tok::End, "", 0};
};

long to_long(const Token& t) {
    try {
        return std::stol(t.text);
    } catch (...) {
        throw ParseError("integer too large", t.pos);
    }
}

// ---------------- hypergeometric-term parser ----------------

class TermParser {
public:
    TermParser(Lexer& lx, const VarSet& vars) : lx_(lx), vars_(vars) {}

    HyperTerm parse_expr() {
        bool neg = false;
        while (lx_.at(Tok::Plus) || lx_.at(Tok::Minus)) {
            if (lx_.take().kind == Tok::Minus) neg = !neg;
        }
        HyperTerm acc = parse_mul();
        if (neg) acc = acc * HyperTerm::from_poly(Poly(vars_, Rat(-1)));
        while (lx_.at(Tok::Plus) || lx_.at(Tok::Minus)) {
            Token op = lx_.take();
            HyperTerm rhs = parse_mul();
            if (!acc.is_polynomial() || !rhs.is_polynomial())
                throw ParseError("cannot add hypergeometric factors", op.pos);
            Poly sum = op.kind == Tok::Plus ? acc.polypart() + rhs.polypart()
                                            : acc.polypart() - rhs.polypart();
            acc = HyperTerm::from_poly(sum);
        }
        return acc;
    }

private:
    HyperTerm parse_mul() {
        HyperTerm acc = parse_pow();
        for (;;) {
            if (lx_.at(Tok::Star)) {
                lx_.take();
                acc = acc * parse_pow();
            } else if (lx_.at(Tok::Slash)) {
                lx_.take();
                acc = acc / parse_pow();
            } else if (lx_.at(Tok::Ident) || lx_.at(Tok::Int) || lx_.at(Tok::LParen)) {
                acc = acc * parse_pow();  // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    HyperTerm parse_pow() {
        HyperTerm base = parse_primary();
        if (!lx_.at(Tok::Caret)) return base;
        Token caret = lx_.take();
        // Integer exponent or linear-form exponent.
        if (lx_.at(Tok::Int) || lx_.at(Tok::Minus)) {
            bool neg = false;
            while (lx_.at(Tok::Minus)) {
                lx_.take();
                neg = !neg;
            }
            long e = to_long(lx_.expect(Tok::Int, "integer exponent"));
            return base.pow(static_cast<int>(neg ? -e : e));
        }
        HyperTerm expo;
        if (lx_.at(Tok::Ident)) {
            expo = parse_primary();
        } else if (lx_.at(Tok::LParen)) {
            lx_.take();
            expo = parse_expr();
            lx_.expect(Tok::RParen, "')'");
        } else {
            throw ParseError("expected exponent", caret.pos);
        }
        if (!expo.is_polynomial()) throw ParseError("exponent must be a linear form", caret.pos);
        if (expo.polypart().is_constant()) {
            Rat c = expo.polypart().constant_value();
            if (c.get_den() != 1) throw ParseError("exponent must be an integer", caret.pos);
            return base.pow(static_cast<int>(c.get_num().get_si()));
        }
        LinearForm form = poly_to_linform(expo.polypart());
        if (!base.is_polynomial() || !base.polypart().is_constant())
            throw ParseError("base of a symbolic power must be a rational constant", caret.pos);
        Rat c = base.polypart().constant_value();
        if (c == 0) throw ParseError("power base must be nonzero", caret.pos);
        return HyperTerm(vars_, Poly(vars_, Rat(1)), {}, {{c, form}});
    }

    HyperTerm parse_primary() {
        if (lx_.at(Tok::Int)) {
            Token t = lx_.take();
            return HyperTerm::from_poly(Poly(vars_, Rat(t.text)));
        }
        if (lx_.at(Tok::Ident)) {
            Token t = lx_.take();
            if (t.text == "binom") {
                lx_.expect(Tok::LParen, "'('");
                HyperTerm a = parse_expr();
                lx_.expect(Tok::Comma, "','");
                HyperTerm b = parse_expr();
                lx_.expect(Tok::RParen, "')'");
                if (!a.is_polynomial() || !b.is_polynomial())
                    throw ParseError("binom arguments must be linear forms", t.pos);
                return binom(linform_at(a.polypart(), t.pos), linform_at(b.polypart(), t.pos));
            }
            if (vars_.index(t.text) < 0) throw ParseError("unknown variable '" + t.text + "'", t.pos);
            HyperTerm v = HyperTerm::from_poly(Poly::variable(vars_, t.text));
            if (lx_.at(Tok::Bang)) {
                Token bang = lx_.take();
                return HyperTerm::factorial(linform_at(v.polypart(), bang.pos));
            }
            return v;
        }
        if (lx_.at(Tok::LParen)) {
            lx_.take();
            HyperTerm inner = parse_expr();
            lx_.expect(Tok::RParen, "')'");
            if (lx_.at(Tok::Bang)) {
                Token bang = lx_.take();
                if (!inner.is_polynomial())
                    throw ParseError("factorial of a non-linear argument", bang.pos);
                return HyperTerm::factorial(linform_at(inner.polypart(), bang.pos));
            }
            return inner;
        }
        throw ParseError("expected a factor", lx_.peek().pos);
    }

    LinearForm linform_at(const Poly& p, std::size_t pos) {
        try {
            return poly_to_linform(p);
        } catch (const std::exception& e) {
            throw ParseError(e.what(), pos);
        }
    }

    Lexer& lx_;
    const VarSet& vars_;
};

// ---------------- rational-function parser ----------------

class RatParser {
public:
    RatParser(Lexer& lx, const VarSet& vars) : lx_(lx), vars_(vars) {}

    RatFn parse_expr() {
        bool neg = false;
        while (lx_.at(Tok::Plus) || lx_.at(Tok::Minus)) {
            if (lx_.take().kind == Tok::Minus) neg = !neg;
        }
        RatFn acc = parse_mul();
        if (neg) acc = -acc;
        while (lx_.at(Tok::Plus) || lx_.at(Tok::Minus)) {
            Tok op = lx_.take().kind;
            RatFn rhs = parse_mul();
            acc = op == Tok::Plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

private:
    RatFn parse_mul() {
        RatFn acc = parse_pow();
        for (;;) {
            if (lx_.at(Tok::Star)) {
                lx_.take();
                acc = acc * parse_pow();
            } else if (lx_.at(Tok::Slash)) {
                Token t = lx_.take();
                RatFn rhs = parse_pow();
                if (rhs.is_zero()) throw ParseError("division by zero", t.pos);
                acc = acc / rhs;
            } else if (lx_.at(Tok::Ident) || lx_.at(Tok::LParen)) {
                acc = acc * parse_pow();
            } else {
                break;
            }
        }
        return acc;
    }

    RatFn parse_pow() {
        RatFn base = parse_primary();
        if (!lx_.at(Tok::Caret)) return base;
        Token caret = lx_.take();
        bool neg = false;
        while (lx_.at(Tok::Minus)) {
            lx_.take();
            neg = !neg;
        }
        if (lx_.at(Tok::Int)) {
            long e = to_long(lx_.take());
            return base.pow(neg ? -e : e);
        }
        if (lx_.at(Tok::LParen)) {
            lx_.take();
            RatFn e = parse_expr();
            lx_.expect(Tok::RParen, "')'");
            if (!e.is_constant() || e.constant_value().get_den() != 1)
                throw ParseError("exponent must be an integer", caret.pos);
            long ee = e.constant_value().get_num().get_si();
            return base.pow(neg ? -ee : ee);
        }
        throw ParseError("expected integer exponent", caret.pos);
    }

    RatFn parse_primary() {
        if (lx_.at(Tok::Int)) {
            Token t = lx_.take();
            return RatFn(Poly(vars_, Rat(t.text)));
        }
        if (lx_.at(Tok::Ident)) {
            Token t = lx_.take();
            if (vars_.index(t.text) < 0) throw ParseError("unknown variable '" + t.text + "'", t.pos);
            return RatFn(Poly::variable(vars_, t.text));
        }
        if (lx_.at(Tok::LParen)) {
            lx_.take();
            RatFn inner = parse_expr();
            lx_.expect(Tok::RParen, "')'");
            return inner;
        }
        throw ParseError("expected a factor", lx_.peek().pos);
    }

    Lexer& lx_;
    const VarSet& vars_;
};

}  // namespace

LinearForm poly_to_linform(const Poly& p) {
    LinearForm f(p.vars());
    for (const auto& [e, c] : p.terms()) {
        long deg = 0;
        int which = -1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            deg += e[i];
            if (e[i]) which = static_cast<int>(i);
        }
        if (deg > 1) throw std::domain_error("not a linear form: " + p.to_string());
        if (c.get_den() != 1 || !c.get_num().fits_slong_p())
            throw std::domain_error("non-integer coefficient in linear form: " + p.to_string());
        long ci = c.get_num().get_si();
        if (deg == 0)
            f.constant_ref() += ci;
        else
            f.coeff_ref(which) += ci;
    }
    return f;
}

HyperTerm parse_term(const std::string& text, const VarSet& vars) {
    Lexer lx(text);
    TermParser p(lx, vars);
    HyperTerm t = p.parse_expr();
    if (!lx.at(Tok::End)) throw ParseError("trailing input", lx.peek().pos);
    return t;
}

RatFn parse_ratfn(const std::string& text, const VarSet& vars) {
    Lexer lx(text);
    RatParser p(lx, vars);
    RatFn r = p.parse_expr();
    if (!lx.at(Tok::End)) throw ParseError("trailing input", lx.peek().pos);
    return r;
}

Poly parse_poly(const std::string& text, const VarSet& vars) {
    RatFn r = parse_ratfn(text, vars);
    if (!r.is_polynomial()) throw std::domain_error("expected a polynomial: " + text);
    return r.num() / r.den().constant_value();
}

LinearForm parse_linform(const std::string& text, const VarSet& vars) {
    return poly_to_linform(parse_poly(text, vars));
}

}  // namespace telesum
